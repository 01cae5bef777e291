#include "het/euler.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "het/errors.hpp"
#include "het/parity_factor.hpp"
#include "het/spanning.hpp"

namespace het {

namespace {

// Eulerian circuit of one component of an even-degree bipartite subgraph,
// as a combined-node sequence of length 2t starting at startX.
std::vector<int> eulerCircuit(const BipartiteGraph& g, int startX, std::vector<char>& edgeUsed,
                              const std::vector<std::vector<std::pair<int, int>>>& adj) {
  std::vector<int> ptr(g.nodeCount(), 0);
  std::vector<int> stack = {startX};
  std::vector<int> circuit;
  while (!stack.empty()) {
    int node = stack.back();
    auto& p = ptr[node];
    while (p < static_cast<int>(adj[node].size()) && edgeUsed[adj[node][p].second]) ++p;
    if (p == static_cast<int>(adj[node].size())) {
      circuit.push_back(node);
      stack.pop_back();
    } else {
      auto [next, id] = adj[node][p];
      edgeUsed[id] = 1;
      stack.push_back(next);
    }
  }
  std::reverse(circuit.begin(), circuit.end());  // pops emit the circuit backwards
  circuit.pop_back();                            // drop the closing copy of startX
  return circuit;
}

ClosedWalk walkFromCircuit(const BipartiteGraph& g, const std::vector<int>& circuit) {
  ClosedWalk walk;
  int t = static_cast<int>(circuit.size()) / 2;
  for (int i = 0; i < t; ++i) {
    walk.vertices.push_back(g.yIndexOf(circuit[2 * i + 1]));
    walk.edgeIds.push_back(i + 1 < t ? circuit[2 * (i + 1)] : circuit[0]);
  }
  return walk;
}

}  // namespace

EulerFamily extractFamily(const Hypergraph& h, const Subgraph& sub) {
  auto g = incidence(h);
  auto xDeg = sub.xDegrees(g.xCount());
  auto yDeg = sub.yDegrees(g.yCount());
  for (int x = 0; x < g.xCount(); ++x)
    if (xDeg[x] != 2) throw std::invalid_argument("subgraph fails the exact X-degree spec");
  for (int y = 0; y < g.yCount(); ++y)
    if (yDeg[y] % 2 != 0) throw std::invalid_argument("subgraph fails the even Y-degree spec");
  for (const auto& [x, y] : sub.pairs) {
    const auto& e = h.edges[x];
    if (!std::binary_search(e.begin(), e.end(), y))
      throw std::invalid_argument("subgraph pair is not an incidence of the hypergraph");
  }

  // adjacency over kept pairs, sorted so traversal prefers low indices
  std::vector<std::vector<std::pair<int, int>>> adj(g.nodeCount());
  for (int id = 0; id < static_cast<int>(sub.pairs.size()); ++id) {
    auto [x, y] = sub.pairs[id];
    adj[x].emplace_back(g.yId(y), id);
    adj[g.yId(y)].emplace_back(x, id);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  EulerFamily fam;
  std::vector<char> edgeUsed(sub.pairs.size(), 0);
  std::vector<char> visited(g.nodeCount(), 0);
  for (int x = 0; x < g.xCount(); ++x) {
    if (visited[x]) continue;
    // mark the whole component before traversal
    std::vector<int> stack = {x};
    visited[x] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (auto [next, id] : adj[node]) {
        (void)id;
        if (!visited[next]) {
          visited[next] = 1;
          stack.push_back(next);
        }
      }
    }
    auto circuit = eulerCircuit(g, x, edgeUsed, adj);
    fam.walks.push_back(walkFromCircuit(g, circuit));
  }
  return fam;
}

std::optional<EulerFamily> eulerFamily(const Hypergraph& h) {
  auto sub = findEvenX2Subgraph(incidence(h));
  if (!sub) return std::nullopt;
  auto fam = extractFamily(h, *sub);
  auto report = verify(h, fam);
  if (!report.ok()) throw std::logic_error("family failed self-verification");
  return fam;
}

SpanningTourResult spanningEulerTour(const Hypergraph& h, int maxAttempts) {
  SpanningTourResult result;
  if (h.n < 2 || h.edgeCount() < 1) {
    result.failedStage = "degenerate-input";
    return result;
  }
  auto g = incidence(h);
  if (!g.connected()) {
    result.failedStage = "connectivity";
    return result;
  }

  auto runDownstream = [&](const NiceTree& tree, std::string& stage) -> std::optional<ClosedWalk> {
    ReducedTree fstar = reduceTree(tree);
    AuxGraph aux;
    try {
      aux = buildAuxGraph(g, tree, fstar);
    } catch (const HypothesesViolatedError&) {
      stage = "aux-graph";
      return std::nullopt;
    }
    auto q = findEvenX2Subgraph(aux.graph);
    if (!q) {
      stage = "parity-factor";
      return std::nullopt;
    }
    auto assembled = assemble(g, fstar, aux, *q);
    auto fam = extractFamily(h, assembled);
    if (fam.walks.size() != 1) throw std::logic_error("assembled subgraph split into walks");
    auto report = verify(h, fam, /*requireSpanning=*/true, /*requireTour=*/true);
    if (!report.ok()) throw std::logic_error("spanning tour failed self-verification");
    return fam.walks.front();
  };

  std::string firstFailure;
  bool anyTree = false;
  int attempts = 0;
  for (int seed = 0; seed < g.xCount() && attempts < maxAttempts; ++seed) {
    auto tree = greedyNiceTreeFromSeed(g, seed);
    if (!tree) continue;
    anyTree = true;
    ++attempts;
    std::string stage;
    if (auto walk = runDownstream(*tree, stage)) {
      result.walk = std::move(walk);
      return result;
    }
    if (firstFailure.empty()) firstFailure = stage;
    if (stage == "aux-graph") break;  // depends only on g, retries cannot help
  }
  if (!anyTree) {
    auto search = findNiceSpanningTree(g);
    if (search.status == TreeSearchStatus::noneExists) {
      result.failedStage = "nice-tree (none exists)";
      return result;
    }
    if (search.status == TreeSearchStatus::capExceeded) {
      result.failedStage = "nice-tree (search cap exceeded)";
      return result;
    }
    std::string stage;
    if (auto walk = runDownstream(*search.tree, stage)) {
      result.walk = std::move(walk);
      return result;
    }
    firstFailure = stage;
  }
  result.failedStage = firstFailure.empty() ? "nice-tree" : firstFailure;
  return result;
}

TourReport verify(const Hypergraph& h, const EulerFamily& fam, bool requireSpanning,
                  bool requireTour) {
  TourReport report;
  auto complain = [&](const std::string& msg) { report.violations.push_back(msg); };

  std::vector<int> edgeSeen(h.edgeCount(), 0);
  std::vector<char> vertexSeen(h.n, 0);
  for (std::size_t w = 0; w < fam.walks.size(); ++w) {
    const auto& walk = fam.walks[w];
    std::string tag = "walk " + std::to_string(w) + ": ";
    if (walk.vertices.size() != walk.edgeIds.size()) {
      complain(tag + "vertex and edge sequences differ in length");
      continue;
    }
    int t = walk.length();
    if (t < 2) {
      complain(tag + "closed walk needs length >= 2");
      continue;
    }
    bool indicesOk = true;
    for (int i = 0; i < t; ++i) {
      if (walk.vertices[i] < 0 || walk.vertices[i] >= h.n) {
        complain(tag + "vertex id out of range at position " + std::to_string(i));
        indicesOk = false;
      }
      if (walk.edgeIds[i] < 0 || walk.edgeIds[i] >= h.edgeCount()) {
        complain(tag + "edge index out of range at position " + std::to_string(i));
        indicesOk = false;
      }
    }
    if (!indicesOk) continue;
    for (int i = 0; i < t; ++i) {
      int v = walk.vertices[i];
      int vNext = walk.vertices[(i + 1) % t];
      const auto& e = h.edges[walk.edgeIds[i]];
      if (v == vNext)
        complain(tag + "consecutive vertices equal at position " + std::to_string(i));
      if (!std::binary_search(e.begin(), e.end(), v) ||
          !std::binary_search(e.begin(), e.end(), vNext))
        complain(tag + "edge at position " + std::to_string(i) +
                 " does not contain its endpoints");
      ++edgeSeen[walk.edgeIds[i]];
      vertexSeen[v] = 1;
    }
  }
  for (int e = 0; e < h.edgeCount(); ++e) {
    if (edgeSeen[e] == 0) complain("edge " + std::to_string(e) + " is never traversed");
    if (edgeSeen[e] > 1)
      complain("edge " + std::to_string(e) + " traversed " + std::to_string(edgeSeen[e]) +
               " times");
  }

  bool allVerticesVisited =
      std::all_of(vertexSeen.begin(), vertexSeen.end(), [](char c) { return c != 0; });
  report.isTour = fam.walks.size() == 1;
  report.isSpanning = report.isTour && allVerticesVisited;
  if (requireTour && fam.walks.size() != 1)
    complain("expected a single closed walk, got " + std::to_string(fam.walks.size()));
  if (requireSpanning) {
    if (fam.walks.size() != 1)
      complain("a spanning tour must be a single closed walk");
    for (int v = 0; v < h.n; ++v)
      if (!vertexSeen[v]) complain("vertex " + std::to_string(v) + " is never visited");
  }
  return report;
}

std::vector<int> lineGraphHamiltonianCycle(const Hypergraph& h, const ClosedWalk& tour) {
  if (h.edgeCount() < 3)
    throw std::invalid_argument("block-intersection cycle needs at least 3 edges");
  EulerFamily fam;
  fam.walks.push_back(tour);
  auto report = verify(h, fam, false, true);
  if (!report.ok()) throw std::invalid_argument("input walk is not a verified Euler tour");
  int t = tour.length();
  for (int i = 0; i < t; ++i) {
    const auto& a = h.edges[tour.edgeIds[i]];
    const auto& b = h.edges[tour.edgeIds[(i + 1) % t]];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) throw std::logic_error("consecutive tour blocks do not intersect");
  }
  return tour.edgeIds;
}

std::vector<UCycleEntry> emitUCycle(const ClosedWalk& tour) {
  std::vector<UCycleEntry> entries;
  int t = tour.length();
  for (int i = 0; i < t; ++i)
    entries.push_back({tour.vertices[(i + 1) % t], tour.edgeIds[i], tour.edgeIds[(i + 1) % t]});
  return entries;
}

std::string formatWalk(const ClosedWalk& walk) {
  std::ostringstream out;
  for (int i = 0; i < walk.length(); ++i) {
    if (i) out << ' ';
    out << walk.vertices[i] << ' ' << walk.edgeIds[i];
  }
  return out.str();
}

std::string formatFamily(const EulerFamily& fam) {
  std::ostringstream out;
  for (const auto& walk : fam.walks) out << formatWalk(walk) << '\n';
  return out.str();
}

EulerFamily parseTourFile(const std::string& text) {
  EulerFamily fam;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::vector<long long> tokens;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      try {
        std::size_t pos = 0;
        long long value = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(value);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineNo) + ": not an integer: '" + tok + "'");
      }
    }
    if (tokens.empty()) continue;
    if (tokens.size() % 2 != 0)
      throw ParseError("line " + std::to_string(lineNo) +
                       ": walk needs an even number of tokens");
    ClosedWalk walk;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
      walk.vertices.push_back(static_cast<int>(tokens[i]));
      walk.edgeIds.push_back(static_cast<int>(tokens[i + 1]));
    }
    fam.walks.push_back(std::move(walk));
  }
  return fam;
}

std::string formatUCycle(const std::vector<UCycleEntry>& entries) {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ' ';
    out << entries[i].vertex << ':' << entries[i].edgeBefore << ',' << entries[i].edgeAfter;
  }
  out << '\n';
  return out.str();
}

}  // namespace het
