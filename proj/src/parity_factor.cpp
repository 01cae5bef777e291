#include "het/parity_factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "het/errors.hpp"

namespace het {

namespace {

void checkNodeSets(const BipartiteGraph& g, const std::vector<int>& sSet,
                   const std::vector<int>& tNodes) {
  std::vector<char> inS(g.nodeCount(), 0);
  for (int x : sSet) {
    if (x < 0 || x >= g.xCount()) throw std::invalid_argument("S must contain X-node indices");
    if (inS[x]) throw std::invalid_argument("duplicate node in S");
    inS[x] = 1;
  }
  std::vector<char> inT(g.nodeCount(), 0);
  for (int node : tNodes) {
    if (node < 0 || node >= g.nodeCount()) throw std::invalid_argument("T node out of range");
    if (inT[node]) throw std::invalid_argument("duplicate node in T");
    if (node < g.xCount() && inS[node]) throw std::invalid_argument("S and T must be disjoint");
    inT[node] = 1;
  }
}

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

// (|S∪T|, S, T) lexicographic
bool barrierBefore(const Barrier& a, const Barrier& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.sSet != b.sSet) return a.sSet < b.sSet;
  return a.tSet < b.tSet;
}

}  // namespace

long long deltaST(const BipartiteGraph& g, const std::vector<int>& sSet,
                  const std::vector<int>& tNodes) {
  checkNodeSets(g, sSet, tNodes);
  int total = g.nodeCount();
  std::vector<char> inS(total, 0), inT(total, 0);
  for (int x : sSet) inS[x] = 1;
  for (int node : tNodes) inT[node] = 1;

  long long degreeSum = 0;  // sum over T of deg_{G-S}; removing S only affects Y-nodes
  long long tInX = 0;
  for (int node : tNodes) {
    if (g.isXNode(node)) {
      ++tInX;
      degreeSum += g.xDegree(node);
    } else {
      for (int x : g.yNeighbors(g.yIndexOf(node)))
        if (!inS[x]) ++degreeSum;
    }
  }

  // components of G - (S ∪ T), then the parity of edges from T into each
  Dsu dsu(total);
  auto removed = [&](int node) { return inS[node] != 0 || inT[node] != 0; };
  for (const auto& [x, y] : g.edges()) {
    int yNode = g.yId(y);
    if (!removed(x) && !removed(yNode)) dsu.unite(x, yNode);
  }
  std::vector<int> edgesToT(total, 0);
  for (const auto& [x, y] : g.edges()) {
    int yNode = g.yId(y);
    if (inT[x] && !removed(yNode)) ++edgesToT[dsu.find(yNode)];
    if (inT[yNode] && !removed(x)) ++edgesToT[dsu.find(x)];
  }
  long long oddComponents = 0;
  for (int node = 0; node < total; ++node)
    if (!removed(node) && dsu.find(node) == node && edgesToT[node] % 2 != 0) ++oddComponents;

  return 2LL * static_cast<long long>(sSet.size()) + degreeSum - 2LL * tInX - oddComponents;
}

namespace {

// Shared ternary sweep over X assignments (0 = neither, 1 = S, 2 = T); when
// ySubsets is true, each X assignment is crossed with every T-subset of Y.
std::optional<Barrier> sweepBarriers(const BipartiteGraph& g, std::uint64_t capStates,
                                     bool ySubsets) {
  int x = g.xCount();
  int y = g.yCount();
  std::uint64_t states = 1;
  const std::uint64_t limit = ~std::uint64_t(0) >> 2;
  for (int i = 0; i < x; ++i) {
    if (states > limit / 3) throw CapExceededError("barrier enumeration exceeds state cap");
    states *= 3;
  }
  if (ySubsets) {
    for (int j = 0; j < y; ++j) {
      if (states > limit / 2) throw CapExceededError("barrier enumeration exceeds state cap");
      states *= 2;
    }
  }
  if (states > capStates) throw CapExceededError("barrier enumeration exceeds state cap");

  std::optional<Barrier> best;
  std::vector<int> assignX(x, 0);
  std::vector<char> pickY(y, 0);
  auto evaluate = [&]() {
    Barrier cand;
    for (int i = 0; i < x; ++i) {
      if (assignX[i] == 1) cand.sSet.push_back(i);
      if (assignX[i] == 2) cand.tSet.push_back(i);
    }
    for (int j = 0; j < y; ++j)
      if (pickY[j]) cand.tSet.push_back(g.yId(j));
    cand.delta = deltaST(g, cand.sSet, cand.tSet);
    if (cand.delta < 0 && (!best || barrierBefore(cand, *best))) best = cand;
  };

  for (;;) {
    if (ySubsets) {
      for (;;) {
        evaluate();
        int j = 0;
        while (j < y && pickY[j] == 1) pickY[j++] = 0;
        if (j == y) break;
        pickY[j] = 1;
      }
    } else {
      evaluate();
    }
    int i = 0;
    while (i < x && assignX[i] == 2) assignX[i++] = 0;
    if (i == x) break;
    ++assignX[i];
  }
  return best;
}

}  // namespace

std::optional<Barrier> findBarrierBruteForce(const BipartiteGraph& g, std::uint64_t capStates) {
  return sweepBarriers(g, capStates, false);
}

std::optional<Barrier> findMinimumBarrierExhaustive(const BipartiteGraph& g,
                                                    std::uint64_t capStates) {
  return sweepBarriers(g, capStates, true);
}

GadgetGraph buildGadget(const BipartiteGraph& g, DegreeSpec spec) {
  for (int x = 0; x < g.xCount(); ++x) {
    if (g.xDegree(x) < spec.xDegree)
      throw std::invalid_argument("X-node " + std::to_string(x) +
                                  " has degree below the required degree: infeasible");
  }

  GadgetGraph gadget;
  int pairCount = g.edgeCount();
  gadget.realEdges.resize(pairCount);
  std::vector<std::vector<int>> pairsOfX(g.xCount()), pairsOfY(g.yCount());
  for (int p = 0; p < pairCount; ++p) {
    pairsOfX[g.edges()[p].first].push_back(p);
    pairsOfY[g.edges()[p].second].push_back(p);
  }

  auto& nodes = gadget.tags;
  auto newNode = [&](GadgetGraph::NodeTag tag) {
    nodes.push_back(tag);
    return static_cast<int>(nodes.size()) - 1;
  };
  std::vector<int> externalX(pairCount), externalY(pairCount);
  for (int p = 0; p < pairCount; ++p) {
    externalX[p] = newNode({GadgetGraph::NodeKind::externalX, g.edges()[p].first, p});
    externalY[p] = newNode({GadgetGraph::NodeKind::externalY, g.edges()[p].second, p});
  }

  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < pairCount; ++p) {
    gadget.realEdges[p] = {externalX[p], externalY[p]};
    edges.emplace_back(externalX[p], externalY[p]);
  }
  for (int x = 0; x < g.xCount(); ++x) {
    int d = static_cast<int>(pairsOfX[x].size());
    for (int i = 0; i < d - spec.xDegree; ++i) {
      int internal = newNode({GadgetGraph::NodeKind::internalX, x, -1});
      for (int p : pairsOfX[x]) edges.emplace_back(internal, externalX[p]);
    }
  }
  for (int y = 0; y < g.yCount(); ++y) {
    int d = static_cast<int>(pairsOfY[y].size());
    std::vector<int> internals;
    for (int i = 0; i < d; ++i) {
      int internal = newNode({GadgetGraph::NodeKind::internalY, y, -1});
      internals.push_back(internal);
      for (int p : pairsOfY[y]) edges.emplace_back(internal, externalY[p]);
    }
    for (int i = 0; i + 1 < d; i += 2) edges.emplace_back(internals[i], internals[i + 1]);
  }

  gadget.graph = Graph(static_cast<int>(nodes.size()));
  for (auto [u, v] : edges) gadget.graph.addEdge(u, v);
  return gadget;
}

std::optional<Subgraph> findEvenX2Subgraph(const BipartiteGraph& g) {
  DegreeSpec spec = DegreeSpec::evenX2();
  for (int x = 0; x < g.xCount(); ++x)
    if (g.xDegree(x) < spec.xDegree) return std::nullopt;

  auto gadget = buildGadget(g, spec);
  auto mate = maxMatching(gadget.graph);
  if (2 * matchingSize(mate) != gadget.graph.nodeCount) return std::nullopt;

  Subgraph sub;
  for (int p = 0; p < g.edgeCount(); ++p) {
    auto [extX, extY] = gadget.realEdges[p];
    if (mate[extX] == extY) sub.pairs.push_back(g.edges()[p]);
  }
  auto xDeg = sub.xDegrees(g.xCount());
  auto yDeg = sub.yDegrees(g.yCount());
  for (int x = 0; x < g.xCount(); ++x)
    if (xDeg[x] != spec.xDegree) throw std::logic_error("gadget produced a bad X-degree");
  for (int y = 0; y < g.yCount(); ++y)
    if (yDeg[y] % 2 != 0) throw std::logic_error("gadget produced an odd Y-degree");
  return sub;
}

}  // namespace het
