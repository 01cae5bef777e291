#include "het/spanning.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "het/errors.hpp"

namespace het {

namespace {

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

NiceTree finalizeTree(const BipartiteGraph& g, std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  if (static_cast<int>(edges.size()) != g.nodeCount() - 1)
    throw std::logic_error("nice tree has the wrong edge count");
  Dsu dsu(g.nodeCount());
  std::vector<int> xDeg(g.xCount(), 0);
  for (auto [x, y] : edges) {
    if (!dsu.unite(x, g.yId(y))) throw std::logic_error("nice tree contains a cycle");
    ++xDeg[x];
  }
  NiceTree tree;
  tree.edges = std::move(edges);
  for (int x = 0; x < g.xCount(); ++x) {
    if (xDeg[x] > 2) throw std::logic_error("nice tree has an X-degree above 2");
    if (xDeg[x] == 2) tree.degree2X.push_back(x);
  }
  if (static_cast<int>(tree.degree2X.size()) != g.yCount() - 1)
    throw std::logic_error("nice tree degree-2 count is not yCount - 1");
  return tree;
}

NiceTree starTree(const BipartiteGraph& g) {
  // yCount == 1: every X-node hangs off the single Y-node
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g.xCount(); ++x) edges.emplace_back(x, 0);
  return finalizeTree(g, std::move(edges));
}

std::vector<std::pair<int, int>> leafAttach(const BipartiteGraph& g,
                                            std::vector<std::pair<int, int>> edges,
                                            const std::vector<char>& inTreeX) {
  for (int x = 0; x < g.xCount(); ++x)
    if (!inTreeX[x]) edges.emplace_back(x, g.xNeighbors(x).front());
  return edges;
}

}  // namespace

std::optional<NiceTree> greedyNiceTreeFromSeed(const BipartiteGraph& g, int seed) {
  if (g.yCount() == 1) return starTree(g);
  if (seed < 0 || seed >= g.xCount() || g.xDegree(seed) < 2) return std::nullopt;

  std::vector<char> inTreeX(g.xCount(), 0), inTreeY(g.yCount(), 0);
  std::vector<std::pair<int, int>> edges;
  inTreeX[seed] = 1;
  int covered = 2;
  edges.emplace_back(seed, g.xNeighbors(seed)[0]);
  edges.emplace_back(seed, g.xNeighbors(seed)[1]);
  inTreeY[g.xNeighbors(seed)[0]] = 1;
  inTreeY[g.xNeighbors(seed)[1]] = 1;

  while (covered < g.yCount()) {
    int best = -1, bestNew = 0;
    for (int x = 0; x < g.xCount(); ++x) {
      if (inTreeX[x]) continue;
      bool touches = false;
      int fresh = 0;
      for (int y : g.xNeighbors(x)) {
        if (inTreeY[y])
          touches = true;
        else
          ++fresh;
      }
      if (touches && fresh > bestNew) {
        best = x;
        bestNew = fresh;
      }
    }
    if (best == -1) return std::nullopt;  // stuck: no X joins covered to uncovered
    int yOld = -1, yNew = -1;
    for (int y : g.xNeighbors(best)) {
      if (inTreeY[y] && yOld == -1) yOld = y;
      if (!inTreeY[y] && yNew == -1) yNew = y;
    }
    inTreeX[best] = 1;
    inTreeY[yNew] = 1;
    ++covered;
    edges.emplace_back(best, yOld);
    edges.emplace_back(best, yNew);
  }
  return finalizeTree(g, leafAttach(g, std::move(edges), inTreeX));
}

namespace {

// Backtracking over X-nodes: each either joins two Y-components (becoming a
// degree-2 tree node) or is skipped; searches for |Y|-1 joins.
struct ExhaustiveSearch {
  const BipartiteGraph& g;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<std::pair<int, std::pair<int, int>>> chosen;  // (x, (y, z))
  bool exceeded = false;

  explicit ExhaustiveSearch(const BipartiteGraph& graph, std::uint64_t nodeBudget)
      : g(graph), budget(nodeBudget) {}

  bool search(int xi, Dsu dsu, int components) {
    if (++visited > budget) {
      exceeded = true;
      return false;
    }
    if (components == 1) return true;
    if (xi == g.xCount()) return false;
    if (g.xCount() - xi < components - 1) return false;
    const auto& nbrs = g.xNeighbors(xi);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        int ya = g.yId(nbrs[a]), yb = g.yId(nbrs[b]);
        if (dsu.find(ya) == dsu.find(yb)) continue;
        Dsu next = dsu;
        next.unite(ya, yb);
        chosen.push_back({xi, {nbrs[a], nbrs[b]}});
        if (search(xi + 1, std::move(next), components - 1)) return true;
        chosen.pop_back();
        if (exceeded) return false;
      }
    }
    return search(xi + 1, std::move(dsu), components);
  }
};

}  // namespace

NiceTreeSearch findNiceSpanningTree(const BipartiteGraph& g, int exhaustiveNodeCap,
                                    std::uint64_t exhaustiveNodeBudget) {
  if (!g.connected()) throw std::invalid_argument("disconnected input");
  if (g.yCount() == 0) {
    // connected implies at most one node overall
    if (g.xCount() == 0) return {TreeSearchStatus::found, NiceTree{}};
    return {TreeSearchStatus::noneExists, std::nullopt};  // lone X-node spans nothing
  }
  if (g.yCount() == 1) return {TreeSearchStatus::found, starTree(g)};

  for (int seed = 0; seed < g.xCount(); ++seed)
    if (auto tree = greedyNiceTreeFromSeed(g, seed))
      return {TreeSearchStatus::found, std::move(tree)};

  if (g.nodeCount() > exhaustiveNodeCap) return {TreeSearchStatus::capExceeded, std::nullopt};

  ExhaustiveSearch search(g, exhaustiveNodeBudget);
  if (search.search(0, Dsu(g.nodeCount()), g.yCount())) {
    std::vector<char> inTreeX(g.xCount(), 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [x, pair] : search.chosen) {
      inTreeX[x] = 1;
      edges.emplace_back(x, pair.first);
      edges.emplace_back(x, pair.second);
    }
    return {TreeSearchStatus::found, finalizeTree(g, leafAttach(g, std::move(edges), inTreeX))};
  }
  if (search.exceeded) return {TreeSearchStatus::capExceeded, std::nullopt};
  return {TreeSearchStatus::noneExists, std::nullopt};
}

ReducedTree reduceTree(const NiceTree& f) {
  std::set<int> degree2(f.degree2X.begin(), f.degree2X.end());
  ReducedTree fstar;
  int maxY = -1;
  for (auto [x, y] : f.edges) {
    if (degree2.count(x)) fstar.edges.push_back({x, y});
    maxY = std::max(maxY, y);
  }
  std::vector<int> yDeg(maxY + 1, 0);
  for (const auto& e : fstar.edges) ++yDeg[e.second];
  for (int y = 0; y <= maxY; ++y)
    if (yDeg[y] % 2 != 0) fstar.oddVertices.push_back(y);
  if (fstar.oddVertices.empty() || fstar.oddVertices.size() % 2 != 0)
    throw std::logic_error("reduced tree must have a nonempty even odd-vertex set");
  return fstar;
}

AuxGraph buildAuxGraph(const BipartiteGraph& g, const NiceTree& f, const ReducedTree& fstar) {
  std::vector<char> inA(g.xCount(), 0);
  for (int x : f.degree2X) inA[x] = 1;

  AuxGraph aux;
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g.xCount(); ++x) {
    if (inA[x]) continue;
    int id = static_cast<int>(aux.origX.size());
    aux.origX.push_back(x);
    for (int y : g.xNeighbors(x)) edges.emplace_back(id, y);
  }
  for (std::size_t j = 0; 2 * j + 1 < fstar.oddVertices.size(); ++j) {
    int id = static_cast<int>(aux.origX.size());
    aux.origX.push_back(-1);
    aux.wPairs.push_back({fstar.oddVertices[2 * j], fstar.oddVertices[2 * j + 1]});
    edges.emplace_back(id, aux.wPairs.back().first);
    edges.emplace_back(id, aux.wPairs.back().second);
  }
  aux.graph = BipartiteGraph(static_cast<int>(aux.origX.size()), g.yCount(), std::move(edges));
  for (int x = 0; x < aux.graph.xCount(); ++x) {
    if (aux.graph.xDegree(x) < 2)
      throw HypothesesViolatedError("auxiliary X-node of degree below 2");
  }
  return aux;
}

Subgraph assemble(const BipartiteGraph& g, const ReducedTree& fstar, const AuxGraph& aux,
                  const Subgraph& q) {
  auto qx = q.xDegrees(aux.graph.xCount());
  auto qy = q.yDegrees(aux.graph.yCount());
  for (int x = 0; x < aux.graph.xCount(); ++x)
    if (qx[x] != 2) throw std::invalid_argument("subgraph fails the exact X-degree spec");
  for (int y = 0; y < aux.graph.yCount(); ++y)
    if (qy[y] % 2 != 0) throw std::invalid_argument("subgraph fails the even Y-degree spec");

  Subgraph out;
  out.pairs = fstar.edges;
  for (const auto& [xStar, y] : q.pairs) {
    int orig = aux.origX[xStar];
    if (orig >= 0) out.pairs.emplace_back(orig, y);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  if (std::adjacent_find(out.pairs.begin(), out.pairs.end()) != out.pairs.end())
    throw std::logic_error("assembled subgraph repeats an incidence");

  auto xDeg = out.xDegrees(g.xCount());
  auto yDeg = out.yDegrees(g.yCount());
  for (int x = 0; x < g.xCount(); ++x)
    if (xDeg[x] != 2) throw std::logic_error("assembled subgraph misses X-degree 2");
  for (int y = 0; y < g.yCount(); ++y) {
    if (yDeg[y] % 2 != 0) throw std::logic_error("assembled subgraph has an odd Y-degree");
    if (yDeg[y] == 0) throw std::logic_error("assembled subgraph misses a vertex");
  }
  Dsu dsu(g.nodeCount());
  int parts = g.nodeCount();
  for (const auto& [x, y] : out.pairs)
    if (dsu.unite(x, g.yId(y))) --parts;
  if (parts != 1) throw std::logic_error("assembled subgraph is disconnected");
  return out;
}

}  // namespace het
