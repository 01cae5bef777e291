#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "het/bipartite.hpp"
#include "het/hypergraph.hpp"
#include "het/matching.hpp"

namespace het::test {

inline Hypergraph randomHypergraph(std::mt19937& rng, int maxN = 10, int maxM = 10,
                                   int minSize = 2, int maxSize = 5) {
  std::uniform_int_distribution<int> nDist(std::max(2, minSize), maxN);
  int n = nDist(rng);
  std::uniform_int_distribution<int> mDist(1, maxM);
  int m = mDist(rng);
  int hi = std::min(maxSize, n);
  std::uniform_int_distribution<int> sizeDist(minSize, hi);
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < m; ++i) {
    std::shuffle(ids.begin(), ids.end(), rng);
    int size = sizeDist(rng);
    std::vector<int> edge(ids.begin(), ids.begin() + size);
    std::sort(edge.begin(), edge.end());
    edges.push_back(std::move(edge));
  }
  return makeHypergraph(n, std::move(edges));
}

inline BipartiteGraph randomBipartite(std::mt19937& rng, int maxX = 6, int maxY = 7,
                                      int densityPercent = 45) {
  std::uniform_int_distribution<int> xDist(1, maxX), yDist(1, maxY), coin(0, 99);
  int x = xDist(rng), y = yDist(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x; ++i)
    for (int j = 0; j < y; ++j)
      if (coin(rng) < densityPercent) pairs.emplace_back(i, j);
  return BipartiteGraph(x, y, std::move(pairs));
}

inline Graph randomGraph(std::mt19937& rng, int maxNodes = 12, int densityPercent = 40) {
  std::uniform_int_distribution<int> nDist(1, maxNodes), coin(0, 99);
  int n = nDist(rng);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < densityPercent) g.addEdge(u, v);
  return g;
}

inline Graph petersenGraph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.addEdge(i, (i + 1) % 5);
    g.addEdge(i, i + 5);
    g.addEdge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace het::test
