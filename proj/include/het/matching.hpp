#pragma once

#include <utility>
#include <vector>

namespace het {

// General simple undirected graph as an edge list.
struct Graph {
  int nodeCount = 0;
  std::vector<std::pair<int, int>> edges;

  explicit Graph(int n = 0) : nodeCount(n) {}
  void addEdge(int u, int v);
  std::vector<std::vector<int>> adjacency() const;  // sorted neighbor lists
};

// Maximum cardinality matching by blossom contraction (augmenting paths with
// base tracking). Deterministic: vertices scanned in ascending order,
// adjacency sorted. Returns mate[v] = partner or -1.
std::vector<int> maxMatching(const Graph& g);

int matchingSize(const std::vector<int>& mate);

}  // namespace het
