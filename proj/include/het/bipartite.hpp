#pragma once

#include <utility>
#include <vector>

#include "het/hypergraph.hpp"

namespace het {

// Simple bipartite graph G[X, Y]. Combined node ids put X first: X-node i is
// node i, Y-node j is node xCount + j.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int xCount, int yCount, std::vector<std::pair<int, int>> edges);

  int xCount() const { return x_; }
  int yCount() const { return y_; }
  int nodeCount() const { return x_ + y_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }

  // Sorted by (x, y), duplicate-free.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& xNeighbors(int x) const { return xAdj_[x]; }
  const std::vector<int>& yNeighbors(int y) const { return yAdj_[y]; }
  int xDegree(int x) const { return static_cast<int>(xAdj_[x].size()); }
  int yDegree(int y) const { return static_cast<int>(yAdj_[y].size()); }

  int xId(int x) const { return x; }
  int yId(int y) const { return x_ + y; }
  bool isXNode(int node) const { return node < x_; }
  int yIndexOf(int node) const { return node - x_; }

  bool connected() const;

 private:
  int x_ = 0;
  int y_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> xAdj_;
  std::vector<std::vector<int>> yAdj_;
};

// The incidence graph has one X-node per hypergraph edge and one Y-node per
// vertex; X-node i is adjacent to Y-node v iff v belongs to edge i. Simple
// even when h has repeated edges.
using IncidenceGraph = BipartiteGraph;
IncidenceGraph incidence(const Hypergraph& h);

// Subgraph of a bipartite graph as a set of kept (x, y) incidence pairs.
struct Subgraph {
  std::vector<std::pair<int, int>> pairs;

  std::vector<int> xDegrees(int xCount) const;
  std::vector<int> yDegrees(int yCount) const;
};

}  // namespace het
