#include "het/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace het {

BipartiteGraph::BipartiteGraph(int xCount, int yCount, std::vector<std::pair<int, int>> edges)
    : x_(xCount), y_(yCount), edges_(std::move(edges)) {
  if (x_ < 0 || y_ < 0) throw std::invalid_argument("negative side size");
  for (auto [x, y] : edges_) {
    if (x < 0 || x >= x_ || y < 0 || y >= y_)
      throw std::invalid_argument("bipartite edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edge in bipartite graph");
  xAdj_.assign(x_, {});
  yAdj_.assign(y_, {});
  for (auto [x, y] : edges_) {
    xAdj_[x].push_back(y);
    yAdj_[y].push_back(x);
  }
  // edges_ sorted by (x, y) makes xAdj_ sorted already; yAdj_ needs a pass
  for (auto& a : yAdj_) std::sort(a.begin(), a.end());
}

bool BipartiteGraph::connected() const {
  int total = nodeCount();
  if (total <= 1) return true;
  std::vector<char> seen(total, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    auto push = [&](int next) {
      if (!seen[next]) {
        seen[next] = 1;
        ++visited;
        stack.push_back(next);
      }
    };
    if (isXNode(node)) {
      for (int y : xNeighbors(node)) push(yId(y));
    } else {
      for (int x : yNeighbors(yIndexOf(node))) push(x);
    }
  }
  return visited == total;
}

IncidenceGraph incidence(const Hypergraph& h) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < h.edgeCount(); ++i)
    for (int v : h.edges[i]) pairs.emplace_back(i, v);
  return BipartiteGraph(h.edgeCount(), h.n, std::move(pairs));
}

std::vector<int> Subgraph::xDegrees(int xCount) const {
  std::vector<int> deg(xCount, 0);
  for (const auto& p : pairs) ++deg[p.first];
  return deg;
}

std::vector<int> Subgraph::yDegrees(int yCount) const {
  std::vector<int> deg(yCount, 0);
  for (const auto& p : pairs) ++deg[p.second];
  return deg;
}

}  // namespace het
