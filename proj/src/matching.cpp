#include "het/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace het {

void Graph::addEdge(int u, int v) {
  if (u < 0 || u >= nodeCount || v < 0 || v >= nodeCount)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  edges.emplace_back(u, v);
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(nodeCount);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

namespace {

struct BlossomMatcher {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> mate, parent, base;
  std::vector<char> used, inBlossom;

  explicit BlossomMatcher(const Graph& g)
      : n(g.nodeCount),
        adj(g.adjacency()),
        mate(n, -1),
        parent(n, -1),
        base(n),
        used(n, 0),
        inBlossom(n, 0) {}

  int lowestCommonAncestor(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (mate[a] == -1) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[mate[b]];
    }
  }

  void markPath(int v, int blossomBase, int child) {
    while (base[v] != blossomBase) {
      inBlossom[base[v]] = 1;
      inBlossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  }

  // BFS for an augmenting path from root; returns its free endpoint or -1.
  int findPath(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          // odd cycle: contract the blossom down to the common base
          int blossomBase = lowestCommonAncestor(v, to);
          std::fill(inBlossom.begin(), inBlossom.end(), 0);
          markPath(v, blossomBase, to);
          markPath(to, blossomBase, v);
          for (int i = 0; i < n; ++i) {
            if (inBlossom[base[i]]) {
              base[i] = blossomBase;
              if (!used[i]) {
                used[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          queue.push(mate[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v];
      int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  std::vector<int> run() {
    for (int v = 0; v < n; ++v) {
      if (mate[v] != -1) continue;
      for (int u : adj[v]) {
        if (mate[u] == -1) {
          mate[v] = u;
          mate[u] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (mate[v] != -1) continue;
      int endpoint = findPath(v);
      if (endpoint != -1) augment(endpoint);
    }
    return mate;
  }
};

}  // namespace

std::vector<int> maxMatching(const Graph& g) { return BlossomMatcher(g).run(); }

int matchingSize(const std::vector<int>& mate) {
  int matched = 0;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) ++matched;
  return matched;
}

}  // namespace het
