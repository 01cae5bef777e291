#include "het/oracle.hpp"

#include <algorithm>
#include <functional>
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
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

int witnessStrength(bool tour, bool spanning) { return spanning ? 3 : (tour ? 2 : 1); }

}  // namespace

OracleVerdict oracleEuler(const Hypergraph& h, OracleMode mode, std::uint64_t capStates) {
  int m = h.edgeCount();
  int n = h.n;
  std::vector<std::vector<std::pair<int, int>>> choices(m);
  std::uint64_t states = 1;
  for (int i = 0; i < m; ++i) {
    const auto& e = h.edges[i];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) choices[i].emplace_back(e[a], e[b]);
    if (choices[i].empty()) return {};  // an edge of size < 2 admits no assignment
    if (states > capStates / choices[i].size())
      throw CapExceededError("oracle enumeration exceeds state cap");
    states *= choices[i].size();
  }

  OracleVerdict verdict;
  int bestStrength = 0;
  std::vector<int> parity(n, 0);
  int oddCount = 0;
  std::vector<std::pair<int, int>> current(m);
  bool done = false;

  std::function<void(int)> enumerate = [&](int edge) {
    if (done) return;
    if (edge == m) {
      ++verdict.searchSize;
      if (oddCount != 0) return;
      verdict.familyExists = true;
      bool tour = false, spanning = false;
      if (m >= 1) {
        Dsu dsu(n);
        std::vector<char> usedVertex(n, 0);
        for (const auto& [a, b] : current) {
          dsu.unite(a, b);
          usedVertex[a] = usedVertex[b] = 1;
        }
        int root = dsu.find(current[0].first);
        tour = true;
        for (const auto& [a, b] : current) {
          (void)b;
          if (dsu.find(a) != root) {
            tour = false;
            break;
          }
        }
        if (tour) {
          spanning = std::all_of(usedVertex.begin(), usedVertex.end(),
                                 [](char u) { return u != 0; });
        }
      }
      verdict.tourExists = verdict.tourExists || tour;
      verdict.spanningTourExists = verdict.spanningTourExists || spanning;
      int strength = witnessStrength(tour, spanning);
      if (strength > bestStrength) {
        bestStrength = strength;
        verdict.witness = current;
      }
      if (verdict.forMode(mode)) done = true;
      return;
    }
    for (const auto& [a, b] : choices[edge]) {
      current[edge] = {a, b};
      oddCount += (parity[a] ^= 1) ? 1 : -1;
      oddCount += (parity[b] ^= 1) ? 1 : -1;
      enumerate(edge + 1);
      oddCount += (parity[a] ^= 1) ? 1 : -1;
      oddCount += (parity[b] ^= 1) ? 1 : -1;
      if (done) return;
    }
  };
  enumerate(0);
  return verdict;
}

namespace {

int bruteMatchingRec(int v, int n, const std::vector<std::vector<int>>& adj,
                     std::vector<char>& used) {
  while (v < n && used[v]) ++v;
  if (v == n) return 0;
  int best = bruteMatchingRec(v + 1, n, adj, used);  // v stays unmatched
  used[v] = 1;
  for (int u : adj[v]) {
    if (u > v && !used[u]) {
      used[u] = 1;
      best = std::max(best, 1 + bruteMatchingRec(v + 1, n, adj, used));
      used[u] = 0;
    }
  }
  used[v] = 0;
  return best;
}

}  // namespace

int bruteMatching(const Graph& g, int maxNodes) {
  if (g.nodeCount > maxNodes)
    throw CapExceededError("brute-force matching capped at " + std::to_string(maxNodes) +
                           " nodes");
  auto adj = g.adjacency();
  std::vector<char> used(g.nodeCount, 0);
  return bruteMatchingRec(0, g.nodeCount, adj, used);
}

}  // namespace het
