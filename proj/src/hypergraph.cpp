#include "het/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
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

int componentCountOf(int n, const std::vector<std::vector<int>>& edges) {
  if (n == 0) return 0;
  Dsu dsu(n);
  for (const auto& e : edges)
    for (std::size_t i = 1; i < e.size(); ++i) dsu.unite(e[0], e[i]);
  int count = 0;
  for (int v = 0; v < n; ++v)
    if (dsu.find(v) == v) ++count;
  return count;
}

std::vector<std::string> splitTokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

long long parseInt(const std::string& tok, int lineNo) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(lineNo) + ": not an integer: '" + tok + "'");
  return value;
}

// Saturating C(n, k); never overflows, saturates at 2^63-1.
std::uint64_t binomialSaturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  const std::uint64_t limit = ~std::uint64_t(0) >> 1;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = n - k + i;
    if (acc > limit / factor) return limit;
    acc = acc * factor / i;
  }
  return acc;
}

// Calls fn(subset) for every k-subset of 0..n-1 until fn returns false.
template <typename Fn>
void forEachSubset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Hypergraph makeHypergraph(int n, std::vector<std::vector<int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& e : edges) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        throw std::invalid_argument("vertex id out of range: " + std::to_string(e[i]));
      if (i > 0 && e[i] == e[i - 1])
        throw std::invalid_argument("repeated vertex within an edge: " + std::to_string(e[i]));
    }
  }
  return Hypergraph{n, std::move(edges)};
}

Hypergraph parseHypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool haveHeader = false;
  long long n = 0;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    ++lineNo;
    auto tokens = splitTokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!haveHeader) {
      if (tokens.size() != 1)
        throw ParseError("line " + std::to_string(lineNo) +
                         ": malformed header, expected a single vertex count");
      n = parseInt(tokens[0], lineNo);
      if (n < 0) throw ParseError("line " + std::to_string(lineNo) + ": negative vertex count");
      haveHeader = true;
      continue;
    }
    std::vector<int> edge;
    edge.reserve(tokens.size());
    for (const auto& tok : tokens) {
      long long v = parseInt(tok, lineNo);
      if (v < 0 || v >= n)
        throw ParseError("line " + std::to_string(lineNo) + ": vertex id out of range: " + tok);
      edge.push_back(static_cast<int>(v));
    }
    auto sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("line " + std::to_string(lineNo) + ": repeated vertex within an edge");
    edges.push_back(std::move(edge));
  }
  if (!haveHeader) throw ParseError("missing header line with vertex count");
  return makeHypergraph(static_cast<int>(n), std::move(edges));
}

std::string formatHypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

std::pair<long long, long long> tDegreeRange(const Hypergraph& h, int t, int maxN) {
  if (h.edgeCount() == 0) throw std::invalid_argument("t-degree of an edgeless hypergraph");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (t == 0) return {h.edgeCount(), h.edgeCount()};
  if (h.n > maxN)
    throw CapExceededError("t-degree enumeration capped at n <= " + std::to_string(maxN));
  long long minDeg = -1, maxDeg = -1;
  forEachSubset(h.n, t, [&](const std::vector<int>& subset) {
    long long deg = 0;
    for (const auto& e : h.edges)
      if (std::includes(e.begin(), e.end(), subset.begin(), subset.end())) ++deg;
    if (minDeg < 0 || deg < minDeg) minDeg = deg;
    if (deg > maxDeg) maxDeg = deg;
    return true;
  });
  if (minDeg < 0) throw std::invalid_argument("t exceeds the vertex count");
  return {minDeg, maxDeg};
}

Profile profile(const Hypergraph& h, const std::vector<int>& tList, ProfileCaps caps) {
  if (h.edgeCount() == 0) throw std::invalid_argument("profile requires at least one edge");
  Profile p;
  p.n = h.n;
  p.m = h.edgeCount();
  p.corank = static_cast<int>(h.edges[0].size());
  p.rank = p.corank;
  for (const auto& e : h.edges) {
    p.corank = std::min<int>(p.corank, static_cast<int>(e.size()));
    p.rank = std::max<int>(p.rank, static_cast<int>(e.size()));
  }
  std::map<std::vector<int>, int> multiplicity;
  for (const auto& e : h.edges) p.maxMultiplicity = std::max(p.maxMultiplicity, ++multiplicity[e]);
  p.componentCount = componentCount(h);
  for (int t : tList) {
    if (t < 1 || t > p.rank)
      throw std::invalid_argument("t out of range: " + std::to_string(t));
    if (t > caps.maxT)
      throw CapExceededError("t-degree enumeration capped at t <= " + std::to_string(caps.maxT));
    auto [lo, hi] = tDegreeRange(h, t, caps.maxN);
    p.tValues.push_back(t);
    p.minDegree.push_back(lo);
    p.maxDegree.push_back(hi);
  }
  return p;
}

int componentCount(const Hypergraph& h) { return componentCountOf(h.n, h.edges); }

bool isConnected(const Hypergraph& h) { return componentCount(h) <= 1; }

std::vector<Flag> allFlags(const Hypergraph& h) {
  std::vector<Flag> flags;
  for (int i = 0; i < h.edgeCount(); ++i)
    for (int v : h.edges[i]) flags.push_back({v, i});
  return flags;
}

bool isFlagConnected(const Hypergraph& h, int k, std::uint64_t capSubsets) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!isConnected(h)) return false;
  auto flags = allFlags(h);
  int s = std::min<int>(k - 1, static_cast<int>(flags.size()));
  if (s == 0) return true;
  if (binomialSaturating(flags.size(), s) > capSubsets)
    throw CapExceededError("flag-connectivity enumeration exceeds cap");
  bool stillConnected = true;
  forEachSubset(static_cast<int>(flags.size()), s, [&](const std::vector<int>& subset) {
    auto edges = h.edges;
    for (int fi : subset) {
      auto& e = edges[flags[fi].edge];
      e.erase(std::find(e.begin(), e.end(), flags[fi].vertex));
    }
    if (componentCountOf(h.n, edges) > 1) {
      stillConnected = false;
      return false;
    }
    return true;
  });
  return stillConnected;
}

std::vector<int> strongCutEdges(const Hypergraph& h) {
  std::vector<int> result;
  int base = componentCount(h);
  for (int i = 0; i < h.edgeCount(); ++i) {
    auto edges = h.edges;
    edges.erase(edges.begin() + i);
    if (componentCountOf(h.n, edges) == base + static_cast<int>(h.edges[i].size()) - 1)
      result.push_back(i);
  }
  return result;
}

bool flagSpanningTourExists(const Hypergraph& h) {
  for (const auto& e : h.edges)
    if (e.size() % 2 != 0) return false;
  for (int d : vertexDegrees(h))
    if (d % 2 != 0) return false;
  return true;
}

std::vector<int> vertexDegrees(const Hypergraph& h) {
  std::vector<int> deg(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++deg[v];
  return deg;
}

}  // namespace het
