#include "het/designs.hpp"

#include <algorithm>
#include <stdexcept>

namespace het {

namespace {

Hypergraph fanoPlane() {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return makeHypergraph(7, std::move(blocks));
}

// n = 6t + 3: points Z_{2t+1} x {0,1,2}, idempotent commutative quasigroup
// i*j = (i+j)(t+1) mod 2t+1. Point (i, r) -> 3i + r.
Hypergraph bose(int n) {
  int t = (n - 3) / 6;
  int q = 2 * t + 1;
  auto point = [&](int i, int r) { return 3 * i + r; };
  auto mul = [&](int i, int j) { return static_cast<int>((1LL * (i + j) * (t + 1)) % q); };
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < q; ++i) blocks.push_back({point(i, 0), point(i, 1), point(i, 2)});
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int r = 0; r < 3; ++r)
        blocks.push_back({point(i, r), point(j, r), point(mul(i, j), (r + 1) % 3)});
  return makeHypergraph(n, std::move(blocks));
}

// n = 6t + 1: points (Z_{2t} x {0,1,2}) ∪ {∞}, half-idempotent commutative
// quasigroup on Z_{2t} obtained by relabeling addition: even sums map to
// their half, odd sums to t + (sum-1)/2. Point (i, r) -> 3i + r, ∞ -> n-1.
Hypergraph skolem(int n) {
  int t = (n - 1) / 6;
  int q = 2 * t;
  auto point = [&](int i, int r) { return 3 * i + r; };
  int infinity = n - 1;
  auto mul = [&](int i, int j) {
    int s = (i + j) % q;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < t; ++i) blocks.push_back({point(i, 0), point(i, 1), point(i, 2)});
  for (int i = 0; i < t; ++i)
    for (int r = 0; r < 3; ++r)
      blocks.push_back({infinity, point(t + i, r), point(i, (r + 1) % 3)});
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int r = 0; r < 3; ++r)
        blocks.push_back({point(i, r), point(j, r), point(mul(i, j), (r + 1) % 3)});
  return makeHypergraph(n, std::move(blocks));
}

}  // namespace

Hypergraph genSTS(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    throw std::invalid_argument("triple system order must be >= 7 and ≡ 1 or 3 (mod 6)");
  if (n == 7) return fanoPlane();
  if (n % 6 == 3) return bose(n);
  return skolem(n);
}

Hypergraph genSQS8() {
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d)
          if ((a ^ b ^ c ^ d) == 0) blocks.push_back({a, b, c, d});
  return makeHypergraph(8, std::move(blocks));
}

Hypergraph scale(const Hypergraph& h, int lambda) {
  if (lambda < 1) throw std::invalid_argument("scale factor must be >= 1");
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(h.edgeCount()) * lambda);
  for (const auto& e : h.edges)
    for (int i = 0; i < lambda; ++i) edges.push_back(e);
  return makeHypergraph(h.n, std::move(edges));
}

bool validateDesign(const Hypergraph& h, const DesignSpec& spec) {
  if (spec.t < 1 || spec.lambda < 1 || spec.blockSizes.empty())
    throw std::invalid_argument("malformed design spec");
  if (h.n != spec.v || h.edgeCount() == 0) return false;
  for (const auto& e : h.edges) {
    if (std::find(spec.blockSizes.begin(), spec.blockSizes.end(),
                  static_cast<int>(e.size())) == spec.blockSizes.end())
      return false;
  }
  int rank = 0;
  for (const auto& e : h.edges) rank = std::max<int>(rank, static_cast<int>(e.size()));
  if (spec.t > rank) return false;
  auto [lo, hi] = tDegreeRange(h, spec.t);
  return lo == spec.lambda && hi == spec.lambda;
}

}  // namespace het
