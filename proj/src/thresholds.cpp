#include "het/thresholds.hpp"

#include <numeric>
#include <stdexcept>

#include "het/errors.hpp"

namespace het {

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (acc > (~std::uint64_t(0)) / factor) throw std::overflow_error("binomial overflow");
    acc = acc * factor / static_cast<std::uint64_t>(i);
  }
  return acc;
}

Rational admissibleThreshold(int c, int k, int mu) {
  if (mu < 1) throw UncoveredParametersError("multiplicity must be >= 1");
  if (c < 3 || k < c) throw UncoveredParametersError("requires 3 <= corank <= rank");
  if (c == 3 && k == 3) return {7, 1};
  if (c == 3 && k == 4) return {10, 1};
  if (c >= 4 && k <= 2 * c - 2)
    return {static_cast<long long>(binomial(k, 2)) + 1, 1};
  if (k >= 2 * c - 1 && k <= 2 * c) {
    long long num = 4LL * c * c + 1LL * k * k - 3LL * k + 2;
    long long den = 4LL * c - 2LL * k + 2;
    long long g = std::gcd(num, den);
    return {num / g, den / g};
  }
  if (k > 2 * c) {
    if (k - c - 1 > 40) throw std::overflow_error("admissibility threshold overflow");
    long long pow1 = 1LL << (k - c - 1);
    long long pow2 = 1LL << c;
    long long value = 2LL * mu * (k - 1) * (pow1 - pow2 + 1) +
                      static_cast<long long>(binomial(k, 2)) + 1;
    return {value, 1};
  }
  // unreachable for 3 <= c <= k; kept as the explicit signal
  throw UncoveredParametersError("parameters not covered by any admissibility case");
}

bool degreeRatioHolds(const Hypergraph& h, int i, int j) {
  if (h.edgeCount() == 0) throw std::invalid_argument("edgeless hypergraph");
  int rank = 0;
  for (const auto& e : h.edges) rank = std::max<int>(rank, static_cast<int>(e.size()));
  if (i < 0 || j < i || j > rank) throw std::invalid_argument("need 0 <= i <= j <= rank");
  long long deltaI = tDegreeRange(h, i).first;
  long long deltaJ = tDegreeRange(h, j).first;
  if (deltaJ == 0) throw std::invalid_argument("delta_j = 0, ratio undefined");
  __int128 lhs = static_cast<__int128>(deltaI) * static_cast<__int128>(binomial(rank - i, j - i));
  __int128 rhs = static_cast<__int128>(deltaJ) * static_cast<__int128>(binomial(h.n - i, j - i));
  return lhs >= rhs;
}

}  // namespace het
