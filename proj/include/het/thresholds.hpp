#pragma once

#include <cstdint>
#include <string>

#include "het/hypergraph.hpp"

namespace het {

// Exact nonnegative rational, reduced, den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  bool isInteger() const { return den == 1; }
  // g <= value, i.e. value meets the threshold
  bool atMost(long long value) const { return num <= value * den; }
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

std::uint64_t binomial(int n, int k);

// Minimum vertex count g(c, k, mu) above which the spanning-tour guarantees
// kick in. Piecewise in (c, k):
//   g(3,3,.) = 7,  g(3,4,.) = 10,
//   C(k,2)+1                          for c >= 4, k <= 2c-2,
//   (4c^2+k^2-3k+2)/(4c-2k+2)         for c >= 3, 2c-1 <= k <= 2c,
//   2mu(k-1)(2^(k-c-1)-2^c+1)+C(k,2)+1 for k > 2c.
// Throws UncoveredParametersError outside 3 <= c <= k or mu < 1.
Rational admissibleThreshold(int c, int k, int mu);

// delta_i / delta_j >= C(n-i, j-i) / C(k-i, j-i), checked in exact integer
// arithmetic. Requires 0 <= i <= j <= rank and delta_j > 0. Expected to hold
// always; exposed for property testing.
bool degreeRatioHolds(const Hypergraph& h, int i, int j);

}  // namespace het
