#pragma once

#include <vector>

#include "het/hypergraph.hpp"

namespace het {

// A t-(v, K, lambda) design: K-uniform with every t-subset in exactly lambda
// blocks. Steiner systems are the lambda = 1 case.
struct DesignSpec {
  int t = 2;
  int v = 0;
  std::vector<int> blockSizes;  // K
  long long lambda = 1;
};

// Steiner triple system of order n (n ≡ 1 or 3 mod 6, n >= 7): the Fano
// plane for n = 7, the quasigroup constructions otherwise.
Hypergraph genSTS(int n);

// The 14 planes of the 3-dimensional binary affine space: all 4-subsets of
// {0..7} with XOR 0; the unique Steiner quadruple system of order 8.
Hypergraph genSQS8();

// Each edge repeated lambda times (adjacent copies); multiplies mu and every
// t-degree by lambda.
Hypergraph scale(const Hypergraph& h, int lambda);

// True iff h has spec.v vertices, every block size lies in spec.blockSizes,
// and the t-degree is exactly lambda (min = max = lambda).
bool validateDesign(const Hypergraph& h, const DesignSpec& spec);

}  // namespace het
