#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "het/hypergraph.hpp"
#include "het/matching.hpp"

namespace het {

enum class OracleMode { family, tour, spanningTour };

struct OracleVerdict {
  bool familyExists = false;
  bool tourExists = false;
  bool spanningTourExists = false;
  // Strongest witness seen: for each edge, the two vertices it keeps.
  std::optional<std::vector<std::pair<int, int>>> witness;
  std::uint64_t searchSize = 0;

  bool forMode(OracleMode mode) const {
    switch (mode) {
      case OracleMode::family: return familyExists;
      case OracleMode::tour: return tourExists;
      default: return spanningTourExists;
    }
  }
};

// Exhaustive ground truth: enumerates, for every edge, the choice of 2 of
// its vertices. An assignment is a family iff all vertex parities are even;
// a tour additionally needs the chosen subgraph connected (unused vertices
// discarded); a spanning tour additionally uses every vertex. Enumeration
// stops early once the question asked by `mode` is answered positively, so
// weaker flags are exact only for the modes at or below `mode`.
// Throws CapExceededError when the product of per-edge choices exceeds cap.
OracleVerdict oracleEuler(const Hypergraph& h, OracleMode mode = OracleMode::spanningTour,
                          std::uint64_t capStates = 10'000'000);

// Exact maximum matching size by branch and bound over vertices.
int bruteMatching(const Graph& g, int maxNodes = 16);

}  // namespace het
