#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "het/bipartite.hpp"
#include "het/matching.hpp"

namespace het {

// Degree requirements for the extracted subgraph: every X-node keeps exactly
// xDegree incidences, every Y-node an even number (possibly 0).
struct DegreeSpec {
  int xDegree = 2;

  static DegreeSpec evenX2() { return {2}; }
};

// Reduction of the degree-constrained-subgraph question to perfect matching.
// Every original (x, y) incidence becomes two external nodes joined by a
// "real" edge; an X-node of degree d gets d - xDegree internal nodes adjacent
// to all its externals (forcing exactly xDegree kept incidences), a Y-node of
// degree d gets d internal nodes adjacent to all its externals plus pairing
// edges i1-i2, i3-i4, ... (forcing an even number of kept incidences).
struct GadgetGraph {
  enum class NodeKind { externalX, externalY, internalX, internalY };
  struct NodeTag {
    NodeKind kind;
    int owner;  // the X- or Y-node it belongs to
    int pair;   // incidence index for externals, -1 for internals
  };

  Graph graph;
  std::vector<NodeTag> tags;
  std::vector<std::pair<int, int>> realEdges;  // per incidence: (externalX, externalY) node ids
};

// Infeasibility certificate: disjoint (S, T) with delta(S, T) < 0.
struct Barrier {
  std::vector<int> sSet;   // X-node indices, sorted
  std::vector<int> tSet;   // combined node ids, sorted (brute force yields X-only)
  long long delta = 0;

  std::size_t size() const { return sSet.size() + tSet.size(); }
};

// delta(S,T) = 2|S| + sum_{v in T} deg_{G-S}(v) - 2|T∩X| - q(S,T), where
// q counts components C of G-(S∪T) with an odd number of edges to T.
// S holds X-node indices, T combined node ids; S and T must be disjoint.
long long deltaST(const BipartiteGraph& g, const std::vector<int>& sSet,
                  const std::vector<int>& tNodes);

// Minimum-size barrier over disjoint S, T ⊆ X (3^|X| states; minimum barriers
// never need T-nodes on the Y side). Ties broken by (|S∪T|, S, T) lexicographic.
std::optional<Barrier> findBarrierBruteForce(const BipartiteGraph& g,
                                             std::uint64_t capStates = 10'000'000);

// Same search with T ranging over X ∪ Y (3^|X| * 2^|Y| states). Used to check
// structural properties of minimum barriers without assuming them.
std::optional<Barrier> findMinimumBarrierExhaustive(const BipartiteGraph& g,
                                                    std::uint64_t capStates = 10'000'000);

// Throws std::invalid_argument when some X-node has degree < spec.xDegree
// (the instance is infeasible before any gadget is built).
GadgetGraph buildGadget(const BipartiteGraph& g, DegreeSpec spec = DegreeSpec::evenX2());

// A subgraph with degree exactly 2 at every X-node and even degree at every
// Y-node, via a perfect matching of the gadget; nullopt iff none exists.
std::optional<Subgraph> findEvenX2Subgraph(const BipartiteGraph& g);

}  // namespace het
