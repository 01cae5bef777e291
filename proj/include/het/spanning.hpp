#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "het/bipartite.hpp"
#include "het/parity_factor.hpp"

namespace het {

// Spanning tree of a bipartite graph with degree <= 2 at every X-node.
// |degree2X| = yCount - 1 always (edge-count arithmetic on trees).
struct NiceTree {
  std::vector<std::pair<int, int>> edges;  // (x, y) pairs, sorted
  std::vector<int> degree2X;               // A: X-nodes of tree degree 2, sorted
};

// The tree minus its X-leaves, restricted to A ∪ Y, plus the Y-nodes of odd
// degree in it. |oddVertices| is even and nonempty whenever yCount >= 2.
struct ReducedTree {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> oddVertices;  // O, sorted
};

// G* : X-side is (X \ A) ∪ W where each W-node joins one sorted pair of odd
// vertices; X \ A keeps its full neighborhoods (removing A deletes no Y).
struct AuxGraph {
  BipartiteGraph graph;
  std::vector<int> origX;                  // per X*-node: original X index, or -1 for W
  std::vector<std::pair<int, int>> wPairs; // per W-node: its (y, z) pair
};

enum class TreeSearchStatus { found, noneExists, capExceeded };

struct NiceTreeSearch {
  TreeSearchStatus status = TreeSearchStatus::capExceeded;
  std::optional<NiceTree> tree;
};

// Greedy growth from seed: attach the seed X-node to its two smallest
// neighbors, then repeatedly attach an outside X-node adjacent to both a
// covered and an uncovered Y (preferring the most uncovered neighbors, ties
// to the smallest index); leftover X-nodes become leaves. nullopt when stuck.
std::optional<NiceTree> greedyNiceTreeFromSeed(const BipartiteGraph& g, int seed);

// Greedy over all seeds, then an exhaustive search when the graph has at most
// exhaustiveNodeCap nodes, so `noneExists` answers are certain at small size.
// Larger graphs where greedy fails report capExceeded. Throws on disconnected
// input.
NiceTreeSearch findNiceSpanningTree(const BipartiteGraph& g, int exhaustiveNodeCap = 24,
                                    std::uint64_t exhaustiveNodeBudget = 5'000'000);

// F* = F - (X \ A) and the odd-degree Y-set O; throws std::logic_error if the
// tree invariants fail (|O| even and nonempty).
ReducedTree reduceTree(const NiceTree& f);

// Throws HypothesesViolatedError when some X*-node would have degree < 2.
AuxGraph buildAuxGraph(const BipartiteGraph& g, const NiceTree& f, const ReducedTree& fstar);

// Q* = Q - W mapped back to original X indices, united with F*. Validates the
// result against g: spans all of X and Y, connected, X-degrees exactly 2,
// Y-degrees even. Throws std::invalid_argument when q fails its degree spec.
Subgraph assemble(const BipartiteGraph& g, const ReducedTree& fstar, const AuxGraph& aux,
                  const Subgraph& q);

}  // namespace het
