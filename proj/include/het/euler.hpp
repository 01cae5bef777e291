#pragma once

#include <optional>
#include <string>
#include <vector>

#include "het/bipartite.hpp"
#include "het/hypergraph.hpp"

namespace het {

// Closed walk v1, e1, v2, e2, ..., vt, et (cyclic): edge e_i joins v_i to
// v_{i+1}, consecutive vertices distinct, t >= 2.
struct ClosedWalk {
  std::vector<int> vertices;
  std::vector<int> edgeIds;

  int length() const { return static_cast<int>(edgeIds.size()); }
};

// Walks jointly traversing every edge index exactly once.
struct EulerFamily {
  std::vector<ClosedWalk> walks;
};

struct TourReport {
  bool isTour = false;      // single walk
  bool isSpanning = false;  // single walk visiting every vertex
  std::vector<std::string> violations;
  std::string provenance;

  bool ok() const { return violations.empty(); }
};

// One closed walk per connected component of an even (X,2)-regular subgraph
// of incidence(h), read off an Eulerian circuit of the component. Traversal
// starts at the lowest X-node and prefers lowest-indexed neighbors.
EulerFamily extractFamily(const Hypergraph& h, const Subgraph& sub);

// Parity-factor route: nullopt iff incidence(h) has no even (X,2)-regular
// subgraph. Outputs are re-verified before being returned.
std::optional<EulerFamily> eulerFamily(const Hypergraph& h);

struct SpanningTourResult {
  std::optional<ClosedWalk> walk;
  std::string failedStage;  // nonempty iff walk is absent

  bool found() const { return walk.has_value(); }
};

// Full spanning pipeline: nice spanning tree -> reduced tree -> auxiliary
// graph -> even (X*,2)-regular subgraph -> assembled spanning subgraph ->
// Eulerian traversal. Retries across greedy tree seeds (up to maxAttempts)
// before reporting the failing stage.
SpanningTourResult spanningEulerTour(const Hypergraph& h, int maxAttempts = 32);

// Recomputes every walk invariant from scratch; flags are never copied from
// producers. Violations are report content, not errors.
TourReport verify(const Hypergraph& h, const EulerFamily& fam, bool requireSpanning = false,
                  bool requireTour = false);

// The tour's edge sequence as a Hamiltonian cycle of the block-intersection
// graph; consecutive blocks share the vertex between them. Requires m >= 3
// and a valid Euler tour.
std::vector<int> lineGraphHamiltonianCycle(const Hypergraph& h, const ClosedWalk& tour);

// Rank-2 universal cycle: one (overlap vertex, previous block, next block)
// triple per junction of a verified Euler tour.
struct UCycleEntry {
  int vertex;
  int edgeBefore;
  int edgeAfter;
};
std::vector<UCycleEntry> emitUCycle(const ClosedWalk& tour);

// Tour files: one walk per line, "v1 e1 v2 e2 ... vt et".
std::string formatWalk(const ClosedWalk& walk);
std::string formatFamily(const EulerFamily& fam);
EulerFamily parseTourFile(const std::string& text);

// UCycle line: space-separated "v:before,after" triples.
std::string formatUCycle(const std::vector<UCycleEntry>& entries);

}  // namespace het
