#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace het {

// A hypergraph on vertices 0..n-1. Each edge is a set of distinct vertices,
// stored sorted; repeated identical edges encode multiplicity. The index of
// an edge in `edges` is its identity in every downstream structure (tours,
// subgraphs, cut lists).
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;

  int edgeCount() const { return static_cast<int>(edges.size()); }
};

// An incident (vertex, edge-index) pair.
struct Flag {
  int vertex = 0;
  int edge = 0;
};

// Validates and normalizes (sorts each edge); throws std::invalid_argument.
Hypergraph makeHypergraph(int n, std::vector<std::vector<int>> edges);

// File format: first non-comment line is the vertex count; each further
// non-empty line is one edge as whitespace-separated distinct vertex ids;
// lines starting with '#' are comments; repeated lines encode multiplicity.
Hypergraph parseHypergraph(const std::string& text);
std::string formatHypergraph(const Hypergraph& h);

struct Profile {
  int n = 0;
  int m = 0;
  int corank = 0;
  int rank = 0;
  int maxMultiplicity = 0;
  int componentCount = 0;
  std::vector<int> tValues;
  std::vector<long long> minDegree;  // delta_t per requested t
  std::vector<long long> maxDegree;  // Delta_t per requested t
};

struct ProfileCaps {
  int maxN = 64;
  int maxT = 4;
};

// Exact structural profile; t-degrees by exhaustive enumeration of t-subsets.
Profile profile(const Hypergraph& h, const std::vector<int>& tList, ProfileCaps caps = {});

// (delta_t, Delta_t): min/max over all t-subsets of the number of edges
// containing the subset. t = 0 gives (m, m).
std::pair<long long, long long> tDegreeRange(const Hypergraph& h, int t, int maxN = 64);

// Number of connected components; isolated vertices count as singletons.
int componentCount(const Hypergraph& h);
bool isConnected(const Hypergraph& h);

std::vector<Flag> allFlags(const Hypergraph& h);

// True iff h is connected and stays connected after removing every flag set
// of size < k, where removing a flag (v, e) deletes v from that edge only.
// Shrinking an edge can never reconnect anything, so only maximal removal
// sets are enumerated: C(#flags, k-1) subsets, guarded by capSubsets.
bool isFlagConnected(const Hypergraph& h, int k, std::uint64_t capSubsets = 1'000'000);

// Edges e with c(H - e) = c(H) + |e| - 1; deletion keeps all vertices.
std::vector<int> strongCutEdges(const Hypergraph& h);

// Parity criterion: every vertex degree and every edge size is even.
bool flagSpanningTourExists(const Hypergraph& h);

std::vector<int> vertexDegrees(const Hypergraph& h);

}  // namespace het
