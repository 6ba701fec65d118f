#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/ends.hpp"
#include "core/graph.hpp"

namespace suc {

// ---------------------------------------------------------------------------
// Brute-force reference computations.  These share no code with the main
// engine: connectivity is decided with a disjoint-set union, and candidate
// cuts are enumerated without pruning.
// ---------------------------------------------------------------------------

// Smallest size of a vertex set of non-marker vertices whose removal leaves
// at least two components containing markers.
int brute_kappa(const AugmentedGraph& ag);

// Every minimum-size end cut, sorted lexicographically.
std::vector<VertexSet> brute_mincuts(const AugmentedGraph& ag);

// Smallest number of edges whose removal separates at least two of the given
// vertex sides, and all such minimum edge cuts (each sorted, list sorted).
int brute_edge_kappa(const Graph& g, const std::vector<VertexSet>& sides);
std::vector<EdgeSet> brute_edge_mincuts(const Graph& g, const std::vector<VertexSet>& sides);

// ---------------------------------------------------------------------------
// Seeded random instances for property testing.
// ---------------------------------------------------------------------------

struct RandomInstance {
  Graph g;
  std::vector<EndSpec> ends;
  std::string grf_text;  // canonical .grf serialization
};

// Deterministic generator.  Profiles: "blob-ring", "blob-tree", "hybrid",
// "erdos-blobs", "necklace" (a ring of two-port end blobs whose minimum
// cuts always cross); "mixed" rotates through them by seed.  Base graphs
// have at most 12 vertices and 2–5 ends and are always connected.
RandomInstance random_instance(std::uint64_t seed, const std::string& profile = "mixed");

}  // namespace suc
