#pragma once

#include "core/ends.hpp"

namespace suc {

// One minimum end cut.
struct Cut {
  VertexSet vertices;
  EndPartition partition;
  int total_components = 0;  // components of g - vertices (slices included)
  bool is_a = false;         // nested with every other minimum cut
  bool is_b = false;         // splits the graph into exactly two components
};

// All cuts inducing the same end partition.
struct CutClass {
  EndPartition partition;
  std::vector<int> cut_ids;  // ascending indices into MincutSet::cuts
  bool is_a = false;
  bool is_b = false;
};

struct MincutSet {
  int kappa = 0;
  std::vector<Cut> cuts;          // ordered by vertex set
  std::vector<CutClass> classes;  // ordered by partition
  std::vector<int> class_of_cut;  // parallel to cuts

  int cut_index(const VertexSet& vertices) const;  // -1 when absent
};

// Minimum size of an end cut: the smallest number of non-marker vertices
// whose removal leaves two markers in different components.
int kappa(const AugmentedGraph& ag);

// All end cuts of size exactly k, ascending by vertex set.  Exhaustive
// subset enumeration; subsets leaving a cached spanning tree intact are
// skipped without a component search.  Throws BudgetExceeded when the
// number of candidate subsets exceeds `budget`.
std::vector<VertexSet> enumerate_mincuts(const AugmentedGraph& ag, int k,
                                         long long budget = 5'000'000);

// Same result computed by a different strategy: for each marker pair,
// recursively branch on the vertices of a connecting path.  Used to
// cross-check the exhaustive enumeration.
std::vector<VertexSet> enumerate_mincuts_pathwise(const AugmentedGraph& ag, int k,
                                                  long long budget = 5'000'000);

// Group cuts into equivalence classes by induced end partition and annotate
// each cut and class with its nesting flags.  When `expect_sliceless` is set
// (the analysis pipeline always sets it), asserts that every component of
// every cut contains a marker and that every cut is nested-with-all or
// two-component.
MincutSet group_into_classes(const AugmentedGraph& ag, const std::vector<VertexSet>& cuts,
                             int k, bool expect_sliceless);

// A slice: a component of some minimum cut containing no marker.
struct SliceRecord {
  VertexSet vertices;
  VertexSet boundary;
  VertexSet cut;  // the minimum cut this slice was observed under
};

struct SliceReduction {
  AugmentedGraph reduced;           // slice-free graph with the same mincuts
  std::vector<SliceRecord> slices;  // removed slices, ascending by vertex set
  bool changed = false;
};

// Remove all slices: drop their vertices and complete each slice boundary to
// a clique.  Asserts that distinct slices are disjoint, that the reduced
// graph has the same minimum cuts as the input, and that it is a fixed point
// (no slices remain).
SliceReduction reduce_slices(const AugmentedGraph& ag, long long budget = 5'000'000);

// Maximal sets J of at least k+1 original vertices such that no vertex set
// of size <= k splits J.  Exact but exponential; guarded by `max_vertices`.
std::vector<std::vector<std::string>> detect_inseparable_sets(const AugmentedGraph& ag,
                                                              int k,
                                                              int max_vertices = 16);

}  // namespace suc
