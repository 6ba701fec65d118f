#pragma once

#include "core/graph.hpp"

namespace suc {

// One designated end: a name and the set of terminal vertices belonging to it.
struct EndSpec {
  std::string name;
  std::vector<std::string> terminals;
};

// A graph together with one marker vertex per end.  The marker for end E is
// adjacent to every terminal of E and stands in for the "infinite" part of
// the end: it may lie inside components and on paths, but no separator may
// ever contain it.
struct AugmentedGraph {
  Graph g;
  std::vector<int> markers;             // ascending; markers.size() == end count
  std::vector<std::string> end_names;   // parallel to markers
  VertexSet originals;                  // all non-marker vertex ids

  int end_count() const { return static_cast<int>(markers.size()); }
  bool is_marker(int v) const { return vs_contains_marker(v); }
  int marker_index(int v) const;  // -1 when v is not a marker
  int marker_of_end(int end_index) const { return markers[end_index]; }

 private:
  bool vs_contains_marker(int v) const;
};

// Attach one marker vertex per end.  Throws on overlapping ends, unknown
// terminal vertices, empty end lists, or fewer than two ends.
AugmentedGraph attach_markers(const Graph& base, const std::vector<EndSpec>& ends);

// A partition of the end set {0..k-1} into at least two blocks, held in a
// canonical form: each block ascending, blocks ordered by first element.
struct EndPartition {
  std::vector<std::vector<int>> blocks;

  static EndPartition of_blocks(std::vector<std::vector<int>> blocks);

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int end) const;
  bool separates(int e1, int e2) const { return block_of(e1) != block_of(e2); }
  std::string to_string() const;

  bool operator==(const EndPartition& o) const { return blocks == o.blocks; }
  bool operator<(const EndPartition& o) const { return blocks < o.blocks; }
};

// Coarsest partition refining both arguments blockwise (meet of partitions).
EndPartition common_refinement(const EndPartition& a, const EndPartition& b);

// How a vertex set cuts the augmented graph.
struct CutView {
  std::vector<VertexSet> components;   // components of g - cut
  std::vector<std::vector<int>> ends_by_component;  // end indices per component
  std::vector<VertexSet> slices;       // components containing no marker
  int marked_components = 0;           // components containing >= 1 marker
};

// Throws MarkerInCut when the cut contains a marker vertex.
CutView cut_view(const AugmentedGraph& ag, const VertexSet& cut);

// True when removal of `cut` (markers forbidden) leaves >= 2 components that
// each contain a marker.
bool is_end_cut(const AugmentedGraph& ag, const VertexSet& cut);

// Partition of the end set induced by an end cut (throws NoEndCut otherwise).
EndPartition end_partition(const AugmentedGraph& ag, const VertexSet& cut);

}  // namespace suc
