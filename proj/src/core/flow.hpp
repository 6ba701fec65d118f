#pragma once

#include "core/graph.hpp"

namespace suc {

struct PathCount {
  bool infinite = false;  // true when sources and sinks cannot be separated
  int count = 0;          // max number of internally vertex-disjoint paths
  VertexSet separator;    // a minimum separating vertex set (empty if infinite)
};

// Maximum number of vertex-disjoint paths between the source set and the sink
// set, together with a minimum vertex separator realizing that number.
//
// Vertices in `uncuttable` (and all sources/sinks) may lie on paths but are
// never used as separator vertices: they carry unbounded capacity.  If the
// two sides stay connected through uncuttable vertices alone, no separator
// exists and `infinite` is set.
PathCount disjoint_path_count(const Graph& g, const VertexSet& sources,
                              const VertexSet& sinks, const VertexSet& uncuttable = {});

}  // namespace suc
