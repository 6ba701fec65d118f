#pragma once

#include "core/mincut.hpp"

namespace suc {

// Two cuts are nested when some component of g - k contains or is contained
// in some component of g - l.
bool is_nested(const AugmentedGraph& ag, const VertexSet& k, const VertexSet& l);

// Two end partitions cross when two blocks of one and two blocks of the
// other intersect in all four ways.  Crossing of cut classes is decided at
// this partition level, so it does not depend on representatives.
bool partitions_cross(const EndPartition& a, const EndPartition& b);

struct CrossingStructure {
  // class id -> sorted ids of classes it crosses
  std::vector<std::vector<int>> crosses;
  // classes crossing nothing
  std::vector<char> isolated;
  // connected components of the crossing graph with >= 2 classes, each a
  // sorted list of class ids; ordered by smallest member
  std::vector<std::vector<int>> hash_classes;
  // class id -> index into hash_classes, or -1
  std::vector<int> hash_of_class;
};

CrossingStructure crossing_structure(const MincutSet& ms);

// Division of one partition by another (the dividee must not equal the
// divider).  Exactly one block `i` of the dividee satisfies one of:
//   (a) every dividee block except block i lies inside a single divider
//       block, or
//   (b) every divider block except one lies inside dividee block i.
// Returns that block index; throws NotDividing when no block qualifies and
// an internal error when several do.
struct DivideResult {
  int block = -1;
  bool by_dividee_containment = false;  // witnessed via form (a)
  bool by_divider_containment = false;  // witnessed via form (b)
};

DivideResult divides(const EndPartition& divider, const EndPartition& dividee);

}  // namespace suc
