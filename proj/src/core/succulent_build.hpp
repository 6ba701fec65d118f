#pragma once

#include "core/pretree.hpp"

#include <map>

namespace suc {

// One class of minimal anchor cuts of a succulent: all minimum-size vertex
// cuts avoiding the anchor set that induce one particular partition of the
// anchors.
struct AnchorCutClass {
  std::vector<std::vector<int>> partition;  // sorted blocks of anchor vertex ids
  std::vector<VertexSet> cuts;              // the cuts attaining it, ascending
};

// The assembled succulent: every pretree element becomes a ring (the cycle
// of a crossing class with one anchor triangle per fine block, or a
// two-vertex segment with anchor triangles for a totally isolated class),
// and rings are glued star by star — along a shared corner edge when two
// crossing classes form a common class at their facing edges, by anchor
// identification otherwise.  Ends never isolated by any mincut receive an
// appendage: a fresh end anchor joined to its host anchor by a double edge.
struct Succulent {
  Graph graph;                   // multigraph; appendages are its only 2-cycles
  std::vector<int> anchors;      // ascending vertex ids
  std::map<std::string, int> f;  // end name -> anchor vertex id
  std::vector<AnchorCutClass> anchor_classes;  // sorted by partition
  std::vector<int> g_of_class;   // cut class id -> index into anchor_classes
  std::vector<std::vector<int>> cycles;  // constituent cycles, in cycle order
  std::vector<std::pair<int, int>> appendages;  // (host anchor, end anchor)
  int edge_joins = 0;    // ring pairs glued along a shared corner edge
  int vertex_joins = 0;  // ring pairs joined by identifying two anchors

  bool is_anchor(int v) const;
};

// Build the succulent for an analyzed graph.  Verifies the facts the gluing
// recipe relies on and the advertised structure of the result, throwing
// NotASucculent / FMapIncomplete / GMapNotBijective on hard failures:
// deleted anchors sit at the glued corner edge and nothing else attaches to
// them, surviving anchors at a shared edge pair up by equal end sets, each
// end isolated by some mincut owns exactly one free singleton anchor, the
// cycle-of-cycles shape check passes, and the anchor-cut classes correspond
// one-to-one with the mincut classes through f.
Succulent assemble_succulent(const AugmentedGraph& ag, const MincutSet& ms,
                             const std::vector<HashClass>& hcs, const Pretree& pt);

// All minimum-size vertex cuts of g avoiding `anchors` that separate
// anchors, grouped by the partition of the anchor set they induce; classes
// sorted by partition, cuts ascending.  Throws when no anchor cut exists.
std::vector<AnchorCutClass> enumerate_anchor_cuts(const Graph& g,
                                                  const std::vector<int>& anchors);

// Re-derive and re-check every advertised property of the succulent against
// the analyzed graph: adjacent anchors include an end vertex, every
// non-anchor is adjacent to an anchor, the constituent cycles tile the graph
// tree-likely, f is total onto the end-vertex anchors, g is a bijection onto
// the anchor-cut classes, and every end pair is separated by a class exactly
// when the f-images are separated by its g-image.  Returns one description
// per failed property; empty means all properties hold.
std::vector<std::string> verify_theorem(const AugmentedGraph& ag, const MincutSet& ms,
                                        const Succulent& s);

// The variant form: every appendage end anchor is collapsed onto its host
// anchor and f retargeted.  Asserts that no two anchors of the result are
// adjacent and that the anchor-cut classes still correspond to the mincut
// classes; throws a verification error otherwise.
Succulent collapse_variant(const AugmentedGraph& ag, const MincutSet& ms, const Succulent& s);

}  // namespace suc
