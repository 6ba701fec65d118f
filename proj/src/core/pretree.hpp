#pragma once

#include "core/hashclass.hpp"

namespace suc {

// One element of the cut pretree: either a crossing class or one equivalence
// class of totally isolated cuts (cuts that cross nothing and are formed at
// no ring edge).
struct PretreeElement {
  bool is_crossing = false;
  int crossing_index = -1;  // index into the crossing-class vector, or -1
  int class_id = -1;        // cut class id when totally isolated, or -1
  std::string label;        // "crossing(1,4)" or "isolated(3)"

  EndPartition fine;    // one block per prospective anchor
  EndPartition coarse;  // blocks told apart by member cuts alone
  std::vector<int> fine_to_coarse;  // coarse block containing each fine block
  std::vector<int> rep_cuts;        // global cut ids used for division checks
};

// The pretree of cut classes.  y lies between x and z exactly when the cuts
// of x and the cuts of z divide different blocks of the coarse partition
// of y.  Its derived bipartite tree has one vertex per element and one per
// maximal star (set of pairwise adjacent elements), with an edge for every
// (element, containing star) pair.
struct Pretree {
  std::vector<PretreeElement> elements;
  // [x][y]: the fine (resp. coarse) block of y that every cut of x divides;
  // -1 on the diagonal.
  std::vector<std::vector<int>> div_fine;
  std::vector<std::vector<int>> div_coarse;
  // maximal pairwise-adjacent element sets, each ascending, sorted
  std::vector<std::vector<int>> stars;

  int element_count() const { return static_cast<int>(elements.size()); }
  bool between(int x, int y, int z) const;
  bool adjacent(int x, int y) const;  // no element strictly between

  // Bipartite tree view: vertices 0..element_count()-1 are elements, vertex
  // element_count()+s is star s.
  int tree_vertex_count() const;
  std::vector<std::pair<int, int>> tree_edges() const;
};

// Assemble the pretree over all crossing classes and all equivalence classes
// of totally isolated cuts.  Verifies the facts the construction relies on
// and throws a verification error when any fails: ring-edge cut classes
// cross nothing, every cut of an element divides the same fine block of
// every other element (and the matching coarse block), the betweenness
// relation satisfies the four pretree axioms, all star mates of a crossing
// element divide one common coarse block of it, and the derived bipartite
// graph is a tree.
Pretree build_pretree(const AugmentedGraph& ag, const MincutSet& ms, const CrossingStructure& cs,
                      const std::vector<HashClass>& hcs);

}  // namespace suc
