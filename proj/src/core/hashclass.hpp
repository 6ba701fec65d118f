#pragma once

#include "core/relations.hpp"

namespace suc {

// One quasi-equivalence class of half-cuts.  Two half-cuts are
// quasi-equivalent when some witness half completes both to equivalent
// minimum cuts; they are (fully) equivalent when every witness does.
struct QClass {
  std::vector<int> halves;              // ascending half ids
  std::vector<std::vector<int>> equiv;  // halves grouped by full-witness agreement
};

// One edge of the ring cycle: the cuts formed by representative half-cuts
// of two quasi-equivalence classes that are adjacent in the cyclic order.
struct CycleEdge {
  int qa = -1;                           // q-class at cycle_order[e]
  int qb = -1;                           // q-class at cycle_order[(e + 1) % n]
  std::vector<VertexSet> combo_cuts;     // distinct cuts formed here, ascending
  std::vector<int> combo_classes;        // their global class ids, ascending
  int chosen_class = -1;                 // class of the max-component combo
  VertexSet chosen_cut;                  // least combo attaining max_components
  int max_components = 0;                // 0 when no combo here is a cut
  std::vector<std::vector<int>> anchor_blocks;  // end sets split off here
};

// An anchor of the ring: one non-large component of the chosen cut at one
// cycle edge, identified by the set of ends it contains.
struct RingAnchor {
  int edge = -1;
  std::vector<int> block;  // ascending end indices
};

// A crossing class: a connected component of the crossing graph together
// with the half-cut structure that determines its ring.
struct HashClass {
  std::vector<int> member_classes;  // global class ids, ascending
  std::vector<int> member_cuts;     // global cut ids, ascending
  VertexSet centre;                 // vertices common to every crossing pair
  int half_size = 0;                // (kappa - |centre|) / 2

  std::vector<VertexSet> halves;               // ascending
  std::vector<std::pair<int, int>> cut_halves;  // per member cut: its half ids
  std::vector<QClass> q_classes;               // ordered by smallest half id
  std::vector<int> q_of_half;

  std::vector<int> cycle_order;   // q-class ids in canonical cyclic order
  std::vector<CycleEdge> edges;   // edge e joins cycle positions e, e+1
  std::vector<RingAnchor> anchors;  // by edge, then block

  std::vector<int> corner_classes;  // global class ids formed only at edges

  EndPartition fine;    // one block per anchor
  EndPartition coarse;  // fine blocks merged per cycle edge

  bool has_twin(int q) const;  // q-class holds more than one equivalence class
};

// Build every crossing class, its cyclic arrangement and its ring data.
// Verifies the structural facts the construction relies on and throws a
// verification error when any fails: the centre is pair-independent, halves
// split evenly and independently of the crossing partner, quasi-equivalence
// is transitive and never relates halves of one cut, each q-class holds at
// most four equivalence classes, combos of non-adjacent classes are cuts
// with representative-independent partitions matching the member classes
// one-to-one, each cycle edge carries at most two combo classes (at most
// one of them two-component), the separation relation matches the cyclic
// order exactly, the fine partition equals the anchor blocks, and the
// coarse partition equals the per-edge unions of anchor blocks.
std::vector<HashClass> build_hash_classes(const AugmentedGraph& ag, const MincutSet& ms,
                                          const CrossingStructure& cs);

// The separation relation on quasi-equivalence classes: R(a,b,c,d) holds
// when the cut formed from a,c crosses the cut formed from b,d.  Evaluated
// on representative halves (least of each class).
bool separation_relation(const AugmentedGraph& ag, const HashClass& hc, int a, int b, int c,
                         int d);

// Check the advertised correspondence between cuts formed from half-cuts of
// the class and cuts of its ring: enumerating all two-vertex cuts of the
// ring (anchors act as ends) and grouping them by anchor partition must
// reproduce exactly the member and corner classes mapped through the
// fine-block-to-anchor bijection.  Throws a verification error otherwise.
void verify_ring_correspondence(const MincutSet& ms, const HashClass& hc);

}  // namespace suc
