#include "core/hashclass.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace suc {

namespace {

[[noreturn]] void fail_verify(const std::string& msg) {
  throw SucError(Code::verify, "VerificationFailed", msg);
}

void vassert(bool cond, const std::string& msg) {
  if (!cond) fail_verify(msg);
}

// Lazily evaluated cuts formed from pairs of half-cuts around the centre.
class ComboTable {
 public:
  ComboTable(const AugmentedGraph& ag, const std::vector<VertexSet>& halves,
             const VertexSet& centre, int kappa)
      : ag_(ag), halves_(halves), centre_(centre), kappa_(kappa) {}

  struct Entry {
    bool is_cut = false;
    VertexSet vertices;
    EndPartition partition;
  };

  const Entry& at(int h1, int h2) {
    if (h1 > h2) std::swap(h1, h2);
    auto key = std::make_pair(h1, h2);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.vertices = vs_union(vs_union(halves_[h1], halves_[h2]), centre_);
    if (static_cast<int>(e.vertices.size()) == kappa_ && is_end_cut(ag_, e.vertices)) {
      e.is_cut = true;
      e.partition = end_partition(ag_, e.vertices);
    }
    return cache_.emplace(key, std::move(e)).first->second;
  }

 private:
  const AugmentedGraph& ag_;
  const std::vector<VertexSet>& halves_;
  VertexSet centre_;
  int kappa_;
  std::map<std::pair<int, int>, Entry> cache_;
};

EndPartition refine_all(const std::vector<EndPartition>& parts) {
  EndPartition acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = common_refinement(acc, parts[i]);
  return acc;
}

std::string describe(const HashClass& hc) {
  std::ostringstream os;
  os << "crossing class {";
  for (size_t i = 0; i < hc.member_classes.size(); ++i)
    os << (i ? "," : "") << hc.member_classes[i];
  os << "}";
  return os.str();
}

// The two-component split of `cut` minus the centre induced by the removal
// of a crossing partner.
std::pair<VertexSet, VertexSet> split_by_partner(const AugmentedGraph& ag, const VertexSet& cut,
                                                 const VertexSet& centre,
                                                 const VertexSet& partner,
                                                 const std::string& ctx) {
  CutView view = cut_view(ag, partner);
  vassert(view.slices.empty(), ctx + ": crossing partner leaves a slice");
  vassert(view.components.size() == 2, ctx + ": crossing cut leaves more than two components");
  VertexSet rest = vs_difference(cut, centre);
  VertexSet a = vs_intersect(rest, view.components[0]);
  VertexSet b = vs_intersect(rest, view.components[1]);
  vassert(static_cast<int>(a.size() + b.size()) == static_cast<int>(rest.size()),
          ctx + ": half vertices missing from both sides of a crossing partner");
  vassert(!a.empty() && !b.empty(), ctx + ": crossing partner fails to split the cut");
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace

bool HashClass::has_twin(int q) const { return q_classes[q].equiv.size() > 1; }

namespace {

// Find the cyclic arrangement of q-classes from the separation relation:
// each class z has a unique pair of neighbours a,b with R(a,z,b,c) for every
// other class c; walking the neighbour map yields the cycle.
std::vector<int> arrange_in_cycle(const std::vector<std::vector<int>>& halves_of_q,
                                  ComboTable& combos, const AugmentedGraph& ag,
                                  const std::string& ctx) {
  int n = static_cast<int>(halves_of_q.size());
  auto rep = [&](int q) { return halves_of_q[q].front(); };
  auto relation = [&](int a, int b, int c, int d) {
    const auto& ac = combos.at(rep(a), rep(c));
    const auto& bd = combos.at(rep(b), rep(d));
    if (!ac.is_cut || !bd.is_cut) return false;
    return !is_nested(ag, ac.vertices, bd.vertices);
  };

  std::vector<std::vector<int>> neighbours(n);
  for (int z = 0; z < n; ++z) {
    std::vector<std::pair<int, int>> found;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (a == z || b == z) continue;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
          if (c == z || c == a || c == b) continue;
          ok = relation(a, z, b, c);
        }
        if (ok) found.emplace_back(a, b);
      }
    }
    vassert(found.size() == 1, ctx + ": a q-class lacks a unique adjacent pair");
    neighbours[z] = {found[0].first, found[0].second};
  }

  std::vector<int> order;
  std::vector<char> used(n, 0);
  int cur = 0;
  int prev = -1;
  // Deterministic orientation: start at q-class 0, walk toward its smaller
  // neighbour.
  while (true) {
    order.push_back(cur);
    used[cur] = 1;
    int nxt = -1;
    for (int cand : neighbours[cur])
      if (cand != prev && !used[cand]) {
        if (nxt == -1 || cand < nxt) nxt = cand;
      }
    if (nxt == -1) break;
    prev = cur;
    cur = nxt;
  }
  vassert(static_cast<int>(order.size()) == n, ctx + ": adjacency walk does not cover all q-classes");
  vassert(vs_contains(neighbours[order.back()], order.front()),
          ctx + ": adjacency walk does not close into a cycle");

  // Full extensional check: the relation holds exactly when the chord a-c
  // separates b from d on the cycle just built.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  auto strictly_inside = [n](int x, int lo, int hi) {
    int span = (hi - lo + n) % n;
    int off = (x - lo + n) % n;
    return off > 0 && off < span;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          bool rel = relation(a, b, c, d);
          bool circ = strictly_inside(pos[b], pos[a], pos[c]) !=
                      strictly_inside(pos[d], pos[a], pos[c]);
          vassert(rel == circ, ctx + ": separation relation disagrees with the cyclic order");
        }
  return order;
}

}  // namespace

bool separation_relation(const AugmentedGraph& ag, const HashClass& hc, int a, int b, int c,
                         int d) {
  auto rep = [&](int q) { return hc.halves[hc.q_classes[q].halves.front()]; };
  VertexSet ac = vs_union(vs_union(rep(a), rep(c)), hc.centre);
  VertexSet bd = vs_union(vs_union(rep(b), rep(d)), hc.centre);
  int k = static_cast<int>(hc.centre.size()) + 2 * hc.half_size;
  if (static_cast<int>(ac.size()) != k || !is_end_cut(ag, ac)) return false;
  if (static_cast<int>(bd.size()) != k || !is_end_cut(ag, bd)) return false;
  return !is_nested(ag, ac, bd);
}

std::vector<HashClass> build_hash_classes(const AugmentedGraph& ag, const MincutSet& ms,
                                          const CrossingStructure& cs) {
  std::vector<HashClass> out;
  for (const std::vector<int>& classes : cs.hash_classes) {
    HashClass hc;
    hc.member_classes = classes;
    for (int cls : classes)
      for (int cid : ms.classes[cls].cut_ids) hc.member_cuts.push_back(cid);
    std::sort(hc.member_cuts.begin(), hc.member_cuts.end());
    std::string ctx = describe(hc);

    // --- centre: the intersection of every genuinely crossing pair.
    bool have_centre = false;
    for (size_t i = 0; i < hc.member_cuts.size(); ++i) {
      for (size_t j = i + 1; j < hc.member_cuts.size(); ++j) {
        const Cut& ki = ms.cuts[hc.member_cuts[i]];
        const Cut& kj = ms.cuts[hc.member_cuts[j]];
        if (!partitions_cross(ki.partition, kj.partition)) continue;
        vassert(!is_nested(ag, ki.vertices, kj.vertices),
                ctx + ": partitions cross but the cuts are nested");
        VertexSet u = vs_intersect(ki.vertices, kj.vertices);
        if (!have_centre) {
          hc.centre = u;
          have_centre = true;
        } else {
          vassert(u == hc.centre, ctx + ": crossing pairs disagree about the centre");
        }
      }
    }
    vassert(have_centre, ctx + ": no crossing pair found");
    vassert((ms.kappa - static_cast<int>(hc.centre.size())) % 2 == 0,
            ctx + ": cut size minus centre size is odd");
    hc.half_size = (ms.kappa - static_cast<int>(hc.centre.size())) / 2;
    vassert(hc.half_size > 0, ctx + ": empty half-cuts");

    // --- halves: split every member cut by each of its crossing partners;
    // the split must not depend on the partner chosen.
    std::set<VertexSet> half_set;
    std::vector<std::pair<VertexSet, VertexSet>> split_of_cut(hc.member_cuts.size());
    for (size_t i = 0; i < hc.member_cuts.size(); ++i) {
      const Cut& ki = ms.cuts[hc.member_cuts[i]];
      bool have = false;
      std::pair<VertexSet, VertexSet> split;
      for (size_t j = 0; j < hc.member_cuts.size(); ++j) {
        if (i == j) continue;
        const Cut& kj = ms.cuts[hc.member_cuts[j]];
        if (!partitions_cross(ki.partition, kj.partition)) continue;
        auto s = split_by_partner(ag, ki.vertices, hc.centre, kj.vertices, ctx);
        if (!have) {
          split = s;
          have = true;
        } else {
          vassert(s == split, ctx + ": the half split depends on the crossing partner");
        }
      }
      vassert(have, ctx + ": a member cut crosses nothing");
      vassert(static_cast<int>(split.first.size()) == hc.half_size &&
                  static_cast<int>(split.second.size()) == hc.half_size,
              ctx + ": halves are not of equal size");
      split_of_cut[i] = split;
      half_set.insert(split.first);
      half_set.insert(split.second);
    }
    hc.halves.assign(half_set.begin(), half_set.end());
    auto half_id = [&](const VertexSet& h) {
      auto it = std::lower_bound(hc.halves.begin(), hc.halves.end(), h);
      return static_cast<int>(it - hc.halves.begin());
    };
    for (size_t i = 0; i < hc.member_cuts.size(); ++i)
      hc.cut_halves.emplace_back(half_id(split_of_cut[i].first),
                                 half_id(split_of_cut[i].second));

    int nh = static_cast<int>(hc.halves.size());
    ComboTable combos(ag, hc.halves, hc.centre, ms.kappa);

    // --- quasi-equivalence: some witness completes both halves to
    // equivalent cuts.
    std::vector<std::vector<char>> qe(nh, std::vector<char>(nh, 0));
    for (int i = 0; i < nh; ++i) qe[i][i] = 1;
    for (int i = 0; i < nh; ++i) {
      for (int j = i + 1; j < nh; ++j) {
        for (int w = 0; w < nh && !qe[i][j]; ++w) {
          if (w == i || w == j) continue;
          const auto& cw1 = combos.at(i, w);
          const auto& cw2 = combos.at(j, w);
          if (cw1.is_cut && cw2.is_cut && cw1.partition == cw2.partition) {
            qe[i][j] = qe[j][i] = 1;
          }
        }
      }
    }
    for (int i = 0; i < nh; ++i)
      for (int j = 0; j < nh; ++j)
        for (int k = 0; k < nh; ++k)
          vassert(!(qe[i][j] && qe[j][k]) || qe[i][k],
                  ctx + ": quasi-equivalence is not transitive");
    for (size_t i = 0; i < hc.cut_halves.size(); ++i)
      vassert(!qe[hc.cut_halves[i].first][hc.cut_halves[i].second],
              ctx + ": the halves of one cut are quasi-equivalent");

    hc.q_of_half.assign(nh, -1);
    for (int i = 0; i < nh; ++i) {
      if (hc.q_of_half[i] != -1) continue;
      QClass qc;
      for (int j = i; j < nh; ++j)
        if (qe[i][j]) {
          qc.halves.push_back(j);
          hc.q_of_half[j] = static_cast<int>(hc.q_classes.size());
        }
      hc.q_classes.push_back(std::move(qc));
    }
    int nq = static_cast<int>(hc.q_classes.size());
    vassert(nq >= 4, ctx + ": fewer than four quasi-equivalence classes");

    // --- full equivalence inside each q-class (at most four classes).
    auto equivalent = [&](int i, int j) {
      for (int w = 0; w < nh; ++w) {
        if (w == i || w == j) continue;
        const auto& cw1 = combos.at(i, w);
        const auto& cw2 = combos.at(j, w);
        if (cw1.is_cut != cw2.is_cut) return false;
        if (cw1.is_cut && !(cw1.partition == cw2.partition)) return false;
      }
      return true;
    };
    for (QClass& qc : hc.q_classes) {
      for (int h : qc.halves) {
        bool placed = false;
        for (auto& grp : qc.equiv)
          if (equivalent(grp.front(), h)) {
            grp.push_back(h);
            placed = true;
            break;
          }
        if (!placed) qc.equiv.push_back({h});
      }
      vassert(qc.equiv.size() <= 4, ctx + ": more than four equivalence classes in a q-class");
    }

    // --- cyclic arrangement.
    std::vector<std::vector<int>> halves_of_q(nq);
    for (int q = 0; q < nq; ++q) halves_of_q[q] = hc.q_classes[q].halves;
    hc.cycle_order = arrange_in_cycle(halves_of_q, combos, ag, ctx);

    std::vector<int> pos_of_q(nq);
    for (int i = 0; i < nq; ++i) pos_of_q[hc.cycle_order[i]] = i;
    auto adjacent_on_cycle = [&](int qa, int qb) {
      int d = std::abs(pos_of_q[qa] - pos_of_q[qb]);
      return d == 1 || d == nq - 1;
    };

    // --- combos of non-adjacent classes are member cuts, one class per
    // unordered pair, and every member class arises this way.
    std::map<std::pair<int, int>, int> pair_class;
    for (int qa = 0; qa < nq; ++qa) {
      for (int qb = qa + 1; qb < nq; ++qb) {
        if (adjacent_on_cycle(qa, qb)) continue;
        std::optional<EndPartition> part;
        for (int h1 : hc.q_classes[qa].halves) {
          for (int h2 : hc.q_classes[qb].halves) {
            const auto& e = combos.at(h1, h2);
            vassert(e.is_cut, ctx + ": a non-adjacent combination is not a cut");
            int cid = ms.cut_index(e.vertices);
            vassert(cid >= 0, ctx + ": a combination cut is missing from the cut list");
            if (!part)
              part = e.partition;
            else
              vassert(*part == e.partition,
                      ctx + ": non-adjacent combinations disagree between representatives");
          }
        }
        int found = -1;
        for (int cls : hc.member_classes)
          if (ms.classes[cls].partition == *part) found = cls;
        vassert(found >= 0, ctx + ": a non-adjacent combination is not a member class");
        pair_class[{qa, qb}] = found;
      }
    }
    {
      std::set<int> seen;
      for (const auto& entry : pair_class) seen.insert(entry.second);
      vassert(seen.size() == hc.member_classes.size() && pair_class.size() == seen.size(),
              ctx + ": member classes do not match non-adjacent pairs one-to-one");
    }

    // --- edges of the cycle: corner cuts and anchors.
    for (int e = 0; e < nq; ++e) {
      CycleEdge edge;
      edge.qa = hc.cycle_order[e];
      edge.qb = hc.cycle_order[(e + 1) % nq];
      std::set<VertexSet> cuts_here;
      for (int h1 : hc.q_classes[edge.qa].halves)
        for (int h2 : hc.q_classes[edge.qb].halves) {
          const auto& en = combos.at(h1, h2);
          if (en.is_cut) cuts_here.insert(en.vertices);
        }
      edge.combo_cuts.assign(cuts_here.begin(), cuts_here.end());
      std::set<int> classes_here;
      for (const VertexSet& cut : edge.combo_cuts) {
        int cid = ms.cut_index(cut);
        vassert(cid >= 0, ctx + ": an edge combination cut is missing from the cut list");
        classes_here.insert(ms.class_of_cut[cid]);
        int comps = ms.cuts[cid].total_components;
        if (comps > edge.max_components) {
          edge.max_components = comps;
          edge.chosen_cut = cut;
        } else if (comps == edge.max_components && cut < edge.chosen_cut) {
          edge.chosen_cut = cut;
        }
      }
      edge.combo_classes.assign(classes_here.begin(), classes_here.end());
      vassert(edge.combo_classes.size() <= 2,
              ctx + ": more than two cut classes at one cycle edge");
      if (edge.combo_classes.size() == 2) {
        const CutClass& c0 = ms.classes[edge.combo_classes[0]];
        const CutClass& c1 = ms.classes[edge.combo_classes[1]];
        vassert(c0.is_b != c1.is_b,
                ctx + ": two cut classes at one edge but not one of each kind");
      }
      if (edge.max_components > 0) {
        int cid = ms.cut_index(edge.chosen_cut);
        edge.chosen_class = ms.class_of_cut[cid];
        CutView view = cut_view(ag, edge.chosen_cut);
        vassert(view.slices.empty(), ctx + ": an edge cut leaves a slice");
        // The large component is the one holding the rest of the ring: the
        // half-cuts of every class other than the two forming this edge.
        VertexSet rest_of_ring;
        for (int q = 0; q < nq; ++q) {
          if (q == edge.qa || q == edge.qb) continue;
          for (int h : hc.q_classes[q].halves)
            rest_of_ring = vs_union(rest_of_ring, hc.halves[h]);
        }
        VertexSet leftover = vs_difference(rest_of_ring, edge.chosen_cut);
        vassert(!leftover.empty(), ctx + ": the other classes lie inside the edge cut");
        int large = -1;
        for (size_t c = 0; c < view.components.size(); ++c)
          if (vs_subset(leftover, view.components[c])) {
            vassert(large == -1, ctx + ": several components hold the remaining half-cuts");
            large = static_cast<int>(c);
          }
        vassert(large >= 0, ctx + ": no component holds the remaining half-cuts");
        for (size_t c = 0; c < view.components.size(); ++c) {
          if (static_cast<int>(c) == large) continue;
          vassert(!view.ends_by_component[c].empty(), ctx + ": an anchor block has no ends");
          edge.anchor_blocks.push_back(view.ends_by_component[c]);
        }
        std::sort(edge.anchor_blocks.begin(), edge.anchor_blocks.end());
        vassert(static_cast<int>(edge.anchor_blocks.size()) == edge.max_components - 1,
                ctx + ": anchor count does not match the component count");
      }
      for (const auto& block : edge.anchor_blocks) hc.anchors.push_back({e, block});
      hc.edges.push_back(std::move(edge));
    }

    // When an edge carries a two-component class alongside a finer one, the
    // coarser partition must merge exactly the anchor blocks of the finer.
    for (const CycleEdge& edge : hc.edges) {
      if (edge.combo_classes.size() != 2) continue;
      const CutClass& b_cls = ms.classes[edge.combo_classes[0]].is_b
                                  ? ms.classes[edge.combo_classes[0]]
                                  : ms.classes[edge.combo_classes[1]];
      std::vector<int> merged;
      for (const auto& blk : edge.anchor_blocks) merged.insert(merged.end(), blk.begin(), blk.end());
      std::sort(merged.begin(), merged.end());
      std::vector<std::vector<int>> blocks;
      blocks.push_back(merged);
      std::vector<int> rest;
      for (int end = 0; end < ag.end_count(); ++end)
        if (!std::binary_search(merged.begin(), merged.end(), end)) rest.push_back(end);
      blocks.push_back(rest);
      vassert(EndPartition::of_blocks(blocks) == b_cls.partition,
              ctx + ": the two-component edge class does not merge the anchor blocks");
    }

    // --- corner classes: formed at edges, not members.
    {
      std::set<int> corner;
      for (const CycleEdge& edge : hc.edges)
        for (int cls : edge.combo_classes)
          if (!std::binary_search(hc.member_classes.begin(), hc.member_classes.end(), cls))
            corner.insert(cls);
      hc.corner_classes.assign(corner.begin(), corner.end());
    }

    // --- fine and coarse partitions.
    {
      std::vector<EndPartition> parts;
      for (int cls : hc.member_classes) parts.push_back(ms.classes[cls].partition);
      hc.coarse = refine_all(parts);
      for (int cls : hc.corner_classes) parts.push_back(ms.classes[cls].partition);
      hc.fine = refine_all(parts);
    }
    {
      std::vector<std::vector<int>> anchor_blocks;
      for (const RingAnchor& a : hc.anchors) anchor_blocks.push_back(a.block);
      std::sort(anchor_blocks.begin(), anchor_blocks.end());
      vassert(std::adjacent_find(anchor_blocks.begin(), anchor_blocks.end()) ==
                  anchor_blocks.end(),
              ctx + ": two anchors carry the same end set");
      std::vector<std::vector<int>> fine_blocks = hc.fine.blocks;
      std::sort(fine_blocks.begin(), fine_blocks.end());
      vassert(anchor_blocks == fine_blocks,
              ctx + ": the fine partition does not match the anchor blocks");

      std::vector<std::vector<int>> per_edge;
      for (const CycleEdge& edge : hc.edges) {
        if (edge.anchor_blocks.empty()) continue;
        std::vector<int> merged;
        for (const auto& blk : edge.anchor_blocks)
          merged.insert(merged.end(), blk.begin(), blk.end());
        std::sort(merged.begin(), merged.end());
        per_edge.push_back(merged);
      }
      std::sort(per_edge.begin(), per_edge.end());
      std::vector<std::vector<int>> coarse_blocks = hc.coarse.blocks;
      std::sort(coarse_blocks.begin(), coarse_blocks.end());
      vassert(per_edge == coarse_blocks,
              ctx + ": the coarse partition does not match the per-edge anchor unions");
    }

    verify_ring_correspondence(ms, hc);
    out.push_back(std::move(hc));
  }
  return out;
}

void verify_ring_correspondence(const MincutSet& ms, const HashClass& hc) {
  std::string ctx = describe(hc);
  int nq = static_cast<int>(hc.cycle_order.size());

  // Build the ring as an adjacency structure over small integer ids:
  // cycle vertices in cyclic order (one per q-class, two where the class
  // splits into several equivalence classes), then one vertex per anchor.
  std::vector<int> first_of_pos(nq), copies(nq);
  int m = 0;
  for (int i = 0; i < nq; ++i) {
    first_of_pos[i] = m;
    copies[i] = hc.has_twin(hc.cycle_order[i]) ? 2 : 1;
    m += copies[i];
  }
  int total = m + static_cast<int>(hc.anchors.size());
  std::vector<std::vector<int>> adj(total);
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto last_of_pos = [&](int i) { return first_of_pos[i] + copies[i] - 1; };
  for (int i = 0; i < nq; ++i) {
    if (copies[i] == 2) connect(first_of_pos[i], first_of_pos[i] + 1);
    connect(last_of_pos(i), first_of_pos[(i + 1) % nq]);
  }
  // Anchors: triangles on the edge joining position i to position i+1.
  for (size_t a = 0; a < hc.anchors.size(); ++a) {
    int e = hc.anchors[a].edge;
    int v = m + static_cast<int>(a);
    connect(v, last_of_pos(e));
    connect(v, first_of_pos[(e + 1) % nq]);
  }

  // Enumerate every pair of non-anchor vertices and record the anchor
  // partitions of the pairs that separate anchors.
  std::set<std::vector<std::vector<int>>> ring_partitions;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      std::vector<int> comp(total, -1);
      int ncomp = 0;
      for (int s = 0; s < total; ++s) {
        if (s == x || s == y || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int w : adj[v]) {
            if (w == x || w == y || comp[w] != -1) continue;
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
        ++ncomp;
      }
      std::vector<std::vector<int>> blocks(ncomp);
      for (size_t a = 0; a < hc.anchors.size(); ++a)
        blocks[comp[m + static_cast<int>(a)]].push_back(static_cast<int>(a));
      blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                  [](const std::vector<int>& b) { return b.empty(); }),
                   blocks.end());
      if (blocks.size() < 2) continue;  // does not separate anchors
      std::sort(blocks.begin(), blocks.end());
      ring_partitions.insert(blocks);
    }
  }

  // Map each member and corner class through the fine-block-to-anchor
  // bijection to a partition of the anchors.
  std::set<std::vector<std::vector<int>>> class_partitions;
  std::vector<int> all_classes = hc.member_classes;
  all_classes.insert(all_classes.end(), hc.corner_classes.begin(), hc.corner_classes.end());
  for (int cls : all_classes) {
    const EndPartition& p = ms.classes[cls].partition;
    std::map<int, std::vector<int>> by_block;
    for (size_t a = 0; a < hc.anchors.size(); ++a) {
      const std::vector<int>& block = hc.anchors[a].block;
      int owner = p.block_of(block.front());
      for (int end : block)
        vassert(p.block_of(end) == owner,
                ctx + ": a class partition splits an anchor block");
      by_block[owner].push_back(static_cast<int>(a));
    }
    vassert(static_cast<int>(by_block.size()) == p.block_count(),
            ctx + ": a class partition block contains no anchor");
    std::vector<std::vector<int>> blocks;
    for (auto& entry : by_block) blocks.push_back(entry.second);
    std::sort(blocks.begin(), blocks.end());
    class_partitions.insert(blocks);
  }

  vassert(ring_partitions == class_partitions,
          ctx + ": ring cut classes do not match the member and corner classes");
}

}  // namespace suc
