#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/grf.hpp"
#include "core/hashclass.hpp"
#include "core/oracle.hpp"

using namespace suc;

namespace {

AugmentedGraph load(const std::string& fixture) {
  GrfFile f = load_grf(std::string(SUC_FIXTURE_DIR) + "/" + fixture);
  return attach_markers(f.g, f.ends);
}

struct Prepared {
  AugmentedGraph ag;
  MincutSet ms;
  CrossingStructure cs;
  std::vector<HashClass> hcs;
};

Prepared prepare(AugmentedGraph ag) {
  SliceReduction sr = reduce_slices(ag);
  Prepared p{sr.reduced, {}, {}, {}};
  int k = kappa(p.ag);
  p.ms = group_into_classes(p.ag, enumerate_mincuts(p.ag, k), k, /*expect_sliceless=*/true);
  p.cs = crossing_structure(p.ms);
  p.hcs = build_hash_classes(p.ag, p.ms, p.cs);
  return p;
}

VertexSet ids(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(*g.id_of(n));
  return vs_sorted(std::move(out));
}

}  // namespace

TEST_CASE("the wheel has one crossing class with centre u and four singleton q-classes") {
  Prepared p = prepare(load("wheel4.grf"));
  REQUIRE(p.hcs.size() == 1);
  const HashClass& hc = p.hcs[0];
  const Graph& g = p.ag.g;

  // The two diagonal classes cross; the four corner classes do not.
  REQUIRE(hc.member_classes.size() == 2);
  CHECK(p.ms.classes[hc.member_classes[0]].partition.to_string() == "0,1|2,3");
  CHECK(p.ms.classes[hc.member_classes[1]].partition.to_string() == "0,3|1,2");
  CHECK(hc.member_cuts.size() == 2);

  CHECK(hc.centre == ids(g, {"u"}));
  CHECK(hc.half_size == 1);

  REQUIRE(hc.halves.size() == 4);
  CHECK(hc.halves[0] == ids(g, {"v1"}));
  CHECK(hc.halves[1] == ids(g, {"v2"}));
  CHECK(hc.halves[2] == ids(g, {"v3"}));
  CHECK(hc.halves[3] == ids(g, {"v4"}));

  REQUIRE(hc.q_classes.size() == 4);
  for (int q = 0; q < 4; ++q) {
    CHECK(hc.q_classes[q].halves == std::vector<int>{q});
    CHECK(hc.q_classes[q].equiv.size() == 1);
    CHECK_FALSE(hc.has_twin(q));
  }

  // Cyclic order v1, v2, v3, v4 in canonical orientation.
  CHECK(hc.cycle_order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the wheel ring carries one anchor per edge and singleton partitions") {
  Prepared p = prepare(load("wheel4.grf"));
  const HashClass& hc = p.hcs[0];
  const Graph& g = p.ag.g;

  REQUIRE(hc.edges.size() == 4);
  // Edge i joins the classes of v(i+1), v(i+2); its corner isolates the
  // blob between them.
  const std::vector<std::vector<std::string>> corner_vertices = {
      {"u", "v1", "v2"}, {"u", "v2", "v3"}, {"u", "v3", "v4"}, {"u", "v1", "v4"}};
  const std::vector<std::vector<int>> expected_blocks = {{1}, {2}, {3}, {0}};
  for (int e = 0; e < 4; ++e) {
    const CycleEdge& edge = hc.edges[e];
    CHECK(edge.qa == hc.cycle_order[e]);
    CHECK(edge.qb == hc.cycle_order[(e + 1) % 4]);
    CHECK(edge.combo_cuts == std::vector<VertexSet>{ids(g, corner_vertices[e])});
    CHECK(edge.combo_classes.size() == 1);
    CHECK(edge.max_components == 2);
    CHECK(edge.chosen_cut == ids(g, corner_vertices[e]));
    REQUIRE(edge.anchor_blocks.size() == 1);
    CHECK(edge.anchor_blocks[0] == expected_blocks[e]);
  }

  REQUIRE(hc.anchors.size() == 4);
  for (int a = 0; a < 4; ++a) {
    CHECK(hc.anchors[a].edge == a);
    CHECK(hc.anchors[a].block == expected_blocks[a]);
  }

  CHECK(hc.corner_classes.size() == 4);
  CHECK(hc.fine.to_string() == "0|1|2|3");
  CHECK(hc.coarse.to_string() == "0|1|2|3");

  // Six classes in all: two members plus four corners, matching the six
  // ring cut classes (checked inside the build as well).
  CHECK(hc.member_classes.size() + hc.corner_classes.size() == 6);
  verify_ring_correspondence(p.ms, hc);
}

TEST_CASE("the separation relation alternates exactly with the cyclic order") {
  Prepared p = prepare(load("wheel4.grf"));
  const HashClass& hc = p.hcs[0];
  // Chord {v1,v3} against chord {v2,v4}: crossing diagonals.
  CHECK(separation_relation(p.ag, hc, 0, 1, 2, 3));
  CHECK(separation_relation(p.ag, hc, 1, 2, 3, 0));
  // Chord {v1,v2} against {v3,v4}: adjacent combinations cross nothing.
  CHECK_FALSE(separation_relation(p.ag, hc, 0, 2, 1, 3));
  CHECK_FALSE(separation_relation(p.ag, hc, 0, 3, 1, 2));
}

TEST_CASE("graphs without crossing cuts yield no crossing classes") {
  for (const char* fixture : {"series3.grf", "bowtie.grf", "cycle4.grf"}) {
    Prepared p = prepare(load(fixture));
    CHECK(p.hcs.empty());
  }
}

TEST_CASE("random instances build their crossing classes with all internal checks") {
  int classes_seen = 0;
  int instances_with_classes = 0;
  std::vector<RandomInstance> instances;
  for (unsigned seed = 1; seed <= 40; ++seed) instances.push_back(random_instance(seed));
  for (unsigned seed = 1; seed <= 20; ++seed)
    instances.push_back(random_instance(seed, "necklace"));
  for (const RandomInstance& inst : instances) {
    Prepared p = prepare(attach_markers(inst.g, inst.ends));
    classes_seen += static_cast<int>(p.hcs.size());
    if (!p.hcs.empty()) ++instances_with_classes;
    for (const HashClass& hc : p.hcs) {
      CHECK(hc.q_classes.size() >= 4);
      CHECK(hc.cycle_order.size() == hc.q_classes.size());
      CHECK(hc.half_size >= 1);
      // Every anchor block must be one block of the fine partition.
      for (const RingAnchor& a : hc.anchors) {
        bool found = false;
        for (const auto& blk : hc.fine.blocks) found = found || blk == a.block;
        CHECK(found);
      }
      // Member cuts decompose into centre plus two equal halves.
      for (size_t i = 0; i < hc.member_cuts.size(); ++i) {
        const Cut& cut = p.ms.cuts[hc.member_cuts[i]];
        VertexSet rebuilt = vs_union(vs_union(hc.halves[hc.cut_halves[i].first],
                                              hc.halves[hc.cut_halves[i].second]),
                                     hc.centre);
        CHECK(rebuilt == cut.vertices);
      }
    }
  }
  INFO("instances with crossing classes: " << instances_with_classes
                                           << ", classes: " << classes_seen);
  CHECK(instances_with_classes > 0);
}
