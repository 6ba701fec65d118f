#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/ends.hpp"
#include "core/grf.hpp"

using namespace suc;

namespace {

AugmentedGraph load(const std::string& fixture) {
  GrfFile f = load_grf(std::string(SUC_FIXTURE_DIR) + "/" + fixture);
  return attach_markers(f.g, f.ends);
}

VertexSet ids(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(*g.id_of(n));
  return vs_sorted(std::move(out));
}

}  // namespace

TEST_CASE("markers are attached to every terminal of their end") {
  AugmentedGraph ag = load("series3.grf");
  REQUIRE(ag.end_count() == 3);
  REQUIRE(ag.markers.size() == 3);
  for (size_t i = 0; i < ag.markers.size(); ++i) {
    int m = ag.markers[i];
    CHECK(ag.is_marker(m));
    CHECK(ag.marker_index(m) == static_cast<int>(i));
  }
  // The B2 marker is adjacent to exactly b21 and b22.
  auto it = std::find(ag.end_names.begin(), ag.end_names.end(), "B2");
  REQUIRE(it != ag.end_names.end());
  int m2 = ag.marker_of_end(static_cast<int>(it - ag.end_names.begin()));
  CHECK(ag.g.neighbors(m2) == ids(ag.g, {"b21", "b22"}));
}

TEST_CASE("original vertices and markers partition the augmented graph") {
  AugmentedGraph ag = load("wheel4.grf");
  CHECK(ag.g.n() == 25);
  CHECK(ag.originals.size() == 21);
  CHECK(ag.markers.size() == 4);
  for (int v : ag.originals) CHECK(!ag.is_marker(v));
}

TEST_CASE("attach_markers validates its input") {
  Graph g = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  // fewer than two ends
  CHECK_THROWS_WITH_AS(
      (void)attach_markers(g, {{"X", {"a"}}}),
      doctest::Contains("two ends"), SucError);
  // unknown terminal
  CHECK_THROWS_WITH_AS(
      (void)attach_markers(g, {{"X", {"a"}}, {"Y", {"zzz"}}}),
      doctest::Contains("zzz"), SucError);
  // overlapping ends
  CHECK_THROWS_WITH_AS(
      (void)attach_markers(g, {{"X", {"a"}}, {"Y", {"a"}}}),
      doctest::Contains("belongs to two ends"), SucError);
  // duplicate end name
  CHECK_THROWS_AS((void)attach_markers(g, {{"X", {"a"}}, {"X", {"b"}}}), SucError);
}

TEST_CASE("cut views classify components as marked or slices") {
  AugmentedGraph ag = load("series3.grf");
  VertexSet cut = ids(ag.g, {"a"});
  CutView view = cut_view(ag, cut);
  CHECK(view.components.size() == 2);
  CHECK(view.marked_components == 2);
  CHECK(view.slices.empty());
  CHECK(is_end_cut(ag, cut));

  // Ends are indexed in sorted-name order: B1=0, B2=1, B3=2.
  EndPartition p = end_partition(ag, cut);
  CHECK(p.to_string() == "0|1,2");
}

TEST_CASE("a cut separating no ends is not an end cut") {
  AugmentedGraph ag = load("wheel4.grf");
  VertexSet cut = ids(ag.g, {"v1"});
  CHECK(!is_end_cut(ag, cut));
  CHECK_THROWS_AS((void)end_partition(ag, cut), SucError);
}

TEST_CASE("markers may never be cut") {
  AugmentedGraph ag = load("series3.grf");
  CHECK_THROWS_WITH_AS((void)cut_view(ag, {ag.markers[0]}),
                       doctest::Contains("marker"), SucError);
}

TEST_CASE("slices appear for cuts with unmarked components") {
  // a - s - b with ends only at a and b: cutting both neighbors of s leaves
  // the middle vertex as a markerless component.
  Graph g = Graph::build({"a", "p", "s", "q", "b"},
                         {{"a", "p"}, {"p", "s"}, {"s", "q"}, {"q", "b"}});
  AugmentedGraph ag = attach_markers(g, {{"A", {"a"}}, {"B", {"b"}}});
  VertexSet cut = ids(ag.g, {"p", "q"});
  CutView view = cut_view(ag, cut);
  CHECK(view.marked_components == 2);
  REQUIRE(view.slices.size() == 1);
  CHECK(view.slices[0] == ids(ag.g, {"s"}));
}

TEST_CASE("end partitions compare and refine canonically") {
  EndPartition p = EndPartition::of_blocks({{1, 0}, {2}});
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(2) == 1);
  CHECK(p.separates(0, 2));
  CHECK(!p.separates(0, 1));

  EndPartition q = EndPartition::of_blocks({{2, 1}, {0}});
  EndPartition r = common_refinement(p, q);
  CHECK(r.block_count() == 3);  // {0}, {1}, {2}
  CHECK(r.separates(0, 1));
  CHECK(r.separates(1, 2));
  CHECK(r.to_string() == "0|1|2");
}
