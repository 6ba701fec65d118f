#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/graph.hpp"
#include "core/grf.hpp"

using namespace suc;

namespace {

Graph path3() {
  return Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

Graph wheel4() {
  return load_grf(std::string(SUC_FIXTURE_DIR) + "/wheel4.grf").g;
}

VertexSet ids(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(*g.id_of(n));
  return vs_sorted(std::move(out));
}

}  // namespace

TEST_CASE("vertex ids follow lexicographic name order") {
  Graph g = Graph::build({"zed", "alpha", "mid"}, {{"zed", "alpha"}});
  CHECK(g.name(0) == "alpha");
  CHECK(g.name(1) == "mid");
  CHECK(g.name(2) == "zed");
  CHECK(*g.id_of("mid") == 1);
  CHECK(!g.id_of("nope").has_value());
}

TEST_CASE("build rejects self-loops and unknown endpoints") {
  CHECK_THROWS_AS(Graph::build({"a"}, {{"a", "a"}}), SucError);
  CHECK_THROWS_AS(Graph::build({"a"}, {{"a", "b"}}), SucError);
}

TEST_CASE("multiplicity is tracked per unordered pair") {
  Graph g = Graph::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 2);
  auto edges = g.edge_list();
  REQUIRE(edges.size() == 1);
  CHECK(std::get<2>(edges[0]) == 2);
}

TEST_CASE("removing an articulation point splits a path") {
  Graph g = path3();
  auto comps = g.components({*g.id_of("b")});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == ids(g, {"a"}));
  CHECK(comps[1] == ids(g, {"c"}));
}

TEST_CASE("no removal on a connected graph gives one component") {
  Graph g = path3();
  auto comps = g.components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == ids(g, {"a", "b", "c"}));
  CHECK(g.connected());
}

TEST_CASE("removing v1,u,v3 from the wheel fixture leaves two sides") {
  Graph g = wheel4();
  REQUIRE(g.n() == 21);
  auto cut = ids(g, {"v1", "u", "v3"});
  auto comps = g.components(cut);
  REQUIRE(comps.size() == 2);
  // One side holds blob 2, the other blob 4.
  bool b2_first = vs_contains(comps[0], *g.id_of("b21"));
  const VertexSet& with_b2 = b2_first ? comps[0] : comps[1];
  const VertexSet& with_b4 = b2_first ? comps[1] : comps[0];
  for (int j = 1; j <= 4; ++j) {
    CHECK(vs_contains(with_b2, *g.id_of("b2" + std::to_string(j))));
    CHECK(vs_contains(with_b4, *g.id_of("b4" + std::to_string(j))));
  }
}

TEST_CASE("boundary of everything is empty") {
  Graph g = path3();
  CHECK(g.boundary(ids(g, {"a", "b", "c"})).empty());
}

TEST_CASE("boundary of a path endpoint is its neighbor") {
  Graph g = path3();
  CHECK(g.boundary(ids(g, {"a"})) == ids(g, {"b"}));
}

TEST_CASE("every component of a minimum cut touches the whole cut") {
  Graph g = wheel4();
  auto cut = ids(g, {"v1", "u", "v3"});
  for (const auto& comp : g.components(cut)) {
    CHECK(g.boundary(comp) == cut);
  }
}

TEST_CASE("star complement excludes the set and its boundary") {
  Graph g = wheel4();
  auto cut = ids(g, {"v1", "u", "v3"});
  auto comps = g.components(cut);
  REQUIRE(comps.size() == 2);
  VertexSet expect = vs_difference(
      vs_difference(ids(g, g.names()), comps[0]), g.boundary(comps[0]));
  CHECK(g.star_complement(comps[0]) == expect);
  CHECK(g.star_complement(comps[0]) == comps[1]);
}
