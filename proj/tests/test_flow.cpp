#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/flow.hpp"
#include "core/graph.hpp"
#include "core/grf.hpp"

using namespace suc;

namespace {

VertexSet ids(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(*g.id_of(n));
  return vs_sorted(std::move(out));
}

}  // namespace

TEST_CASE("adjacent vertices admit unboundedly many disjoint paths") {
  Graph g = Graph::build({"a", "b"}, {{"a", "b"}});
  PathCount pc = disjoint_path_count(g, {0}, {1});
  CHECK(pc.infinite);
}

TEST_CASE("a path graph carries one disjoint path end to end") {
  Graph g = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  PathCount pc = disjoint_path_count(g, ids(g, {"a"}), ids(g, {"c"}));
  REQUIRE(!pc.infinite);
  CHECK(pc.count == 1);
  CHECK(pc.separator == ids(g, {"b"}));
}

TEST_CASE("opposite corners of a 4-cycle have two disjoint paths") {
  Graph g = Graph::build({"p", "q", "r", "s"},
                         {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}});
  PathCount pc = disjoint_path_count(g, ids(g, {"p"}), ids(g, {"r"}));
  REQUIRE(!pc.infinite);
  CHECK(pc.count == 2);
  CHECK(pc.separator == ids(g, {"q", "s"}));
}

TEST_CASE("disconnected terminals have zero paths and an empty separator") {
  Graph g = Graph::build({"a", "b"}, {});
  PathCount pc = disjoint_path_count(g, {0}, {1});
  REQUIRE(!pc.infinite);
  CHECK(pc.count == 0);
  CHECK(pc.separator.empty());
}

TEST_CASE("uncuttable vertices cannot be blocked") {
  // Diamond a-m-b / a-x-b.  Ordinarily two disjoint paths; once m is
  // uncuttable, the a-m-b route can never be severed, so no finite
  // separator exists at all.
  Graph g = Graph::build({"a", "m", "x", "b"},
                         {{"a", "m"}, {"m", "b"}, {"a", "x"}, {"x", "b"}});
  PathCount with_m_cuttable = disjoint_path_count(g, ids(g, {"a"}), ids(g, {"b"}));
  REQUIRE(!with_m_cuttable.infinite);
  CHECK(with_m_cuttable.count == 2);
  CHECK((with_m_cuttable.separator == ids(g, {"m", "x"})));

  PathCount pc = disjoint_path_count(g, ids(g, {"a"}), ids(g, {"b"}), ids(g, {"m"}));
  CHECK(pc.infinite);
}

TEST_CASE("uncuttable interior vertices reroute the separator") {
  // a - m - c - b  plus  a - x - b: with m uncuttable the only way to stop
  // the top route is c, so the separator becomes {c, x}.
  Graph g = Graph::build({"a", "m", "c", "x", "b"},
                         {{"a", "m"}, {"m", "c"}, {"c", "b"}, {"a", "x"}, {"x", "b"}});
  PathCount pc = disjoint_path_count(g, ids(g, {"a"}), ids(g, {"b"}), ids(g, {"m"}));
  REQUIRE(!pc.infinite);
  CHECK(pc.count == 2);
  CHECK(pc.separator == ids(g, {"c", "x"}));
}

TEST_CASE("separator size always matches the path count") {
  Graph g = load_grf(std::string(SUC_FIXTURE_DIR) + "/wheel4.grf").g;
  PathCount pc = disjoint_path_count(g, ids(g, {"b11"}), ids(g, {"b31"}));
  REQUIRE(!pc.infinite);
  CHECK(pc.count == static_cast<int>(pc.separator.size()));
}

TEST_CASE("overlapping sources and sinks are rejected") {
  Graph g = Graph::build({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(disjoint_path_count(g, {0}, {0}), SucError);
}
