#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/cactus.hpp"
#include "core/oracle.hpp"

using namespace suc;

namespace {

Graph make(std::vector<std::string> names,
           std::vector<std::pair<std::string, std::string>> edges) {
  return Graph::build(std::move(names), std::move(edges));
}

std::string kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SucError& e) {
    return e.kind;
  }
  return "";
}

// End partition of one class's cactus cut keyed by end names, with the
// blocks themselves in lexicographic order, e.g. "a,b|c".
std::string part_of(const Cactus& c, int cls) {
  const EndPartition& p = c.cuts[c.g_of_class[cls]].partition;
  std::vector<std::string> blocks;
  for (const auto& blk : p.blocks) {
    std::string b;
    for (int e : blk) {
      if (!b.empty()) b += ",";
      b += c.end_names[e];
    }
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += "|";
    out += b;
  }
  return out;
}

std::set<std::string> all_parts(const Cactus& c) {
  std::set<std::string> out;
  for (size_t cls = 0; cls < c.g_of_class.size(); ++cls) out.insert(part_of(c, static_cast<int>(cls)));
  return out;
}

// Independent re-derivation of the separation property from public fields:
// removing the image cut's edges must split the ends exactly as recorded.
void check_separation(const Cactus& c) {
  for (size_t cls = 0; cls < c.g_of_class.size(); ++cls) {
    const CactusCut& cut = c.cuts[c.g_of_class[cls]];
    std::map<EdgePair, int> drop;
    for (const EdgePair& e : cut.edges) ++drop[e];
    std::vector<std::vector<int>> adj(c.graph.n());
    for (const auto& [u, v, mult] : c.graph.edge_list()) {
      int rem = drop.count({u, v}) ? drop[{u, v}] : 0;
      REQUIRE(rem <= mult);
      if (mult - rem > 0) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
    std::vector<int> comp(c.graph.n(), -1);
    int nc = 0;
    for (int s = 0; s < c.graph.n(); ++s) {
      if (comp[s] != -1) continue;
      comp[s] = nc;
      std::vector<int> q{s};
      while (!q.empty()) {
        int v = q.back();
        q.pop_back();
        for (int w : adj[v]) {
          if (comp[w] == -1) {
            comp[w] = nc;
            q.push_back(w);
          }
        }
      }
      ++nc;
    }
    REQUIRE(nc == 2);
    std::vector<std::vector<int>> blocks(nc);
    for (size_t e = 0; e < c.end_names.size(); ++e) {
      int fv = *c.graph.id_of(c.f.at(c.end_names[e]));
      blocks[comp[fv]].push_back(static_cast<int>(e));
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 blocks.end());
    REQUIRE(blocks.size() == 2);
    CHECK(EndPartition::of_blocks(blocks) == cut.partition);
  }
}

// Two cactus cycles may share at most one vertex, and no cycle vertex set
// repeats; bridges lie on no cycle.
void check_cactus_shape(const Cactus& c) {
  std::vector<std::set<int>> vsets;
  for (const auto& cyc : c.cycles) vsets.emplace_back(cyc.begin(), cyc.end());
  for (size_t i = 0; i < vsets.size(); ++i) {
    for (size_t j = i + 1; j < vsets.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(inter));
      CHECK(inter.size() <= 1);
    }
  }
  for (const auto& [u, v] : c.bridges) {
    for (const auto& vs : vsets) {
      CHECK(!(vs.count(u) && vs.count(v)));
    }
  }
  // Every edge copy is accounted for: bridges once, cycle edges once.
  std::map<EdgePair, int> want;
  for (const auto& [u, v] : c.bridges) ++want[{std::min(u, v), std::max(u, v)}];
  for (const auto& cyc : c.cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      ++want[{std::min(u, v), std::max(u, v)}];
    }
  }
  std::map<EdgePair, int> have;
  for (const auto& [u, v, mult] : c.graph.edge_list()) have[{u, v}] = mult;
  CHECK(want == have);
}

// Sparse random multigraph: a tree plus a few extra (possibly parallel) edges.
Graph sparse_graph(std::mt19937_64& rng, int extra_lo, int extra_hi) {
  int nv = 4 + static_cast<int>(rng() % 5);
  std::vector<std::string> names;
  for (int i = 0; i < nv; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < nv; ++i) edges.emplace_back(names[rng() % i], names[i]);
  int extra = extra_lo + static_cast<int>(rng() % (extra_hi - extra_lo + 1));
  for (int t = 0; t < extra; ++t) {
    int u = static_cast<int>(rng() % nv), v = static_cast<int>(rng() % nv);
    if (u == v) continue;
    edges.emplace_back(names[u], names[v]);
  }
  return Graph::build(names, edges);
}

}  // namespace

TEST_CASE("barycentric subdivision puts one vertex on every edge copy") {
  SUBCASE("triangle becomes a six-cycle") {
    Graph b = barycentric_subdivide(make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
    CHECK(b.n() == 6);
    CHECK(b.edge_count() == 6);
    for (int v = 0; v < b.n(); ++v) CHECK(b.degree(v) == 2);
    CHECK(b.id_of("e:a:b").has_value());
    CHECK(b.id_of("e:a:c").has_value());
    CHECK(b.id_of("e:b:c").has_value());
    CHECK(b.adjacent(*b.id_of("a"), *b.id_of("e:a:b")));
    CHECK(!b.adjacent(*b.id_of("a"), *b.id_of("b")));
  }
  SUBCASE("a doubled edge becomes a four-cycle with numbered copies") {
    Graph b = barycentric_subdivide(make({"a", "b"}, {{"a", "b"}, {"a", "b"}}));
    CHECK(b.n() == 4);
    CHECK(b.id_of("e:a:b:0").has_value());
    CHECK(b.id_of("e:a:b:1").has_value());
    CHECK(b.multiplicity(*b.id_of("a"), *b.id_of("e:a:b:0")) == 1);
    CHECK(!b.adjacent(*b.id_of("a"), *b.id_of("b")));
  }
  SUBCASE("the result is always simple") {
    Graph b = barycentric_subdivide(make({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}, {"b", "c"}}));
    for (const auto& [u, v, mult] : b.edge_list()) CHECK(mult == 1);
  }
  SUBCASE("subdivision vertex names are reserved") {
    CHECK(kind_of([] {
            barycentric_subdivide(make({"e:x", "y"}, {{"e:x", "y"}}));
          }) == "ReservedName");
  }
}

TEST_CASE("clique thickening replaces listed vertices by cliques") {
  Graph c4 = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  Graph b = barycentric_subdivide(c4);  // an eight-cycle
  CHECK(b.n() == 8);
  Graph t = thicken(b, {"a", "b", "c", "d"}, 2);
  CHECK(t.n() == 16);  // four cliques of three plus four edge vertices
  CHECK(t.id_of("t:a:0").has_value());
  CHECK(t.id_of("t:a:2").has_value());
  CHECK(!t.id_of("a").has_value());
  // Clique members are pairwise adjacent and each inherits both edge vertices.
  CHECK(t.adjacent(*t.id_of("t:a:0"), *t.id_of("t:a:1")));
  CHECK(t.adjacent(*t.id_of("t:a:0"), *t.id_of("e:a:b")));
  CHECK(t.adjacent(*t.id_of("t:a:2"), *t.id_of("e:a:b")));
  CHECK(t.degree(*t.id_of("e:a:b")) == 6);

  CHECK(kind_of([&] { thicken(b, {"nope"}, 2); }) == "UnknownVertex");
  CHECK(kind_of([&] { thicken(b, {"a"}, 0); }) == "UsageError");
  CHECK(kind_of([&] { thicken(make({"t:x", "y"}, {{"t:x", "y"}}), {"y"}, 1); }) == "ReservedName");
}

TEST_CASE("edge cut order agrees with the brute-force oracle") {
  auto brute_all = [](const Graph& g) {
    std::vector<VertexSet> sides;
    for (int v = 0; v < g.n(); ++v) sides.push_back({v});
    return brute_edge_kappa(g, sides);
  };
  auto order_all = [](const Graph& g) {
    std::vector<EndSpec> ends;
    for (const auto& nm : g.names()) ends.push_back({nm, {nm}});
    return edge_cut_order(g, ends);
  };
  Graph tree = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  CHECK(order_all(tree) == 1);
  CHECK(brute_all(tree) == 1);
  Graph c4 = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  CHECK(order_all(c4) == 2);
  CHECK(brute_all(c4) == 2);
  Graph k4 = make({"a", "b", "c", "d"},
                  {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(order_all(k4) == 3);
  CHECK(brute_all(k4) == 3);
  Graph multi = make({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}, {"b", "c"}, {"b", "c"}, {"a", "c"}});
  CHECK(order_all(multi) == 3);
  CHECK(brute_all(multi) == 3);

  // Between two named ends the order can exceed the global minimum.
  Graph dumbbell = make({"a1", "a2", "m", "b1", "b2"},
                        {{"a1", "a2"}, {"a1", "m"}, {"a2", "m"}, {"m", "b1"}, {"m", "b2"}, {"b1", "b2"}});
  CHECK(edge_cut_order(dumbbell, {{"A", {"a1", "a2"}}, {"B", {"b1", "b2"}}}) == 2);
  CHECK(order_all(dumbbell) == 2);

  CHECK(kind_of([&] { edge_cut_order(c4, {{"A", {"a"}}}); }) == "UsageError");
  CHECK(kind_of([&] { edge_cut_order(c4, {{"A", {"a"}}, {"B", {"q"}}}); }) == "UnknownVertex");
  CHECK(kind_of([&] { edge_cut_order(c4, {{"A", {"a"}}, {"B", {"a", "b"}}}); }) == "OverlappingEnds");
  CHECK(kind_of([&] { edge_cut_order(c4, {{"A", {"a"}}, {"B", {}}}); }) == "EmptyEnd");
  CHECK(kind_of([&] {
          edge_cut_order(make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
                         {{"A", {"a"}}, {"B", {"c"}}});
        }) == "DisconnectedGraph");
}

TEST_CASE("a bridge between two blobs reduces to a single bridge") {
  Graph g = make({"a1", "a2", "a3", "b1", "b2", "b3"},
                 {{"a1", "a2"}, {"a1", "a3"}, {"a2", "a3"},
                  {"b1", "b2"}, {"b1", "b3"}, {"b2", "b3"}, {"a1", "b1"}});
  Cactus c = edge_end_pipeline(g, {{"A", {"a2", "a3"}}, {"B", {"b2", "b3"}}});
  CHECK(c.kappa_edge == 1);
  CHECK(c.graph.n() == 2);
  CHECK(c.bridges.size() == 1);
  CHECK(c.cycles.empty());
  CHECK(c.g_of_class.size() == 1);
  CHECK(c.cuts.size() == 1);
  CHECK(c.f.at("A") != c.f.at("B"));
  CHECK(part_of(c, 0) == "A|B");
  REQUIRE(c.edge_cuts_of_class[0].size() == 1);
  int a1 = *g.id_of("a1"), b1 = *g.id_of("b1");
  CHECK(c.edge_cuts_of_class[0][0] == EdgeSet{{std::min(a1, b1), std::max(a1, b1)}});
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("a doubled edge reduces to a two-cycle") {
  Cactus c = edge_end_pipeline(make({"a", "b"}, {{"a", "b"}, {"a", "b"}}),
                               {{"A", {"a"}}, {"B", {"b"}}});
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 2);
  CHECK(c.graph.edge_count() == 2);
  CHECK(c.bridges.empty());
  REQUIRE(c.cycles.size() == 1);
  CHECK(c.cycles[0].size() == 2);
  CHECK(c.g_of_class.size() == 1);
  // The one cut removes both copies.
  REQUIRE(c.cuts.size() == 1);
  CHECK(c.cuts[0].edges.size() == 2);
  CHECK(c.cuts[0].edges[0] == c.cuts[0].edges[1]);
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("equivalent cuts along a doubled path share one two-cycle") {
  Graph g = make({"a", "m", "b"}, {{"a", "m"}, {"a", "m"}, {"m", "b"}, {"m", "b"}});
  Cactus c = edge_end_pipeline(g, {{"A", {"a"}}, {"B", {"b"}}});
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 2);
  CHECK(c.g_of_class.size() == 1);  // both cuts are equivalent
  REQUIRE(c.edge_cuts_of_class[0].size() == 2);
  int a = *g.id_of("a"), m = *g.id_of("m"), b = *g.id_of("b");
  EdgeSet am{{std::min(a, m), std::max(a, m)}, {std::min(a, m), std::max(a, m)}};
  EdgeSet mb{{std::min(m, b), std::max(m, b)}, {std::min(m, b), std::max(m, b)}};
  std::vector<EdgeSet> got = c.edge_cuts_of_class[0];
  std::sort(got.begin(), got.end());
  std::vector<EdgeSet> want{am, mb};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  check_separation(c);
}

TEST_CASE("a square keeps its square cactus") {
  Graph g = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 4);
  CHECK(c.bridges.empty());
  REQUIRE(c.cycles.size() == 1);
  CHECK(c.cycles[0].size() == 4);
  CHECK(c.g_of_class.size() == 6);  // four corner splits and two opposite pairs
  CHECK(c.cuts.size() == 6);
  // Each input vertex sits on its own cactus vertex.
  std::set<std::string> images;
  for (const auto& nm : g.names()) images.insert(c.f.at(nm));
  CHECK(images.size() == 4);
  CHECK(all_parts(c) == std::set<std::string>{"a|b,c,d", "a,c,d|b", "a,b,d|c", "a,b,c|d",
                                              "a,b|c,d", "a,d|b,c"});
  // Neighbours on the square stay neighbours on the cactus.
  for (const auto& [u, v, mult] : g.edge_list()) {
    CHECK(c.graph.adjacent(*c.graph.id_of(c.f.at(g.name(u))), *c.graph.id_of(c.f.at(g.name(v)))));
  }
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("a triangle merges its three bundles into one cycle") {
  Graph g = make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 3);
  CHECK(c.graph.edge_count() == 3);
  CHECK(c.bridges.empty());
  REQUIRE(c.cycles.size() == 1);
  CHECK(c.cycles[0].size() == 3);
  CHECK(c.g_of_class.size() == 3);
  std::set<std::string> images{c.f.at("a"), c.f.at("b"), c.f.at("c")};
  CHECK(images.size() == 3);
  CHECK(all_parts(c) == std::set<std::string>{"a|b,c", "a,c|b", "a,b|c"});
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("two triangles sharing a vertex give two cycles sharing a vertex") {
  Graph g = make({"a", "b", "c", "d", "e"},
                 {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 5);
  CHECK(c.bridges.empty());
  REQUIRE(c.cycles.size() == 2);
  CHECK(c.cycles[0].size() == 3);
  CHECK(c.cycles[1].size() == 3);
  std::set<int> s0(c.cycles[0].begin(), c.cycles[0].end());
  std::vector<int> shared;
  for (int v : c.cycles[1]) {
    if (s0.count(v)) shared.push_back(v);
  }
  REQUIRE(shared.size() == 1);
  // The shared cactus vertex carries the shared input vertex.
  CHECK(c.f.at("c") == c.graph.name(shared[0]));
  CHECK(c.g_of_class.size() == 6);
  CHECK(all_parts(c) ==
        std::set<std::string>{"a|b,c,d,e", "a,c,d,e|b", "a,b,c,e|d", "a,b,c,d|e",
                              "a,b|c,d,e", "a,b,c|d,e"});
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("a chain of doubled edges gives two-cycles sharing junctions") {
  Graph g = make({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}, {"b", "c"}, {"b", "c"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 2);
  CHECK(c.graph.n() == 3);
  CHECK(c.bridges.empty());
  REQUIRE(c.cycles.size() == 2);
  CHECK(c.cycles[0].size() == 2);
  CHECK(c.cycles[1].size() == 2);
  CHECK(c.g_of_class.size() == 2);
  // The middle vertex is the junction of the two two-cycles.
  int mid = *c.graph.id_of(c.f.at("b"));
  CHECK(c.graph.degree(mid) == 4);
  CHECK(c.f.at("a") != c.f.at("b"));
  CHECK(c.f.at("b") != c.f.at("c"));
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("odd order forbids cycles: the complete graph on four vertices is a star") {
  Graph g = make({"a", "b", "c", "d"},
                 {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 3);
  CHECK(c.graph.n() == 5);
  CHECK(c.cycles.empty());
  CHECK(c.bridges.size() == 4);
  CHECK(c.g_of_class.size() == 4);
  // Four leaves carry the inputs; the hub carries nothing.
  std::set<std::string> images;
  for (const auto& nm : g.names()) images.insert(c.f.at(nm));
  CHECK(images.size() == 4);
  for (int v = 0; v < c.graph.n(); ++v) {
    if (c.graph.degree(v) == 4) CHECK(!images.count(c.graph.name(v)));
  }
  CHECK(all_parts(c) == std::set<std::string>{"a|b,c,d", "a,c,d|b", "a,b,d|c", "a,b,c|d"});
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("a star stays a star of bridges") {
  Graph g = make({"m", "x", "y", "z"}, {{"m", "x"}, {"m", "y"}, {"m", "z"}});
  Cactus c = finite_edge_pipeline(g);
  CHECK(c.kappa_edge == 1);
  CHECK(c.graph.n() == 4);
  CHECK(c.cycles.empty());
  CHECK(c.bridges.size() == 3);
  CHECK(c.g_of_class.size() == 3);
  // The hub maps to the cactus hub.
  int hub = *c.graph.id_of(c.f.at("m"));
  CHECK(c.graph.degree(hub) == 3);
  check_separation(c);
  check_cactus_shape(c);
}

TEST_CASE("pipelines reject reserved vertex names and disconnected input") {
  CHECK(kind_of([] {
          finite_edge_pipeline(make({"e:x", "y"}, {{"e:x", "y"}}));
        }) == "ReservedName");
  CHECK(kind_of([] {
          finite_edge_pipeline(make({"t:x", "y"}, {{"t:x", "y"}}));
        }) == "ReservedName");
  CHECK(kind_of([] {
          edge_end_pipeline(make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
                            {{"A", {"a"}}, {"B", {"c"}}});
        }) == "DisconnectedGraph");
}

TEST_CASE("random sparse graphs match the brute-force edge oracle") {
  int done = 0;
  for (int seed = 1; done < 50; ++seed) {
    std::mt19937_64 rng(seed);
    Graph g = sparse_graph(rng, 0, 4);
    bool finite_mode = seed % 2 == 0;
    std::vector<EndSpec> ends;
    std::vector<VertexSet> sides;
    if (finite_mode) {
      for (const auto& nm : g.names()) {
        ends.push_back({nm, {nm}});
        sides.push_back({*g.id_of(nm)});
      }
    } else {
      int ne = 2 + static_cast<int>(rng() % 2);
      std::vector<int> perm(g.n());
      for (int i = 0; i < g.n(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < ne; ++i) {
        ends.push_back({std::string("E") + std::to_string(i), {g.name(perm[i])}});
        sides.push_back({perm[i]});
      }
    }
    CAPTURE(seed);
    Cactus c = edge_end_pipeline(g, ends);
    CHECK(c.kappa_edge == brute_edge_kappa(g, sides));
    std::vector<EdgeSet> mine;
    for (const auto& lst : c.edge_cuts_of_class) {
      for (const auto& es : lst) mine.push_back(es);
    }
    size_t raw = mine.size();
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    CHECK(mine.size() == raw);  // no two classes or cuts pull back alike
    std::vector<EdgeSet> brute = brute_edge_mincuts(g, sides);
    std::sort(brute.begin(), brute.end());
    CHECK(mine == brute);
    check_separation(c);
    check_cactus_shape(c);
    ++done;
  }
  CHECK(done == 50);
}
