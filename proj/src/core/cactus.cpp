#include "core/cactus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "core/flow.hpp"

namespace suc {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw SucError(Code::verify, "NonEdgeCutArtifact", msg);
}

void cassert(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

// Subdivision vertex names and the edges they stand for, in edge-list order.
struct SubdivisionPlan {
  std::vector<std::string> names;
  std::vector<EdgePair> edges;  // parallel to names; vertex ids of the input
};

SubdivisionPlan subdivision_plan(const Graph& g) {
  SubdivisionPlan plan;
  for (const auto& [u, v, mult] : g.edge_list()) {
    for (int k = 0; k < mult; ++k) {
      std::string nm = "e:" + g.name(u) + ":" + g.name(v);
      if (mult > 1) nm += ":" + std::to_string(k);
      plan.names.push_back(nm);
      plan.edges.emplace_back(u, v);
    }
  }
  return plan;
}

void reject_reserved(const Graph& g, const std::string& prefix, const std::string& what) {
  for (const auto& nm : g.names()) {
    if (nm.rfind(prefix, 0) == 0) {
      throw SucError(Code::usage, "ReservedName",
                     "vertex name '" + nm + "' collides with " + what);
    }
  }
}

// Union-find over named vertices of the unglued cactus pieces.
struct NameUF {
  std::map<std::string, int> id;
  std::vector<std::string> names;
  std::vector<int> parent;

  int add(const std::string& n) {
    auto it = id.find(n);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(names.size());
    id.emplace(n, i);
    names.push_back(n);
    parent.push_back(i);
    return i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Biconnected blocks as expanded edge lists (u, v, copy); the copy counter
// keeps parallel edges distinct so a doubled edge forms its own block.
std::vector<std::vector<std::tuple<int, int, int>>> biconnected_blocks(const Graph& g) {
  struct E {
    int u, v, copy;
  };
  std::vector<E> edges;
  std::vector<std::vector<int>> inc(g.n());
  for (const auto& [u, v, mult] : g.edge_list()) {
    for (int c = 0; c < mult; ++c) {
      inc[u].push_back(static_cast<int>(edges.size()));
      inc[v].push_back(static_cast<int>(edges.size()));
      edges.push_back({u, v, c});
    }
  }
  std::vector<int> num(g.n(), -1), low(g.n(), 0);
  std::vector<char> used(edges.size(), 0);
  std::vector<int> estack;
  std::vector<std::vector<std::tuple<int, int, int>>> blocks;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    size_t it;
  };
  for (int s = 0; s < g.n(); ++s) {
    if (num[s] != -1) continue;
    num[s] = low[s] = timer++;
    std::vector<Frame> st{{s, -1, 0}};
    while (!st.empty()) {
      Frame& fr = st.back();
      if (fr.it < inc[fr.v].size()) {
        int ei = inc[fr.v][fr.it++];
        if (ei == fr.parent_edge || used[ei]) continue;
        used[ei] = 1;
        estack.push_back(ei);
        int w = edges[ei].u == fr.v ? edges[ei].v : edges[ei].u;
        if (num[w] == -1) {
          num[w] = low[w] = timer++;
          st.push_back({w, ei, 0});
        } else {
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
        continue;
      }
      int child = fr.v, child_edge = fr.parent_edge;
      st.pop_back();
      if (st.empty()) break;
      Frame& pf = st.back();
      low[pf.v] = std::min(low[pf.v], low[child]);
      if (low[child] >= num[pf.v]) {
        std::vector<std::tuple<int, int, int>> blk;
        while (true) {
          int ei = estack.back();
          estack.pop_back();
          blk.emplace_back(edges[ei].u, edges[ei].v, edges[ei].copy);
          if (ei == child_edge) break;
        }
        blocks.push_back(std::move(blk));
      }
    }
    cassert(estack.empty(), "biconnected decomposition left unassigned edges");
  }
  return blocks;
}

// Canonical cycle form: starts at the smallest vertex and proceeds toward its
// smaller neighbour on the cycle.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
  auto mn = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), mn, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) {
    std::reverse(cyc.begin() + 1, cyc.end());
  }
  return cyc;
}

// Connected components of g with the listed edge copies removed.
std::vector<VertexSet> components_minus_edges(const Graph& g, const EdgeSet& removed) {
  std::map<EdgePair, int> drop;
  for (const EdgePair& e : removed) ++drop[e];
  std::vector<std::vector<int>> adj(g.n());
  for (const auto& [u, v, mult] : g.edge_list()) {
    auto it = drop.find({u, v});
    int rem = it == drop.end() ? 0 : it->second;
    cassert(rem <= mult, "a cactus cut removes more copies than the edge has");
    if (mult - rem > 0) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int c = static_cast<int>(out.size());
    VertexSet vs{s};
    comp[s] = c;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : adj[v]) {
        if (comp[w] != -1) continue;
        comp[w] = c;
        vs.push_back(w);
        queue.push_back(w);
      }
    }
    out.push_back(vs_sorted(vs));
  }
  return out;
}

}  // namespace

Graph barycentric_subdivide(const Graph& g) {
  reject_reserved(g, "e:", "subdivision vertex names");
  SubdivisionPlan plan = subdivision_plan(g);
  std::vector<std::string> names = g.names();
  names.insert(names.end(), plan.names.begin(), plan.names.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < plan.names.size(); ++i) {
    edges.emplace_back(g.name(plan.edges[i].first), plan.names[i]);
    edges.emplace_back(plan.names[i], g.name(plan.edges[i].second));
  }
  return Graph::build(names, edges);
}

Graph thicken(const Graph& g, const std::vector<std::string>& originals, int n) {
  if (n < 1) {
    throw SucError(Code::usage, "UsageError", "clique thickening needs n >= 1");
  }
  reject_reserved(g, "t:", "clique vertex names");
  std::set<std::string> orig;
  for (const auto& nm : originals) {
    if (!g.id_of(nm)) {
      throw SucError(Code::usage, "UnknownVertex", "thicken: unknown vertex " + nm);
    }
    orig.insert(nm);
  }
  auto reps = [&](int v) {
    std::vector<std::string> r;
    const std::string& nm = g.name(v);
    if (!orig.count(nm)) {
      r.push_back(nm);
      return r;
    }
    for (int i = 0; i <= n; ++i) r.push_back("t:" + nm + ":" + std::to_string(i));
    return r;
  };
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::string> r = reps(v);
    names.insert(names.end(), r.begin(), r.end());
    for (size_t i = 0; i < r.size(); ++i) {
      for (size_t j = i + 1; j < r.size(); ++j) edges.emplace_back(r[i], r[j]);
    }
  }
  for (const auto& [u, v, mult] : g.edge_list()) {
    for (const auto& a : reps(u)) {
      for (const auto& b : reps(v)) {
        for (int k = 0; k < mult; ++k) edges.emplace_back(a, b);
      }
    }
  }
  return Graph::build(names, edges);
}

int edge_cut_order(const Graph& g, const std::vector<EndSpec>& ends) {
  if (ends.size() < 2) {
    throw SucError(Code::usage, "UsageError", "edge cuts need at least two ends");
  }
  if (!g.connected()) {
    throw SucError(Code::parse, "DisconnectedGraph", "graph is not connected");
  }
  Graph b = barycentric_subdivide(g);
  std::vector<VertexSet> sides;
  VertexSet seen;
  for (const auto& e : ends) {
    if (e.terminals.empty()) {
      throw SucError(Code::usage, "EmptyEnd", "end " + e.name + " has no vertices");
    }
    std::vector<int> ids;
    for (const auto& t : e.terminals) {
      if (!g.id_of(t)) {
        throw SucError(Code::usage, "UnknownVertex",
                       "end " + e.name + " names unknown vertex " + t);
      }
      ids.push_back(*b.id_of(t));
    }
    VertexSet s = vs_sorted(ids);
    if (vs_intersects(s, seen)) {
      throw SucError(Code::usage, "OverlappingEnds", "end " + e.name + " overlaps another end");
    }
    seen = vs_union(seen, s);
    sides.push_back(std::move(s));
  }
  VertexSet originals;
  for (const auto& nm : g.names()) originals.push_back(*b.id_of(nm));
  originals = vs_sorted(originals);
  int best = std::numeric_limits<int>::max();
  for (size_t i = 0; i < sides.size(); ++i) {
    for (size_t j = i + 1; j < sides.size(); ++j) {
      PathCount pc = disjoint_path_count(b, sides[i], sides[j], originals);
      cassert(!pc.infinite, "two ends cannot be separated by removing edges");
      best = std::min(best, pc.count);
    }
  }
  return best;
}

Cactus edge_end_pipeline(const Graph& g, const std::vector<EndSpec>& ends, long long budget) {
  if (!g.connected()) {
    throw SucError(Code::parse, "DisconnectedGraph", "graph is not connected");
  }
  const int n = edge_cut_order(g, ends);

  // The derived graph: subdivide every edge, then blow each original vertex
  // up into a clique one larger than any cut, so removing vertices can only
  // ever mean removing edges of the input.
  SubdivisionPlan plan = subdivision_plan(g);
  Graph star_graph = thicken(barycentric_subdivide(g), g.names(), n);
  std::vector<EndSpec> star_ends;
  for (const auto& e : ends) {
    EndSpec se;
    se.name = e.name;
    for (const auto& t : e.terminals) {
      for (int i = 0; i <= n; ++i) se.terminals.push_back("t:" + t + ":" + std::to_string(i));
    }
    star_ends.push_back(std::move(se));
  }

  AugmentedGraph ag0 = attach_markers(star_graph, star_ends);
  SliceReduction sr = reduce_slices(ag0, budget);
  cassert(!sr.changed, "the thickened subdivision has slices");
  const AugmentedGraph& ag = sr.reduced;

  const int k = kappa(ag);
  cassert(k == n, "vertex cut order " + std::to_string(k) +
                      " of the thickened subdivision differs from the edge cut order " +
                      std::to_string(n));

  MincutSet ms = group_into_classes(ag, enumerate_mincuts(ag, k, budget), k,
                                    /*expect_sliceless=*/true);

  std::map<std::string, EdgePair> edge_of_name;
  for (size_t i = 0; i < plan.names.size(); ++i) {
    edge_of_name.emplace(plan.names[i], plan.edges[i]);
  }
  for (const Cut& c : ms.cuts) {
    cassert(c.total_components == 2,
            "a minimum cut of the thickened subdivision is not two-component");
    for (int v : c.vertices) {
      cassert(edge_of_name.count(ag.g.name(v)),
              "a minimum cut of the thickened subdivision uses the clique vertex " +
                  ag.g.name(v));
    }
  }

  CrossingStructure cs = crossing_structure(ms);
  std::vector<HashClass> hcs = build_hash_classes(ag, ms, cs);
  for (const HashClass& hc : hcs) {
    cassert(hc.centre.empty(), "a crossing class of the thickened subdivision has a centre");
    for (int q = 0; q < static_cast<int>(hc.q_classes.size()); ++q) {
      cassert(!hc.has_twin(q),
              "quasi-equivalent half-cuts of the thickened subdivision are not equivalent");
    }
    cassert(hc.anchors.size() == hc.edges.size(),
            "a ring of the thickened subdivision has several anchors on one edge");
    for (size_t e = 0; e < hc.edges.size(); ++e) {
      cassert(hc.edges[e].max_components == 2,
              "a ring edge of the thickened subdivision carries no corner cut");
      cassert(hc.edges[e].combo_classes.size() == 1,
              "a ring edge of the thickened subdivision carries several corner classes");
      cassert(hc.anchors[e].edge == static_cast<int>(e),
              "ring anchors of the thickened subdivision are not one per edge");
    }
  }

  Pretree pt = build_pretree(ag, ms, cs, hcs);
  const int ne = pt.element_count();
  for (const PretreeElement& el : pt.elements) {
    cassert(el.fine == el.coarse,
            "fine and coarse partitions of the thickened subdivision differ");
    if (!el.is_crossing) {
      cassert(el.fine.block_count() == 2,
              "an isolated class of the thickened subdivision is not two-sided");
    }
  }

  auto pid_of = [&](int i) {
    const PretreeElement& el = pt.elements[i];
    return el.is_crossing ? hcs[el.crossing_index].member_classes.front() : el.class_id;
  };
  auto vname = [&](int i, int block) {
    return "v:" + std::to_string(pid_of(i)) + ":" + std::to_string(block);
  };

  // Three mutually adjacent isolated classes whose partitions are the three
  // two-block coarsenings of a single tripartition describe three edge
  // bundles meeting pairwise; they merge into one triangle of the cactus
  // instead of three separate bundles hanging off a shared junction.
  std::vector<int> all_ends(ag.end_count());
  std::iota(all_ends.begin(), all_ends.end(), 0);
  struct Trio {
    int x, y, z;     // elements; z carries the {X+Y | Z} partition
    int bx, by, bz;  // the outward fine block of each
  };
  std::vector<Trio> trios;
  std::vector<int> trio_of(ne, -1);
  for (const auto& star : pt.stars) {
    std::vector<int> iso;
    for (int i : star) {
      if (!pt.elements[i].is_crossing) iso.push_back(i);
    }
    const int m = static_cast<int>(iso.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          int tri[3] = {iso[a], iso[b], iso[c]};
          if (trio_of[tri[0]] >= 0 || trio_of[tri[1]] >= 0 || trio_of[tri[2]] >= 0) continue;
          bool matched = false;
          for (int zi = 0; zi < 3 && !matched; ++zi) {
            int z = tri[zi], x = tri[(zi + 1) % 3], y = tri[(zi + 2) % 3];
            for (int bx = 0; bx < 2 && !matched; ++bx) {
              for (int by = 0; by < 2 && !matched; ++by) {
                const auto& blk_x = pt.elements[x].fine.blocks[bx];
                const auto& blk_y = pt.elements[y].fine.blocks[by];
                if (vs_intersects(blk_x, blk_y)) continue;
                std::vector<int> xy = vs_union(blk_x, blk_y);
                std::vector<int> rest = vs_difference(all_ends, xy);
                if (rest.empty()) continue;
                if (!(pt.elements[z].fine == EndPartition::of_blocks({xy, rest}))) continue;
                int bz = pt.elements[z].fine.block_of(rest.front());
                int t = static_cast<int>(trios.size());
                trios.push_back({x, y, z, bx, by, bz});
                trio_of[x] = trio_of[y] = trio_of[z] = t;
                matched = true;
              }
            }
          }
        }
      }
    }
  }

  // Emit the pieces: a cycle per crossing class, a bridge or doubled edge per
  // isolated class, a triangle per trio, and remember which cactus edges
  // realize each cut class.
  std::vector<std::vector<std::string>> vertex_of_block(ne);
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::vector<std::string>> raw_cycles;
  std::vector<std::pair<std::string, std::string>> raw_bridges;
  std::map<int, std::vector<std::pair<std::string, std::string>>> realized;
  auto assign = [&](int cls, std::vector<std::pair<std::string, std::string>> cut) {
    cassert(!realized.count(cls), "cut class " + std::to_string(cls) +
                                      " is realized at two places of the cactus");
    realized.emplace(cls, std::move(cut));
  };

  for (int i = 0; i < ne; ++i) {
    const PretreeElement& el = pt.elements[i];
    vertex_of_block[i].assign(el.fine.block_count(), "");
    if (trio_of[i] >= 0) continue;
    if (!el.is_crossing) {
      std::string v0 = vname(i, 0), v1 = vname(i, 1);
      vertex_of_block[i][0] = v0;
      vertex_of_block[i][1] = v1;
      std::vector<std::pair<std::string, std::string>> cut{{v0, v1}};
      raw_edges.emplace_back(v0, v1);
      if (n % 2 == 0) {
        raw_edges.emplace_back(v0, v1);
        cut.emplace_back(v0, v1);
        raw_cycles.push_back({v0, v1});
      } else {
        raw_bridges.emplace_back(v0, v1);
      }
      assign(el.class_id, std::move(cut));
      continue;
    }
    const HashClass& hc = hcs[el.crossing_index];
    const int r = static_cast<int>(hc.edges.size());
    cassert(el.fine.block_count() == r, "a ring has more fine blocks than edges");
    std::vector<int> block_of_edge(r, -1);
    for (int e = 0; e < r; ++e) {
      int bi = -1;
      for (int bb = 0; bb < el.fine.block_count(); ++bb) {
        if (el.fine.blocks[bb] == hc.anchors[e].block) {
          bi = bb;
          break;
        }
      }
      cassert(bi >= 0, "a ring anchor block is not a fine block");
      block_of_edge[e] = bi;
      vertex_of_block[i][bi] = vname(i, bi);
    }
    // The anchors become the cycle's vertices; the cactus edge for cycle
    // position t joins the anchors of the two ring edges flanking it.
    std::vector<std::pair<std::string, std::string>> pos_edge(r);
    std::vector<std::string> cyc;
    for (int t = 0; t < r; ++t) {
      const std::string& a = vertex_of_block[i][block_of_edge[(t + r - 1) % r]];
      const std::string& b = vertex_of_block[i][block_of_edge[t]];
      pos_edge[t] = {a, b};
      raw_edges.emplace_back(a, b);
      cyc.push_back(b);
    }
    raw_cycles.push_back(std::move(cyc));
    std::vector<int> pos_of_q(hc.q_classes.size(), -1);
    for (int t = 0; t < r; ++t) pos_of_q[hc.cycle_order[t]] = t;
    std::map<int, std::pair<int, int>> member_pos;
    for (size_t mc = 0; mc < hc.member_cuts.size(); ++mc) {
      int cls = ms.class_of_cut[hc.member_cuts[mc]];
      int p1 = pos_of_q[hc.q_of_half[hc.cut_halves[mc].first]];
      int p2 = pos_of_q[hc.q_of_half[hc.cut_halves[mc].second]];
      std::pair<int, int> pr{std::min(p1, p2), std::max(p1, p2)};
      auto it = member_pos.find(cls);
      if (it == member_pos.end()) {
        member_pos.emplace(cls, pr);
      } else {
        cassert(it->second == pr, "equivalent member cuts use different ring positions");
      }
    }
    for (const auto& [cls, pr] : member_pos) {
      assign(cls, {pos_edge[pr.first], pos_edge[pr.second]});
    }
    for (int e = 0; e < r; ++e) {
      assign(hc.edges[e].combo_classes.front(), {pos_edge[e], pos_edge[(e + 1) % r]});
    }
  }

  for (const Trio& t : trios) {
    std::string wx = vname(t.x, t.bx), wy = vname(t.y, t.by), wz = vname(t.z, t.bz);
    vertex_of_block[t.x][t.bx] = wx;
    vertex_of_block[t.y][t.by] = wy;
    vertex_of_block[t.z][t.bz] = wz;
    raw_edges.emplace_back(wx, wy);
    raw_edges.emplace_back(wx, wz);
    raw_edges.emplace_back(wy, wz);
    raw_cycles.push_back({wx, wy, wz});
    assign(pt.elements[t.x].class_id, {{wx, wy}, {wx, wz}});
    assign(pt.elements[t.y].class_id, {{wx, wy}, {wy, wz}});
    assign(pt.elements[t.z].class_id, {{wx, wz}, {wy, wz}});
  }
  for (int cls = 0; cls < static_cast<int>(ms.classes.size()); ++cls) {
    cassert(realized.count(cls),
            "cut class " + std::to_string(cls) + " has no cactus realization");
  }

  // Glue: adjacent elements identify the vertices of the fine blocks each
  // divides in the other.  Directions interior to a merged trio carry no
  // vertex and must never be approached.
  NameUF uf;
  for (int i = 0; i < ne; ++i) {
    for (const std::string& v : vertex_of_block[i]) {
      if (!v.empty()) uf.add(v);
    }
  }
  auto vertex_of = [&](int i, int block) -> const std::string& {
    const std::string& v = vertex_of_block[i][block];
    cassert(!v.empty(), "element " + pt.elements[i].label +
                            " is approached through the interior of a merged triple");
    return v;
  };
  for (const auto& star : pt.stars) {
    for (size_t a = 0; a < star.size(); ++a) {
      for (size_t b = a + 1; b < star.size(); ++b) {
        int x = star[a], y = star[b];
        if (trio_of[x] >= 0 && trio_of[x] == trio_of[y]) continue;
        uf.unite(uf.add(vertex_of(x, pt.div_fine[y][x])),
                 uf.add(vertex_of(y, pt.div_fine[x][y])));
      }
    }
  }
  std::map<int, std::string> root_name;
  for (int v = 0; v < static_cast<int>(uf.names.size()); ++v) {
    int r = uf.find(v);
    auto it = root_name.find(r);
    if (it == root_name.end() || uf.names[v] < it->second) root_name[r] = uf.names[v];
  }
  auto resolved = [&](const std::string& nm) { return root_name.at(uf.find(uf.id.at(nm))); };

  // The end map: an end split off alone by some class sits at that vertex;
  // any other end sits at the junction all its neighbouring elements agree
  // on, exactly as if a cut isolating it were glued there.
  std::map<std::string, std::string> f;
  for (int e = 0; e < ag.end_count(); ++e) {
    std::vector<int> want{e};
    std::string vtx;
    for (int i = 0; i < ne; ++i) {
      const EndPartition& fine = pt.elements[i].fine;
      for (int b = 0; b < fine.block_count(); ++b) {
        if (fine.blocks[b] != want) continue;
        cassert(vtx.empty(), "end " + ag.end_names[e] + " is split off by two elements");
        vtx = resolved(vertex_of(i, b));
      }
    }
    if (vtx.empty()) {
      for (int y = 0; y < ne; ++y) {
        bool adj = true;
        for (int z = 0; z < ne && adj; ++z) {
          if (z == y) continue;
          adj = pt.div_fine[y][z] == pt.elements[z].fine.block_of(e);
        }
        if (!adj) continue;
        std::string r = resolved(vertex_of(y, pt.elements[y].fine.block_of(e)));
        cassert(vtx.empty() || vtx == r,
                "end " + ag.end_names[e] + " is prescribed two junctions");
        vtx = r;
      }
      cassert(!vtx.empty(), "end " + ag.end_names[e] + " has no cactus vertex");
    }
    f[ag.end_names[e]] = vtx;
  }

  // Assemble the multigraph and check it is a cactus: connected, and every
  // biconnected block a single edge or a simple cycle.
  std::set<std::string> nameset;
  for (int v = 0; v < static_cast<int>(uf.names.size()); ++v) {
    nameset.insert(root_name.at(uf.find(v)));
  }
  std::vector<std::pair<std::string, std::string>> final_edges;
  for (const auto& [a, b] : raw_edges) {
    std::string ra = resolved(a), rb = resolved(b);
    cassert(ra != rb, "gluing identified both endpoints of the cactus edge " + a + "--" + b);
    final_edges.emplace_back(std::move(ra), std::move(rb));
  }
  Cactus cac;
  cac.graph = Graph::build({nameset.begin(), nameset.end()}, final_edges);
  cassert(cac.graph.connected(), "the cactus is not connected");

  std::vector<EdgePair> bridges;
  std::vector<std::vector<int>> cycles;
  for (const auto& blk : biconnected_blocks(cac.graph)) {
    if (blk.size() == 1) {
      auto [u, v, copy] = blk.front();
      bridges.emplace_back(std::min(u, v), std::max(u, v));
      continue;
    }
    std::map<int, std::vector<int>> at;  // vertex -> positions in blk
    for (size_t i = 0; i < blk.size(); ++i) {
      at[std::get<0>(blk[i])].push_back(static_cast<int>(i));
      at[std::get<1>(blk[i])].push_back(static_cast<int>(i));
    }
    cassert(at.size() == blk.size(), "a cactus block is neither an edge nor a cycle");
    for (const auto& [v, pos] : at) {
      cassert(pos.size() == 2, "a cactus block vertex has degree other than two");
    }
    std::vector<char> eused(blk.size(), 0);
    int start = at.begin()->first, cur = start;
    std::vector<int> cyc{start};
    for (size_t step = 0; step < blk.size(); ++step) {
      int best_e = -1, best_w = std::numeric_limits<int>::max();
      for (int pos : at[cur]) {
        if (eused[pos]) continue;
        int w = std::get<0>(blk[pos]) == cur ? std::get<1>(blk[pos]) : std::get<0>(blk[pos]);
        if (w < best_w) {
          best_w = w;
          best_e = pos;
        }
      }
      cassert(best_e >= 0, "a cactus block does not close into one cycle");
      eused[best_e] = 1;
      cur = best_w;
      if (step + 1 < blk.size()) cyc.push_back(cur);
    }
    cassert(cur == start, "a cactus block does not close into one cycle");
    cycles.push_back(canonical_cycle(cyc));
  }
  std::sort(bridges.begin(), bridges.end());
  std::sort(cycles.begin(), cycles.end());

  // The derived shape must be exactly the emitted pieces after gluing.
  {
    std::vector<EdgePair> want_bridges;
    for (const auto& [a, b] : raw_bridges) {
      int u = *cac.graph.id_of(resolved(a)), v = *cac.graph.id_of(resolved(b));
      want_bridges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(want_bridges.begin(), want_bridges.end());
    cassert(want_bridges == bridges, "cactus bridges differ from the emitted pieces");
    std::vector<std::vector<int>> want_cycles;
    for (const auto& rc : raw_cycles) {
      std::vector<int> ids;
      for (const auto& nm : rc) ids.push_back(*cac.graph.id_of(resolved(nm)));
      want_cycles.push_back(canonical_cycle(ids));
    }
    std::sort(want_cycles.begin(), want_cycles.end());
    cassert(want_cycles == cycles, "cactus cycles differ from the emitted pieces");
  }

  // Minimal edge cuts of a cactus: every bridge, and every pair of edges on
  // one cycle.  The realization map must hit each exactly once.
  std::vector<EdgeSet> cut_sets;
  for (const EdgePair& b : bridges) cut_sets.push_back({b});
  for (const auto& cyc : cycles) {
    const int L = static_cast<int>(cyc.size());
    std::vector<EdgePair> ce(L);
    for (int i = 0; i < L; ++i) {
      int u = cyc[i], v = cyc[(i + 1) % L];
      ce[i] = {std::min(u, v), std::max(u, v)};
    }
    for (int i = 0; i < L; ++i) {
      for (int j = i + 1; j < L; ++j) {
        EdgeSet es{ce[i], ce[j]};
        std::sort(es.begin(), es.end());
        cut_sets.push_back(std::move(es));
      }
    }
  }
  std::sort(cut_sets.begin(), cut_sets.end());
  cassert(std::adjacent_find(cut_sets.begin(), cut_sets.end()) == cut_sets.end(),
          "two minimal cactus cuts coincide");
  std::map<EdgeSet, int> cut_index;
  for (size_t i = 0; i < cut_sets.size(); ++i) {
    cut_index.emplace(cut_sets[i], static_cast<int>(i));
  }
  cac.cuts.resize(cut_sets.size());
  for (size_t i = 0; i < cut_sets.size(); ++i) cac.cuts[i].edges = cut_sets[i];
  cac.g_of_class.assign(ms.classes.size(), -1);
  std::vector<char> hit(cut_sets.size(), 0);
  for (int cls = 0; cls < static_cast<int>(ms.classes.size()); ++cls) {
    EdgeSet es;
    for (const auto& [a, b] : realized.at(cls)) {
      int u = *cac.graph.id_of(resolved(a)), v = *cac.graph.id_of(resolved(b));
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    auto it = cut_index.find(es);
    cassert(it != cut_index.end(), "the realization of cut class " + std::to_string(cls) +
                                       " is not a minimal cactus cut");
    cassert(!hit[it->second], "two cut classes realize the same cactus cut");
    hit[it->second] = 1;
    cac.g_of_class[cls] = it->second;
  }
  cassert(std::find(hit.begin(), hit.end(), 0) == hit.end(),
          "a minimal cactus cut realizes no cut class");

  // Separation correspondence: removing the image cut splits the cactus in
  // two, and the sides partition the ends exactly as the class does.
  for (int cls = 0; cls < static_cast<int>(ms.classes.size()); ++cls) {
    const EdgeSet& es = cac.cuts[cac.g_of_class[cls]].edges;
    std::vector<VertexSet> comps = components_minus_edges(cac.graph, es);
    cassert(comps.size() == 2, "a minimal cactus cut does not split the cactus in two");
    std::vector<std::vector<int>> blocks(comps.size());
    for (int e = 0; e < ag.end_count(); ++e) {
      int fv = *cac.graph.id_of(f.at(ag.end_names[e]));
      for (size_t c = 0; c < comps.size(); ++c) {
        if (vs_contains(comps[c], fv)) {
          blocks[c].push_back(e);
          break;
        }
      }
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 blocks.end());
    cassert(blocks.size() >= 2, "a minimal cactus cut separates no ends");
    EndPartition part = EndPartition::of_blocks(blocks);
    cassert(part == ms.classes[cls].partition,
            "the cactus cut of class " + std::to_string(cls) +
                " induces a different end partition");
    cac.cuts[cac.g_of_class[cls]].partition = part;
  }

  // Pull every cut of every class back to an edge set of the input.
  cac.edge_cuts_of_class.resize(ms.classes.size());
  for (int cls = 0; cls < static_cast<int>(ms.classes.size()); ++cls) {
    for (int cut_id : ms.classes[cls].cut_ids) {
      EdgeSet es;
      for (int v : ms.cuts[cut_id].vertices) es.push_back(edge_of_name.at(ag.g.name(v)));
      std::sort(es.begin(), es.end());
      cac.edge_cuts_of_class[cls].push_back(std::move(es));
    }
  }

  cac.cycles = std::move(cycles);
  cac.bridges = std::move(bridges);
  cac.end_names = ag.end_names;
  cac.f = std::move(f);
  cac.kappa_edge = n;
  return cac;
}

Cactus finite_edge_pipeline(const Graph& g, long long budget) {
  std::vector<EndSpec> ends;
  for (const auto& nm : g.names()) ends.push_back({nm, {nm}});
  return edge_end_pipeline(g, ends, budget);
}

}  // namespace suc
