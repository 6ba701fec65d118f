#include "core/succulent_build.hpp"

#include <algorithm>
#include <set>

namespace suc {

namespace {

[[noreturn]] void fail(const std::string& kind, const std::string& msg) {
  throw SucError(Code::verify, kind, msg);
}

void vassert(bool ok, const std::string& msg) {
  if (!ok) fail("VerificationFailed", msg);
}

std::string join_ends(const AugmentedGraph& ag, const std::vector<int>& ends) {
  std::string out;
  for (int e : ends) {
    if (!out.empty()) out += ",";
    out += ag.end_names[e];
  }
  return out;
}

// Union-find over the named vertices of the unglued ring pieces.
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

// One ring piece before gluing: the cycle (or two-vertex segment) plus one
// anchor per fine block, all as vertex names.
struct Piece {
  std::vector<std::string> cyc;               // cycle order; segments have 2 entries
  std::vector<std::string> anchor_of_block;   // fine block index -> anchor name
  std::vector<int> edge_of_block;             // fine block index -> ring edge (-1 for segments)
  std::vector<std::pair<int, int>> ports;     // ring edge -> indices into cyc (crossing only)
  std::vector<int> edge_of_coarse;            // coarse block index -> ring edge (crossing only)
};

int fine_block_index(const EndPartition& fine, const std::vector<int>& block,
                     const std::string& ctx) {
  for (int i = 0; i < fine.block_count(); ++i) {
    if (fine.blocks[i] == block) return i;
  }
  fail("VerificationFailed", ctx + ": anchor block is not a fine block");
}

Piece make_piece(const PretreeElement& el, const std::vector<HashClass>& hcs,
                 std::vector<std::pair<std::string, std::string>>& edges,
                 std::vector<std::vector<std::string>>& triangles,
                 std::vector<std::vector<std::string>>& base_cycles) {
  Piece p;
  int pid = el.is_crossing ? hcs[el.crossing_index].member_classes.front() : el.class_id;
  std::string prefix = "ring:" + std::to_string(pid);
  p.anchor_of_block.resize(el.fine.block_count());
  p.edge_of_block.assign(el.fine.block_count(), -1);

  if (!el.is_crossing) {
    p.cyc = {prefix + ":cyc:0", prefix + ":cyc:1"};
    edges.emplace_back(p.cyc[0], p.cyc[1]);
    for (int b = 0; b < el.fine.block_count(); ++b) {
      std::string a = prefix + ":anc:" + std::to_string(b);
      p.anchor_of_block[b] = a;
      edges.emplace_back(a, p.cyc[0]);
      edges.emplace_back(a, p.cyc[1]);
      triangles.push_back({p.cyc[0], p.cyc[1], a});
    }
    return p;
  }

  const HashClass& hc = hcs[el.crossing_index];
  int nq = static_cast<int>(hc.cycle_order.size());
  std::vector<int> first_of_pos(nq), copies(nq);
  int m = 0;
  for (int i = 0; i < nq; ++i) {
    first_of_pos[i] = m;
    copies[i] = hc.has_twin(hc.cycle_order[i]) ? 2 : 1;
    m += copies[i];
  }
  for (int j = 0; j < m; ++j) p.cyc.push_back(prefix + ":cyc:" + std::to_string(j));
  auto last_of_pos = [&](int i) { return first_of_pos[i] + copies[i] - 1; };
  for (int i = 0; i < nq; ++i) {
    if (copies[i] == 2) edges.emplace_back(p.cyc[first_of_pos[i]], p.cyc[first_of_pos[i] + 1]);
    edges.emplace_back(p.cyc[last_of_pos(i)], p.cyc[first_of_pos[(i + 1) % nq]]);
  }
  base_cycles.push_back(p.cyc);

  p.ports.resize(nq);
  for (int e = 0; e < nq; ++e) p.ports[e] = {last_of_pos(e), first_of_pos[(e + 1) % nq]};

  p.edge_of_coarse.assign(el.coarse.block_count(), -1);
  for (const RingAnchor& a : hc.anchors) {
    int fb = fine_block_index(el.fine, a.block, el.label);
    std::string name = prefix + ":anc:" + std::to_string(fb);
    p.anchor_of_block[fb] = name;
    p.edge_of_block[fb] = a.edge;
    const auto& [pa, pb] = p.ports[a.edge];
    edges.emplace_back(name, p.cyc[pa]);
    edges.emplace_back(name, p.cyc[pb]);
    triangles.push_back({p.cyc[pa], p.cyc[pb], name});
    int cb = el.coarse.block_of(a.block.front());
    vassert(p.edge_of_coarse[cb] == -1 || p.edge_of_coarse[cb] == a.edge,
            el.label + ": one coarse block spans two ring edges");
    p.edge_of_coarse[cb] = a.edge;
  }
  for (int b = 0; b < el.fine.block_count(); ++b) {
    vassert(!p.anchor_of_block[b].empty(), el.label + ": fine block without an anchor");
  }
  for (int cb = 0; cb < el.coarse.block_count(); ++cb) {
    vassert(p.edge_of_coarse[cb] != -1, el.label + ": coarse block without a ring edge");
  }
  return p;
}

// Anchor partition induced on `anchors` by removing `cut`; fewer than two
// blocks means the cut does not separate anchors.
std::vector<std::vector<int>> anchor_partition(const Graph& g, const std::vector<int>& anchors,
                                               const VertexSet& cut) {
  std::vector<VertexSet> comps = g.components(cut);
  std::vector<std::vector<int>> blocks;
  for (const VertexSet& c : comps) {
    std::vector<int> blk;
    for (int a : anchors) {
      if (vs_contains(c, a)) blk.push_back(a);
    }
    if (!blk.empty()) blocks.push_back(blk);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// Partition of the end set induced by an anchor partition through f; blocks
// holding no f-image are dropped.
EndPartition pull_back(const AugmentedGraph& ag, const std::map<std::string, int>& f,
                       const std::vector<std::vector<int>>& anchor_blocks) {
  std::vector<std::vector<int>> blocks(anchor_blocks.size());
  for (int e = 0; e < ag.end_count(); ++e) {
    int v = f.at(ag.end_names[e]);
    int owner = -1;
    for (int b = 0; b < static_cast<int>(anchor_blocks.size()); ++b) {
      if (std::binary_search(anchor_blocks[b].begin(), anchor_blocks[b].end(), v)) {
        owner = b;
        break;
      }
    }
    vassert(owner != -1, "an f-image anchor is missing from an anchor partition");
    blocks[owner].push_back(e);
  }
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const std::vector<int>& b) { return b.empty(); }),
               blocks.end());
  if (blocks.empty()) return EndPartition{};
  return EndPartition::of_blocks(std::move(blocks));
}

// Failure descriptions for the tile structure: every edge lies on a
// constituent cycle, cycles meet in nothing, one vertex, or one shared edge,
// and within each biconnected block the cycle/shared-edge incidence graph is
// a tree (the "cycle of cycles" condition).
std::vector<std::string> shape_failures(const Graph& g,
                                        const std::vector<std::vector<int>>& cycles) {
  std::vector<std::string> out;
  auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };

  std::vector<std::set<std::pair<int, int>>> cyc_edges(cycles.size());
  std::vector<std::set<int>> cyc_verts(cycles.size());
  std::set<std::pair<int, int>> covered;
  for (size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    if (cyc.size() < 2) {
      out.push_back("constituent cycle with fewer than two vertices");
      continue;
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (cyc.size() == 2 && i == 1) break;  // a 2-cycle has one vertex pair
      if (!g.adjacent(u, v)) {
        out.push_back("constituent cycle uses a missing edge " + g.name(u) + "--" + g.name(v));
      } else if (cyc.size() == 2 && g.multiplicity(u, v) < 2) {
        out.push_back("constituent 2-cycle on a single edge " + g.name(u) + "--" + g.name(v));
      }
      cyc_edges[c].insert(norm(u, v));
      covered.insert(norm(u, v));
    }
    cyc_verts[c].insert(cyc.begin(), cyc.end());
  }
  for (const auto& [u, v, mult] : g.edge_list()) {
    if (!covered.count({u, v})) {
      out.push_back("edge " + g.name(u) + "--" + g.name(v) + " lies on no constituent cycle");
    }
  }

  // Pairwise intersections.
  for (size_t c1 = 0; c1 < cycles.size(); ++c1) {
    for (size_t c2 = c1 + 1; c2 < cycles.size(); ++c2) {
      std::vector<int> common;
      std::set_intersection(cyc_verts[c1].begin(), cyc_verts[c1].end(), cyc_verts[c2].begin(),
                            cyc_verts[c2].end(), std::back_inserter(common));
      if (common.size() > 2) {
        out.push_back("two constituent cycles share more than two vertices");
      } else if (common.size() == 2) {
        auto e = norm(common[0], common[1]);
        if (!cyc_edges[c1].count(e) || !cyc_edges[c2].count(e)) {
          out.push_back("two constituent cycles share two vertices but no edge");
        }
      }
    }
  }

  // Biconnected blocks over the multigraph (parallel edges distinct).
  struct E {
    int u, v;
  };
  std::vector<E> es;
  std::vector<std::vector<std::pair<int, int>>> adj(g.n());  // (other, edge id)
  for (const auto& [u, v, mult] : g.edge_list()) {
    for (int k = 0; k < mult; ++k) {
      int id = static_cast<int>(es.size());
      es.push_back({u, v});
      adj[u].push_back({v, id});
      adj[v].push_back({u, id});
    }
  }
  std::vector<std::vector<int>> blocks;  // edge ids per block
  {
    std::vector<int> num(g.n(), -1), low(g.n(), 0);
    std::vector<int> estack;
    int counter = 0;
    // Iterative DFS carrying the edge used to reach each vertex.
    struct Frame {
      int v, parent_edge;
      size_t next;
    };
    for (int root = 0; root < g.n(); ++root) {
      if (num[root] != -1) continue;
      std::vector<Frame> st{{root, -1, 0}};
      num[root] = low[root] = counter++;
      while (!st.empty()) {
        Frame& fr = st.back();
        if (fr.next < adj[fr.v].size()) {
          auto [w, eid] = adj[fr.v][fr.next++];
          if (eid == fr.parent_edge) continue;
          if (num[w] == -1) {
            estack.push_back(eid);
            num[w] = low[w] = counter++;
            st.push_back({w, eid, 0});
          } else if (num[w] < num[fr.v]) {
            estack.push_back(eid);
            low[fr.v] = std::min(low[fr.v], num[w]);
          }
        } else {
          int v = fr.v, pe = fr.parent_edge;
          st.pop_back();
          if (st.empty()) continue;
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            std::vector<int> blk;
            while (!estack.empty()) {
              int eid = estack.back();
              estack.pop_back();
              blk.push_back(eid);
              if (eid == pe) break;
            }
            blocks.push_back(blk);
          }
        }
      }
    }
  }

  // Each constituent cycle lies inside one block; within a block the
  // bipartite incidence of cycles and edges shared by >= 2 cycles must be a
  // tree, and no same-block pair may meet in a single vertex.
  std::map<std::pair<int, int>, std::vector<int>> cycles_of_edge;
  for (size_t c = 0; c < cycles.size(); ++c) {
    for (const auto& e : cyc_edges[c]) cycles_of_edge[e].push_back(static_cast<int>(c));
  }
  for (const auto& blk : blocks) {
    std::set<std::pair<int, int>> bedges;
    for (int eid : blk) bedges.insert(norm(es[eid].u, es[eid].v));
    std::vector<int> bcycles;
    for (size_t c = 0; c < cycles.size(); ++c) {
      bool inside = true, outside = true;
      for (const auto& e : cyc_edges[c]) (bedges.count(e) ? outside : inside) = false;
      if (inside) {
        bcycles.push_back(static_cast<int>(c));
      } else if (!outside) {
        out.push_back("a constituent cycle straddles two biconnected blocks");
      }
    }
    if (bcycles.size() < 2) continue;
    // Within one block every join is along an edge (joins at a vertex make
    // that vertex a cutpoint, splitting the block).  Cycles meeting in a
    // single vertex without a join are harmless — neighbouring anchor
    // triangles of one ring touch at a corner — but the joins themselves
    // must connect all cycles of the block without forming a cycle of
    // cycles: the incidence graph of cycles and multiply-used edges must be
    // a tree.
    std::map<std::pair<int, int>, int> shared_id;
    int nshared = 0;
    for (const auto& e : bedges) {
      auto it = cycles_of_edge.find(e);
      if (it != cycles_of_edge.end() && it->second.size() >= 2) shared_id[e] = nshared++;
    }
    int nv = static_cast<int>(bcycles.size()) + nshared;
    std::vector<std::vector<int>> badj(nv);
    int nedges = 0;
    for (size_t i = 0; i < bcycles.size(); ++i) {
      for (const auto& e : cyc_edges[bcycles[i]]) {
        auto it = shared_id.find(e);
        if (it == shared_id.end()) continue;
        badj[i].push_back(static_cast<int>(bcycles.size()) + it->second);
        badj[bcycles.size() + it->second].push_back(static_cast<int>(i));
        ++nedges;
      }
    }
    bool tree = nedges == nv - 1;
    if (tree) {
      std::vector<char> seen(nv, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : badj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      tree = reached == nv;
    }
    if (!tree) out.push_back("cycles of one biconnected block form a cycle of cycles");
  }
  return out;
}

}  // namespace

bool Succulent::is_anchor(int v) const {
  return std::binary_search(anchors.begin(), anchors.end(), v);
}

std::vector<AnchorCutClass> enumerate_anchor_cuts(const Graph& g,
                                                  const std::vector<int>& anchors) {
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v) {
    if (!std::binary_search(anchors.begin(), anchors.end(), v)) rest.push_back(v);
  }
  std::map<std::vector<std::vector<int>>, std::vector<VertexSet>> by_partition;
  for (int size = 1; size <= std::min<int>(4, static_cast<int>(rest.size())); ++size) {
    // Enumerate ascending subsets of `rest` of the given size.
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet cut;
      for (int i : idx) cut.push_back(rest[i]);
      auto part = anchor_partition(g, anchors, cut);
      if (part.size() >= 2) by_partition[part].push_back(cut);
      int i = size - 1;
      while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!by_partition.empty()) break;
  }
  vassert(!by_partition.empty(), "the succulent admits no anchor cut of size <= 4");
  std::vector<AnchorCutClass> out;
  for (auto& [part, cuts] : by_partition) {
    std::sort(cuts.begin(), cuts.end());
    out.push_back({part, std::move(cuts)});
  }
  return out;
}

Succulent assemble_succulent(const AugmentedGraph& ag, const MincutSet& ms,
                             const std::vector<HashClass>& hcs, const Pretree& pt) {
  int n = pt.element_count();
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::vector<std::string>> triangles;
  std::vector<std::vector<std::string>> base_cycles;
  std::vector<Piece> pieces;
  pieces.reserve(n);
  for (int i = 0; i < n; ++i) {
    pieces.push_back(make_piece(pt.elements[i], hcs, raw_edges, triangles, base_cycles));
  }

  NameUF uf;
  for (const Piece& p : pieces) {
    for (const auto& v : p.cyc) uf.add(v);
    for (const auto& a : p.anchor_of_block) uf.add(a);
  }
  std::set<std::string> deleted;
  std::set<std::string> anchor_names;
  for (const Piece& p : pieces) anchor_names.insert(p.anchor_of_block.begin(), p.anchor_of_block.end());

  // The ring edge of x facing its star partner y, and the glue data for one
  // shared-corner pair.
  auto facing_edge = [&](int x, int y) {
    const Piece& p = pieces[x];
    int cb = pt.div_coarse[y][x];
    vassert(cb >= 0 && cb < static_cast<int>(p.edge_of_coarse.size()),
            pt.elements[x].label + ": division outside the coarse partition");
    return p.edge_of_coarse[cb];
  };
  struct EdgeGlue {
    int x, y, ex, ey;
  };
  std::vector<EdgeGlue> edge_glues;
  std::set<std::pair<int, int>> edge_glued_pairs;

  // Pass 1: glue rings sharing a corner class along the corner edge.
  for (const auto& star : pt.stars) {
    for (size_t i = 0; i < star.size(); ++i) {
      for (size_t j = i + 1; j < star.size(); ++j) {
        int x = star[i], y = star[j];
        if (!pt.elements[x].is_crossing || !pt.elements[y].is_crossing) continue;
        const HashClass& hx = hcs[pt.elements[x].crossing_index];
        const HashClass& hy = hcs[pt.elements[y].crossing_index];
        int ex = facing_edge(x, y), ey = facing_edge(y, x);
        std::vector<int> shared;
        std::set_intersection(hx.edges[ex].combo_classes.begin(),
                              hx.edges[ex].combo_classes.end(),
                              hy.edges[ey].combo_classes.begin(),
                              hy.edges[ey].combo_classes.end(), std::back_inserter(shared));
        if (shared.empty()) continue;
        std::string ctx = pt.elements[x].label + "/" + pt.elements[y].label;
        for (int cls : shared) {
          vassert(vs_contains(hx.corner_classes, cls) && vs_contains(hy.corner_classes, cls),
                  ctx + ": shared edge class is not a corner of both rings");
        }
        const Piece& px = pieces[x];
        const Piece& py = pieces[y];
        uf.unite(uf.add(px.cyc[px.ports[ex].first]), uf.add(py.cyc[py.ports[ey].first]));
        uf.unite(uf.add(px.cyc[px.ports[ex].second]), uf.add(py.cyc[py.ports[ey].second]));
        int dx = pt.div_fine[y][x], dy = pt.div_fine[x][y];
        vassert(px.edge_of_block[dx] == ex,
                ctx + ": the anchor representing the partner is away from the corner edge");
        vassert(py.edge_of_block[dy] == ey,
                ctx + ": the anchor representing the partner is away from the corner edge");
        deleted.insert(px.anchor_of_block[dx]);
        deleted.insert(py.anchor_of_block[dy]);
        edge_glues.push_back({x, y, ex, ey});
        edge_glued_pairs.insert({x, y});
      }
    }
  }

  // Pass 1b: surviving anchors at a shared corner edge pair up by end set.
  for (const EdgeGlue& eg : edge_glues) {
    const PretreeElement& elx = pt.elements[eg.x];
    const PretreeElement& ely = pt.elements[eg.y];
    const Piece& px = pieces[eg.x];
    const Piece& py = pieces[eg.y];
    std::string ctx = elx.label + "/" + ely.label;
    std::map<std::vector<int>, std::string> sx;
    for (int b = 0; b < elx.fine.block_count(); ++b) {
      if (px.edge_of_block[b] == eg.ex && !deleted.count(px.anchor_of_block[b])) {
        sx[elx.fine.blocks[b]] = px.anchor_of_block[b];
      }
    }
    int matched = 0;
    for (int b = 0; b < ely.fine.block_count(); ++b) {
      if (py.edge_of_block[b] != eg.ey || deleted.count(py.anchor_of_block[b])) continue;
      auto it = sx.find(ely.fine.blocks[b]);
      vassert(it != sx.end(),
              ctx + ": surviving anchor " + join_ends(ag, ely.fine.blocks[b]) +
                  " at the shared edge has no partner");
      uf.unite(uf.add(it->second), uf.add(py.anchor_of_block[b]));
      ++matched;
    }
    vassert(matched == static_cast<int>(sx.size()),
            ctx + ": surviving anchors at the shared edge do not pair up");
  }

  // Pass 2: all other adjacent pairs identify the anchors of the fine blocks
  // they divide in each other.
  std::set<std::pair<int, int>> vertex_glued_pairs;
  for (const auto& star : pt.stars) {
    for (size_t i = 0; i < star.size(); ++i) {
      for (size_t j = i + 1; j < star.size(); ++j) {
        int x = star[i], y = star[j];
        if (edge_glued_pairs.count({x, y})) continue;
        std::string ctx = pt.elements[x].label + "/" + pt.elements[y].label;
        const std::string& ax = pieces[x].anchor_of_block[pt.div_fine[y][x]];
        const std::string& ay = pieces[y].anchor_of_block[pt.div_fine[x][y]];
        vassert(!deleted.count(ax) && !deleted.count(ay),
                ctx + ": an element attaches to an anchor deleted by a corner gluing");
        uf.unite(uf.add(ax), uf.add(ay));
        vertex_glued_pairs.insert({x, y});
      }
    }
  }

  // Resolve union-find classes to their lexicographically least member and
  // check no class mixes kept with deleted or anchors with cycle vertices.
  int total = static_cast<int>(uf.names.size());
  std::vector<std::string> root_name(total);
  for (int v = 0; v < total; ++v) {
    int r = uf.find(v);
    if (root_name[r].empty() || uf.names[v] < root_name[r]) root_name[r] = uf.names[v];
  }
  std::vector<int> class_size(total, 0);
  for (int v = 0; v < total; ++v) ++class_size[uf.find(v)];
  auto resolved = [&](const std::string& n) { return root_name[uf.find(uf.id.at(n))]; };
  for (int v = 0; v < total; ++v) {
    int r = uf.find(v);
    vassert(deleted.count(uf.names[v]) == deleted.count(root_name[r]),
            "a glued vertex class mixes deleted and kept anchors: " + uf.names[v]);
    vassert(anchor_names.count(uf.names[v]) == anchor_names.count(root_name[r]),
            "a glued vertex class mixes anchors and cycle vertices: " + uf.names[v]);
  }

  // The end map f and the appendages for residual ends.
  Succulent s;
  s.edge_joins = static_cast<int>(edge_glued_pairs.size());
  s.vertex_joins = static_cast<int>(vertex_glued_pairs.size());
  std::vector<std::string> appendage_hosts;  // parallel to appendage end names
  std::vector<std::string> appendage_ends;
  std::map<std::string, std::string> f_names;
  for (int e = 0; e < ag.end_count(); ++e) {
    std::vector<int> want{e};
    std::vector<std::string> free_singletons;
    for (int i = 0; i < n; ++i) {
      const PretreeElement& el = pt.elements[i];
      for (int b = 0; b < el.fine.block_count(); ++b) {
        if (el.fine.blocks[b] != want) continue;
        const std::string& a = pieces[i].anchor_of_block[b];
        if (deleted.count(a)) continue;
        if (class_size[uf.find(uf.id.at(a))] == 1) free_singletons.push_back(a);
      }
    }
    if (!free_singletons.empty()) {
      vassert(free_singletons.size() == 1, "end " + ag.end_names[e] +
                                               " is isolated at several unglued anchors");
      f_names[ag.end_names[e]] = resolved(free_singletons.front());
      continue;
    }
    // Residual end: act as if a cut split it off alone.  The virtual element
    // for that cut divides the block containing the end in every other
    // element, so it is adjacent to exactly the elements y whose cuts
    // divide, in every other element z, the block of z containing the end.
    // Each such y would glue the virtual element's anchor to its own anchor
    // at the block containing the end; all of them name one junction, which
    // hosts the appendage.
    std::string host;
    for (int y = 0; y < n; ++y) {
      bool adjacent = true;
      for (int z = 0; z < n && adjacent; ++z) {
        if (z == y) continue;
        adjacent = pt.div_coarse[y][z] == pt.elements[z].coarse.block_of(e);
      }
      if (!adjacent) continue;
      const std::string& a = pieces[y].anchor_of_block[pt.elements[y].fine.block_of(e)];
      vassert(!deleted.count(a), "end " + ag.end_names[e] +
                                     " would attach to an anchor deleted by a corner gluing");
      std::string r = resolved(a);
      vassert(host.empty() || host == r,
              "end " + ag.end_names[e] + " is prescribed two hosts " + host + ", " + r);
      host = r;
    }
    if (host.empty()) {
      fail("FMapIncomplete", "end " + ag.end_names[e] + " is enclosed by no surviving anchor");
    }
    std::string app = "app:" + ag.end_names[e];
    appendage_hosts.push_back(host);
    appendage_ends.push_back(app);
    f_names[ag.end_names[e]] = app;
  }

  // Assemble the final multigraph.
  std::set<std::string> vertex_names;
  for (int v = 0; v < total; ++v) {
    if (!deleted.count(uf.names[v])) vertex_names.insert(root_name[uf.find(v)]);
  }
  vertex_names.insert(appendage_ends.begin(), appendage_ends.end());
  std::set<std::pair<std::string, std::string>> simple_edges;
  for (const auto& [a, b] : raw_edges) {
    if (deleted.count(a) || deleted.count(b)) continue;
    std::string ra = resolved(a), rb = resolved(b);
    vassert(ra != rb, "gluing identified the two endpoints of the edge " + a + "--" + b);
    simple_edges.insert(ra < rb ? std::make_pair(ra, rb) : std::make_pair(rb, ra));
  }
  std::vector<std::pair<std::string, std::string>> final_edges(simple_edges.begin(),
                                                               simple_edges.end());
  for (size_t k = 0; k < appendage_ends.size(); ++k) {
    final_edges.emplace_back(appendage_hosts[k], appendage_ends[k]);
    final_edges.emplace_back(appendage_hosts[k], appendage_ends[k]);
  }
  s.graph = Graph::build({vertex_names.begin(), vertex_names.end()}, final_edges);

  for (const std::string& a : anchor_names) {
    if (!deleted.count(a)) s.anchors.push_back(*s.graph.id_of(resolved(a)));
  }
  for (const std::string& a : appendage_ends) s.anchors.push_back(*s.graph.id_of(a));
  s.anchors = vs_sorted(std::move(s.anchors));

  for (const auto& [end, name] : f_names) s.f[end] = *s.graph.id_of(name);
  for (size_t k = 0; k < appendage_ends.size(); ++k) {
    s.appendages.emplace_back(*s.graph.id_of(appendage_hosts[k]),
                              *s.graph.id_of(appendage_ends[k]));
  }
  std::sort(s.appendages.begin(), s.appendages.end());

  // Constituent cycles: ring base cycles, anchor triangles, appendages.
  std::set<std::vector<int>> cycle_keys;
  auto add_cycle = [&](const std::vector<std::string>& names) {
    std::vector<int> cyc;
    for (const auto& nm : names) {
      if (deleted.count(nm)) return;
      cyc.push_back(*s.graph.id_of(resolved(nm)));
    }
    std::vector<int> key = cyc;
    std::sort(key.begin(), key.end());
    if (cycle_keys.insert(key).second) s.cycles.push_back(cyc);
  };
  for (const auto& c : base_cycles) add_cycle(c);
  for (const auto& t : triangles) add_cycle(t);
  for (size_t k = 0; k < appendage_ends.size(); ++k) {
    s.cycles.push_back({*s.graph.id_of(appendage_hosts[k]), *s.graph.id_of(appendage_ends[k])});
  }

  // Shape, then the correspondence g.
  std::vector<std::string> shape = shape_failures(s.graph, s.cycles);
  if (!shape.empty()) {
    fail("NotASucculent", "the glued rings are not a succulent: " + shape.front());
  }
  s.anchor_classes = enumerate_anchor_cuts(s.graph, s.anchors);
  s.g_of_class.assign(ms.classes.size(), -1);
  std::vector<int> hit(s.anchor_classes.size(), 0);
  for (size_t cid = 0; cid < ms.classes.size(); ++cid) {
    for (size_t a = 0; a < s.anchor_classes.size(); ++a) {
      if (pull_back(ag, s.f, s.anchor_classes[a].partition) == ms.classes[cid].partition) {
        if (s.g_of_class[cid] != -1) {
          fail("GMapNotBijective", "two anchor-cut classes induce the end partition " +
                                       ms.classes[cid].partition.to_string());
        }
        s.g_of_class[cid] = static_cast<int>(a);
        ++hit[a];
      }
    }
    if (s.g_of_class[cid] == -1) {
      fail("GMapNotBijective", "no anchor-cut class induces the end partition " +
                                   ms.classes[cid].partition.to_string());
    }
  }
  for (size_t a = 0; a < s.anchor_classes.size(); ++a) {
    if (hit[a] != 1) {
      fail("GMapNotBijective",
           "an anchor-cut class corresponds to " + std::to_string(hit[a]) + " mincut classes");
    }
  }
  return s;
}

std::vector<std::string> verify_theorem(const AugmentedGraph& ag, const MincutSet& ms,
                                        const Succulent& s) {
  std::vector<std::string> out;
  const Graph& g = s.graph;

  // Property 1: adjacent anchors include an end vertex; every non-anchor is
  // adjacent to an anchor.
  for (int a : s.anchors) {
    for (int b : g.neighbors(a)) {
      if (b > a && s.is_anchor(b) && g.degree(a) > 2 && g.degree(b) > 2) {
        out.push_back("adjacent anchors " + g.name(a) + ", " + g.name(b) +
                      " are both interior vertices");
      }
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (s.is_anchor(v)) continue;
    bool ok = false;
    for (int w : g.neighbors(v)) ok = ok || s.is_anchor(w);
    if (!ok) out.push_back("vertex " + g.name(v) + " is adjacent to no anchor");
  }

  for (const std::string& msg : shape_failures(g, s.cycles)) out.push_back(msg);

  // Property 2: f is total, lands on anchors, and is onto the end-vertex
  // anchors.
  std::set<int> image;
  for (int e = 0; e < ag.end_count(); ++e) {
    auto it = s.f.find(ag.end_names[e]);
    if (it == s.f.end()) {
      out.push_back("end " + ag.end_names[e] + " has no f-image");
      continue;
    }
    if (!s.is_anchor(it->second)) {
      out.push_back("f maps end " + ag.end_names[e] + " to a non-anchor");
    }
    image.insert(it->second);
  }
  for (int a : s.anchors) {
    bool endv = g.degree(a) <= 2;
    if (endv && !image.count(a)) {
      out.push_back("end-vertex anchor " + g.name(a) + " is not an f-image");
    }
    if (!endv && image.count(a)) {
      out.push_back("f-image anchor " + g.name(a) + " is not an end vertex");
    }
  }

  // Property 3: the anchor-cut classes correspond one-to-one with the mincut
  // classes, matching separation on every end pair.
  std::vector<AnchorCutClass> classes;
  try {
    classes = enumerate_anchor_cuts(g, s.anchors);
  } catch (const SucError& e) {
    out.push_back(e.what());
    return out;
  }
  if (classes.size() != ms.classes.size()) {
    out.push_back("found " + std::to_string(classes.size()) + " anchor-cut classes for " +
                  std::to_string(ms.classes.size()) + " mincut classes");
  }
  if (s.g_of_class.size() != ms.classes.size()) {
    out.push_back("g covers " + std::to_string(s.g_of_class.size()) + " of " +
                  std::to_string(ms.classes.size()) + " mincut classes");
    return out;
  }
  std::set<int> g_images;
  for (size_t cid = 0; cid < ms.classes.size(); ++cid) {
    int a = s.g_of_class[cid];
    if (a < 0 || a >= static_cast<int>(s.anchor_classes.size())) {
      out.push_back("g is undefined on a mincut class");
      continue;
    }
    g_images.insert(a);
    // The stored class must still exist in the recomputed enumeration.
    bool found = false;
    for (const auto& c : classes) found = found || c.partition == s.anchor_classes[a].partition;
    if (!found) {
      out.push_back("the g-image of " + ms.classes[cid].partition.to_string() +
                    " is not an anchor-cut class");
      continue;
    }
    const auto& part = s.anchor_classes[a].partition;
    for (int e1 = 0; e1 < ag.end_count(); ++e1) {
      for (int e2 = e1 + 1; e2 < ag.end_count(); ++e2) {
        auto i1 = s.f.find(ag.end_names[e1]);
        auto i2 = s.f.find(ag.end_names[e2]);
        if (i1 == s.f.end() || i2 == s.f.end()) continue;
        int b1 = -1, b2 = -1;
        for (int b = 0; b < static_cast<int>(part.size()); ++b) {
          if (std::binary_search(part[b].begin(), part[b].end(), i1->second)) b1 = b;
          if (std::binary_search(part[b].begin(), part[b].end(), i2->second)) b2 = b;
        }
        bool gamma = ms.classes[cid].partition.separates(e1, e2);
        bool succ = b1 != -1 && b2 != -1 && b1 != b2;
        if (gamma != succ) {
          out.push_back("ends " + ag.end_names[e1] + "," + ag.end_names[e2] + " are " +
                        (gamma ? "separated" : "together") + " in class " +
                        ms.classes[cid].partition.to_string() +
                        " but their f-images are mapped the other way");
        }
      }
    }
  }
  if (g_images.size() != ms.classes.size() && s.g_of_class.size() == ms.classes.size()) {
    out.push_back("g maps two mincut classes to one anchor-cut class");
  }
  return out;
}

Succulent collapse_variant(const AugmentedGraph& ag, const MincutSet& ms, const Succulent& s) {
  std::map<std::string, std::string> remap;  // appendage end anchor -> host
  std::set<std::string> dropped;
  for (const auto& [host, app] : s.appendages) {
    vassert(s.graph.degree(app) == 2 && s.graph.neighbors(app) == std::vector<int>{host},
            "appendage anchor " + s.graph.name(app) + " is attached beyond its host");
    remap[s.graph.name(app)] = s.graph.name(host);
    dropped.insert(s.graph.name(app));
  }
  auto target = [&](int v) {
    const std::string& nm = s.graph.name(v);
    auto it = remap.find(nm);
    return it == remap.end() ? nm : it->second;
  };

  Succulent out;
  out.edge_joins = s.edge_joins;
  out.vertex_joins = s.vertex_joins;
  std::vector<std::string> names;
  for (int v = 0; v < s.graph.n(); ++v) {
    if (!dropped.count(s.graph.name(v))) names.push_back(s.graph.name(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v, mult] : s.graph.edge_list()) {
    std::string a = target(u), b = target(v);
    if (a == b) continue;  // the collapsed double edge
    for (int k = 0; k < mult; ++k) edges.emplace_back(a, b);
  }
  out.graph = Graph::build(names, edges);
  for (int a : s.anchors) {
    if (!dropped.count(s.graph.name(a))) out.anchors.push_back(*out.graph.id_of(s.graph.name(a)));
  }
  out.anchors = vs_sorted(std::move(out.anchors));
  for (const auto& [end, v] : s.f) out.f[end] = *out.graph.id_of(target(v));
  std::set<std::vector<int>> keys;
  for (const auto& cyc : s.cycles) {
    std::vector<int> mapped;
    bool keep = true;
    for (int v : cyc) {
      if (dropped.count(s.graph.name(v))) keep = false;
      if (keep) mapped.push_back(*out.graph.id_of(s.graph.name(v)));
    }
    if (!keep) continue;
    std::vector<int> key = mapped;
    std::sort(key.begin(), key.end());
    if (keys.insert(key).second) out.cycles.push_back(mapped);
  }

  for (int a : out.anchors) {
    for (int b : out.graph.neighbors(a)) {
      vassert(!out.is_anchor(b), "collapsed succulent has adjacent anchors " +
                                     out.graph.name(a) + ", " + out.graph.name(b));
    }
  }

  out.anchor_classes = enumerate_anchor_cuts(out.graph, out.anchors);
  out.g_of_class.assign(ms.classes.size(), -1);
  std::vector<int> hit(out.anchor_classes.size(), 0);
  for (size_t cid = 0; cid < ms.classes.size(); ++cid) {
    for (size_t a = 0; a < out.anchor_classes.size(); ++a) {
      if (pull_back(ag, out.f, out.anchor_classes[a].partition) == ms.classes[cid].partition) {
        if (out.g_of_class[cid] != -1) {
          fail("GMapNotBijective", "two anchor-cut classes of the collapsed succulent match " +
                                       ms.classes[cid].partition.to_string());
        }
        out.g_of_class[cid] = static_cast<int>(a);
        ++hit[a];
      }
    }
    if (out.g_of_class[cid] == -1) {
      fail("GMapNotBijective", "the collapsed succulent loses the end partition " +
                                   ms.classes[cid].partition.to_string());
    }
  }
  for (int h : hit) {
    if (h != 1) fail("GMapNotBijective", "the collapsed succulent duplicates an anchor-cut class");
  }
  return out;
}

}  // namespace suc
