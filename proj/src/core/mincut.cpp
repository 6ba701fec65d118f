#include "core/mincut.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "core/flow.hpp"
#include "core/relations.hpp"

namespace suc {

int MincutSet::cut_index(const VertexSet& vertices) const {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), vertices,
                             [](const Cut& c, const VertexSet& v) { return c.vertices < v; });
  if (it == cuts.end() || it->vertices != vertices) return -1;
  return static_cast<int>(it - cuts.begin());
}

int kappa(const AugmentedGraph& ag) {
  int best = -1;
  for (size_t i = 0; i < ag.markers.size(); ++i) {
    for (size_t j = i + 1; j < ag.markers.size(); ++j) {
      PathCount pc = disjoint_path_count(ag.g, {ag.markers[i]}, {ag.markers[j]},
                                         ag.markers);
      if (pc.infinite) continue;
      if (best < 0 || pc.count < best) best = pc.count;
    }
  }
  if (best < 0) {
    throw SucError(Code::verify, "NoEndCut", "no pair of ends can be separated");
  }
  return best;
}

namespace {

// Spanning tree of the augmented graph used to skip subsets that obviously
// leave the graph connected.
struct SpanningTree {
  std::vector<std::vector<int>> adj;
  int tree_edges = 0;
  bool spanning = false;

  explicit SpanningTree(const Graph& g) : adj(g.n()) {
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    if (g.n() == 0) return;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          adj[v].push_back(w);
          adj[w].push_back(v);
          ++tree_edges;
          q.push(w);
        }
      }
    }
    spanning = tree_edges == g.n() - 1;
  }

  // True when the tree minus `removed` still spans all remaining vertices,
  // in which case the graph minus `removed` is certainly connected.
  bool connected_without(const VertexSet& removed) const {
    if (!spanning) return false;
    int incident = 0;   // tree edges with >= 1 endpoint removed
    int internal = 0;   // tree edges with both endpoints removed
    for (int v : removed) {
      incident += static_cast<int>(adj[v].size());
      for (int w : adj[v]) {
        if (vs_contains(removed, w)) ++internal;
      }
    }
    incident -= internal / 2;
    int n = static_cast<int>(adj.size());
    int remaining_edges = tree_edges - incident;
    int remaining_vertices = n - static_cast<int>(removed.size());
    return remaining_edges == remaining_vertices - 1;
  }
};

long long subset_count(int n, int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > (1LL << 50)) return 1LL << 50;
  }
  return c;
}

}  // namespace

std::vector<VertexSet> enumerate_mincuts(const AugmentedGraph& ag, int k, long long budget) {
  const VertexSet& candidates = ag.originals;
  const int m = static_cast<int>(candidates.size());
  if (k > m) return {};
  if (subset_count(m, k) > budget) {
    throw SucError(Code::budget, "BudgetExceeded",
                   "subset enumeration over " + std::to_string(m) + " choose " +
                       std::to_string(k) + " exceeds budget");
  }
  SpanningTree tree(ag.g);
  std::vector<VertexSet> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet cut(k);
    for (int i = 0; i < k; ++i) cut[i] = candidates[idx[i]];
    if (!tree.connected_without(cut) && is_end_cut(ag, cut)) {
      out.push_back(cut);
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;  // lexicographic by construction
}

namespace {

// True when `cut` leaves markers a and b in different components.
bool separates_pair(const AugmentedGraph& ag, const VertexSet& cut, int a, int b) {
  std::vector<char> gone(ag.g.n(), 0);
  for (int v : cut) gone[v] = 1;
  std::vector<char> seen(ag.g.n(), 0);
  std::queue<int> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == b) return false;
    for (int w : ag.g.neighbors(v)) {
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return true;
}

// Shortest path from a to b avoiding `cut`; empty when none exists.
std::vector<int> path_between(const AugmentedGraph& ag, const VertexSet& cut, int a, int b) {
  std::vector<char> gone(ag.g.n(), 0);
  for (int v : cut) gone[v] = 1;
  std::vector<int> prev(ag.g.n(), -1);
  std::queue<int> q;
  q.push(a);
  prev[a] = a;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == b) break;
    for (int w : ag.g.neighbors(v)) {
      if (!gone[w] && prev[w] < 0) {
        prev[w] = v;
        q.push(w);
      }
    }
  }
  if (prev[b] < 0) return {};
  std::vector<int> path;
  for (int v = b; v != a; v = prev[v]) path.push_back(v);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<VertexSet> enumerate_mincuts_pathwise(const AugmentedGraph& ag, int k,
                                                  long long budget) {
  std::set<VertexSet> found;
  long long nodes = 0;

  for (size_t i = 0; i < ag.markers.size(); ++i) {
    for (size_t j = i + 1; j < ag.markers.size(); ++j) {
      const int a = ag.markers[i];
      const int b = ag.markers[j];
      std::set<VertexSet> expanded;
      // Depth-first branching: every a-b separator must hit every a-b path,
      // so extending the partial separator by each path vertex in turn
      // reaches all separators of size exactly k.
      std::vector<VertexSet> stack = {{}};
      while (!stack.empty()) {
        VertexSet s = std::move(stack.back());
        stack.pop_back();
        if (++nodes > budget) {
          throw SucError(Code::budget, "BudgetExceeded",
                         "pathwise enumeration exceeded node budget");
        }
        std::vector<int> path = path_between(ag, s, a, b);
        if (path.empty()) {
          if (static_cast<int>(s.size()) == k) {
            found.insert(s);
          } else {
            throw SucError(Code::internal, "InfeasibleSeparator",
                           "found separator smaller than the claimed minimum");
          }
          continue;
        }
        if (static_cast<int>(s.size()) == k) continue;  // still connected: dead end
        for (int v : path) {
          if (ag.is_marker(v) || v == a || v == b) continue;
          VertexSet next = vs_union(s, {v});
          if (expanded.insert(next).second) stack.push_back(next);
        }
      }
    }
  }
  // A separator of a marker pair always leaves both sides marked, so each
  // found set is an end cut of size k; minimality follows because k is the
  // global minimum.
  std::vector<VertexSet> out(found.begin(), found.end());
  for (const VertexSet& cut : out) {
    if (!is_end_cut(ag, cut)) {
      throw SucError(Code::internal, "InfeasibleSeparator",
                     "pathwise enumeration produced a non-separating set");
    }
  }
  return out;
}

MincutSet group_into_classes(const AugmentedGraph& ag, const std::vector<VertexSet>& cuts,
                             int k, bool expect_sliceless) {
  MincutSet ms;
  ms.kappa = k;
  std::vector<VertexSet> ordered = cuts;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  for (const VertexSet& vs : ordered) {
    Cut c;
    c.vertices = vs;
    CutView view = cut_view(ag, vs);
    c.total_components = static_cast<int>(view.components.size());
    if (expect_sliceless && !view.slices.empty()) {
      throw SucError(Code::verify, "CorrespondenceFailure",
                     "minimum cut has a markerless component after slice reduction");
    }
    if (expect_sliceless) {
      // With no slices, every component of the cut must have the whole cut
      // as boundary.
      for (const VertexSet& comp : view.components) {
        if (ag.g.boundary(comp) != vs) {
          throw SucError(Code::verify, "CorrespondenceFailure",
                         "component boundary differs from its minimum cut");
        }
      }
    }
    c.partition = end_partition(ag, vs);
    ms.cuts.push_back(std::move(c));
  }

  // Nesting flags.
  const int n = static_cast<int>(ms.cuts.size());
  for (int i = 0; i < n; ++i) {
    bool all_nested = true;
    for (int j = 0; j < n && all_nested; ++j) {
      if (i == j) continue;
      if (!is_nested(ag, ms.cuts[i].vertices, ms.cuts[j].vertices)) all_nested = false;
    }
    ms.cuts[i].is_a = all_nested;
    ms.cuts[i].is_b = ms.cuts[i].total_components == 2;
    if (expect_sliceless && !ms.cuts[i].is_a && !ms.cuts[i].is_b) {
      throw SucError(Code::verify, "CorrespondenceFailure",
                     "cut neither nested with all others nor two-component");
    }
  }

  // Classes keyed by partition.
  std::map<EndPartition, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[ms.cuts[i].partition].push_back(i);
  ms.class_of_cut.assign(n, -1);
  for (auto& [partition, ids] : groups) {
    CutClass cc;
    cc.partition = partition;
    cc.cut_ids = ids;
    cc.is_a = true;
    cc.is_b = true;
    for (int id : ids) {
      cc.is_a = cc.is_a && ms.cuts[id].is_a;
      cc.is_b = cc.is_b && ms.cuts[id].is_b;
      ms.class_of_cut[id] = static_cast<int>(ms.classes.size());
    }
    if (expect_sliceless) {
      // Without slices the component count equals the block count, so being
      // two-component is a class invariant; a class that is not two-component
      // must consist entirely of nested-with-all cuts.
      if (!cc.is_b && !cc.is_a) {
        throw SucError(Code::verify, "CorrespondenceFailure",
                       "class of partition " + partition.to_string() +
                           " is neither A nor B");
      }
    }
    ms.classes.push_back(std::move(cc));
  }
  return ms;
}

SliceReduction reduce_slices(const AugmentedGraph& ag, long long budget) {
  SliceReduction sr;
  const int k = kappa(ag);
  std::vector<VertexSet> cuts = enumerate_mincuts(ag, k, budget);

  std::map<VertexSet, SliceRecord> slice_map;
  for (const VertexSet& cut : cuts) {
    CutView view = cut_view(ag, cut);
    for (const VertexSet& s : view.slices) {
      auto it = slice_map.find(s);
      if (it == slice_map.end()) {
        SliceRecord rec;
        rec.vertices = s;
        rec.boundary = ag.g.boundary(s);
        rec.cut = cut;
        slice_map.emplace(s, std::move(rec));
      }
    }
  }

  for (auto& [vs, rec] : slice_map) sr.slices.push_back(rec);
  // Distinct slices never share vertices.
  for (size_t i = 0; i < sr.slices.size(); ++i) {
    for (size_t j = i + 1; j < sr.slices.size(); ++j) {
      if (vs_intersects(sr.slices[i].vertices, sr.slices[j].vertices)) {
        throw SucError(Code::verify, "CorrespondenceFailure",
                       "two distinct slices share a vertex");
      }
    }
  }

  if (sr.slices.empty()) {
    sr.reduced = ag;
    sr.changed = false;
    return sr;
  }
  sr.changed = true;

  VertexSet removed;
  for (const SliceRecord& rec : sr.slices) {
    removed = vs_union(removed, rec.vertices);
  }
  std::vector<std::string> names;
  for (int v = 0; v < ag.g.n(); ++v) {
    if (!vs_contains(removed, v)) names.push_back(ag.g.name(v));
  }
  std::set<std::pair<std::string, std::string>> edge_set;
  for (const auto& [u, v, m] : ag.g.edge_list()) {
    if (vs_contains(removed, u) || vs_contains(removed, v)) continue;
    edge_set.emplace(ag.g.name(u), ag.g.name(v));
  }
  for (const SliceRecord& rec : sr.slices) {
    for (size_t i = 0; i < rec.boundary.size(); ++i) {
      for (size_t j = i + 1; j < rec.boundary.size(); ++j) {
        std::string a = ag.g.name(rec.boundary[i]);
        std::string b = ag.g.name(rec.boundary[j]);
        if (a > b) std::swap(a, b);
        edge_set.emplace(a, b);
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> edges(edge_set.begin(), edge_set.end());
  Graph reduced_graph = Graph::build(names, edges);

  AugmentedGraph red;
  red.g = reduced_graph;
  for (size_t i = 0; i < ag.markers.size(); ++i) {
    auto id = reduced_graph.id_of(ag.g.name(ag.markers[i]));
    if (!id) {
      throw SucError(Code::internal, "InternalError", "marker lost in slice reduction");
    }
  }
  {
    std::vector<std::pair<int, std::string>> ms2;
    for (size_t i = 0; i < ag.markers.size(); ++i) {
      ms2.emplace_back(*reduced_graph.id_of(ag.g.name(ag.markers[i])), ag.end_names[i]);
    }
    std::sort(ms2.begin(), ms2.end());
    for (auto& [id, nm] : ms2) {
      red.markers.push_back(id);
      red.end_names.push_back(nm);
    }
    for (int v = 0; v < red.g.n(); ++v) {
      if (red.marker_index(v) < 0) red.originals.push_back(v);
    }
  }

  // The reduction must preserve the minimum cuts exactly and be a fixed
  // point.
  int k2 = kappa(red);
  if (k2 != k) {
    throw SucError(Code::verify, "CorrespondenceFailure",
                   "slice reduction changed the minimum cut size");
  }
  std::vector<VertexSet> cuts_named;
  for (const VertexSet& cut : cuts) {
    VertexSet translated;
    for (int v : cut) {
      auto id = red.g.id_of(ag.g.name(v));
      if (!id) {
        throw SucError(Code::verify, "CorrespondenceFailure",
                       "minimum cut vertex removed by slice reduction");
      }
      translated.push_back(*id);
    }
    cuts_named.push_back(vs_sorted(std::move(translated)));
  }
  std::sort(cuts_named.begin(), cuts_named.end());
  std::vector<VertexSet> cuts2 = enumerate_mincuts(red, k2, budget);
  if (cuts2 != cuts_named) {
    throw SucError(Code::verify, "CorrespondenceFailure",
                   "slice reduction changed the set of minimum cuts");
  }
  for (const VertexSet& cut : cuts2) {
    if (!cut_view(red, cut).slices.empty()) {
      throw SucError(Code::verify, "CorrespondenceFailure",
                     "slice reduction is not a fixed point");
    }
  }
  sr.reduced = std::move(red);
  return sr;
}

namespace {

void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (int u : vs_union(p, x)) {
    size_t deg = vs_intersect(adj[u], p).size();
    if (pivot < 0 || deg > best) {
      pivot = u;
      best = deg;
    }
  }
  VertexSet candidates = vs_difference(p, adj[pivot]);
  for (int v : candidates) {
    bron_kerbosch(adj, vs_union(r, {v}), vs_intersect(p, adj[v]), vs_intersect(x, adj[v]),
                  out);
    p = vs_difference(p, {v});
    x = vs_union(x, {v});
  }
}

}  // namespace

std::vector<std::vector<std::string>> detect_inseparable_sets(const AugmentedGraph& ag,
                                                              int k, int max_vertices) {
  if (static_cast<int>(ag.originals.size()) > max_vertices) {
    throw SucError(Code::budget, "SearchBudgetExceeded",
                   "inseparable-set search limited to " + std::to_string(max_vertices) +
                       " vertices");
  }
  const VertexSet& verts = ag.originals;
  const int m = static_cast<int>(verts.size());
  // u ~ v when no vertex set of size <= k separates them: equivalently the
  // number of disjoint paths exceeds k.  A set is k-inseparable exactly when
  // all its pairs are, so the maximal sets are the maximal cliques of ~.
  std::vector<VertexSet> adj(ag.g.n());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      PathCount pc = disjoint_path_count(ag.g, {verts[i]}, {verts[j]}, ag.markers);
      if (pc.infinite || pc.count > k) {
        adj[verts[i]].push_back(verts[j]);
        adj[verts[j]].push_back(verts[i]);
      }
    }
  }
  for (auto& nb : adj) nb = vs_sorted(std::move(nb));
  std::vector<VertexSet> cliques;
  bron_kerbosch(adj, {}, verts, {}, cliques);
  std::vector<std::vector<std::string>> out;
  for (const VertexSet& c : cliques) {
    if (static_cast<int>(c.size()) >= k + 1) {
      std::vector<std::string> names;
      for (int v : c) names.push_back(ag.g.name(v));
      out.push_back(std::move(names));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace suc
