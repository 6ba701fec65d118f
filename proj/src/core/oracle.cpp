#include "core/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "core/grf.hpp"

namespace suc {

namespace {

// Minimal disjoint-set union, the only connectivity machinery the oracle uses.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Number of distinct components among the markers after deleting `removed`.
int marked_component_count(const AugmentedGraph& ag, const std::vector<char>& removed) {
  Dsu dsu(ag.g.n());
  for (const auto& [u, v, mult] : ag.g.edge_list()) {
    (void)mult;
    if (!removed[u] && !removed[v]) dsu.unite(u, v);
  }
  std::set<int> roots;
  for (int m : ag.markers) roots.insert(dsu.find(m));
  return static_cast<int>(roots.size());
}

bool is_brute_end_cut(const AugmentedGraph& ag, const VertexSet& cut) {
  std::vector<char> removed(ag.g.n(), 0);
  for (int v : cut) removed[v] = 1;
  return marked_component_count(ag, removed) >= 2;
}

std::vector<VertexSet> all_end_cuts_of_size(const AugmentedGraph& ag, int k) {
  const VertexSet& cands = ag.originals;
  const int m = static_cast<int>(cands.size());
  std::vector<VertexSet> out;
  if (k > m) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet cut(k);
    for (int i = 0; i < k; ++i) cut[i] = cands[idx[i]];
    if (is_brute_end_cut(ag, cut)) out.push_back(cut);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

int brute_kappa(const AugmentedGraph& ag) {
  for (int k = 0; k <= static_cast<int>(ag.originals.size()); ++k) {
    if (!all_end_cuts_of_size(ag, k).empty()) return k;
  }
  throw SucError(Code::verify, "NoEndCut", "no set of vertices separates any two ends");
}

std::vector<VertexSet> brute_mincuts(const AugmentedGraph& ag) {
  return all_end_cuts_of_size(ag, brute_kappa(ag));
}

namespace {

int side_component_count(const Graph& g, const std::vector<VertexSet>& sides,
                         const std::vector<char>& removed_edge,
                         const std::vector<std::tuple<int, int, int>>& edges) {
  Dsu dsu(g.n());
  for (size_t i = 0; i < edges.size(); ++i) {
    if (removed_edge[i]) continue;
    dsu.unite(std::get<0>(edges[i]), std::get<1>(edges[i]));
  }
  std::set<int> roots;
  for (const VertexSet& side : sides) {
    // A side is a unit: its vertices are expected to stay together, so the
    // root of its first vertex represents it.
    roots.insert(dsu.find(side.front()));
  }
  return static_cast<int>(roots.size());
}

std::vector<EdgeSet> edge_cuts_of_size(const Graph& g, const std::vector<VertexSet>& sides,
                                       int k) {
  std::vector<std::tuple<int, int, int>> edges = g.edge_list();
  // Edge pipelines run on simple graphs; expand multiplicities defensively.
  std::vector<EdgePair> flat;
  for (const auto& [u, v, mult] : edges) {
    for (int i = 0; i < mult; ++i) flat.emplace_back(u, v);
  }
  std::vector<std::tuple<int, int, int>> flat_edges;
  for (const auto& [u, v] : flat) flat_edges.emplace_back(u, v, 1);
  const int m = static_cast<int>(flat.size());
  std::vector<EdgeSet> out;
  if (k > m) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<char> removed(m, 0);
    for (int i = 0; i < k; ++i) removed[idx[i]] = 1;
    if (side_component_count(g, sides, removed, flat_edges) >= 2) {
      EdgeSet cut;
      for (int i = 0; i < k; ++i) cut.push_back(flat[idx[i]]);
      std::sort(cut.begin(), cut.end());
      out.push_back(std::move(cut));
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int brute_edge_kappa(const Graph& g, const std::vector<VertexSet>& sides) {
  if (sides.size() < 2) {
    throw SucError(Code::usage, "UsageError", "edge cuts need at least two sides");
  }
  for (int k = 0; k <= g.edge_count(); ++k) {
    if (!edge_cuts_of_size(g, sides, k).empty()) return k;
  }
  throw SucError(Code::verify, "NoEndCut", "no edge set separates any two sides");
}

std::vector<EdgeSet> brute_edge_mincuts(const Graph& g, const std::vector<VertexSet>& sides) {
  return edge_cuts_of_size(g, sides, brute_edge_kappa(g, sides));
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

namespace {

struct Builder {
  std::vector<std::string> names;
  std::set<std::pair<std::string, std::string>> edges;

  void vertex(const std::string& n) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  void edge(const std::string& a, const std::string& b) {
    if (a == b) return;
    vertex(a);
    vertex(b);
    auto p = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    edges.insert(p);
  }
  Graph graph() const {
    return Graph::build(names, {edges.begin(), edges.end()});
  }
};

// Ensures connectivity by linking component representatives in name order.
void connect_components(Builder& b) {
  Graph g = b.graph();
  std::vector<VertexSet> comps = g.components();
  for (size_t i = 1; i < comps.size(); ++i) {
    b.edge(g.name(comps[0].front()), g.name(comps[i].front()));
  }
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const std::string& profile) {
  static const std::vector<std::string> kProfiles = {"blob-ring", "blob-tree", "hybrid",
                                                     "erdos-blobs", "necklace"};
  std::string chosen = profile;
  if (profile == "mixed") {
    chosen = kProfiles[seed % kProfiles.size()];
  } else if (std::find(kProfiles.begin(), kProfiles.end(), profile) == kProfiles.end()) {
    throw SucError(Code::usage, "UsageError", "unknown profile '" + profile + "'");
  }

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  auto rnd = [&rng](int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const int end_count = rnd(2, 5);
  const int budget_vertices = 12;

  Builder b;
  std::vector<EndSpec> ends;
  std::vector<std::vector<std::string>> blobs;

  if (chosen == "necklace") {
    // A ring of small end blobs joined by single edges between two distinct
    // ports of each blob.  Every minimum cut picks one vertex at each of two
    // different joins, so non-adjacent joins always yield crossing cuts and
    // this profile reliably exercises the crossing machinery.
    const int m = rnd(4, 5);
    const int grown = (m == 4 && rnd(0, 1) == 1) ? rnd(0, m - 1) : -1;
    for (int e = 0; e < m; ++e) {
      std::string letter(1, static_cast<char>('A' + e));
      int size = (e == grown) ? 3 : 2;
      std::vector<std::string> blob;
      for (int i = 0; i < size; ++i) {
        std::string n = letter + std::to_string(i);
        n[0] = static_cast<char>('a' + e);
        blob.push_back(n);
        b.vertex(n);
      }
      for (size_t i = 0; i < blob.size(); ++i)
        for (size_t j = i + 1; j < blob.size(); ++j) b.edge(blob[i], blob[j]);
      EndSpec spec;
      spec.name = letter;
      spec.terminals = blob;
      std::sort(spec.terminals.begin(), spec.terminals.end());
      ends.push_back(spec);
      blobs.push_back(blob);
    }
    std::vector<std::string> in_port(m), out_port(m);
    for (int e = 0; e < m; ++e) {
      int sz = static_cast<int>(blobs[e].size());
      int a = rnd(0, sz - 1);
      int c = (a + 1 + rnd(0, sz - 2)) % sz;
      in_port[e] = blobs[e][a];
      out_port[e] = blobs[e][c];
    }
    int used_v = 0;
    for (const auto& blob : blobs) used_v += static_cast<int>(blob.size());
    int subdiv = rnd(0, std::min(2, budget_vertices - used_v));
    std::set<int> subdivided;
    while (static_cast<int>(subdivided.size()) < subdiv) subdivided.insert(rnd(0, m - 1));
    int xi = 0;
    for (int e = 0; e < m; ++e) {
      const std::string& from = out_port[e];
      const std::string& to = in_port[(e + 1) % m];
      if (subdivided.count(e)) {
        std::string mid = "x" + std::to_string(xi++);
        b.vertex(mid);
        b.edge(from, mid);
        b.edge(mid, to);
      } else {
        b.edge(from, to);
      }
    }
    RandomInstance inst;
    inst.g = b.graph();
    inst.ends = std::move(ends);
    inst.grf_text = write_grf(inst.g, inst.ends);
    return inst;
  }

  // End blobs: small cliques so each end behaves as an inseparable unit.
  int used = 0;
  for (int e = 0; e < end_count; ++e) {
    int remaining = budget_vertices - used - (end_count - e - 1);
    int size = std::min(rnd(1, 3), std::max(1, remaining - end_count));
    if (size < 1) size = 1;
    std::vector<std::string> blob;
    std::string letter(1, static_cast<char>('A' + e));
    for (int i = 0; i < size; ++i) {
      std::string n = letter + std::to_string(i);
      // Blob vertices use the lowercase letter to keep names distinct from
      // the end label itself.
      n[0] = static_cast<char>('a' + e);
      blob.push_back(n);
      b.vertex(n);
    }
    for (size_t i = 0; i < blob.size(); ++i) {
      for (size_t j = i + 1; j < blob.size(); ++j) b.edge(blob[i], blob[j]);
    }
    EndSpec spec;
    spec.name = letter;
    spec.terminals = blob;
    std::sort(spec.terminals.begin(), spec.terminals.end());
    ends.push_back(spec);
    blobs.push_back(blob);
    used += size;
  }

  // Interior vertices.
  int interior = std::min(budget_vertices - used, rnd(0, 4));
  std::vector<std::string> core;
  for (int i = 0; i < interior; ++i) {
    std::string n = "x" + std::to_string(i);
    core.push_back(n);
    b.vertex(n);
  }

  auto any_of_blob = [&](int e) { return blobs[e][rng() % blobs[e].size()]; };
  auto link_blobs = [&](int e1, int e2) {
    if (!core.empty() && rnd(0, 1) == 0) {
      const std::string& via = core[rng() % core.size()];
      b.edge(any_of_blob(e1), via);
      b.edge(via, any_of_blob(e2));
    } else {
      b.edge(any_of_blob(e1), any_of_blob(e2));
    }
  };

  if (chosen == "blob-ring") {
    for (int e = 0; e < end_count; ++e) {
      link_blobs(e, (e + 1) % end_count);
      if (rnd(0, 2) == 0) link_blobs(e, (e + 1) % end_count);
    }
  } else if (chosen == "blob-tree") {
    for (int e = 1; e < end_count; ++e) {
      link_blobs(rnd(0, e - 1), e);
    }
  } else if (chosen == "hybrid") {
    for (int e = 1; e < end_count; ++e) {
      link_blobs(rnd(0, e - 1), e);
    }
    int extras = rnd(1, 3);
    for (int i = 0; i < extras; ++i) {
      int e1 = rnd(0, end_count - 1), e2 = rnd(0, end_count - 1);
      if (e1 != e2) link_blobs(e1, e2);
    }
  } else {  // erdos-blobs
    std::vector<std::string> all = b.names;
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (rnd(0, 3) == 0) b.edge(all[i], all[j]);
      }
    }
  }

  // Attach any isolated interior vertices and stitch components together.
  for (const std::string& c : core) {
    Graph g = b.graph();
    if (g.degree(*g.id_of(c)) == 0) {
      b.edge(c, any_of_blob(rnd(0, end_count - 1)));
      b.edge(c, any_of_blob(rnd(0, end_count - 1)));
    }
  }
  connect_components(b);

  RandomInstance inst;
  inst.g = b.graph();
  inst.ends = std::move(ends);
  inst.grf_text = write_grf(inst.g, inst.ends);
  return inst;
}

}  // namespace suc
