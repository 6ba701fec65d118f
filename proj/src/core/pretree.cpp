#include "core/pretree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace suc {

namespace {

[[noreturn]] void fail_verify(const std::string& msg) {
  throw SucError(Code::verify, "VerificationFailed", msg);
}

void vassert(bool ok, const std::string& msg) {
  if (!ok) fail_verify(msg);
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

// Enumerate maximal cliques of a symmetric adjacency relation.
void bron_kerbosch(std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   const std::vector<std::vector<char>>& adj,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(r, std::move(p2), std::move(x2), adj, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

bool Pretree::between(int x, int y, int z) const {
  if (y == x || y == z) return false;
  return div_coarse[x][y] != div_coarse[z][y];
}

bool Pretree::adjacent(int x, int y) const {
  if (x == y) return true;
  for (int z = 0; z < element_count(); ++z)
    if (between(x, z, y)) return false;
  return true;
}

int Pretree::tree_vertex_count() const {
  return element_count() + static_cast<int>(stars.size());
}

std::vector<std::pair<int, int>> Pretree::tree_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (size_t s = 0; s < stars.size(); ++s)
    for (int v : stars[s]) edges.emplace_back(v, element_count() + static_cast<int>(s));
  return edges;
}

Pretree build_pretree(const AugmentedGraph& ag, const MincutSet& ms, const CrossingStructure& cs,
                      const std::vector<HashClass>& hcs) {
  (void)ag;
  Pretree pt;

  // Classes formed at ring edges never cross anything, so they are excluded
  // from the isolated elements.
  std::set<int> edge_classes;
  for (const HashClass& hc : hcs) {
    for (int c : hc.corner_classes) {
      vassert(cs.hash_of_class[c] == -1,
              "ring-edge class " + std::to_string(c) + " must cross nothing");
      edge_classes.insert(c);
    }
  }

  for (size_t i = 0; i < hcs.size(); ++i) {
    const HashClass& hc = hcs[i];
    PretreeElement el;
    el.is_crossing = true;
    el.crossing_index = static_cast<int>(i);
    el.label = "crossing(" + join_ints(hc.member_classes) + ")";
    el.fine = hc.fine;
    el.coarse = hc.coarse;
    el.fine_to_coarse.resize(hc.fine.block_count());
    for (int b = 0; b < hc.fine.block_count(); ++b) {
      const int cb = hc.coarse.block_of(hc.fine.blocks[b].front());
      for (int e : hc.fine.blocks[b])
        vassert(hc.coarse.block_of(e) == cb,
                el.label + ": fine block " + std::to_string(b) + " straddles coarse blocks");
      el.fine_to_coarse[b] = cb;
    }
    el.rep_cuts = hc.member_cuts;
    pt.elements.push_back(std::move(el));
  }

  for (size_t cid = 0; cid < ms.classes.size(); ++cid) {
    if (!cs.isolated[cid] || edge_classes.count(static_cast<int>(cid))) continue;
    PretreeElement el;
    el.class_id = static_cast<int>(cid);
    el.label = "isolated(" + std::to_string(cid) + ")";
    el.fine = ms.classes[cid].partition;
    el.coarse = ms.classes[cid].partition;
    el.fine_to_coarse.resize(el.fine.block_count());
    for (int b = 0; b < el.fine.block_count(); ++b) el.fine_to_coarse[b] = b;
    el.rep_cuts = ms.classes[cid].cut_ids;
    pt.elements.push_back(std::move(el));
  }

  const int m = pt.element_count();
  vassert(m >= 1, "pretree must contain at least one element");

  // Division tables: every cut of x divides one fine block of y, the same
  // block for all cuts of x, and the coarse block containing it.
  pt.div_fine.assign(m, std::vector<int>(m, -1));
  pt.div_coarse.assign(m, std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      const PretreeElement& ex = pt.elements[x];
      const PretreeElement& ey = pt.elements[y];
      int fine_block = -1;
      int coarse_block = -1;
      for (int cid : ex.rep_cuts) {
        const EndPartition& p = ms.cuts[cid].partition;
        DivideResult rf, rc;
        try {
          rf = divides(p, ey.fine);
          rc = divides(p, ey.coarse);
        } catch (const SucError& e) {
          fail_verify(ex.label + " does not divide " + ey.label + ": " + e.what());
        }
        if (fine_block == -1) {
          fine_block = rf.block;
          coarse_block = rc.block;
        } else {
          vassert(rf.block == fine_block,
                  "cuts of " + ex.label + " divide different fine blocks of " + ey.label);
          vassert(rc.block == coarse_block,
                  "cuts of " + ex.label + " divide different coarse blocks of " + ey.label);
        }
        vassert(rc.block == ey.fine_to_coarse[rf.block],
                ex.label + " divides a coarse block of " + ey.label +
                    " not containing the divided fine block");
      }
      pt.div_fine[x][y] = fine_block;
      pt.div_coarse[x][y] = coarse_block;
    }
  }

  // Pretree axioms for the betweenness relation.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      vassert(!pt.between(x, y, x), "no element may lie between an element and itself");
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        vassert(pt.between(x, y, z) == pt.between(z, y, x), "betweenness must be symmetric");
        if (pt.between(x, y, z))
          vassert(!pt.between(x, z, y),
                  "betweenness must be antisymmetric in its last two arguments");
      }
    }
  }
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z)
      for (int y = 0; y < m; ++y)
        if (pt.between(x, z, y))
          for (int w = 0; w < m; ++w)
            if (w != x && w != y && w != z)
              vassert(pt.between(x, z, w) || pt.between(y, z, w),
                      "an element between two others must separate every further element "
                      "from one of them");

  // Maximal stars via maximal cliques of the adjacency relation.
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && pt.adjacent(x, y)) adj[x][y] = 1;
  {
    std::vector<int> r, p, x;
    for (int v = 0; v < m; ++v) p.push_back(v);
    bron_kerbosch(r, std::move(p), {}, adj, pt.stars);
  }
  for (std::vector<int>& star : pt.stars) std::sort(star.begin(), star.end());
  std::sort(pt.stars.begin(), pt.stars.end());

  std::vector<char> covered(m, 0);
  for (const std::vector<int>& star : pt.stars)
    for (int v : star) covered[v] = 1;
  for (int v = 0; v < m; ++v)
    vassert(covered[v], pt.elements[v].label + " belongs to no maximal star");

  // All mates of a crossing element in one star divide a single coarse block
  // of it; the star is attached to the ring there.
  for (const std::vector<int>& star : pt.stars) {
    for (int q : star) {
      if (!pt.elements[q].is_crossing) continue;
      int block = -1;
      for (int x : star) {
        if (x == q) continue;
        if (block == -1) block = pt.div_coarse[x][q];
        vassert(pt.div_coarse[x][q] == block,
                "star mates of " + pt.elements[q].label + " divide different coarse blocks");
      }
    }
  }

  // The bipartite element/star graph must be a tree.
  const int n = pt.tree_vertex_count();
  const std::vector<std::pair<int, int>> edges = pt.tree_edges();
  vassert(static_cast<int>(edges.size()) == n - 1,
          "element/star graph has " + std::to_string(edges.size()) + " edges for " +
              std::to_string(n) + " vertices");
  std::vector<std::vector<int>> nbr(n);
  for (auto [a, b] : edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int u : nbr[queue[head]])
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  vassert(static_cast<int>(queue.size()) == n, "element/star graph is disconnected");

  return pt;
}

}  // namespace suc
