#include "core/relations.hpp"

#include <algorithm>

namespace suc {

bool is_nested(const AugmentedGraph& ag, const VertexSet& k, const VertexSet& l) {
  std::vector<VertexSet> ck = ag.g.components(k);
  std::vector<VertexSet> cl = ag.g.components(l);
  for (const VertexSet& e : ck) {
    for (const VertexSet& f : cl) {
      if (vs_subset(e, f) || vs_subset(f, e)) return true;
    }
  }
  return false;
}

bool partitions_cross(const EndPartition& a, const EndPartition& b) {
  const int na = a.block_count();
  const int nb = b.block_count();
  // Precompute which block pairs intersect.
  std::vector<std::vector<char>> hit(na, std::vector<char>(nb, 0));
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      for (int e : a.blocks[i]) {
        if (std::binary_search(b.blocks[j].begin(), b.blocks[j].end(), e)) {
          hit[i][j] = 1;
          break;
        }
      }
    }
  }
  for (int i1 = 0; i1 < na; ++i1) {
    for (int i2 = i1 + 1; i2 < na; ++i2) {
      for (int j1 = 0; j1 < nb; ++j1) {
        for (int j2 = j1 + 1; j2 < nb; ++j2) {
          if (hit[i1][j1] && hit[i1][j2] && hit[i2][j1] && hit[i2][j2]) return true;
        }
      }
    }
  }
  return false;
}

CrossingStructure crossing_structure(const MincutSet& ms) {
  const int m = static_cast<int>(ms.classes.size());
  CrossingStructure cs;
  cs.crosses.assign(m, {});
  cs.isolated.assign(m, 1);
  cs.hash_of_class.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (partitions_cross(ms.classes[i].partition, ms.classes[j].partition)) {
        cs.crosses[i].push_back(j);
        cs.crosses[j].push_back(i);
        cs.isolated[i] = cs.isolated[j] = 0;
      }
    }
  }
  for (auto& row : cs.crosses) std::sort(row.begin(), row.end());
  std::vector<char> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i] || cs.isolated[i]) continue;
    std::vector<int> comp;
    std::vector<int> stack = {i};
    seen[i] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : cs.crosses[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    for (int c : comp) cs.hash_of_class[c] = static_cast<int>(cs.hash_classes.size());
    cs.hash_classes.push_back(std::move(comp));
  }
  return cs;
}

namespace {

bool block_inside_some(const std::vector<int>& needle, const EndPartition& hay) {
  for (const auto& blk : hay.blocks) {
    if (std::includes(blk.begin(), blk.end(), needle.begin(), needle.end())) return true;
  }
  return false;
}

}  // namespace

DivideResult divides(const EndPartition& divider, const EndPartition& dividee) {
  if (divider == dividee) {
    throw SucError(Code::internal, "NotDividing",
                   "division of a partition by itself is undefined");
  }
  std::vector<DivideResult> found;
  for (int i = 0; i < dividee.block_count(); ++i) {
    DivideResult r;
    r.block = i;
    // Form (a): all dividee blocks except block i inside one divider block.
    std::vector<int> rest;
    for (int k = 0; k < dividee.block_count(); ++k) {
      if (k == i) continue;
      rest.insert(rest.end(), dividee.blocks[k].begin(), dividee.blocks[k].end());
    }
    std::sort(rest.begin(), rest.end());
    if (block_inside_some(rest, divider)) r.by_dividee_containment = true;
    // Form (b): all divider blocks except one inside dividee block i.
    for (int j = 0; j < divider.block_count(); ++j) {
      std::vector<int> other;
      for (int k = 0; k < divider.block_count(); ++k) {
        if (k == j) continue;
        other.insert(other.end(), divider.blocks[k].begin(), divider.blocks[k].end());
      }
      std::sort(other.begin(), other.end());
      if (std::includes(dividee.blocks[i].begin(), dividee.blocks[i].end(), other.begin(),
                        other.end())) {
        r.by_divider_containment = true;
        break;
      }
    }
    if (r.by_dividee_containment || r.by_divider_containment) found.push_back(r);
  }
  if (found.empty()) {
    throw SucError(Code::verify, "NotDividing",
                   "partition " + divider.to_string() + " does not divide " +
                       dividee.to_string());
  }
  if (found.size() > 1) {
    throw SucError(Code::verify, "NotDividing",
                   "ambiguous division of " + dividee.to_string() + " by " +
                       divider.to_string());
  }
  return found.front();
}

}  // namespace suc
