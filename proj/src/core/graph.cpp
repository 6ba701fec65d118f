#include "core/graph.hpp"

#include <algorithm>
#include <queue>

namespace suc {

VertexSet vs_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool vs_contains(const VertexSet& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet vs_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool vs_intersects(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

Graph Graph::build(const std::vector<std::string>& names,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  g.names_ = names;
  std::sort(g.names_.begin(), g.names_.end());
  g.names_.erase(std::unique(g.names_.begin(), g.names_.end()), g.names_.end());
  for (int i = 0; i < static_cast<int>(g.names_.size()); ++i) {
    g.ids_[g.names_[i]] = i;
  }
  g.adj_.assign(g.names_.size(), {});
  for (const auto& [a, b] : edges) {
    auto ia = g.ids_.find(a);
    auto ib = g.ids_.find(b);
    if (ia == g.ids_.end() || ib == g.ids_.end()) {
      throw SucError(Code::internal, "UnknownVertex",
                     "edge endpoint not declared: " + (ia == g.ids_.end() ? a : b));
    }
    int u = ia->second;
    int v = ib->second;
    if (u == v) {
      throw SucError(Code::internal, "SelfLoop", "self-loop on vertex: " + a);
    }
    if (u > v) std::swap(u, v);
    int& m = g.mult_[{u, v}];
    if (m == 0) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    ++m;
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
  }
  return g;
}

std::optional<int> Graph::id_of(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int Graph::multiplicity(int u, int v) const {
  if (u == v) return 0;
  if (u > v) std::swap(u, v);
  auto it = mult_.find({u, v});
  return it == mult_.end() ? 0 : it->second;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w : adj_[v]) d += multiplicity(v, w);
  return d;
}

std::vector<std::tuple<int, int, int>> Graph::edge_list() const {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(mult_.size());
  for (const auto& [key, m] : mult_) {
    out.emplace_back(key.first, key.second, m);
  }
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& [key, m] : mult_) total += m;
  return total;
}

std::vector<VertexSet> Graph::components(const VertexSet& removed) const {
  std::vector<char> gone(names_.size(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<char> seen(names_.size(), 0);
  std::vector<VertexSet> out;
  for (int s = 0; s < n(); ++s) {
    if (gone[s] || seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj_[v]) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // BFS starts at ascending roots, so components are already ordered by
  // smallest member.
  return out;
}

bool Graph::connected() const {
  if (n() == 0) return true;
  return components().size() == 1;
}

VertexSet Graph::boundary(const VertexSet& inside) const {
  std::vector<char> in(names_.size(), 0);
  for (int v : inside) in[v] = 1;
  VertexSet out;
  for (int v : inside) {
    for (int w : adj_[v]) {
      if (!in[w]) out.push_back(w);
    }
  }
  return vs_sorted(std::move(out));
}

VertexSet Graph::star_complement(const VertexSet& c) const {
  VertexSet all(names_.size());
  for (int i = 0; i < n(); ++i) all[i] = i;
  return vs_difference(all, vs_union(c, boundary(c)));
}

}  // namespace suc
