#include "core/flow.hpp"

#include <limits>
#include <queue>

namespace suc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNet(int nodes) : adj(nodes) {}

  void add(int from, int to, int cap) {
    adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
  }

  // One Edmonds-Karp augmentation; returns the bottleneck (0 if no path).
  int augment(int s, int t) {
    std::vector<std::pair<int, int>> prev(adj.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    prev[s] = {s, 0};
    while (!q.empty() && prev[t].first < 0) {
      int v = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && prev[a.to].first < 0) {
          prev[a.to] = {v, i};
          q.push(a.to);
        }
      }
    }
    if (prev[t].first < 0) return 0;
    int bottleneck = kInf;
    for (int v = t; v != s;) {
      auto [p, i] = prev[v];
      bottleneck = std::min(bottleneck, adj[p][i].cap);
      v = p;
    }
    for (int v = t; v != s;) {
      auto [p, i] = prev[v];
      adj[p][i].cap -= bottleneck;
      adj[adj[p][i].to][adj[p][i].rev].cap += bottleneck;
      v = p;
    }
    return bottleneck;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : adj[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
      }
    }
    return seen;
  }
};

}  // namespace

PathCount disjoint_path_count(const Graph& g, const VertexSet& sources,
                              const VertexSet& sinks, const VertexSet& uncuttable) {
  if (vs_intersects(sources, sinks)) {
    throw SucError(Code::internal, "InfeasibleSeparator",
                   "source and sink sets overlap");
  }
  const int n = g.n();
  // Node layout: in(v) = 2v, out(v) = 2v + 1, source = 2n, sink = 2n + 1.
  FlowNet net(2 * n + 2);
  std::vector<char> unlimited(n, 0);
  for (int v : uncuttable) unlimited[v] = 1;
  for (int v : sources) unlimited[v] = 1;
  for (int v : sinks) unlimited[v] = 1;
  for (int v = 0; v < n; ++v) {
    net.add(2 * v, 2 * v + 1, unlimited[v] ? kInf : 1);
  }
  for (const auto& [u, v, m] : g.edge_list()) {
    (void)m;  // multiplicity never limits vertex-disjoint paths
    net.add(2 * u + 1, 2 * v, kInf);
    net.add(2 * v + 1, 2 * u, kInf);
  }
  const int s = 2 * n;
  const int t = 2 * n + 1;
  for (int v : sources) net.add(s, 2 * v, kInf);
  for (int v : sinks) net.add(2 * v + 1, t, kInf);

  long long flow = 0;
  while (true) {
    int pushed = net.augment(s, t);
    if (pushed == 0) break;
    flow += pushed;
    if (flow > n) {
      // Any finite separator consists of ordinary vertices, of which there
      // are fewer than n, so the two sides cannot be separated at all.
      return {true, 0, {}};
    }
  }

  PathCount out;
  out.infinite = false;
  out.count = static_cast<int>(flow);
  std::vector<char> reach = net.residual_reachable(s);
  for (int v = 0; v < n; ++v) {
    if (!unlimited[v] && reach[2 * v] && !reach[2 * v + 1]) {
      out.separator.push_back(v);
    }
  }
  if (static_cast<int>(out.separator.size()) != out.count) {
    throw SucError(Code::internal, "InfeasibleSeparator",
                   "max-flow separator size disagrees with path count");
  }
  return out;
}

}  // namespace suc
