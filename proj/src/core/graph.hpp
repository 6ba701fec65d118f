#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace suc {

// Error codes; the CLI maps these directly to process exit codes.
enum class Code : int {
  parse = 2,
  budget = 3,
  verify = 4,
  usage = 5,
  internal = 6,
};

class SucError : public std::runtime_error {
 public:
  SucError(Code code, std::string kind, const std::string& message, int line = 0)
      : std::runtime_error(message), code(code), kind(std::move(kind)), line(line) {}

  Code code;
  std::string kind;  // stable machine-readable tag, e.g. "OverlappingEnds"
  int line;          // 1-based input line for parse errors; 0 otherwise
};

// A set of vertex ids, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// An undirected edge as an ordered id pair (u < v).  An edge set lists pairs
// ascending; a pair repeats once per parallel copy it removes.
using EdgePair = std::pair<int, int>;
using EdgeSet = std::vector<EdgePair>;

VertexSet vs_sorted(std::vector<int> v);
bool vs_contains(const VertexSet& a, int x);
bool vs_subset(const VertexSet& a, const VertexSet& b);  // a subset of b
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_difference(const VertexSet& a, const VertexSet& b);
bool vs_intersects(const VertexSet& a, const VertexSet& b);

// Finite undirected multigraph with named vertices.  Vertex ids are assigned
// in lexicographic name order, so id order and name order always agree and
// every structure derived from a graph is reproducible from the input alone.
class Graph {
 public:
  static Graph build(const std::vector<std::string>& names,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  int n() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> id_of(const std::string& name) const;

  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;  // counting edge multiplicity

  // Edges as (u, v, multiplicity) with u < v, ascending.
  std::vector<std::tuple<int, int, int>> edge_list() const;
  int edge_count() const;  // counting multiplicity

  // Connected components of the graph induced on V - removed, each a sorted
  // VertexSet; components ordered by smallest member.
  std::vector<VertexSet> components(const VertexSet& removed = {}) const;
  bool connected() const;

  // All vertices not in `inside` adjacent to a vertex of `inside`.
  VertexSet boundary(const VertexSet& inside) const;

  // V - (c, boundary(c)).
  VertexSet star_complement(const VertexSet& c) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::vector<std::vector<int>> adj_;        // sorted neighbor ids, no multiplicity
  std::map<std::pair<int, int>, int> mult_;  // key u < v
};

}  // namespace suc
