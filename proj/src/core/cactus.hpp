#pragma once

#include "core/pretree.hpp"

namespace suc {

// One minimal edge cut of a cactus: a bridge, or two edges of one cycle.  A
// 2-cycle cut repeats the same endpoint pair once per removed copy.
struct CactusCut {
  EdgeSet edges;
  EndPartition partition;  // induced partition of the analysed ends
};

// A cactus representation of the minimum edge cuts of a graph: a connected
// multigraph in which every edge lies on at most one cycle, together with
//  - f: each analysed end (or, for the whole-vertex-set pipeline, each
//    original vertex) mapped to a cactus vertex, and
//  - g: a bijection from the equivalence classes of minimum edge cuts onto
//    the minimal edge cuts of the cactus that preserves separation: ends
//    e1, e2 are separated by a class exactly when f(e1), f(e2) land in
//    different components after removing the image cut.
struct Cactus {
  Graph graph;
  std::vector<std::vector<int>> cycles;  // vertex cycles; a 2-cycle is {u, v}
  std::vector<EdgePair> bridges;         // edges on no cycle, ascending
  std::vector<std::string> end_names;    // analysed ends, in partition order
  std::map<std::string, std::string> f;  // end / original vertex -> cactus vertex
  std::vector<CactusCut> cuts;           // all minimal cactus cuts, ascending by edge set
  std::vector<int> g_of_class;           // cut class id -> index into cuts
  // Each class's cuts pulled back to edge sets of the input graph.
  std::vector<std::vector<EdgeSet>> edge_cuts_of_class;
  int kappa_edge = 0;  // minimum edge cut size of the input
};

// The barycentric subdivision: one new vertex per edge copy, named
// "e:<u>:<v>" with the endpoint names in lexicographic order (parallel
// copies get an extra ":<k>" counter), joined to both endpoints.  Original
// vertices keep their names and become pairwise non-adjacent.
Graph barycentric_subdivide(const Graph& g);

// Replace each listed vertex v by a clique of n+1 vertices "t:<v>:<i>", each
// joined to every former neighbour of v (respecting edge multiplicity; a
// neighbour that is itself replaced contributes its whole clique).
Graph thicken(const Graph& g, const std::vector<std::string>& originals, int n);

// Minimum size of an edge set whose removal separates two of the given ends,
// computed with the vertex-disjoint-path primitive on the barycentric
// subdivision: original vertices carry unbounded capacity, so every minimum
// separator consists of edge vertices only.
int edge_cut_order(const Graph& g, const std::vector<EndSpec>& ends);

// Build the cactus of all minimum edge cuts separating the given ends.  The
// graph is subdivided and its original vertices thickened into cliques too
// large to cut, so that the vertex-cut analysis of the derived graph sees
// exactly the edge cuts of the input.  The derived graph is checked to be as
// tame as edge cuts demand -- no slices, every cut made of edge vertices,
// every cut two-component, empty crossing centres, quasi-equivalent half-cuts
// equivalent -- and every violation throws NonEdgeCutArtifact.  Rings then
// collapse into plain cycles and isolated classes into bridges or 2-cycles,
// glued at shared junction vertices.
Cactus edge_end_pipeline(const Graph& g, const std::vector<EndSpec>& ends,
                         long long budget = 5'000'000);

// The cactus of all global minimum edge cuts: every vertex of the input is
// treated as its own end, so equivalence classes of cuts of the derived
// graph correspond one-to-one to minimum edge cuts of the input.
Cactus finite_edge_pipeline(const Graph& g, long long budget = 5'000'000);

}  // namespace suc
