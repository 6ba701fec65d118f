#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/ends.hpp"
#include "core/graph.hpp"

namespace suc {

// A parsed .grf description: a simple graph plus named end specifications.
struct GrfFile {
  Graph g;
  std::vector<EndSpec> ends;
};

// Parses the .grf text format:
//   # comment
//   v NAME            (optional pre-declaration)
//   e NAME NAME       (edge; endpoints auto-declared)
//   end NAME V1 V2 …  (end over already-known vertices)
// Whitespace-separated; LF or CRLF; names must not start with "ω:" (reserved
// for internal marker vertices).  Duplicate edges, self-loops, unknown
// vertices on `end` lines, duplicate end names, and overlapping ends are
// errors carrying the offending line number.
GrfFile parse_grf(const std::string& text);

// Reads and parses a file; file-system errors become parse errors.
GrfFile load_grf(const std::string& path);

// Serializes a graph + ends back to canonical .grf text (sorted vertices,
// sorted edges, ends in given order).
std::string write_grf(const Graph& g, const std::vector<EndSpec>& ends);

}  // namespace suc
