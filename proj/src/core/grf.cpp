#include "core/grf.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace suc {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw SucError(Code::parse, "ParseError", message, line);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

void check_name(const std::string& name, int line) {
  if (name.empty()) fail(line, "empty vertex name");
  if (name.rfind("\xcf\x89:", 0) == 0) {  // "ω:" is the marker namespace
    fail(line, "vertex name '" + name + "' uses the reserved marker prefix");
  }
}

}  // namespace

GrfFile parse_grf(const std::string& text) {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> edge_list;
  std::vector<EndSpec> ends;
  std::set<std::string> end_names;
  std::set<std::string> end_vertices;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string stripped = raw;
    if (auto pos = stripped.find('#'); pos != std::string::npos) {
      stripped.resize(pos);
    }
    std::vector<std::string> toks = tokenize(stripped);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "v") {
      if (toks.size() != 2) fail(line_no, "expected: v NAME");
      check_name(toks[1], line_no);
      vertices.insert(toks[1]);
    } else if (kind == "e") {
      if (toks.size() != 3) fail(line_no, "expected: e NAME NAME");
      check_name(toks[1], line_no);
      check_name(toks[2], line_no);
      if (toks[1] == toks[2]) fail(line_no, "self-loop at vertex '" + toks[1] + "'");
      std::string a = toks[1], b = toks[2];
      if (a > b) std::swap(a, b);
      if (!edges.emplace(a, b).second) {
        fail(line_no, "duplicate edge " + a + " -- " + b);
      }
      vertices.insert(a);
      vertices.insert(b);
      edge_list.emplace_back(a, b);
    } else if (kind == "end") {
      if (toks.size() < 3) fail(line_no, "expected: end NAME V1 [V2 ...]");
      check_name(toks[1], line_no);
      if (!end_names.insert(toks[1]).second) {
        fail(line_no, "duplicate end name '" + toks[1] + "'");
      }
      EndSpec spec;
      spec.name = toks[1];
      std::set<std::string> seen;
      for (size_t i = 2; i < toks.size(); ++i) {
        check_name(toks[i], line_no);
        if (!vertices.count(toks[i])) {
          fail(line_no, "end '" + spec.name + "' names unknown vertex '" + toks[i] + "'");
        }
        if (!seen.insert(toks[i]).second) {
          fail(line_no, "end '" + spec.name + "' repeats vertex '" + toks[i] + "'");
        }
        if (!end_vertices.insert(toks[i]).second) {
          fail(line_no, "vertex '" + toks[i] + "' belongs to two ends");
        }
        spec.terminals.push_back(toks[i]);
      }
      std::sort(spec.terminals.begin(), spec.terminals.end());
      ends.push_back(std::move(spec));
    } else {
      fail(line_no, "unknown directive '" + kind + "'");
    }
  }
  if (vertices.empty()) fail(line_no == 0 ? 1 : line_no, "no vertices declared");

  GrfFile out;
  out.g = Graph::build(std::vector<std::string>(vertices.begin(), vertices.end()),
                       edge_list);
  out.ends = std::move(ends);
  return out;
}

GrfFile load_grf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SucError(Code::parse, "ParseError", "cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grf(buf.str());
}

std::string write_grf(const Graph& g, const std::vector<EndSpec>& ends) {
  std::ostringstream out;
  for (const std::string& name : g.names()) {
    out << "v " << name << "\n";
  }
  for (const auto& [u, v, mult] : g.edge_list()) {
    for (int i = 0; i < mult; ++i) {
      out << "e " << g.name(u) << " " << g.name(v) << "\n";
    }
  }
  for (const EndSpec& spec : ends) {
    out << "end " << spec.name;
    std::vector<std::string> ts = spec.terminals;
    std::sort(ts.begin(), ts.end());
    for (const std::string& t : ts) out << " " << t;
    out << "\n";
  }
  return out.str();
}

}  // namespace suc
