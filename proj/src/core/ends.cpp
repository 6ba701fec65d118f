#include "core/ends.hpp"

#include <algorithm>
#include <set>

namespace suc {

// Marker names live in a reserved namespace: the .grf parser rejects vertex
// names starting with "ω:", so a marker can never collide with an input
// vertex.
static const char* const kMarker = "\xcf\x89:";  // "ω:"

bool AugmentedGraph::vs_contains_marker(int v) const {
  return std::binary_search(markers.begin(), markers.end(), v);
}

int AugmentedGraph::marker_index(int v) const {
  auto it = std::lower_bound(markers.begin(), markers.end(), v);
  if (it == markers.end() || *it != v) return -1;
  return static_cast<int>(it - markers.begin());
}

AugmentedGraph attach_markers(const Graph& base, const std::vector<EndSpec>& ends) {
  if (ends.size() < 2) {
    throw SucError(Code::parse, "NoEndCut", "at least two ends are required");
  }
  for (const std::string& nm : base.names()) {
    if (nm.rfind(kMarker, 0) == 0) {
      throw SucError(Code::parse, "ParseError",
                     "vertex name collides with marker namespace: " + nm);
    }
  }
  std::set<std::string> end_names;
  std::set<std::string> used_terminals;
  std::vector<std::string> names = base.names();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v, m] : base.edge_list()) {
    for (int i = 0; i < m; ++i) edges.emplace_back(base.name(u), base.name(v));
  }
  for (const EndSpec& e : ends) {
    if (!end_names.insert(e.name).second) {
      throw SucError(Code::parse, "ParseError", "duplicate end name: " + e.name);
    }
    if (e.terminals.empty()) {
      throw SucError(Code::parse, "ParseError", "end has no terminals: " + e.name);
    }
    std::string marker = kMarker + e.name;
    names.push_back(marker);
    for (const std::string& t : e.terminals) {
      if (!base.id_of(t)) {
        throw SucError(Code::parse, "UnknownTerminalVertex",
                       "end " + e.name + " names unknown vertex: " + t);
      }
      if (!used_terminals.insert(t).second) {
        throw SucError(Code::parse, "OverlappingEnds",
                       "vertex belongs to two ends: " + t);
      }
      edges.emplace_back(marker, t);
    }
  }

  AugmentedGraph ag;
  ag.g = Graph::build(names, edges);

  // Recover marker ids in end-declaration order of names; store ascending with
  // names parallel.
  std::vector<std::pair<int, std::string>> ms;
  for (const EndSpec& e : ends) {
    ms.emplace_back(*ag.g.id_of(kMarker + e.name), e.name);
  }
  std::sort(ms.begin(), ms.end());
  for (auto& [id, nm] : ms) {
    ag.markers.push_back(id);
    ag.end_names.push_back(nm);
  }
  for (int v = 0; v < ag.g.n(); ++v) {
    if (ag.marker_index(v) < 0) ag.originals.push_back(v);
  }
  return ag;
}

EndPartition EndPartition::of_blocks(std::vector<std::vector<int>> blocks) {
  EndPartition p;
  for (auto& b : blocks) {
    if (b.empty()) {
      throw SucError(Code::internal, "InternalError", "empty partition block");
    }
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.blocks = std::move(blocks);
  return p;
}

int EndPartition::block_of(int end) const {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), end)) return i;
  }
  throw SucError(Code::internal, "InternalError", "end missing from partition");
}

std::string EndPartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "|";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

EndPartition common_refinement(const EndPartition& a, const EndPartition& b) {
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (const auto& blk : a.blocks) {
    for (int e : blk) {
      cells[{a.block_of(e), b.block_of(e)}].push_back(e);
    }
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
  return EndPartition::of_blocks(std::move(blocks));
}

CutView cut_view(const AugmentedGraph& ag, const VertexSet& cut) {
  for (int v : cut) {
    if (ag.is_marker(v)) {
      throw SucError(Code::verify, "MarkerInCut",
                     "separator contains marker vertex: " + ag.g.name(v));
    }
  }
  CutView view;
  view.components = ag.g.components(cut);
  for (const VertexSet& comp : view.components) {
    std::vector<int> ends_here;
    for (int v : comp) {
      int idx = ag.marker_index(v);
      if (idx >= 0) ends_here.push_back(idx);
    }
    if (ends_here.empty()) {
      view.slices.push_back(comp);
    } else {
      ++view.marked_components;
    }
    view.ends_by_component.push_back(std::move(ends_here));
  }
  return view;
}

bool is_end_cut(const AugmentedGraph& ag, const VertexSet& cut) {
  return cut_view(ag, cut).marked_components >= 2;
}

EndPartition end_partition(const AugmentedGraph& ag, const VertexSet& cut) {
  CutView view = cut_view(ag, cut);
  if (view.marked_components < 2) {
    throw SucError(Code::verify, "NoEndCut",
                   "vertex set does not separate the ends");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& ends_here : view.ends_by_component) {
    if (!ends_here.empty()) blocks.push_back(ends_here);
  }
  return EndPartition::of_blocks(std::move(blocks));
}

}  // namespace suc
