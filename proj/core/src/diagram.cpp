#include "morseflow/diagram.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace morseflow {

namespace {

constexpr std::string_view kVertexKindNames[] = {
    "int_source", "int_saddle",     "int_sink", "bnd_source",
    "bnd_saddle_in", "bnd_saddle_out", "bnd_sink",
};
constexpr std::string_view kEdgeKindNames[] = {"red", "green", "bnd_arc"};

void rebase_at_least(std::vector<Dart>& cycle) {
  if (cycle.empty()) return;
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
}

}  // namespace

std::string_view to_string(VertexKind k) {
  return kVertexKindNames[static_cast<int>(k)];
}

std::string_view to_string(EdgeKind k) {
  return kEdgeKindNames[static_cast<int>(k)];
}

VertexKind vertex_kind_from_string(std::string_view s) {
  for (int i = 0; i < kVertexKindCount; ++i) {
    if (kVertexKindNames[i] == s) return static_cast<VertexKind>(i);
  }
  throw std::invalid_argument("unknown vertex kind '" + std::string(s) + "'");
}

EdgeKind edge_kind_from_string(std::string_view s) {
  for (int i = 0; i < 3; ++i) {
    if (kEdgeKindNames[i] == s) return static_cast<EdgeKind>(i);
  }
  throw std::invalid_argument("unknown edge kind '" + std::string(s) + "'");
}

SeparatrixDiagram::SeparatrixDiagram(std::vector<Vertex> vertices,
                                     std::vector<Edge> edges,
                                     std::vector<std::vector<Dart>> rotation)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)) {
  using Code = DiagramError::Code;

  {
    std::unordered_map<std::string_view, int> seen;
    for (const auto& v : vertices_) {
      if (seen[v.id]++ > 0) throw DiagramError(Code::DuplicateId, "duplicate vertex id '" + v.id + "'");
    }
    seen.clear();
    for (const auto& e : edges_) {
      if (seen[e.id]++ > 0) throw DiagramError(Code::DuplicateId, "duplicate edge id '" + e.id + "'");
    }
  }
  for (const auto& e : edges_) {
    if (e.tail >= vertices_.size() || e.head >= vertices_.size()) {
      throw DiagramError(Code::DanglingEndpoint, "edge '" + e.id + "' has a missing endpoint");
    }
  }
  if (rotation_.size() != vertices_.size()) {
    throw DiagramError(Code::RotationMismatch, "rotation count differs from vertex count");
  }

  const std::size_t darts = 2 * edges_.size();
  succ_.assign(darts, Dart{});
  pred_.assign(darts, Dart{});
  std::vector<char> placed(darts, 0);
  for (std::uint32_t v = 0; v < rotation_.size(); ++v) {
    auto& cycle = rotation_[v];
    for (const Dart& d : cycle) {
      if (d.edge >= edges_.size()) {
        throw DiagramError(Code::RotationMismatch,
                           "rotation of '" + vertices_[v].id + "' names a missing edge");
      }
      if (vertex_of(d) != v) {
        throw DiagramError(Code::RotationMismatch, "rotation of '" + vertices_[v].id +
                                                       "' lists a dart of edge '" +
                                                       edges_[d.edge].id + "' not incident to it");
      }
      if (placed[d.index()]++) {
        throw DiagramError(Code::RotationMismatch,
                           "dart of edge '" + edges_[d.edge].id + "' listed twice");
      }
    }
    rebase_at_least(cycle);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Dart next = cycle[(i + 1) % cycle.size()];
      succ_[cycle[i].index()] = next;
      pred_[next.index()] = cycle[i];
    }
  }
  for (std::uint32_t i = 0; i < darts; ++i) {
    if (!placed[i]) {
      const Dart d = Dart::from_index(i);
      throw DiagramError(Code::RotationMismatch,
                         "rotation of '" + vertices_[vertex_of(d)].id + "' misses a dart of edge '" +
                             edges_[d.edge].id + "'");
    }
  }
}

std::uint32_t SeparatrixDiagram::find_vertex(std::string_view id) const {
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw DiagramError(DiagramError::Code::DanglingEndpoint,
                     "no vertex with id '" + std::string(id) + "'");
}

std::uint32_t SeparatrixDiagram::find_edge(std::string_view id) const {
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw DiagramError(DiagramError::Code::DanglingEndpoint,
                     "no edge with id '" + std::string(id) + "'");
}

std::array<int, kVertexKindCount> SeparatrixDiagram::kind_counts() const {
  std::array<int, kVertexKindCount> counts{};
  for (const auto& v : vertices_) ++counts[static_cast<int>(v.kind)];
  return counts;
}

SeparatrixDiagram build_diagram(const std::vector<VertexSpec>& vertices,
                                const std::vector<EdgeSpec>& edges,
                                const std::map<std::string, std::vector<DartRef>>& rotation) {
  using Code = DiagramError::Code;
  std::unordered_map<std::string, std::uint32_t> vertex_index;
  std::unordered_map<std::string, std::uint32_t> edge_index;

  std::vector<Vertex> vs;
  vs.reserve(vertices.size());
  for (const auto& spec : vertices) {
    if (!vertex_index.emplace(spec.id, static_cast<std::uint32_t>(vs.size())).second) {
      throw DiagramError(Code::DuplicateId, "duplicate vertex id '" + spec.id + "'");
    }
    vs.push_back({spec.id, spec.kind});
  }

  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!edge_index.emplace(spec.id, static_cast<std::uint32_t>(es.size())).second) {
      throw DiagramError(Code::DuplicateId, "duplicate edge id '" + spec.id + "'");
    }
    auto t = vertex_index.find(spec.tail);
    auto h = vertex_index.find(spec.head);
    if (t == vertex_index.end() || h == vertex_index.end()) {
      throw DiagramError(Code::DanglingEndpoint, "edge '" + spec.id + "' names a missing vertex");
    }
    es.push_back({spec.id, t->second, h->second, spec.kind});
  }

  std::vector<std::vector<Dart>> rot(vs.size());
  for (const auto& [vid, darts] : rotation) {
    auto v = vertex_index.find(vid);
    if (v == vertex_index.end()) {
      throw DiagramError(Code::RotationMismatch, "rotation given for missing vertex '" + vid + "'");
    }
    for (const auto& ref : darts) {
      auto e = edge_index.find(ref.edge);
      if (e == edge_index.end()) {
        throw DiagramError(Code::RotationMismatch,
                           "rotation of '" + vid + "' names missing edge '" + ref.edge + "'");
      }
      rot[v->second].push_back({e->second, ref.end});
    }
  }
  return SeparatrixDiagram(std::move(vs), std::move(es), std::move(rot));
}

SeparatrixDiagram reverse_flow(const SeparatrixDiagram& d) {
  std::vector<Vertex> vs = d.vertices();
  for (auto& v : vs) v.kind = reversed(v.kind);
  std::vector<Edge> es = d.edges();
  for (auto& e : es) {
    std::swap(e.tail, e.head);
    e.kind = reversed(e.kind);
  }
  std::vector<std::vector<Dart>> rot = d.rotations();
  for (auto& cycle : rot) {
    for (auto& dart : cycle) dart = dart.reverse();
  }
  return SeparatrixDiagram(std::move(vs), std::move(es), std::move(rot));
}

SeparatrixDiagram mirror(const SeparatrixDiagram& d) {
  std::vector<std::vector<Dart>> rot = d.rotations();
  for (auto& cycle : rot) std::reverse(cycle.begin(), cycle.end());
  return SeparatrixDiagram(d.vertices(), d.edges(), std::move(rot));
}

SeparatrixDiagram relabel(const SeparatrixDiagram& d,
                          std::span<const std::uint32_t> vertex_order,
                          std::span<const std::uint32_t> edge_order) {
  if (vertex_order.size() != d.vertex_count() || edge_order.size() != d.edge_count()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<std::uint32_t> new_vertex(d.vertex_count());
  std::vector<std::uint32_t> new_edge(d.edge_count());
  for (std::uint32_t i = 0; i < vertex_order.size(); ++i) new_vertex.at(vertex_order[i]) = i;
  for (std::uint32_t i = 0; i < edge_order.size(); ++i) new_edge.at(edge_order[i]) = i;

  std::vector<Vertex> vs(d.vertex_count());
  for (std::uint32_t i = 0; i < vs.size(); ++i) {
    vs[i] = {"v" + std::to_string(i), d.vertex(vertex_order[i]).kind};
  }
  std::vector<Edge> es(d.edge_count());
  for (std::uint32_t i = 0; i < es.size(); ++i) {
    const Edge& old = d.edge(edge_order[i]);
    es[i] = {"e" + std::to_string(i), new_vertex[old.tail], new_vertex[old.head], old.kind};
  }
  std::vector<std::vector<Dart>> rot(vs.size());
  for (std::uint32_t i = 0; i < vs.size(); ++i) {
    for (const Dart& dart : d.rotation(vertex_order[i])) {
      rot[i].push_back({new_edge[dart.edge], dart.end});
    }
  }
  return SeparatrixDiagram(std::move(vs), std::move(es), std::move(rot));
}

}  // namespace morseflow
