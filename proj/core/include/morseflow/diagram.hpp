#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morseflow {

// Singular points of a Morse flow on a surface with boundary.
enum class VertexKind : std::uint8_t {
  IntSource,
  IntSaddle,
  IntSink,
  BndSource,
  BndSaddleIn,   // emitter on the boundary circle, one incoming separatrix
  BndSaddleOut,  // absorber on the boundary circle, one outgoing separatrix
  BndSink,
};

inline constexpr int kVertexKindCount = 7;

// Red: stable separatrix (ends at a saddle). Green: unstable separatrix
// (starts at a saddle). BndArc: trajectory along a boundary circle.
enum class EdgeKind : std::uint8_t { Red, Green, BndArc };

enum class End : std::uint8_t { Tail, Head };

constexpr bool is_boundary(VertexKind k) noexcept {
  return k == VertexKind::BndSource || k == VertexKind::BndSaddleIn ||
         k == VertexKind::BndSaddleOut || k == VertexKind::BndSink;
}
constexpr bool is_saddle(VertexKind k) noexcept {
  return k == VertexKind::IntSaddle || k == VertexKind::BndSaddleIn ||
         k == VertexKind::BndSaddleOut;
}
constexpr bool is_source(VertexKind k) noexcept {
  return k == VertexKind::IntSource || k == VertexKind::BndSource;
}
constexpr bool is_sink(VertexKind k) noexcept {
  return k == VertexKind::IntSink || k == VertexKind::BndSink;
}
// Source / sink of the flow restricted to the boundary circle.
constexpr bool is_emitter(VertexKind k) noexcept {
  return k == VertexKind::BndSource || k == VertexKind::BndSaddleIn;
}
constexpr bool is_absorber(VertexKind k) noexcept {
  return k == VertexKind::BndSink || k == VertexKind::BndSaddleOut;
}

// Kind after reversing the direction of every trajectory.
constexpr VertexKind reversed(VertexKind k) noexcept {
  switch (k) {
    case VertexKind::IntSource: return VertexKind::IntSink;
    case VertexKind::IntSink: return VertexKind::IntSource;
    case VertexKind::BndSource: return VertexKind::BndSink;
    case VertexKind::BndSink: return VertexKind::BndSource;
    case VertexKind::BndSaddleIn: return VertexKind::BndSaddleOut;
    case VertexKind::BndSaddleOut: return VertexKind::BndSaddleIn;
    case VertexKind::IntSaddle: return VertexKind::IntSaddle;
  }
  return k;
}
constexpr EdgeKind reversed(EdgeKind k) noexcept {
  switch (k) {
    case EdgeKind::Red: return EdgeKind::Green;
    case EdgeKind::Green: return EdgeKind::Red;
    case EdgeKind::BndArc: return EdgeKind::BndArc;
  }
  return k;
}

std::string_view to_string(VertexKind k);
std::string_view to_string(EdgeKind k);
VertexKind vertex_kind_from_string(std::string_view s);
EdgeKind edge_kind_from_string(std::string_view s);

// One end of one edge. Darts are ordered by (edge, end), tail before head.
struct Dart {
  std::uint32_t edge = 0;
  End end = End::Tail;

  constexpr Dart reverse() const noexcept {
    return {edge, end == End::Tail ? End::Head : End::Tail};
  }
  constexpr std::uint32_t index() const noexcept {
    return 2 * edge + (end == End::Head ? 1u : 0u);
  }
  static constexpr Dart from_index(std::uint32_t i) noexcept {
    return {i / 2, (i & 1u) ? End::Head : End::Tail};
  }
  constexpr bool along() const noexcept { return end == End::Tail; }

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::IntSaddle;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  EdgeKind kind = EdgeKind::Red;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Surface {
  int genus = 1;
  int boundaries = 1;
  friend bool operator==(const Surface&, const Surface&) = default;
};

class DiagramError : public std::runtime_error {
 public:
  enum class Code {
    DuplicateId,
    DanglingEndpoint,
    RotationMismatch,
    DisconnectedDiagram,
    InvalidDiagram,
  };

  DiagramError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

// Input records for build_diagram; endpoints and darts refer to ids.
struct VertexSpec {
  std::string id;
  VertexKind kind;
};
struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  EdgeKind kind;
};
struct DartRef {
  std::string edge;
  End end;
};

// A separatrix diagram as a combinatorial map: typed vertices, typed
// directed edges, and a counterclockwise cyclic order of darts around each
// vertex. Immutable once built. Every rotation cycle is stored starting at
// its least dart.
class SeparatrixDiagram {
 public:
  SeparatrixDiagram() = default;

  // Index-based construction. rotation[v] lists the darts around vertex v.
  // Throws DiagramError on structural inconsistency.
  SeparatrixDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges,
                    std::vector<std::vector<Dart>> rotation);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t dart_count() const noexcept { return 2 * edges_.size(); }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(std::uint32_t v) const { return vertices_.at(v); }
  const Edge& edge(std::uint32_t e) const { return edges_.at(e); }
  std::span<const Dart> rotation(std::uint32_t v) const { return rotation_.at(v); }
  const std::vector<std::vector<Dart>>& rotations() const noexcept { return rotation_; }

  // Vertex at which the dart sits.
  std::uint32_t vertex_of(Dart d) const noexcept {
    const Edge& e = edges_[d.edge];
    return d.end == End::Tail ? e.tail : e.head;
  }
  // Counterclockwise neighbour of d in the rotation at its vertex.
  Dart successor(Dart d) const noexcept { return succ_[d.index()]; }
  Dart predecessor(Dart d) const noexcept { return pred_[d.index()]; }
  EdgeKind edge_kind(Dart d) const noexcept { return edges_[d.edge].kind; }
  VertexKind kind_at(Dart d) const noexcept { return vertices_[vertex_of(d)].kind; }

  std::uint32_t find_vertex(std::string_view id) const;
  std::uint32_t find_edge(std::string_view id) const;

  // Number of vertices of each kind, indexed by VertexKind.
  std::array<int, kVertexKindCount> kind_counts() const;

  friend bool operator==(const SeparatrixDiagram& a, const SeparatrixDiagram& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.rotation_ == b.rotation_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> succ_;
  std::vector<Dart> pred_;
};

// Id-based construction used by parsers and tests.
SeparatrixDiagram build_diagram(const std::vector<VertexSpec>& vertices,
                                const std::vector<EdgeSpec>& edges,
                                const std::map<std::string, std::vector<DartRef>>& rotation);

// Flips every trajectory: Red<->Green, sources<->sinks, BndSaddleIn<->Out.
// Rotations are kept as sequences.
SeparatrixDiagram reverse_flow(const SeparatrixDiagram& d);

// Reverses every rotation cycle (orientation-reversing homeomorphism).
SeparatrixDiagram mirror(const SeparatrixDiagram& d);

// Permutes storage order and renames everything to "v<i>" / "e<i>".
// vertex_order[i] is the old index of new vertex i; likewise edge_order.
SeparatrixDiagram relabel(const SeparatrixDiagram& d,
                          std::span<const std::uint32_t> vertex_order,
                          std::span<const std::uint32_t> edge_order);

}  // namespace morseflow
