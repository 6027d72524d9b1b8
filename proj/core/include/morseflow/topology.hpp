#pragma once

#include <string>
#include <vector>

#include "morseflow/diagram.hpp"

namespace morseflow {

struct TopologyReport {
  // Orbits of next(d) = successor(reverse(d)). Each walk starts at its
  // least dart; walks are sorted by that dart.
  std::vector<std::vector<Dart>> face_walks;
  // Indices into face_walks of faces made only of BndArc darts.
  std::vector<std::size_t> hole_faces;
  int vertices = 0;
  int edges = 0;
  int faces = 0;  // all traced faces, hole faces included
  int cells = 0;  // faces that are not holes
  // Euler characteristic of the bounded surface, V - E + cells = 2 - 2g - b.
  int euler_characteristic = 0;
  // From V - E + faces = 2 - 2g on the surface with its holes capped.
  int genus = 0;
  bool genus_is_integral = true;
  int boundary_count = 0;
  bool connected = true;
};

TopologyReport trace_faces(const SeparatrixDiagram& d);

// Counts on the double of the surface: interior points are doubled,
// boundary points are not.
struct DoubleSummary {
  int vertices_total = 0;
  int saddles = 0;
  int nodes = 0;
  int euler_characteristic = 0;  // nodes - saddles
};

DoubleSummary double_summary(const SeparatrixDiagram& d);

// S - N on the double of a genus-g surface with b holes.
constexpr int double_index_excess(Surface s) noexcept {
  return 4 * s.genus + 2 * s.boundaries - 4;
}

enum class Rule {
  V1_VertexProfile,
  V2_EdgeTyping,
  V3_Connected,
  V4_BoundaryCycles,
  V5_HoleFaces,
  V6_CanonicalCells,
  V7_Genus,
  V8_PoincareHopf,
};

std::string_view to_string(Rule r);

struct Violation {
  Rule rule;
  std::string detail;
};

struct ValidationVerdict {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool violates(Rule r) const noexcept;
};

// Checks that d is the separatrix diagram of a Morse flow on the given
// surface. Invalidity is reported, never thrown.
ValidationVerdict validate(const SeparatrixDiagram& d, Surface expect = {});

}  // namespace morseflow
