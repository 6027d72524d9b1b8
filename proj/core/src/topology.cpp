#include "morseflow/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace morseflow {

namespace {

bool connected(const SeparatrixDiagram& d) {
  const std::size_t n = d.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : d.edges()) {
    auto a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string dart_name(const SeparatrixDiagram& d, Dart x) {
  return d.edge(x.edge).id + (x.end == End::Tail ? ".t" : ".h");
}

struct Profile {
  int arc_tail = 0, arc_head = 0, red_tail = 0, red_head = 0, green_tail = 0, green_head = 0;
};

Profile profile_of(const SeparatrixDiagram& d, std::uint32_t v) {
  Profile p;
  for (const Dart& x : d.rotation(v)) {
    const bool tail = x.end == End::Tail;
    switch (d.edge_kind(x)) {
      case EdgeKind::BndArc: ++(tail ? p.arc_tail : p.arc_head); break;
      case EdgeKind::Red: ++(tail ? p.red_tail : p.red_head); break;
      case EdgeKind::Green: ++(tail ? p.green_tail : p.green_head); break;
    }
  }
  return p;
}

// Empty string when the vertex matches its kind's dart profile.
std::string check_profile(const SeparatrixDiagram& d, std::uint32_t v) {
  const Profile p = profile_of(d, v);
  const auto rot = d.rotation(v);
  const int total = static_cast<int>(rot.size());
  switch (d.vertex(v).kind) {
    case VertexKind::IntSource:
      if (p.red_tail != total) return "interior source with a non-red-tail dart";
      break;
    case VertexKind::IntSink:
      if (p.green_head != total) return "interior sink with a non-green-head dart";
      break;
    case VertexKind::IntSaddle: {
      if (total != 4 || p.red_head != 2 || p.green_tail != 2) {
        return "interior saddle needs 2 red heads and 2 green tails";
      }
      for (int i = 0; i < 4; ++i) {
        if (d.edge_kind(rot[i]) == d.edge_kind(rot[(i + 1) % 4])) {
          return "interior saddle separatrices do not alternate";
        }
      }
      break;
    }
    case VertexKind::BndSource:
      if (p.arc_tail != 2 || p.arc_tail + p.red_tail != total) {
        return "boundary source needs 2 arc tails plus red tails";
      }
      break;
    case VertexKind::BndSink:
      if (p.arc_head != 2 || p.arc_head + p.green_head != total) {
        return "boundary sink needs 2 arc heads plus green heads";
      }
      break;
    case VertexKind::BndSaddleIn:
      if (total != 3 || p.arc_tail != 2 || p.red_head != 1) {
        return "inward boundary saddle needs 2 arc tails and 1 red head";
      }
      break;
    case VertexKind::BndSaddleOut:
      if (total != 3 || p.arc_head != 2 || p.green_tail != 1) {
        return "outward boundary saddle needs 2 arc heads and 1 green tail";
      }
      break;
  }
  if (is_boundary(d.vertex(v).kind) && total > 2) {
    bool adjacent = false;
    for (int i = 0; i < total; ++i) {
      if (d.edge_kind(rot[i]) == EdgeKind::BndArc &&
          d.edge_kind(rot[(i + 1) % total]) == EdgeKind::BndArc) {
        adjacent = true;
      }
    }
    if (!adjacent) return "boundary arcs are not adjacent in the rotation";
  }
  return {};
}

bool edge_typed(EdgeKind kind, VertexKind tail, VertexKind head) {
  switch (kind) {
    case EdgeKind::Red:
      return is_source(tail) && (head == VertexKind::IntSaddle || head == VertexKind::BndSaddleIn);
    case EdgeKind::Green:
      return (tail == VertexKind::IntSaddle || tail == VertexKind::BndSaddleOut) && is_sink(head);
    case EdgeKind::BndArc:
      return is_emitter(tail) && is_absorber(head);
  }
  return false;
}

}  // namespace

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::V1_VertexProfile: return "V1";
    case Rule::V2_EdgeTyping: return "V2";
    case Rule::V3_Connected: return "V3";
    case Rule::V4_BoundaryCycles: return "V4";
    case Rule::V5_HoleFaces: return "V5";
    case Rule::V6_CanonicalCells: return "V6";
    case Rule::V7_Genus: return "V7";
    case Rule::V8_PoincareHopf: return "V8";
  }
  return "?";
}

bool ValidationVerdict::violates(Rule r) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [r](const Violation& v) { return v.rule == r; });
}

TopologyReport trace_faces(const SeparatrixDiagram& d) {
  TopologyReport report;
  const std::uint32_t darts = static_cast<std::uint32_t>(d.dart_count());
  std::vector<char> seen(darts, 0);
  // Increasing start index gives walks that start at their least dart, sorted.
  for (std::uint32_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> walk;
    bool all_arcs = true;
    Dart x = Dart::from_index(start);
    do {
      seen[x.index()] = 1;
      walk.push_back(x);
      all_arcs = all_arcs && d.edge_kind(x) == EdgeKind::BndArc;
      x = d.successor(x.reverse());
    } while (x.index() != start);
    if (all_arcs) report.hole_faces.push_back(report.face_walks.size());
    report.face_walks.push_back(std::move(walk));
  }
  report.vertices = static_cast<int>(d.vertex_count());
  report.edges = static_cast<int>(d.edge_count());
  report.faces = static_cast<int>(report.face_walks.size());
  report.boundary_count = static_cast<int>(report.hole_faces.size());
  report.cells = report.faces - report.boundary_count;
  report.euler_characteristic = report.vertices - report.edges + report.cells;
  const int capped = report.vertices - report.edges + report.faces;
  report.genus_is_integral = (capped % 2) == 0;
  report.genus = (2 - capped) / 2;
  report.connected = connected(d);
  return report;
}

DoubleSummary double_summary(const SeparatrixDiagram& d) {
  DoubleSummary s;
  for (const Vertex& v : d.vertices()) {
    const int copies = is_boundary(v.kind) ? 1 : 2;
    s.vertices_total += copies;
    (is_saddle(v.kind) ? s.saddles : s.nodes) += copies;
  }
  s.euler_characteristic = s.nodes - s.saddles;
  return s;
}

ValidationVerdict validate(const SeparatrixDiagram& d, Surface expect) {
  ValidationVerdict verdict;
  auto fail = [&](Rule r, std::string detail) { verdict.violations.push_back({r, std::move(detail)}); };

  for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
    if (auto why = check_profile(d, v); !why.empty()) {
      fail(Rule::V1_VertexProfile, d.vertex(v).id + ": " + why);
    }
  }

  for (const Edge& e : d.edges()) {
    if (!edge_typed(e.kind, d.vertex(e.tail).kind, d.vertex(e.head).kind)) {
      fail(Rule::V2_EdgeTyping, e.id + ": " + std::string(to_string(e.kind)) + " edge from " +
                                    std::string(to_string(d.vertex(e.tail).kind)) + " to " +
                                    std::string(to_string(d.vertex(e.head).kind)));
    }
  }

  const TopologyReport topo = trace_faces(d);
  if (!topo.connected) fail(Rule::V3_Connected, "underlying graph is disconnected");

  // V4: boundary arcs form `boundaries` alternating cycles through every
  // boundary vertex.
  {
    const std::size_t n = d.vertex_count();
    std::vector<int> arc_degree(n, 0);
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : d.edges()) {
      if (e.kind != EdgeKind::BndArc) continue;
      ++arc_degree[e.tail];
      ++arc_degree[e.head];
      parent[find(e.tail)] = find(e.head);
      if (!is_emitter(d.vertex(e.tail).kind) || !is_absorber(d.vertex(e.head).kind)) {
        fail(Rule::V4_BoundaryCycles, e.id + ": boundary arc does not run emitter to absorber");
      }
    }
    int cycles = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      const bool on_boundary = is_boundary(d.vertex(v).kind);
      if (on_boundary != (arc_degree[v] > 0) || (on_boundary && arc_degree[v] != 2)) {
        fail(Rule::V4_BoundaryCycles, d.vertex(v).id + ": not on exactly one boundary cycle");
      }
      if (arc_degree[v] > 0 && find(v) == v) ++cycles;
    }
    if (cycles != expect.boundaries) {
      fail(Rule::V4_BoundaryCycles, "found " + std::to_string(cycles) + " boundary cycles, expected " +
                                        std::to_string(expect.boundaries));
    }
  }

  // V5: hole faces take exactly one dart of every boundary arc.
  {
    if (topo.boundary_count != expect.boundaries) {
      fail(Rule::V5_HoleFaces, "found " + std::to_string(topo.boundary_count) +
                                   " hole faces, expected " + std::to_string(expect.boundaries));
    }
    std::vector<int> sides(d.edge_count(), 0);
    for (std::size_t f : topo.hole_faces) {
      for (const Dart& x : topo.face_walks[f]) ++sides[x.edge];
    }
    for (std::uint32_t e = 0; e < d.edge_count(); ++e) {
      if (d.edge(e).kind == EdgeKind::BndArc && sides[e] != 1) {
        fail(Rule::V5_HoleFaces, d.edge(e).id + ": boundary arc bounds " + std::to_string(sides[e]) +
                                     " hole sides");
      }
    }
  }

  // V6: every other face is a cell with one source corner and one sink corner.
  {
    std::size_t hole_cursor = 0;
    for (std::size_t f = 0; f < topo.face_walks.size(); ++f) {
      if (hole_cursor < topo.hole_faces.size() && topo.hole_faces[hole_cursor] == f) {
        ++hole_cursor;
        continue;
      }
      const auto& walk = topo.face_walks[f];
      const std::size_t len = walk.size();
      int switches = 0;
      bool corners_ok = true;
      for (std::size_t i = 0; i < len; ++i) {
        const Dart prev = walk[(i + len - 1) % len];
        const Dart cur = walk[i];
        if (prev.along() == cur.along()) continue;
        ++switches;
        const VertexKind corner = d.kind_at(cur);
        corners_ok = corners_ok && (cur.along() ? is_source(corner) : is_sink(corner));
      }
      if (switches != 2 || !corners_ok) {
        fail(Rule::V6_CanonicalCells, "face at " + dart_name(d, walk.front()) + " has " +
                                          std::to_string(switches) + " direction switches" +
                                          (corners_ok ? "" : " and a non-node corner"));
      }
    }
  }

  if (!topo.genus_is_integral || topo.genus != expect.genus) {
    std::ostringstream os;
    os << "V - E + F = " << (topo.vertices - topo.edges + topo.faces) << ", expected genus "
       << expect.genus;
    fail(Rule::V7_Genus, os.str());
  }

  // Poincare-Hopf on the double, with the traced genus; only fires when the
  // index count disagrees with the embedding itself.
  {
    const DoubleSummary dbl = double_summary(d);
    const int want = double_index_excess({topo.genus, expect.boundaries});
    if (topo.genus_is_integral && dbl.saddles - dbl.nodes != want) {
      fail(Rule::V8_PoincareHopf, "S - N = " + std::to_string(dbl.saddles - dbl.nodes) +
                                      ", expected " + std::to_string(want));
    }
  }

  return verdict;
}

}  // namespace morseflow
