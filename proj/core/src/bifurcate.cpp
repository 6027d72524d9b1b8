#include "morseflow/bifurcate.hpp"

#include <algorithm>
#include <sstream>

namespace morseflow {

std::string_view to_string(BifurcationKind k) {
  switch (k) {
    case BifurcationKind::SN: return "SN";
    case BifurcationKind::BSN: return "BSN";
    case BifurcationKind::BDS: return "BDS";
    case BifurcationKind::HN: return "HN";
    case BifurcationKind::HS: return "HS";
  }
  return "?";
}

int BifurcationSignature::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string BifurcationSignature::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k = 0; k < kBifurcationKindCount; ++k) {
    if (counts[k] == 0) continue;
    if (!first) os << ',';
    os << morseflow::to_string(static_cast<BifurcationKind>(k)) << ':' << counts[k];
    first = false;
  }
  os << '}';
  return os.str();
}

bool has_parallel(const SeparatrixDiagram& d, std::uint32_t edge) {
  const Edge& e = d.edge(edge);
  for (std::uint32_t i = 0; i < d.edge_count(); ++i) {
    if (i != edge && d.edge(i).tail == e.tail && d.edge(i).head == e.head) return true;
  }
  return false;
}

std::optional<BifurcationKind> classify_edge(const SeparatrixDiagram& d, std::uint32_t edge) {
  if (has_parallel(d, edge)) return std::nullopt;
  const Edge& e = d.edge(edge);
  const VertexKind tail = d.vertex(e.tail).kind;
  const VertexKind head = d.vertex(e.head).kind;
  if (e.kind == EdgeKind::BndArc) {
    const int saddle_ends = is_saddle(tail) + is_saddle(head);
    if (saddle_ends == 1) return BifurcationKind::BSN;
    if (saddle_ends == 2) return BifurcationKind::BDS;
    return std::nullopt;
  }
  const bool tail_on_boundary = is_boundary(tail);
  const bool head_on_boundary = is_boundary(head);
  if (!tail_on_boundary && !head_on_boundary) return BifurcationKind::SN;
  if (tail_on_boundary && head_on_boundary) return std::nullopt;
  const VertexKind boundary_end = tail_on_boundary ? tail : head;
  return is_saddle(boundary_end) ? BifurcationKind::HN : BifurcationKind::HS;
}

std::vector<BifurcationRecord> classify_edges(const SeparatrixDiagram& d, Surface surface) {
  const ValidationVerdict verdict = validate(d, surface);
  if (!verdict.valid()) {
    throw DiagramError(DiagramError::Code::InvalidDiagram,
                       "classify_edges needs a valid diagram (" + verdict.violations.front().detail + ")");
  }
  std::vector<BifurcationRecord> records;
  for (std::uint32_t e = 0; e < d.edge_count(); ++e) {
    if (auto kind = classify_edge(d, e)) records.push_back({e, *kind, std::nullopt});
  }
  return records;
}

std::vector<BifurcationRecord> classify_with_contractions(const SeparatrixDiagram& d,
                                                          Surface surface) {
  auto records = classify_edges(d, surface);
  for (auto& r : records) {
    if (r.kind == BifurcationKind::BDS) continue;
    auto result = contract(d, r.edge, surface);
    if (auto* flow = std::get_if<SeparatrixDiagram>(&result)) r.contracted = std::move(*flow);
  }
  return records;
}

BifurcationSignature signature(const SeparatrixDiagram& d, Surface surface) {
  BifurcationSignature sig;
  for (const auto& r : classify_edges(d, surface)) ++sig[r.kind];
  return sig;
}

BifurcationSignature totals(std::span<const SeparatrixDiagram> flows, Surface surface) {
  BifurcationSignature sum;
  for (const auto& d : flows) {
    const auto sig = signature(d, surface);
    for (int k = 0; k < kBifurcationKindCount; ++k) sum.counts[k] += sig.counts[k];
  }
  return sum;
}

namespace {

// Editable copy of a diagram; dead elements are dropped on finish().
class Surgery {
 public:
  explicit Surgery(const SeparatrixDiagram& d)
      : vertices_(d.vertices()),
        edges_(d.edges()),
        rot_(d.rotations()),
        vertex_alive_(d.vertex_count(), 1),
        edge_alive_(d.edge_count(), 1) {}

  const Edge& edge(std::uint32_t e) const { return edges_[e]; }
  VertexKind kind(std::uint32_t v) const { return vertices_[v].kind; }
  void set_kind(std::uint32_t v, VertexKind k) { vertices_[v].kind = k; }
  const std::vector<Dart>& rotation(std::uint32_t v) const { return rot_[v]; }

  static Dart dart_at(const Edge& e, std::uint32_t e_index, std::uint32_t v) {
    return {e_index, e.tail == v ? End::Tail : End::Head};
  }

  // Contracts edge e, keeping vertex `keep`. The rotation at `keep` gets the
  // other endpoint's darts spliced in where e was.
  void merge_along(std::uint32_t e, std::uint32_t keep) {
    const Edge edge = edges_[e];
    const std::uint32_t gone = edge.tail == keep ? edge.head : edge.tail;
    const Dart at_keep = dart_at(edge, e, keep);
    const Dart at_gone = at_keep.reverse();

    std::vector<Dart> spliced;
    const auto& keep_rot = rot_[keep];
    const auto& gone_rot = rot_[gone];
    const auto gone_pos = std::find(gone_rot.begin(), gone_rot.end(), at_gone) - gone_rot.begin();
    for (const Dart& x : keep_rot) {
      if (x != at_keep) {
        spliced.push_back(x);
        continue;
      }
      for (std::size_t i = 1; i < gone_rot.size(); ++i) {
        spliced.push_back(gone_rot[(gone_pos + i) % gone_rot.size()]);
      }
    }
    for (const Dart& x : gone_rot) {
      if (x == at_gone) continue;
      (x.end == End::Tail ? edges_[x.edge].tail : edges_[x.edge].head) = keep;
    }
    rot_[keep] = std::move(spliced);
    rot_[gone].clear();
    vertex_alive_[gone] = 0;
    edge_alive_[e] = 0;
  }

  void delete_edge(std::uint32_t e) {
    for (auto v : {edges_[e].tail, edges_[e].head}) {
      auto& r = rot_[v];
      r.erase(std::remove_if(r.begin(), r.end(), [e](const Dart& x) { return x.edge == e; }), r.end());
    }
    edge_alive_[e] = 0;
  }

  // Treats m as a regular point whose trajectories continue along edge o.
  // Every other edge at m is extended through o to o's far end; extensions
  // running from a node to a node become regular trajectories and vanish.
  // With keep_boundary, m's boundary arcs and o stay and m survives.
  void regularize(std::uint32_t m, std::uint32_t o, bool keep_boundary) {
    const Edge cont = edges_[o];
    const Dart o_near = dart_at(cont, o, m);
    const std::uint32_t q = o_near.end == End::Tail ? cont.head : cont.tail;
    const Dart o_far = o_near.reverse();

    const auto& mrot = rot_[m];
    const auto start = std::find(mrot.begin(), mrot.end(), o_near) - mrot.begin();
    std::vector<Dart> moved;     // m's darts after o_near, in order
    std::vector<Dart> stays{o_near};
    bool arcs_placed = false;
    for (std::size_t i = 1; i < mrot.size(); ++i) {
      const Dart x = mrot[(start + i) % mrot.size()];
      if (keep_boundary && edges_[x.edge].kind == EdgeKind::BndArc) {
        stays.push_back(x);
        if (!arcs_placed) moved.push_back(o_far);
        arcs_placed = true;
        continue;
      }
      moved.push_back(x);
    }

    std::vector<Dart> landing;
    for (const Dart& x : moved) {
      if (x == o_far) {
        landing.push_back(x);
        continue;
      }
      Edge& ex = edges_[x.edge];
      (x.end == End::Tail ? ex.tail : ex.head) = q;
      const bool arcs = ex.kind == EdgeKind::BndArc && cont.kind == EdgeKind::BndArc;
      if (arcs) {
        landing.push_back(x);
        continue;
      }
      if (is_source(vertices_[ex.tail].kind) && is_sink(vertices_[ex.head].kind)) {
        drop_.push_back(x.edge);
        continue;
      }
      landing.push_back(x);
    }

    auto& qrot = rot_[q];
    auto at = std::find(qrot.begin(), qrot.end(), o_far);
    const auto pos = at - qrot.begin();
    qrot.erase(at);
    qrot.insert(qrot.begin() + pos, landing.begin(), landing.end());

    for (std::uint32_t e : drop_) delete_edge(e);
    drop_.clear();

    if (keep_boundary) {
      rot_[m] = std::move(stays);
    } else {
      rot_[m].clear();
      vertex_alive_[m] = 0;
      edge_alive_[o] = 0;
      // o's far dart was already replaced by `landing` unless kept there.
      auto& r = rot_[q];
      r.erase(std::remove(r.begin(), r.end(), o_far), r.end());
    }
  }

  SeparatrixDiagram finish() const {
    std::vector<std::uint32_t> vmap(vertices_.size(), ~0u), emap(edges_.size(), ~0u);
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
      if (!vertex_alive_[v]) continue;
      vmap[v] = static_cast<std::uint32_t>(vs.size());
      vs.push_back(vertices_[v]);
    }
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
      if (!edge_alive_[e]) continue;
      emap[e] = static_cast<std::uint32_t>(es.size());
      Edge copy = edges_[e];
      copy.tail = vmap[copy.tail];
      copy.head = vmap[copy.head];
      es.push_back(std::move(copy));
    }
    std::vector<std::vector<Dart>> rot;
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
      if (!vertex_alive_[v]) continue;
      auto& r = rot.emplace_back();
      for (const Dart& x : rot_[v]) r.push_back({emap[x.edge], x.end});
    }
    return SeparatrixDiagram(std::move(vs), std::move(es), std::move(rot));
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<char> vertex_alive_;
  std::vector<char> edge_alive_;
  std::vector<std::uint32_t> drop_;
};

// The other edge at v with the given kind and end, distinct from `not_this`.
std::uint32_t partner_edge(const Surgery& s, std::uint32_t v, std::uint32_t not_this, EdgeKind kind,
                           End end) {
  for (const Dart& x : s.rotation(v)) {
    if (x.edge != not_this && s.edge(x.edge).kind == kind && x.end == end) return x.edge;
  }
  throw std::logic_error("contract: missing partner separatrix");
}

}  // namespace

ContractionResult contract(const SeparatrixDiagram& d, std::uint32_t edge, Surface surface) {
  if (edge >= d.edge_count()) {
    throw BifurcationError(BifurcationError::Code::NotAdmissible, "no such edge");
  }
  const auto kind = classify_edge(d, edge);
  if (!kind) {
    throw BifurcationError(BifurcationError::Code::NotAdmissible,
                           "edge '" + d.edge(edge).id + "' is not admissible");
  }
  if (*kind == BifurcationKind::BDS) {
    throw BifurcationError(BifurcationError::Code::IsBDS,
                           "edge '" + d.edge(edge).id + "' joins two boundary saddles");
  }

  const Edge& e = d.edge(edge);
  const std::uint32_t saddle = is_saddle(d.vertex(e.tail).kind) ? e.tail : e.head;
  const std::uint32_t node = saddle == e.tail ? e.head : e.tail;
  const End saddle_end = saddle == e.tail ? End::Tail : End::Head;

  Surgery s(d);
  switch (*kind) {
    case BifurcationKind::SN: {
      // The saddle keeps one separatrix of the contracted colour; trajectories
      // through the vanished pair continue along it.
      const auto cont = partner_edge(s, saddle, edge, e.kind, saddle_end);
      s.merge_along(edge, saddle);
      s.regularize(saddle, cont, false);
      break;
    }
    case BifurcationKind::BSN: {
      const auto cont = partner_edge(s, saddle, edge, EdgeKind::BndArc, saddle_end);
      // Boundary flow now runs through the vanished pair to the far end of
      // the saddle's other arc. If that end is itself a boundary saddle,
      // interior trajectories arriving there follow its separatrix onward.
      const Edge& arc = s.edge(cont);
      const std::uint32_t far = arc.tail == saddle ? arc.head : arc.tail;
      std::optional<std::uint32_t> onward;
      if (is_saddle(s.kind(far))) {
        for (const Dart& x : s.rotation(far)) {
          if (s.edge(x.edge).kind != EdgeKind::BndArc) onward = x.edge;
        }
        // A separatrix of `far` that comes from the vanished node closes into
        // a loop; nothing to follow, and validation reports the result.
        const Edge& sep = s.edge(*onward);
        if (sep.tail == node || sep.head == node) onward.reset();
      }
      s.merge_along(edge, saddle);
      s.regularize(saddle, cont, false);
      if (onward) s.regularize(far, *onward, true);
      break;
    }
    case BifurcationKind::HN: {
      s.merge_along(edge, saddle);
      s.set_kind(saddle, d.vertex(node).kind == VertexKind::IntSink ? VertexKind::BndSink
                                                                     : VertexKind::BndSource);
      break;
    }
    case BifurcationKind::HS: {
      const auto cont = partner_edge(s, saddle, edge, e.kind, saddle_end);
      s.merge_along(edge, node);
      s.set_kind(node, d.vertex(node).kind == VertexKind::BndSink ? VertexKind::BndSaddleOut
                                                                  : VertexKind::BndSaddleIn);
      s.regularize(node, cont, true);
      break;
    }
    case BifurcationKind::BDS:
      break;
  }

  SeparatrixDiagram merged = s.finish();
  ValidationVerdict verdict = validate(merged, surface);
  if (verdict.valid()) return merged;
  return Indeterminate{std::move(merged), std::move(verdict.violations)};
}

}  // namespace morseflow
