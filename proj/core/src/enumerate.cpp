#include "morseflow/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "morseflow/topology.hpp"

namespace morseflow {

int PointBudget::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int PointBudget::boundary_total() const {
  return (*this)[VertexKind::BndSource] + (*this)[VertexKind::BndSaddleIn] +
         (*this)[VertexKind::BndSaddleOut] + (*this)[VertexKind::BndSink];
}

std::string PointBudget::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kVertexKindCount; ++k) {
    if (counts[k] == 0) continue;
    if (!first) os << ' ';
    os << morseflow::to_string(static_cast<VertexKind>(k)) << ':' << counts[k];
    first = false;
  }
  return os.str();
}

PointBudget budget_of(const SeparatrixDiagram& d) { return PointBudget{d.kind_counts()}; }

namespace {

bool admissible_budget(const PointBudget& b, Surface s) {
  using K = VertexKind;
  const int emitters = b[K::BndSource] + b[K::BndSaddleIn];
  const int absorbers = b[K::BndSink] + b[K::BndSaddleOut];
  if (emitters != absorbers) return false;
  if (s.boundaries == 0 ? emitters != 0 : emitters < s.boundaries) return false;
  if (b[K::IntSource] + b[K::BndSource] < 1) return false;
  if (b[K::IntSink] + b[K::BndSink] < 1) return false;
  const int saddles = 2 * b[K::IntSaddle] + b[K::BndSaddleIn] + b[K::BndSaddleOut];
  const int nodes = 2 * (b[K::IntSource] + b[K::IntSink]) + b[K::BndSource] + b[K::BndSink];
  return saddles - nodes == double_index_excess(s);
}

void compositions(int remaining, int slot, PointBudget& cur, Surface s,
                  std::vector<PointBudget>& out) {
  if (slot == kVertexKindCount - 1) {
    cur.counts[slot] = remaining;
    if (admissible_budget(cur, s)) out.push_back(cur);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    cur.counts[slot] = c;
    compositions(remaining - c, slot + 1, cur, s, out);
  }
  cur.counts[slot] = 0;
}

// Generates candidate diagrams for one budget and hands every one that
// passes validation to a callback.
class Generator {
 public:
  Generator(const PointBudget& budget, Surface surface,
            const std::function<void(const SeparatrixDiagram&)>& visit)
      : surface_(surface), visit_(visit) {
    for (int k = 0; k < kVertexKindCount; ++k) {
      for (int i = 0; i < budget.counts[k]; ++i) {
        const auto kind = static_cast<VertexKind>(k);
        const auto index = static_cast<std::uint32_t>(vertices_.size());
        vertices_.push_back({"v" + std::to_string(index), kind});
        if (is_boundary(kind)) boundary_.push_back(index);
        if (is_source(kind)) sources_.push_back(index);
        if (is_sink(kind)) sinks_.push_back(index);
        if (kind == VertexKind::IntSaddle) int_saddles_.push_back(index);
        if (kind == VertexKind::BndSaddleIn) saddles_in_.push_back(index);
        if (kind == VertexKind::BndSaddleOut) saddles_out_.push_back(index);
      }
    }
  }

  void run() {
    std::vector<std::vector<std::uint32_t>> circles;
    std::vector<char> used(vertices_.size(), 0);
    partition_circles(circles, used);
  }

 private:
  // --- boundary circles -------------------------------------------------

  void partition_circles(std::vector<std::vector<std::uint32_t>>& circles, std::vector<char>& used) {
    // Lowest unused boundary vertex that is an emitter opens the next circle.
    std::uint32_t opener = ~0u;
    for (std::uint32_t v : boundary_) {
      if (!used[v] && is_emitter(vertices_[v].kind)) {
        opener = v;
        break;
      }
    }
    if (opener == ~0u) {
      const bool all_used = std::all_of(boundary_.begin(), boundary_.end(),
                                        [&](std::uint32_t v) { return used[v]; });
      if (all_used && static_cast<int>(circles.size()) == surface_.boundaries) {
        with_circles(circles);
      }
      return;
    }
    if (static_cast<int>(circles.size()) >= surface_.boundaries) return;
    used[opener] = 1;
    circles.push_back({opener});
    extend_circle(circles, used);
    circles.pop_back();
    used[opener] = 0;
  }

  // Appends alternating absorber / emitter vertices to the last circle.
  void extend_circle(std::vector<std::vector<std::uint32_t>>& circles, std::vector<char>& used) {
    auto& circle = circles.back();
    const bool need_absorber = circle.size() % 2 == 1;
    if (!need_absorber) {
      // Closing here is allowed: the circle alternates and has even length.
      partition_circles(circles, used);
    }
    for (std::uint32_t v : boundary_) {
      if (used[v]) continue;
      const VertexKind k = vertices_[v].kind;
      if (need_absorber ? !is_absorber(k) : !is_emitter(k)) continue;
      // Later emitters in a circle are placed in any order; the opener is the
      // least, so no emitter below it may appear.
      if (!need_absorber && v < circle.front()) continue;
      used[v] = 1;
      circle.push_back(v);
      extend_circle(circles, used);
      circle.pop_back();
      used[v] = 0;
    }
  }

  void with_circles(const std::vector<std::vector<std::uint32_t>>& circles) {
    edges_.clear();
    prev_arc_.assign(vertices_.size(), 0);
    next_arc_.assign(vertices_.size(), 0);
    circle_of_.assign(vertices_.size(), 0);
    for (std::uint32_t c = 0; c < circles.size(); ++c) {
      const auto& circle = circles[c];
      const std::size_t len = circle.size();
      for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t a = circle[i];
        const std::uint32_t b = circle[(i + 1) % len];
        const auto e = static_cast<std::uint32_t>(edges_.size());
        const bool a_emits = is_emitter(vertices_[a].kind);
        edges_.push_back({"", a_emits ? a : b, a_emits ? b : a, EdgeKind::BndArc});
        next_arc_[a] = e;
        prev_arc_[b] = e;
        circle_of_[a] = c;
      }
    }
    arc_count_ = edges_.size();
    circle_count_ = circles.size();
    assign_int_saddles(0, {});
  }

  // --- separatrix wiring ------------------------------------------------

  using SaddleWiring = std::array<std::uint32_t, 4>;  // src1, snk1, src2, snk2

  void assign_int_saddles(std::size_t i, std::vector<SaddleWiring> chosen) {
    if (i == int_saddles_.size()) {
      wiring_ = std::move(chosen);
      assign_bnd_saddles(0);
      return;
    }
    for (std::uint32_t a1 : sources_) {
      for (std::uint32_t b1 : sinks_) {
        for (std::uint32_t a2 : sources_) {
          for (std::uint32_t b2 : sinks_) {
            // The half-turn of a saddle swaps its two red/green pairs, and
            // interior saddles are interchangeable: keep sorted wirings only.
            if (std::pair(a1, b1) > std::pair(a2, b2)) continue;
            const SaddleWiring w{a1, b1, a2, b2};
            if (!chosen.empty() && w < chosen.back()) continue;
            chosen.push_back(w);
            assign_int_saddles(i + 1, chosen);
            chosen.pop_back();
          }
        }
      }
    }
  }

  void assign_bnd_saddles(std::size_t i) {
    const std::size_t total = saddles_in_.size() + saddles_out_.size();
    if (i == total) {
      build_and_search();
      return;
    }
    const auto& pool = i < saddles_in_.size() ? sources_ : sinks_;
    for (std::uint32_t node : pool) {
      bnd_wiring_.resize(i + 1);
      bnd_wiring_[i] = node;
      assign_bnd_saddles(i + 1);
    }
  }

  // --- rotations --------------------------------------------------------

  Dart arc_dart_at(std::uint32_t e, std::uint32_t v) const {
    return {e, edges_[e].tail == v ? End::Tail : End::Head};
  }

  void build_and_search() {
    edges_.resize(arc_count_);
    std::vector<std::vector<Dart>> separatrices(vertices_.size());
    std::vector<std::vector<Dart>> saddle_rotation(vertices_.size());

    auto add = [&](std::uint32_t tail, std::uint32_t head, EdgeKind kind) {
      const auto e = static_cast<std::uint32_t>(edges_.size());
      edges_.push_back({"", tail, head, kind});
      return e;
    };
    for (std::size_t i = 0; i < int_saddles_.size(); ++i) {
      const std::uint32_t s = int_saddles_[i];
      const auto& w = wiring_[i];
      const auto r1 = add(w[0], s, EdgeKind::Red);
      const auto g1 = add(s, w[1], EdgeKind::Green);
      const auto r2 = add(w[2], s, EdgeKind::Red);
      const auto g2 = add(s, w[3], EdgeKind::Green);
      saddle_rotation[s] = {{r1, End::Head}, {g1, End::Tail}, {r2, End::Head}, {g2, End::Tail}};
      separatrices[w[0]].push_back({r1, End::Tail});
      separatrices[w[1]].push_back({g1, End::Head});
      separatrices[w[2]].push_back({r2, End::Tail});
      separatrices[w[3]].push_back({g2, End::Head});
    }
    for (std::size_t i = 0; i < saddles_in_.size(); ++i) {
      const auto e = add(bnd_wiring_[i], saddles_in_[i], EdgeKind::Red);
      saddle_rotation[saddles_in_[i]] = {{e, End::Head}};
      separatrices[bnd_wiring_[i]].push_back({e, End::Tail});
    }
    for (std::size_t i = 0; i < saddles_out_.size(); ++i) {
      const std::uint32_t node = bnd_wiring_[saddles_in_.size() + i];
      const auto e = add(saddles_out_[i], node, EdgeKind::Green);
      saddle_rotation[saddles_out_[i]] = {{e, End::Tail}};
      separatrices[node].push_back({e, End::Head});
    }

    // An interior node with nothing attached is an isolated vertex.
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
      if (!is_saddle(vertices_[v].kind) && !is_boundary(vertices_[v].kind) &&
          separatrices[v].empty() && vertices_.size() > 1) {
        return;
      }
    }

    const std::uint32_t dart_total = 2 * static_cast<std::uint32_t>(edges_.size());
    const int target_faces = 2 - 2 * surface_.genus - static_cast<int>(vertices_.size()) +
                             static_cast<int>(edges_.size());
    if (target_faces < 1) return;

    for (std::uint32_t mask = 0; mask < (1u << circle_count_); ++mask) {
      // Per vertex, every candidate cyclic order.
      std::vector<std::vector<std::vector<Dart>>> options(vertices_.size());
      for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
        const VertexKind k = vertices_[v].kind;
        std::vector<Dart> fixed_prefix;
        if (is_boundary(k)) {
          const Dart prev = arc_dart_at(prev_arc_[v], v);
          const Dart next = arc_dart_at(next_arc_[v], v);
          if ((mask >> circle_of_[v]) & 1u) {
            fixed_prefix = {next, prev};
          } else {
            fixed_prefix = {prev, next};
          }
        }
        if (is_saddle(k)) {
          auto rot = fixed_prefix;
          rot.insert(rot.end(), saddle_rotation[v].begin(), saddle_rotation[v].end());
          options[v].push_back(std::move(rot));
          continue;
        }
        std::vector<Dart> rest = separatrices[v];
        if (fixed_prefix.empty() && !rest.empty()) {
          fixed_prefix.push_back(rest.front());
          rest.erase(rest.begin());
        }
        std::sort(rest.begin(), rest.end());
        do {
          auto rot = fixed_prefix;
          rot.insert(rot.end(), rest.begin(), rest.end());
          options[v].push_back(std::move(rot));
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
      search(options, dart_total, target_faces);
    }
  }

  void search(const std::vector<std::vector<std::vector<Dart>>>& options, std::uint32_t dart_total,
              int target_faces) {
    const std::size_t n = options.size();
    std::vector<std::size_t> pick(n, 0);
    std::vector<std::uint32_t> succ(dart_total);
    std::vector<std::uint32_t> stamp(dart_total, 0);
    std::uint32_t round = 0;

    auto install = [&](std::size_t v) {
      const auto& rot = options[v][pick[v]];
      for (std::size_t i = 0; i < rot.size(); ++i) {
        succ[rot[i].index()] = rot[(i + 1) % rot.size()].index();
      }
    };
    for (std::size_t v = 0; v < n; ++v) install(v);

    while (true) {
      ++round;
      int faces = 0;
      for (std::uint32_t s = 0; s < dart_total && faces <= target_faces; ++s) {
        if (stamp[s] == round) continue;
        ++faces;
        std::uint32_t x = s;
        do {
          stamp[x] = round;
          x = succ[x ^ 1u];
        } while (x != s);
      }
      if (faces == target_faces) emit(options, pick);

      // Odometer step.
      std::size_t v = 0;
      while (v < n) {
        if (++pick[v] < options[v].size()) {
          install(v);
          break;
        }
        pick[v] = 0;
        install(v);
        ++v;
      }
      if (v == n) break;
    }
  }

  void emit(const std::vector<std::vector<std::vector<Dart>>>& options,
            const std::vector<std::size_t>& pick) {
    std::vector<Edge> edges = edges_;
    for (std::uint32_t e = 0; e < edges.size(); ++e) edges[e].id = "e" + std::to_string(e);
    std::vector<std::vector<Dart>> rot(options.size());
    for (std::size_t v = 0; v < options.size(); ++v) rot[v] = options[v][pick[v]];
    SeparatrixDiagram d(vertices_, std::move(edges), std::move(rot));
    if (validate(d, surface_).valid()) visit_(d);
  }

  Surface surface_;
  const std::function<void(const SeparatrixDiagram&)>& visit_;

  std::vector<Vertex> vertices_;
  std::vector<std::uint32_t> boundary_, sources_, sinks_;
  std::vector<std::uint32_t> int_saddles_, saddles_in_, saddles_out_;

  std::vector<Edge> edges_;
  std::size_t arc_count_ = 0;
  std::size_t circle_count_ = 0;
  std::vector<std::uint32_t> prev_arc_, next_arc_, circle_of_;
  std::vector<SaddleWiring> wiring_;
  std::vector<std::uint32_t> bnd_wiring_;
};

}  // namespace

std::vector<PointBudget> point_multisets(int n, Surface surface) {
  std::vector<PointBudget> out;
  if (n < 2) return out;
  PointBudget cur;
  compositions(n, 0, cur, surface, out);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_valid_diagram(const PointBudget& budget, Surface surface,
                            const std::function<void(const SeparatrixDiagram&)>& visit) {
  Generator(budget, surface, visit).run();
}

std::vector<SeparatrixDiagram> enumerate_flows(int n, const EnumerateOptions& options) {
  std::map<CanonicalCode, SeparatrixDiagram> classes;
  const int lowest = options.up_to ? 2 : n;
  for (int points = lowest; points <= n; ++points) {
    for (const PointBudget& budget : point_multisets(points, options.surface)) {
      for_each_valid_diagram(budget, options.surface, [&](const SeparatrixDiagram& d) {
        CanonicalCode code = canonical_code(d, options.quotient);
        if (!classes.contains(code)) {
          classes.emplace(std::move(code), canonical_form(d, options.quotient));
        }
      });
    }
  }
  std::vector<SeparatrixDiagram> out;
  out.reserve(classes.size());
  for (auto& [code, d] : classes) out.push_back(std::move(d));
  return out;
}

}  // namespace morseflow
