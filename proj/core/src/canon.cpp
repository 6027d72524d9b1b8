#include "morseflow/canon.hpp"

#include <algorithm>
#include <optional>

#include "morseflow/topology.hpp"

namespace morseflow {

namespace {

// Flat view of a diagram for repeated traversals.
struct DartTable {
  std::vector<std::uint32_t> succ;
  std::vector<std::uint8_t> vertex_kind;
  std::vector<std::uint8_t> edge_kind;
  std::uint32_t vertices = 0;
  std::uint8_t lone_kind = 0;  // kind of the single vertex when there are no darts

  explicit DartTable(const SeparatrixDiagram& d) : vertices(static_cast<std::uint32_t>(d.vertex_count())) {
    const auto n = static_cast<std::uint32_t>(d.dart_count());
    succ.resize(n);
    vertex_kind.resize(n);
    edge_kind.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Dart x = Dart::from_index(i);
      succ[i] = d.successor(x).index();
      vertex_kind[i] = static_cast<std::uint8_t>(d.kind_at(x));
      edge_kind[i] = static_cast<std::uint8_t>(d.edge_kind(x));
    }
    if (n == 0 && vertices == 1) lone_kind = static_cast<std::uint8_t>(d.vertex(0).kind);
  }
  std::uint32_t darts() const { return static_cast<std::uint32_t>(succ.size()); }
};

void put16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

// Breadth-first labelling of darts from `start`: around each vertex in
// rotation order from the arrival dart, then across each edge.
std::vector<std::uint32_t> traversal_order(const DartTable& t, std::uint32_t start,
                                           std::vector<std::uint32_t>& label) {
  const std::uint32_t n = t.darts();
  constexpr std::uint32_t kNone = ~0u;
  label.assign(n, kNone);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  label[start] = 0;
  order.push_back(start);
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    std::uint32_t y = x;
    do {
      if (label[y] == kNone) {
        label[y] = static_cast<std::uint32_t>(order.size());
        order.push_back(y);
      }
      const std::uint32_t r = y ^ 1u;
      if (label[r] == kNone) {
        label[r] = static_cast<std::uint32_t>(order.size());
        order.push_back(r);
        queue.push_back(r);
      }
      y = t.succ[y];
    } while (y != x);
  }
  return order;
}

std::vector<std::uint8_t> encode(const DartTable& t, const std::vector<std::uint32_t>& order,
                                 const std::vector<std::uint32_t>& label) {
  std::vector<std::uint8_t> out;
  out.reserve(4 + 7 * order.size());
  put16(out, t.vertices);
  put16(out, t.darts());
  for (std::uint32_t x : order) {
    out.push_back(t.vertex_kind[x]);
    out.push_back(t.edge_kind[x]);
    out.push_back(static_cast<std::uint8_t>(x & 1u));
    put16(out, label[x ^ 1u]);
    put16(out, label[t.succ[x]]);
  }
  return out;
}

struct Winner {
  std::vector<std::uint8_t> code;
  std::size_t variant = 0;
  std::uint32_t start = 0;
};

std::vector<SeparatrixDiagram> variants_of(const SeparatrixDiagram& d, QuotientConfig q) {
  std::vector<SeparatrixDiagram> out{d};
  if (q.identify_mirror) out.push_back(mirror(d));
  if (q.identify_reverse) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(reverse_flow(out[i]));
  }
  return out;
}

Winner find_winner(const std::vector<SeparatrixDiagram>& variants) {
  const SeparatrixDiagram& d = variants.front();
  if (!trace_faces(d).connected) {
    throw DiagramError(DiagramError::Code::DisconnectedDiagram,
                       "canonical code requires a connected diagram");
  }
  std::optional<Winner> best;
  std::vector<std::uint32_t> label;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const DartTable table(variants[v]);
    if (table.darts() == 0) {
      std::vector<std::uint8_t> code;
      put16(code, table.vertices);
      put16(code, 0);
      code.push_back(table.lone_kind);
      if (!best || code < best->code) best = Winner{std::move(code), v, 0};
      continue;
    }
    for (std::uint32_t s = 0; s < table.darts(); ++s) {
      const auto order = traversal_order(table, s, label);
      auto code = encode(table, order, label);
      if (!best || code < best->code) best = Winner{std::move(code), v, s};
    }
  }
  return *best;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

std::string CanonicalCode::short_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = kDigits[h & 0xf];
    h >>= 4;
  }
  return s;
}

CanonicalCode canonical_code(const SeparatrixDiagram& d, QuotientConfig q) {
  return {find_winner(variants_of(d, q)).code};
}

SeparatrixDiagram canonical_form(const SeparatrixDiagram& d, QuotientConfig q) {
  const auto variants = variants_of(d, q);
  const Winner w = find_winner(variants);
  const SeparatrixDiagram& chosen = variants[w.variant];
  if (chosen.dart_count() == 0) {
    const std::uint32_t only = 0;
    return relabel(chosen, std::span(&only, 1), {});
  }
  const DartTable table(chosen);
  std::vector<std::uint32_t> label;
  const auto order = traversal_order(table, w.start, label);

  std::vector<std::uint32_t> vertex_order;
  std::vector<std::uint32_t> edge_order;
  std::vector<char> vertex_seen(chosen.vertex_count(), 0);
  std::vector<char> edge_seen(chosen.edge_count(), 0);
  for (std::uint32_t x : order) {
    const Dart dart = Dart::from_index(x);
    const std::uint32_t v = chosen.vertex_of(dart);
    if (!vertex_seen[v]) {
      vertex_seen[v] = 1;
      vertex_order.push_back(v);
    }
    if (!edge_seen[dart.edge]) {
      edge_seen[dart.edge] = 1;
      edge_order.push_back(dart.edge);
    }
  }
  return relabel(chosen, vertex_order, edge_order);
}

bool are_isomorphic(const SeparatrixDiagram& a, const SeparatrixDiagram& b, QuotientConfig q) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    // Still reject disconnected inputs consistently.
    (void)canonical_code(a, q);
    (void)canonical_code(b, q);
    return false;
  }
  return canonical_code(a, q) == canonical_code(b, q);
}

SymmetrySummary symmetries(const SeparatrixDiagram& d, QuotientConfig q) {
  SymmetrySummary s;
  const QuotientConfig for_reverse{q.identify_mirror, false};
  s.self_reverse = canonical_code(d, for_reverse) == canonical_code(reverse_flow(d), for_reverse);
  const QuotientConfig strict{false, false};
  s.self_mirror = canonical_code(d, strict) == canonical_code(mirror(d), strict);
  return s;
}

}  // namespace morseflow
