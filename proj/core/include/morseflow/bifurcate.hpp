#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "morseflow/diagram.hpp"
#include "morseflow/topology.hpp"

namespace morseflow {

// Saddle-node bifurcations, named by where the contracted trajectory lies.
// Declared in the column order of the bifurcation table.
enum class BifurcationKind : std::uint8_t {
  SN,   // separatrix between two interior points
  BSN,  // boundary arc with exactly one saddle end
  BDS,  // boundary arc between two boundary saddles
  HN,   // separatrix from a boundary saddle to an interior node
  HS,   // separatrix from an interior saddle to a boundary node
};

inline constexpr int kBifurcationKindCount = 5;

std::string_view to_string(BifurcationKind k);

struct BifurcationRecord {
  std::uint32_t edge = 0;
  BifurcationKind kind = BifurcationKind::SN;
  std::optional<SeparatrixDiagram> contracted;
};

// Multiset over BifurcationKind, indexed by the enum.
struct BifurcationSignature {
  std::array<int, kBifurcationKindCount> counts{};

  int operator[](BifurcationKind k) const { return counts[static_cast<int>(k)]; }
  int& operator[](BifurcationKind k) { return counts[static_cast<int>(k)]; }
  int total() const;
  // e.g. "{SN:2,HS:1}"; "{}" when empty.
  std::string to_string() const;

  friend auto operator<=>(const BifurcationSignature&, const BifurcationSignature&) = default;
};

// True when another edge has the same (tail, head).
bool has_parallel(const SeparatrixDiagram& d, std::uint32_t edge);

// Kind of a single edge, or nullopt when it is not admissible (parallel, a
// separatrix with both ends on the boundary, or an arc between two nodes).
std::optional<BifurcationKind> classify_edge(const SeparatrixDiagram& d, std::uint32_t edge);

// Admissible edges with their kinds, sorted by edge index. Throws
// DiagramError{InvalidDiagram} unless d validates on `surface`.
std::vector<BifurcationRecord> classify_edges(const SeparatrixDiagram& d, Surface surface = {});

// Same records with `contracted` filled in wherever contraction is determinate.
std::vector<BifurcationRecord> classify_with_contractions(const SeparatrixDiagram& d,
                                                          Surface surface = {});

BifurcationSignature signature(const SeparatrixDiagram& d, Surface surface = {});

BifurcationSignature totals(std::span<const SeparatrixDiagram> flows, Surface surface = {});

// Contraction whose rerouted result fails validation.
struct Indeterminate {
  SeparatrixDiagram merged;
  std::vector<Violation> violations;
};

using ContractionResult = std::variant<SeparatrixDiagram, Indeterminate>;

class BifurcationError : public std::runtime_error {
 public:
  enum class Code { NotAdmissible, IsBDS };
  BifurcationError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

// The flow after the bifurcation along `edge`. SN and BSN remove two
// points, HN and HS merge two points into one boundary point. Throws
// BifurcationError for inadmissible edges and for BDS.
ContractionResult contract(const SeparatrixDiagram& d, std::uint32_t edge, Surface surface = {});

}  // namespace morseflow
