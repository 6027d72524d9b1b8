#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "morseflow/canon.hpp"
#include "morseflow/diagram.hpp"

namespace morseflow {

// How many singular points of each kind a flow has.
struct PointBudget {
  std::array<int, kVertexKindCount> counts{};

  int operator[](VertexKind k) const { return counts[static_cast<int>(k)]; }
  int& operator[](VertexKind k) { return counts[static_cast<int>(k)]; }

  int total() const;
  int boundary_total() const;
  int interior_total() const { return total() - boundary_total(); }

  // e.g. "int_saddle:2 bnd_source:1 bnd_sink:1"
  std::string to_string() const;

  friend auto operator<=>(const PointBudget&, const PointBudget&) = default;
};

PointBudget budget_of(const SeparatrixDiagram& d);

// All budgets with n points that pass the boundary parity, index and
// source/sink constraints for the surface, in lexicographic order.
std::vector<PointBudget> point_multisets(int n, Surface surface = {});

struct EnumerateOptions {
  Surface surface{};
  QuotientConfig quotient{};
  bool up_to = false;  // include every point count from 2 to n
};

// One canonical-form representative per equivalence class of valid
// diagrams, sorted by canonical code.
std::vector<SeparatrixDiagram> enumerate_flows(int n, const EnumerateOptions& options = {});

// Visits every valid diagram the generator produces for one budget, before
// deduplication. The same class is typically visited many times.
void for_each_valid_diagram(const PointBudget& budget, Surface surface,
                            const std::function<void(const SeparatrixDiagram&)>& visit);

}  // namespace morseflow
