#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "morseflow/bifurcate.hpp"
#include "morseflow/canon.hpp"
#include "morseflow/diagram.hpp"

namespace morseflow {

inline constexpr std::string_view kFormatVersion = "1";

// A diagram together with the surface it lives on.
struct DiagramDocument {
  Surface surface{};
  SeparatrixDiagram diagram;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON with sorted keys, two-space indent and a trailing newline. Darts are
// written "<edge id>.t" / "<edge id>.h".
std::string to_json(const DiagramDocument& doc);

// Throws FormatError on malformed text and DiagramError on structural
// problems reported by build_diagram.
DiagramDocument parse_json(std::string_view text);

DiagramDocument read_document(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Graphviz digraph. Vertex and edge kinds are attributes; arcs are black.
std::string to_dot(const SeparatrixDiagram& d, std::string_view name = "flow");

// One line per flow: ordinal, short hash, point budget.
std::string format_flow_line(std::size_t ordinal, const SeparatrixDiagram& d, QuotientConfig q = {});

// "points | Morse | SN | BSN | BDS | HN | HS"
std::string bifurcation_header();
// e.g. "4 | 1 | 0 | 0 | 0 | 0 | 0"
std::string bifurcation_row(int points, std::size_t flows, const BifurcationSignature& totals);

}  // namespace morseflow
