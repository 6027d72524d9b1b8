#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "morseflow/diagram.hpp"

namespace morseflow {

// Which homeomorphisms count as topological equivalence.
struct QuotientConfig {
  bool identify_mirror = true;   // orientation-reversing maps allowed
  bool identify_reverse = false; // a flow and its reversal are identified
  friend bool operator==(const QuotientConfig&, const QuotientConfig&) = default;
};

// Relabelling-invariant key. Equal codes iff the diagrams are isomorphic
// under the quotient the code was computed with.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  // 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
  std::string short_hash() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }
};

// Throws DiagramError{DisconnectedDiagram} if d is not connected.
CanonicalCode canonical_code(const SeparatrixDiagram& d, QuotientConfig q = {});

// The diagram relabelled in the order of the winning traversal, with ids
// "v<i>" / "e<i>". When the quotient identifies mirrors or reversals the
// result may be the mirrored or reversed representative.
SeparatrixDiagram canonical_form(const SeparatrixDiagram& d, QuotientConfig q = {});

bool are_isomorphic(const SeparatrixDiagram& a, const SeparatrixDiagram& b, QuotientConfig q = {});

struct SymmetrySummary {
  bool self_reverse = false;  // d ~ reverse_flow(d)
  bool self_mirror = false;   // d ~ mirror(d) by an orientation-preserving map
};

// self_reverse is judged with q's mirror setting and reversal not
// identified; self_mirror with neither identified.
SymmetrySummary symmetries(const SeparatrixDiagram& d, QuotientConfig q = {});

}  // namespace morseflow
