#pragma once

#include <optional>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/resolution.hpp"

namespace skein {

/// Colour per region of a RegionComplex.
using Coloring = std::vector<int>;

/// All colourings with external regions at 0 and colours across every
/// essential circle differing by exactly 1.
std::vector<Coloring> enumerate_colorings(const RegionComplex& c);

/// The {0,1}-valued admissible colouring, when one exists.
std::optional<Coloring> binary_coloring(const RegionComplex& c);

/// Sum over admissible colourings of prod_R circ(colour)^chi(R).
RationalFn resolution_bracket(const RegionComplex& c);

struct PsiResult {
  std::optional<long> value;        // half the order at infinity; empty when the bracket is 0
  std::optional<long> from_max;     // max over colourings of sum chi * colour
  std::optional<long> from_binary;  // sum chi * colour of the binary colouring
  bool consistent = true;
};

PsiResult psi(const RegionComplex& c);

}  // namespace skein
