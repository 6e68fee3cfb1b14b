#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Connected 4-regular planar map. Dart 4x+i is slot i of vertex x; `link`
/// pairs darts into edges. Slots run counterclockwise.
struct PlanarMap {
  int n = 0;
  std::vector<int> link;
  auto operator<=>(const PlanarMap&) const = default;

  /// Corner cycles; corner c lies between darts c and the next dart counterclockwise.
  std::vector<std::vector<int>> faces() const;
};

/// Breadth-first code of `m` read from `root`. Equal codes mean equal rooted maps.
std::vector<int> map_code(const PlanarMap& m, int root);

/// Relabels `m` by its least rooted code. `automorphisms` receives, for each
/// orientation-preserving automorphism of the result, the dart permutation.
PlanarMap canonical_map(const PlanarMap& m, std::vector<std::vector<int>>* automorphisms = nullptr);

/// Adds a vertex joining the edges leaving corners c1 and c2 of one face;
/// c1 == c2 adds a kink.
PlanarMap pinch(const PlanarMap& m, int c1, int c2);

/// All connected maps with n >= 1 vertices, canonical and sorted.
std::vector<PlanarMap> planar_maps(int n);

/// Diagram on a map with all over flags 0 and puncture p in face `faces[p]`
/// (indices into m.faces()).
PuncturedDiagram map_diagram(const PlanarMap& m, int genus, const std::vector<int>& faces);

/// Over-flag masks (bit i: crossing i) that make a connected diagram alternating.
std::vector<std::uint64_t> alternating_masks(const PuncturedDiagram& d);

struct GenSpec {
  int min_crossings = 0;
  int max_crossings = 4;
  int genus = 0;
  int loops = 2;  // free loops of the crossingless diagrams
  bool connected = false;
  bool alternating = false;
  bool z2_trivial = false;
  bool full_genus = false;  // g(D) = g
  bool simple = false;
  bool quotient_punctures = true;  // identify diagrams differing by a puncture permutation
  std::uint64_t seed = 1;
  int cap = 10;
};

/// One projection with its punctures and the over masks that survive the
/// predicates and the automorphism quotient.
struct DiagramFamily {
  PuncturedDiagram base;  // all over flags 0
  std::vector<std::uint64_t> overs;
  PuncturedDiagram diagram(std::uint64_t over) const;
};

/// Streams families in a deterministic order; the callback returns false to stop.
void enumerate_families(const GenSpec& spec, const std::function<bool(const DiagramFamily&)>& sink);

std::vector<PuncturedDiagram> enumerate_diagrams(const GenSpec& spec);

/// Reproducible random diagram with exactly max_crossings crossings, satisfying the predicates.
PuncturedDiagram random_diagram(const GenSpec& spec);

/// Bracket by recursive smoothing with brute-force colourings.
RationalFn oracle_bracket(const PuncturedDiagram& d);

/// Classical bracket of the diagram with its punctures forgotten.
LaurentPoly classical_bracket(const PuncturedDiagram& d);

}  // namespace skein
