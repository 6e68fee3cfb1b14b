#pragma once

#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

enum class MoveKind { r1_add, r1_remove, r2_add, r2_remove, r3 };

/// Where a move acts. Corners and loop sides are given as anchors.
///  r1_add:    `a` is a corner or loop side; the kink goes into that face beside the
///             edge leaving the corner. `over` is the new crossing's over flag.
///  r1_remove: `a` is the monogon corner.
///  r2_add:    `a` and `b` are distinct corners of one face (or `a` is a loop side);
///             the edges leaving them are pushed together. `over` 0 puts the edge of
///             `a` on top, 1 the edge of `b`.
///  r2_remove: `a` is a corner of the bigon.
///  r3:        `a` is a corner of the triangle.
struct MoveSite {
  MoveKind kind = MoveKind::r1_add;
  Anchor a;
  Anchor b;
  int over = 0;
};

struct MoveResult {
  PuncturedDiagram diagram;
  LaurentPoly factor{1};  // bracket(after) = factor * bracket(before)
};

/// Applies a Reidemeister move away from the punctures. Throws DiagramError
/// naming the obstruction when the site is illegal.
MoveResult apply_move(const PuncturedDiagram& d, const MoveSite& site);

/// Every legal site of every kind, in a deterministic order.
std::vector<MoveSite> legal_moves(const PuncturedDiagram& d);

std::string to_string(const MoveSite& site);

}  // namespace skein
