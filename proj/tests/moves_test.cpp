#include <random>

#include "doctest.h"
#include "skein/bracket.hpp"
#include "skein/gen.hpp"
#include "skein/moves.hpp"
#include "test_util.hpp"

using namespace skein;

namespace {

RationalFn bracket(const PuncturedDiagram& d) { return kauffman_bracket(d).bracket; }

void check_move(const PuncturedDiagram& d, const MoveSite& s) {
  CAPTURE(to_string(s));
  CAPTURE(serialize(d));
  MoveResult r = apply_move(d, s);
  CHECK(bracket(r.diagram) == RationalFn(r.factor) * bracket(d));
  CHECK(z2_class(r.diagram).bits == z2_class(d).bits);
  CHECK(diagram_genus(r.diagram) <= r.diagram.genus());
  CHECK(parse_diagram(serialize(r.diagram)) == r.diagram);
  const int dn = r.diagram.crossing_count() - d.crossing_count();
  switch (s.kind) {
    case MoveKind::r1_add: CHECK(dn == 1); break;
    case MoveKind::r1_remove: CHECK(dn == -1); break;
    case MoveKind::r2_add: CHECK(dn == 2); break;
    case MoveKind::r2_remove: CHECK(dn == -2); break;
    case MoveKind::r3:
      CHECK(dn == 0);
      CHECK(diagram_genus(r.diagram) == diagram_genus(d));
      break;
  }
}

}  // namespace

TEST_CASE("moves on the unknot") {
  PuncturedDiagram u = fixture("unknot");
  MoveResult r2 = apply_move(u, {MoveKind::r2_add, Anchor::loop(0, 0), {}, 0});
  CHECK(r2.diagram.crossing_count() == 2);
  CHECK(bracket(r2.diagram) == RationalFn(delta()));
  MoveResult k = apply_move(u, {MoveKind::r1_add, Anchor::loop(0, 1), {}, 0});
  CHECK(k.diagram.crossing_count() == 1);
  CHECK(bracket(k.diagram) == RationalFn(LaurentPoly::monomial(3, -1) * delta()));
  MoveResult k2 = apply_move(u, {MoveKind::r1_add, Anchor::loop(0, 1), {}, 1});
  CHECK(bracket(k2.diagram) == RationalFn(LaurentPoly::monomial(-3, -1) * delta()));
  // Removing either lobe gives the loop back.
  int removals = 0;
  for (const MoveSite& s : legal_moves(k.diagram))
    if (s.kind == MoveKind::r1_remove) {
      CHECK(apply_move(k.diagram, s).diagram == u);
      ++removals;
    }
  CHECK(removals == 2);
}

TEST_CASE("illegal sites") {
  PuncturedDiagram t = fixture("trefoil");
  CHECK_THROWS_WITH_AS(apply_move(t, {MoveKind::r3, Anchor::corner(0, 2), {}, 0}), doctest::Contains("cyclic"), DiagramError);
  CHECK_THROWS_WITH_AS(apply_move(t, {MoveKind::r1_remove, Anchor::corner(0, 0), {}, 0}), doctest::Contains("monogon"),
                       DiagramError);
  PuncturedDiagram e6 = fixture("e6");
  CHECK_THROWS_WITH_AS(apply_move(e6, {MoveKind::r3, Anchor::corner(0, 0), {}, 0}), doctest::Contains("not a triangle"),
                       DiagramError);
  // The clasp of e6 is a bigon whose strands alternate.
  bool clasp = false;
  for (int c = 0; c < 4; ++c) {
    try {
      apply_move(e6, {MoveKind::r2_remove, Anchor::corner(0, c), {}, 0});
    } catch (const DiagramError& e) {
      clasp |= std::string(e.what()).find("clasp") != std::string::npos;
    }
  }
  CHECK(clasp);
  PuncturedDiagram lobes = fixture("figure_eight_annulus");
  CHECK_THROWS_WITH_AS(apply_move(lobes, {MoveKind::r1_remove, Anchor::corner(0, 0), {}, 0}), doctest::Contains("puncture"),
                       DiagramError);
}

TEST_CASE("every legal move on small diagrams") {
  for (const char* name : {"unknot", "e5", "e6", "e6_same_over", "trefoil", "figure_eight_annulus", "kinked_unknot",
                           "random_seed1_n4_g1"}) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    for (const MoveSite& s : legal_moves(d)) check_move(d, s);
  }
}

TEST_CASE("r3 and r2 removal appear after additions") {
  // Build R3 and R2-removal sites by first adding crossings.
  std::mt19937_64 rng(7);
  int r3_seen = 0, r2_removed = 0, r1_removed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    GenSpec spec;
    spec.max_crossings = 1 + trial % 4;
    spec.genus = trial % 3;
    spec.seed = 100 + trial;
    PuncturedDiagram d = random_diagram(spec);
    for (int step = 0; step < 5; ++step) {
      auto moves = legal_moves(d);
      std::vector<MoveSite> preferred;
      for (const auto& s : moves)
        if (s.kind == MoveKind::r3 || s.kind == MoveKind::r2_remove || s.kind == MoveKind::r1_remove) preferred.push_back(s);
      const auto& pool = preferred.empty() || rng() % 3 == 0 ? moves : preferred;
      const MoveSite s = pool[rng() % pool.size()];
      check_move(d, s);
      r3_seen += s.kind == MoveKind::r3;
      r2_removed += s.kind == MoveKind::r2_remove;
      r1_removed += s.kind == MoveKind::r1_remove;
      d = apply_move(d, s).diagram;
    }
  }
  CHECK(r3_seen > 5);
  CHECK(r2_removed > 5);
  CHECK(r1_removed > 5);
}
