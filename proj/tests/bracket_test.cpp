#include "doctest.h"
#include "skein/bracket.hpp"
#include "test_util.hpp"

using namespace skein;

namespace {

RationalFn P(const char* s) { return RationalFn::parse(s); }

}  // namespace

TEST_CASE("state terms") {
  CHECK(state_term(fixture("unknot"), KauffmanState{}) == RationalFn(delta()));
  CHECK(state_term(fixture("e6"), KauffmanState::plus(2)) == P("A^2"));
  CHECK(state_term(fixture("e1"), KauffmanState{}).is_zero());
}

TEST_CASE("fixture brackets") {
  CHECK(kauffman_bracket(fixture("unknot")).bracket == RationalFn(delta()));
  CHECK(kauffman_bracket(fixture("unknot")).breadth == 4);
  BracketReport e6 = kauffman_bracket(fixture("e6"));
  CHECK(e6.bracket == P("A^-6"));
  CHECK(e6.breadth == 0);
  CHECK(kauffman_bracket(fixture("e1")).bracket.is_zero());
  CHECK(kauffman_bracket(fixture("e2")).bracket == RationalFn(1));
  CHECK(kauffman_bracket(fixture("e5")).bracket == RationalFn(delta()).reciprocal());
  CHECK(bracket_breadth(fixture("e5")) == -4);
  CHECK(bracket_breadth(fixture("trefoil")) == 16);
  CHECK(kauffman_bracket(fixture("figure_eight_annulus")).bracket == P("-A^-3"));
  CHECK(kauffman_bracket(fixture("kinked_unknot")).bracket == RationalFn(LaurentPoly::monomial(3, -1) * delta()));
}

TEST_CASE("report agrees with its state records") {
  for (const char* name : {"e6", "trefoil", "figure_eight_annulus", "e6_same_over"}) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    BracketReport rep = kauffman_bracket(d, {.state_records = true});
    REQUIRE(rep.states.size() == (std::size_t{1} << d.crossing_count()));
    RationalFn sum;
    for (const auto& rec : rep.states) {
      KauffmanState s = KauffmanState::from_mask(d.crossing_count(), rec.mask);
      RationalFn t = state_term(d, s);
      sum += t;
      CHECK(rec.M == ord_inf(t));
      CHECK(rec.m == ord_zero(t));
      if (rec.psi) CHECK(rec.M.value() == rec.sum + 2 * rec.sD + 2 * *rec.psi);
    }
    CHECK(sum == rep.bracket);
    CHECK(rep.plus.mask == 0);
    CHECK(rep.minus.sum == -d.crossing_count());
  }
}

TEST_CASE("jobs do not change the result") {
  PuncturedDiagram d = fixture("trefoil");
  RationalFn one = kauffman_bracket(d).bracket;
  for (int jobs : {2, 3, 8, 64}) CHECK(kauffman_bracket(d, {.jobs = jobs}).bracket == one);
}

TEST_CASE("crossing cap") {
  CHECK_THROWS_AS(kauffman_bracket(fixture("trefoil"), {.max_crossings = 2}), CapExceeded);
}

TEST_CASE("projection brackets match per-diagram brackets") {
  for (const char* name : {"e6", "trefoil", "figure_eight_annulus"}) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    const int n = d.crossing_count();
    ProjectionBrackets pb(d);
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << n); ++o) {
      std::vector<int> over(n);
      for (int i = 0; i < n; ++i) over[i] = (o >> i) & 1;
      CHECK(pb.bracket(o) == kauffman_bracket(d.with_over(over)).bracket);
    }
  }
}
