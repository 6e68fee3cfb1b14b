#include "skein/tait.hpp"

#include <doctest.h>

#include "skein/gen.hpp"
#include "test_util.hpp"

using namespace skein;

TEST_CASE("breadth formula verdicts") {
  SUBCASE("E6") {
    TheoremVerdict v = check_jones_tait(fixture("e6"));
    CHECK(v.verdict == Verdict::pass);
    CHECK(v.expected == 0);
    CHECK(v.actual == 0);
    CHECK(v.n == 2);
    CHECK(v.g == 1);
    CHECK(v.k == 2);
  }
  SUBCASE("trefoil") {
    TheoremVerdict v = check_jones_tait(fixture("trefoil"));
    CHECK(v.verdict == Verdict::pass);
    CHECK(v.expected == 16);
    CHECK(v.actual == 16);
  }
  SUBCASE("non-alternating clasp") {
    TheoremVerdict v = check_jones_tait(fixture("e6_same_over"));
    CHECK(v.verdict == Verdict::inapplicable);
    CHECK_FALSE(v.hypotheses[1].holds);
  }
  SUBCASE("disconnected") {
    CHECK(check_jones_tait(fixture("e5")).verdict == Verdict::inapplicable);
  }
}

TEST_CASE("a failing formula is reported as fail") {
  DiagramFacts f;
  f.n = 3;
  f.connected = f.alternating = f.z2_trivial = true;
  CHECK(jones_tait_verdict(f, 16).verdict == Verdict::pass);
  CHECK(jones_tait_verdict(f, 12).verdict == Verdict::fail);
}

TEST_CASE("lemma bounds on fixtures") {
  SUBCASE("E6") {
    LemmaReport r = check_lemma_bounds(fixture("e6"));
    CHECK(r.applicable);
    CHECK(r.ineq1.lhs == 0);
    CHECK(r.ineq1.rhs == 8);
    CHECK_FALSE(r.adequate);
    CHECK(r.ineq1.holds);
    CHECK(r.ineq2.applicable);
    CHECK(r.ineq2.lhs == 2);
    CHECK(r.ineq2.rhs == 2);
    CHECK(r.consistent);
  }
  SUBCASE("trefoil") {
    LemmaReport r = check_lemma_bounds(fixture("trefoil"));
    CHECK(r.adequate);
    CHECK(r.ineq1.lhs == 16);
    CHECK(r.ineq1.rhs == 16);
    CHECK(r.ineq1_equal);
    CHECK_FALSE(r.ineq2.applicable);
    CHECK(r.ineq2.lhs == 5);  // n + 2, one above the stated bound
    CHECK(r.alter_eq.applicable);
    CHECK(r.alter_eq.holds);
    CHECK(r.consistent);
  }
}

TEST_CASE("certificates") {
  LinkFlags flags;
  flags.non_h_split = flags.z2_trivial = true;
  auto with_breadth = [](int b) { return RationalFn(LaurentPoly({{0, 1}, {b, 1}})); };

  auto six = non_alternating_certificate(with_breadth(6), flags);
  REQUIRE_FALSE(six.empty());
  CHECK(six.front().kind == 1);

  auto zero = non_alternating_certificate(RationalFn(0), flags);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().kind == 2);

  CHECK(non_alternating_certificate(with_breadth(8), flags).empty());

  SUBCASE("missing flags give nothing") {
    CHECK(non_alternating_certificate(with_breadth(6), LinkFlags{}).empty());
  }
  SUBCASE("crossing count") {
    flags.homotopic_genus = 1;
    flags.sphere_condition = true;
    flags.crossings = 3;
    auto c = non_alternating_certificate(with_breadth(8), flags);
    REQUIRE(c.size() == 1);
    CHECK(c.front().kind == 3);
    flags.crossings = 2;
    CHECK(non_alternating_certificate(with_breadth(8), flags).empty());
  }
}

TEST_CASE("crossing lower bound") {
  auto with_breadth = [](int b) { return RationalFn(LaurentPoly({{0, 1}, {b, 1}})); };
  CHECK(crossing_lower_bound(with_breadth(16), 0) == 3);
  CHECK(crossing_lower_bound(RationalFn(0), 1) == 0);
  CHECK(crossing_lower_bound(with_breadth(12), 2) == 4);
}

TEST_CASE("verdicts and bounds over a small census") {
  for (int g = 0; g <= 2; ++g) {
    GenSpec spec;
    spec.min_crossings = 1;
    spec.max_crossings = 4;
    spec.genus = g;
    spec.connected = true;
    spec.z2_trivial = true;
    int passes = 0;
    for (const auto& d : enumerate_diagrams(spec)) {
      const DiagramFacts f = DiagramFacts::from_diagram(d);
      const BracketReport rep = kauffman_bracket(d);
      const TheoremVerdict v = jones_tait_verdict(f, rep.breadth);
      CHECK(v.verdict != Verdict::fail);
      passes += v.verdict == Verdict::pass;
      const LemmaReport r = lemma_bounds(f, state_ends(rep));
      CHECK(r.consistent);
      if (f.alternating && simplicity_report(d).simple) CHECK((f.adequacy.plus && f.adequacy.minus));
    }
    CHECK(passes > 0);
  }
}

TEST_CASE("state ends from shared smoothings match the report") {
  GenSpec spec;
  spec.min_crossings = 1;
  spec.max_crossings = 4;
  spec.genus = 1;
  spec.connected = true;
  spec.z2_trivial = true;
  int seen = 0;
  enumerate_families(spec, [&](const DiagramFamily& fam) {
    ProjectionBrackets pb(fam.base);
    for (std::uint64_t o : fam.overs) {
      const BracketReport rep = kauffman_bracket(fam.diagram(o));
      const StateEnds a = state_ends(rep), b = state_ends(pb, o, pb.bracket(o));
      CHECK(a.breadth == b.breadth);
      CHECK(a.M_plus == b.M_plus);
      CHECK(a.m_minus == b.m_minus);
      CHECK(a.sD_plus == b.sD_plus);
      CHECK(a.sD_minus == b.sD_minus);
      CHECK(a.psi_plus == b.psi_plus);
      CHECK(a.psi_minus == b.psi_minus);
      const Adequacy direct = adequacy(fam.diagram(o)), shared = projection_adequacy(pb, o);
      CHECK(direct.plus == shared.plus);
      CHECK(direct.minus == shared.minus);
    }
    return ++seen < 200;
  });
  CHECK(seen > 0);
}
