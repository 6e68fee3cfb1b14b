#include <random>

#include "doctest.h"
#include "skein/laurent.hpp"

using namespace skein;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi, int max_terms) {
  std::vector<LaurentPoly::Term> terms;
  const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int i = 0; i < count; ++i) {
    int e = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    long c = static_cast<long>(rng() % 7) - 3;
    terms.push_back({e, Integer(c)});
  }
  return LaurentPoly(std::move(terms));
}

// Value-equality oracle independent of normalization: a/b == c/d iff a*d == c*b.
bool same_value(const LaurentPoly& a, const LaurentPoly& b, const RationalFn& r) {
  return a * r.den() == r.num() * b;
}

}  // namespace

TEST_CASE("polynomial arithmetic and text form") {
  LaurentPoly d = delta();
  CHECK(d.to_string() == "-A^2 - A^-2");
  CHECK(P("-A^2 - A^-2") == d);
  CHECK((d * d).to_string() == "A^4 + 2 + A^-4");
  CHECK(P("3*A^5 - 2*A + 7").coeff(1) == -2);
  CHECK((P("A") - P("A")).is_zero());
  CHECK(P("A^1") == P("A"));
  CHECK(d.inverted() == d);
  CHECK(P("A^3 + 2*A^-1").shifted(2) == P("A^5 + 2*A"));
  CHECK(d.pow(3) == d * d * d);
  CHECK_THROWS_AS(P("A^"), ParseError);
  CHECK_THROWS_AS(P("2A"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::monomial(std::numeric_limits<int>::max()).shifted(1),
                  std::overflow_error);
}

TEST_CASE("rat_normalize canonical forms") {
  RationalFn r = rat_normalize(P("A^3 + A"), P("A"));
  CHECK(r.num() == P("A^2 + 1"));
  CHECK(r.den() == P("1"));

  RationalFn z = rat_normalize(LaurentPoly(), P("A^5"));
  CHECK(z.is_zero());
  CHECK(z.den() == P("1"));

  RationalFn q = rat_normalize(P("A^4 - 1"), P("A^2 - 1"));
  CHECK(q.num() == P("A^2 + 1"));
  CHECK(q.den() == P("1"));
  CHECK(same_value(P("A^4 - 1"), P("A^2 - 1"), q));

  RationalFn s = rat_normalize(P("2*A^2"), P("-4*A^2 - 4"));
  CHECK(s.num() == P("-A^2"));
  CHECK(s.den() == P("2*A^2 + 2"));

  CHECK_THROWS_AS(rat_normalize(P("1"), LaurentPoly()), std::domain_error);
}

TEST_CASE("rat_normalize is value preserving, idempotent and cancels common factors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly f = random_poly(rng, -6, 6, 5);
    LaurentPoly g = random_poly(rng, -6, 6, 5);
    LaurentPoly h = random_poly(rng, -4, 4, 4);
    if (g.is_zero() || h.is_zero()) continue;
    RationalFn r = rat_normalize(f, g);
    CHECK(same_value(f, g, r));
    CHECK(rat_normalize(r.num(), r.den()) == r);
    CHECK(rat_normalize(f * h, g * h) == r);
    if (!r.is_zero()) {
      CHECK(r.den().min_exponent() == 0);
      CHECK(r.den().leading_coeff() > 0);
      // Gcd of the canonical pair is a unit.
      LaurentPoly n0 = r.num().shifted(-r.num().min_exponent());
      CHECK(poly_gcd(n0, r.den()) == LaurentPoly(1));
    }
  }
}

TEST_CASE("orders and breadth") {
  RationalFn ex = rat_normalize(P("A^16 - A^12 + A^8 + 1"), P("A^8 + A^4"));
  CHECK(ord_inf(ex) == Order::finite(8));
  CHECK(ord_zero(ex) == Order::finite(-4));
  CHECK(breadth(ex) == 12);

  RationalFn zero;
  CHECK(ord_inf(zero) == Order::minus_infinity());
  CHECK(ord_zero(zero) == Order::plus_infinity());
  CHECK(breadth(zero) == 0);
  CHECK(Order::minus_infinity() < Order::finite(-1000));
  CHECK(Order::finite(1000) < Order::plus_infinity());
  CHECK_THROWS(Order::plus_infinity().value());

  CHECK(breadth(RationalFn(delta())) == 4);
  CHECK(breadth(RationalFn(1) / RationalFn(delta())) == -4);
}

TEST_CASE("colored unknots") {
  CHECK(circ(0) == P("1"));
  CHECK(circ(1) == delta());
  CHECK(circ(2) == P("A^4 + 1 + A^-4"));
  CHECK_THROWS_AS(circ(-1), std::domain_error);
  for (int n = 0; n <= 5; ++n) {
    LaurentPoly c = circ(n);
    CHECK(ord_inf(c) == Order::finite(2 * n));
    CHECK(ord_zero(c) == Order::finite(-2 * n));
    CHECK(c.terms().size() == static_cast<size_t>(n + 1));
    CHECK(c.inverted() == c);
    // (-1)^n [n+1] as the quantum-integer quotient: circ(n) * (A^2 - A^-2) = (-1)^n (A^{2n+2} - A^{-2n-2}).
    LaurentPoly lhs = c * P("A^2 - A^-2");
    LaurentPoly rhs = LaurentPoly::monomial(2 * n + 2) - LaurentPoly::monomial(-2 * n - 2);
    CHECK(lhs == (n % 2 ? -rhs : rhs));
  }
}

TEST_CASE("breadth and order properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    RationalFn f = rat_normalize(random_poly(rng, -5, 5, 4), random_poly(rng, -5, 5, 3) + LaurentPoly(7));
    RationalFn g = rat_normalize(random_poly(rng, -5, 5, 4), random_poly(rng, -5, 5, 3) + LaurentPoly(5));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(breadth(f * g) == breadth(f) + breadth(g));
    CHECK(breadth(f.reciprocal()) == -breadth(f));
    CHECK(ord_zero(f).value() == -ord_inf(f.inverted()).value());
    Order s = ord_inf(f + g);
    Order m = std::max(ord_inf(f), ord_inf(g));
    CHECK(s <= m);
    if (ord_inf(f) != ord_inf(g)) CHECK(s == m);
  }
}

TEST_CASE("rational text round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly den = random_poly(rng, -3, 3, 3);
    if (den.is_zero()) continue;
    RationalFn r = rat_normalize(random_poly(rng, -8, 8, 6), den);
    CHECK(RationalFn::parse(r.to_string()) == r);
  }
  RationalFn e5 = RationalFn(1) / RationalFn(delta());
  CHECK(e5.to_string() == "(-A^2)/(A^4 + 1)");
  CHECK(RationalFn::parse("(-A^2)/(A^4 + 1)") == e5);
}
