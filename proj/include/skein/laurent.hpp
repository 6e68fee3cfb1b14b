#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skein {

using Integer = mpz_class;

/// Order of a rational function at A = infinity or A = 0, with explicit infinities.
class Order {
 public:
  enum class Kind { minus_infinity, finite, plus_infinity };

  static Order finite(long v) { return Order(Kind::finite, v); }
  static Order minus_infinity() { return Order(Kind::minus_infinity, 0); }
  static Order plus_infinity() { return Order(Kind::plus_infinity, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  long value() const;

  std::strong_ordering operator<=>(const Order& o) const;
  bool operator==(const Order& o) const = default;
  std::string to_string() const;

 private:
  Order(Kind k, long v) : kind_(k), value_(v) {}
  Kind kind_;
  long value_;
};

/// Laurent polynomial in A over arbitrary-precision integers.
/// Terms are kept sorted by increasing exponent, with no zero coefficients.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coeff;
    bool operator==(const Term& o) const { return exponent == o.exponent && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<Term> terms);
  LaurentPoly(long c);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(int exponent, Integer coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int exponent) const;
  const Integer& leading_coeff() const;

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes A -> A^-1.
  LaurentPoly inverted() const;
  LaurentPoly pow(unsigned e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const = default;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

/// Element of Q(A) in canonical form: gcd(num, den) a unit, den has minimal
/// exponent 0 and positive leading coefficient, integer content of the pair is 1,
/// zero is 0/1.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(LaurentPoly p);  // NOLINT: polynomials embed
  RationalFn(long c) : RationalFn(LaurentPoly(c)) {}  // NOLINT

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  RationalFn inverted() const;  // A -> A^-1
  RationalFn reciprocal() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  bool operator==(const RationalFn& o) const = default;

  std::string to_string() const;
  static RationalFn parse(std::string_view text);

 private:
  friend RationalFn rat_normalize(LaurentPoly num, LaurentPoly den);
  struct Canonical {};
  RationalFn(Canonical, LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Canonical representative of num/den. Throws std::domain_error on a zero denominator.
RationalFn rat_normalize(LaurentPoly num, LaurentPoly den);

Order ord_inf(const LaurentPoly& f);
Order ord_zero(const LaurentPoly& f);
Order ord_inf(const RationalFn& f);
Order ord_zero(const RationalFn& f);
long breadth(const RationalFn& f);

/// -A^2 - A^-2, the value of a trivial circle.
const LaurentPoly& delta();

/// Colored unknot (-1)^n [n+1]; n+1 terms with exponents -2n, -2n+4, ..., 2n.
LaurentPoly circ(int n);

/// Gcd of two integer polynomials in A (ordinary, non-negative exponents),
/// primitive with positive leading coefficient. Exposed for tests.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skein
