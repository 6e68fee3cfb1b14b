#include "skein/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace skein {

namespace {

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent exponent overflow");
  return r;
}

int checked_neg(int a) {
  if (a == std::numeric_limits<int>::min()) throw std::overflow_error("Laurent exponent overflow");
  return -a;
}

// Dense integer polynomial, index = degree; used for gcd and exact division.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  // Caller guarantees min exponent 0.
  Dense d;
  if (p.is_zero()) return d;
  d.resize(static_cast<size_t>(p.max_exponent()) + 1);
  for (const auto& t : p.terms()) d[static_cast<size_t>(t.exponent)] = t.coeff;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift = 0) {
  std::vector<LaurentPoly::Term> terms;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.push_back({checked_add(static_cast<int>(i), shift), d[i]});
  return LaurentPoly(std::move(terms));
}

Integer content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(Dense& p, const Integer& c) {
  if (c == 0 || c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

Dense primitive(Dense p) {
  trim(p);
  if (p.empty()) return p;
  divide_content(p, content(p));
  if (p.back() < 0)
    for (auto& x : p) x = -x;
  return p;
}

// lc(b)^k * a mod b for suitable k.
Dense pseudo_remainder(Dense r, const Dense& b) {
  const size_t db = b.size() - 1;
  const Integer& lb = b.back();
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (auto& x : r) x *= lb;
    for (size_t i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
    trim(r);
  }
  return r;
}

// Exact quotient a / b over Z; throws if b does not divide a.
Dense exact_divide(Dense a, const Dense& b) {
  trim(a);
  if (a.empty()) return a;
  const size_t db = b.size() - 1;
  if (a.size() - 1 < db) throw std::logic_error("inexact polynomial division");
  Dense q(a.size() - db);
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const size_t shift = a.size() - 1 - db;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    q[shift] = c;
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

Dense dense_gcd(Dense a, Dense b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive(std::move(a));
}

std::string term_body(const Integer& abs_coeff, int e) {
  if (e == 0) return abs_coeff.get_str();
  std::string mono = e == 1 ? "A" : "A^" + std::to_string(e);
  if (abs_coeff == 1) return mono;
  return abs_coeff.get_str() + "*" + mono;
}

}  // namespace

long Order::value() const {
  if (!is_finite()) throw std::logic_error("infinite order has no value");
  return value_;
}

std::strong_ordering Order::operator<=>(const Order& o) const {
  if (kind_ != o.kind_) return kind_ <=> o.kind_;
  if (kind_ == Kind::finite) return value_ <=> o.value_;
  return std::strong_ordering::equal;
}

std::string Order::to_string() const {
  switch (kind_) {
    case Kind::minus_infinity: return "-inf";
    case Kind::plus_infinity: return "+inf";
    default: return std::to_string(value_);
  }
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, std::move(coeff)});
  return p;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.back().exponent;
}

const Integer& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
  return terms_.back().coeff;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exponent = checked_add(t.exponent, k);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({checked_neg(it->exponent), it->coeff});
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponent < o.terms_[j].exponent)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exponent < terms_[i].exponent) {
      out.push_back(o.terms_[j++]);
    } else {
      Integer c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].exponent, std::move(c)});
      ++i, ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = checked_add(a.min_exponent(), b.min_exponent());
  const int hi = checked_add(a.max_exponent(), b.max_exponent());
  Dense acc(static_cast<size_t>(static_cast<long>(hi) - lo + 1));
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      acc[static_cast<size_t>(s.exponent + t.exponent - lo)] += s.coeff * t.coeff;
  return from_dense(acc, lo);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->coeff < 0;
    Integer mag = abs(it->coeff);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_body(mag, it->exponent);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  size_t i = 0;
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' in polynomial at offset " + std::to_string(i));
    }
    std::string digits;
    read_int(digits);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    int exponent = 0;
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw ParseError("dangling '*' in polynomial");
      ++i;
      if (i >= s.size() || s[i] != 'A') throw ParseError("expected 'A' after '*'");
    } else if (!digits.empty() && i < s.size() && s[i] == 'A') {
      throw ParseError("expected '*' between coefficient and 'A'");
    }
    if (i < s.size() && s[i] == 'A') {
      has_var = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        std::string e;
        read_int(e);
        if (e.empty()) throw ParseError("missing exponent after '^'");
        long v = std::stol(e) * esign;
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
          throw ParseError("exponent out of range");
        exponent = static_cast<int>(v);
      }
    }
    if (digits.empty() && !has_var) throw ParseError("malformed term at offset " + std::to_string(i));
    terms.push_back({exponent, sign * coeff});
  }
  return LaurentPoly(std::move(terms));
}

RationalFn::RationalFn(LaurentPoly p) {
  if (p.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // A Laurent polynomial over a unit-content monomial denominator is canonical
  // once its integer content is removed; use the general routine for uniformity.
  *this = rat_normalize(std::move(p), LaurentPoly(1));
}

RationalFn rat_normalize(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return RationalFn(RationalFn::Canonical{}, LaurentPoly(), LaurentPoly(1));
  const int a = num.min_exponent(), b = den.min_exponent();
  Dense n = to_dense(num.shifted(-a));
  Dense d = to_dense(den.shifted(-b));
  if (d.size() > 1 && n.size() > 1) {
    Dense g = dense_gcd(n, d);
    if (g.size() > 1) {
      n = exact_divide(std::move(n), g);
      d = exact_divide(std::move(d), g);
    }
  }
  Integer c = content(n);
  Integer cd = content(d);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  divide_content(n, c);
  divide_content(d, c);
  if (d.back() < 0) {
    for (auto& x : n) x = -x;
    for (auto& x : d) x = -x;
  }
  return RationalFn(RationalFn::Canonical{}, from_dense(n, checked_add(a, -b)), from_dense(d));
}

RationalFn RationalFn::inverted() const {
  return rat_normalize(num_.inverted(), den_.inverted());
}

RationalFn RationalFn::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return rat_normalize(den_, num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(Canonical{}, -num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return rat_normalize(a.num_ + b.num_, a.den_);
  return rat_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return rat_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return rat_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFn RationalFn::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto split = s.find(")/(");
  if (split == std::string::npos) return RationalFn(LaurentPoly::parse(s));
  if (s.front() != '(' || s.back() != ')') throw ParseError("malformed quotient: " + s);
  LaurentPoly n = LaurentPoly::parse(std::string_view(s).substr(1, split - 1));
  LaurentPoly d = LaurentPoly::parse(std::string_view(s).substr(split + 3, s.size() - split - 4));
  if (d.is_zero()) throw ParseError("zero denominator in quotient");
  return rat_normalize(std::move(n), std::move(d));
}

Order ord_inf(const LaurentPoly& f) {
  return f.is_zero() ? Order::minus_infinity() : Order::finite(f.max_exponent());
}

Order ord_zero(const LaurentPoly& f) {
  return f.is_zero() ? Order::plus_infinity() : Order::finite(f.min_exponent());
}

Order ord_inf(const RationalFn& f) {
  if (f.is_zero()) return Order::minus_infinity();
  return Order::finite(static_cast<long>(f.num().max_exponent()) - f.den().max_exponent());
}

Order ord_zero(const RationalFn& f) {
  if (f.is_zero()) return Order::plus_infinity();
  return Order::finite(static_cast<long>(f.num().min_exponent()) - f.den().min_exponent());
}

long breadth(const RationalFn& f) {
  if (f.is_zero()) return 0;
  return ord_inf(f).value() - ord_zero(f).value();
}

const LaurentPoly& delta() {
  static const LaurentPoly d({{-2, Integer(-1)}, {2, Integer(-1)}});
  return d;
}

LaurentPoly circ(int n) {
  if (n < 0) throw std::domain_error("circ: negative color");
  std::vector<LaurentPoly::Term> terms;
  const Integer sign = (n % 2) ? -1 : 1;
  for (int k = 0; k <= n; ++k) terms.push_back({checked_add(2 * n, -4 * k), sign});
  return LaurentPoly(std::move(terms));
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_zero() && a.min_exponent() < 0) throw std::domain_error("poly_gcd: negative exponent");
  if (!b.is_zero() && b.min_exponent() < 0) throw std::domain_error("poly_gcd: negative exponent");
  return from_dense(dense_gcd(to_dense(a), to_dense(b)));
}

}  // namespace skein
