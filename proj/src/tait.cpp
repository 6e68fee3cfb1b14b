#include "skein/tait.hpp"

#include <algorithm>

namespace skein {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

DiagramFacts DiagramFacts::from_diagram(const PuncturedDiagram& d) {
  DiagramFacts f;
  f.n = d.crossing_count();
  f.g = d.genus();
  f.diagram_genus = skein::diagram_genus(d);
  f.connected = is_connected(d);
  f.alternating = is_alternating(d);
  f.z2_trivial = z2_class(d).trivial();
  const SimplicityReport s = simplicity_report(d);
  f.nugatory = static_cast<int>(s.nugatory.size());
  f.twice_external = static_cast<int>(s.twice_same_external.size());
  f.k = s.k;
  f.adequacy = skein::adequacy(d);
  return f;
}

Adequacy projection_adequacy(const ProjectionBrackets& pb, std::uint64_t over) {
  const int n = pb.crossing_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto adequate_at = [&](std::uint64_t types) {
    const int base = pb.trivial_circles(types);
    for (int x = 0; x < n; ++x)
      if (pb.trivial_circles(types ^ (std::uint64_t{1} << x)) >= base) return false;
    return true;
  };
  return {adequate_at(over & all), adequate_at(~over & all)};
}

TheoremVerdict jones_tait_verdict(const DiagramFacts& f, long breadth) {
  TheoremVerdict v;
  v.hypotheses = {{"connected", f.connected},
                  {"alternating", f.alternating},
                  {"z2_trivial", f.z2_trivial},
                  {"full_genus", f.diagram_genus == f.g},
                  {"no_nugatory", f.nugatory == 0},
                  {"no_twice_external", f.twice_external == 0}};
  v.n = f.n;
  v.g = f.g;
  v.k = f.k;
  v.expected = 4L * f.n + 4 - 4L * f.g - 4L * f.k;
  v.actual = breadth;
  const bool ok = std::all_of(v.hypotheses.begin(), v.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
  if (!ok)
    v.verdict = Verdict::inapplicable;
  else
    v.verdict = v.expected == v.actual ? Verdict::pass : Verdict::fail;
  return v;
}

TheoremVerdict check_jones_tait(const PuncturedDiagram& d, const BracketOptions& opt) {
  return jones_tait_verdict(DiagramFacts::from_diagram(d), bracket_breadth(d, opt));
}

StateEnds state_ends(const BracketReport& rep) {
  StateEnds e;
  e.breadth = rep.breadth;
  e.bracket_zero = rep.bracket.is_zero();
  e.M_plus = rep.plus.M;
  e.m_minus = rep.minus.m;
  e.sD_plus = rep.plus.sD;
  e.sD_minus = rep.minus.sD;
  e.psi_plus = rep.plus.psi;
  e.psi_minus = rep.minus.psi;
  return e;
}

StateEnds state_ends(const ProjectionBrackets& pb, std::uint64_t over, const RationalFn& bracket) {
  const int n = pb.crossing_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t plus = over & all, minus = ~over & all;
  StateEnds e;
  e.breadth = breadth(bracket);
  e.bracket_zero = bracket.is_zero();
  e.sD_plus = pb.trivial_circles(plus);
  e.sD_minus = pb.trivial_circles(minus);
  const Order top = pb.smoothing_ord_inf(plus), bottom = pb.smoothing_ord_zero(minus);
  if (top.is_finite()) {
    e.M_plus = Order::finite(n + top.value());
    e.psi_plus = (top.value() - 2L * e.sD_plus) / 2;
  }
  if (bottom.is_finite()) {
    e.m_minus = Order::finite(-n + bottom.value());
    const Order minus_top = pb.smoothing_ord_inf(minus);
    e.psi_minus = (minus_top.value() - 2L * e.sD_minus) / 2;
  }
  return e;
}

LemmaReport lemma_bounds(const DiagramFacts& f, const StateEnds& e) {
  LemmaReport r;
  r.applicable = f.connected && f.z2_trivial;
  r.adequate = f.adequacy.plus && f.adequacy.minus;

  const bool ends_finite = e.M_plus.is_finite() && e.m_minus.is_finite();
  r.ineq1.applicable = r.applicable && ends_finite && !e.bracket_zero;
  if (ends_finite) {
    r.ineq1.lhs = e.breadth;
    r.ineq1.rhs = e.M_plus.value() - e.m_minus.value();
    r.ineq1_equal = r.ineq1.lhs == r.ineq1.rhs;
    r.ineq1.holds = r.ineq1.lhs <= r.ineq1.rhs && (!r.adequate || r.ineq1_equal);
  }
  if (e.psi_plus && e.psi_minus)
    r.ineq1_formula = 2 * (f.n + e.sD_plus + e.sD_minus + *e.psi_plus + *e.psi_minus);

  r.ineq2.applicable = r.applicable && f.g >= 1 && f.diagram_genus == f.g;
  r.ineq2.lhs = e.sD_plus + e.sD_minus;
  r.ineq2.rhs = f.n + 1 - f.g;
  r.ineq2.holds = r.ineq2.lhs <= r.ineq2.rhs;

  r.alter_eq.applicable = r.applicable && f.alternating && f.diagram_genus == f.g && ends_finite;
  r.alter_eq.lhs = r.ineq1.rhs;
  r.alter_eq.rhs = 4L * f.n + 4 - 4L * f.g;
  r.alter_eq.holds = r.alter_eq.lhs == r.alter_eq.rhs;

  for (const BoundCheck* c : {&r.ineq1, &r.ineq2, &r.alter_eq})
    if (c->applicable && !c->holds) r.consistent = false;
  if (r.ineq1.applicable && r.ineq1_formula && *r.ineq1_formula != r.ineq1.rhs) r.consistent = false;
  return r;
}

LemmaReport check_lemma_bounds(const PuncturedDiagram& d, const BracketOptions& opt) {
  return lemma_bounds(DiagramFacts::from_diagram(d), state_ends(kauffman_bracket(d, opt)));
}

std::vector<Certificate> non_alternating_certificate(const RationalFn& bracket, const LinkFlags& flags) {
  std::vector<Certificate> out;
  if (!flags.non_h_split || !flags.z2_trivial) return out;
  const long b = breadth(bracket);
  if (b % 4 != 0) out.push_back({1, b, "breadth not a multiple of 4: not alternating"});
  if (b <= 0 || b % 4 != 0) out.push_back({2, b, "breadth not a positive multiple of 4: no simple alternating diagram"});
  if (flags.homotopic_genus && flags.sphere_condition && flags.crossings) {
    const long n = *flags.crossings, g = *flags.homotopic_genus;
    if (b < 4 * n + 4 - 4 * g)
      out.push_back({3, b,
                     "breadth below 4n+4-4g for n=" + std::to_string(n) +
                         ": not alternating, or crossing number below n"});
  }
  return out;
}

int crossing_lower_bound(const RationalFn& bracket, int g) {
  const long b = breadth(bracket);
  // Smallest n >= 0 with 4n >= b - slack.
  const long need = g == 0 ? b - 4 : b - 2 + 2L * g;
  if (need <= 0) return 0;
  return static_cast<int>((need + 3) / 4);
}

}  // namespace skein
