#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

enum class Verdict { pass, fail, inapplicable };

std::string to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

/// Breadth formula 4n + 4 - 4g - 4k for connected alternating diagrams.
struct TheoremVerdict {
  /// connected, alternating, z2_trivial, full_genus, no_nugatory, no_twice_external
  std::vector<Hypothesis> hypotheses;
  int n = 0;
  int g = 0;
  int k = 0;
  long expected = 0;
  long actual = 0;
  Verdict verdict = Verdict::inapplicable;
};

/// Diagram facts the checks depend on. `from_diagram` fills everything except
/// the bracket-derived fields.
struct DiagramFacts {
  int n = 0;
  int g = 0;
  int diagram_genus = 0;
  bool connected = false;
  bool alternating = false;
  bool z2_trivial = false;
  int nugatory = 0;
  int twice_external = 0;  // crossings meeting one external region at two corners
  int k = 0;
  Adequacy adequacy;

  static DiagramFacts from_diagram(const PuncturedDiagram& d);
};

/// Adequacy of projection.with_over(over) from the shared trivial-circle counts.
Adequacy projection_adequacy(const ProjectionBrackets& pb, std::uint64_t over);

TheoremVerdict jones_tait_verdict(const DiagramFacts& f, long breadth);
TheoremVerdict check_jones_tait(const PuncturedDiagram& d, const BracketOptions& opt = {});

struct BoundCheck {
  bool applicable = false;  // inside the statement's hypotheses
  long lhs = 0;
  long rhs = 0;
  bool holds = true;  // meaningful when applicable
};

struct LemmaReport {
  bool applicable = false;  // connected and z2-trivial
  /// B <= ord_inf <D|s+> - ord_0 <D|s->, equality required when adequate.
  /// Not applicable when the bracket is 0 (its breadth is -infinity).
  BoundCheck ineq1;
  bool adequate = false;
  bool ineq1_equal = false;
  /// 2(n + s+D + s-D + psi(s+) + psi(s-)), when both psi values exist.
  std::optional<long> ineq1_formula;
  /// s+D + s-D <= n + 1 - g, asserted for g(D) = g >= 1 only.
  BoundCheck ineq2;
  /// ord_inf <D|s+> - ord_0 <D|s-> = 4n + 4 - 4g for alternating diagrams with g(D) = g.
  BoundCheck alter_eq;
  bool consistent = true;  // every applicable check holds
};

struct StateEnds {
  long breadth = 0;
  bool bracket_zero = false;
  Order M_plus = Order::minus_infinity();
  Order m_minus = Order::plus_infinity();
  int sD_plus = 0;
  int sD_minus = 0;
  std::optional<long> psi_plus, psi_minus;
};

LemmaReport lemma_bounds(const DiagramFacts& f, const StateEnds& e);
StateEnds state_ends(const BracketReport& rep);
/// The same data for projection.with_over(over), read from shared smoothings.
StateEnds state_ends(const ProjectionBrackets& pb, std::uint64_t over, const RationalFn& bracket);
LemmaReport check_lemma_bounds(const PuncturedDiagram& d, const BracketOptions& opt = {});

/// Link-level hypotheses the caller vouches for.
struct LinkFlags {
  bool non_h_split = false;
  bool z2_trivial = false;
  std::optional<int> homotopic_genus;
  bool sphere_condition = false;  // meets no non-separating 2-sphere
  std::optional<int> crossings;   // n for the crossing-count certificate
};

struct Certificate {
  int kind = 0;  // 1: not alternating; 2: no simple alternating diagram; 3: no alternating n-crossing diagram
  long breadth = 0;
  std::string claim;
};

/// Every certificate whose inequality fails for this bracket, by kind.
std::vector<Certificate> non_alternating_certificate(const RationalFn& bracket, const LinkFlags& flags);

/// Least n with B <= 4n + 2 - 2g (g >= 1) or B <= 4n + 4 (g = 0).
int crossing_lower_bound(const RationalFn& bracket, int g);

}  // namespace skein
