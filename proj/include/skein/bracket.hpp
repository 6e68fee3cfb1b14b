#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/resolution.hpp"

namespace skein {

/// Thrown when a diagram exceeds the configured crossing cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketOptions {
  int jobs = 1;
  int max_crossings = 24;
  bool state_records = false;  // fill BracketReport::states
};

struct StateRecord {
  std::uint64_t mask = 0;    // bit i set: crossing i gets -1
  int sum = 0;               // sum of s(i)
  int sD = 0;
  int p = 0;
  std::optional<long> psi;   // empty when the resolution bracket vanishes
  Order M = Order::minus_infinity();  // ord_inf of the state term
  Order m = Order::plus_infinity();   // ord_0 of the state term
};

struct BracketReport {
  RationalFn bracket;
  long breadth = 0;
  int n = 0;
  int g = 0;
  int diagram_genus = 0;
  std::vector<StateRecord> states;  // in mask order, when requested
  StateRecord plus, minus;
};

/// A^(sum s) * delta^sD * <D_s>.
RationalFn state_term(const PuncturedDiagram& d, const KauffmanState& s);

/// Per-state record for a single state.
StateRecord state_record(const PuncturedDiagram& d, std::uint64_t mask);

BracketReport kauffman_bracket(const PuncturedDiagram& d, const BracketOptions& opt = {});

long bracket_breadth(const PuncturedDiagram& d, const BracketOptions& opt = {});

/// Memoized resolution_bracket keyed by the canonical complex encoding.
/// Safe to call from several threads.
RationalFn cached_resolution_bracket(const RegionComplex& c);

/// Brackets for every over/under assignment of one projection. All
/// assignments share the 2^n smoothings; only the A-exponents differ.
class ProjectionBrackets {
 public:
  /// Called once per smoothing with its types mask, resolution, complex and complex key.
  using Visitor = std::function<void(std::uint64_t, const ResolvedDiagram&, const RegionComplex&, const std::string&)>;

  explicit ProjectionBrackets(const PuncturedDiagram& projection, int max_crossings = 24,
                              const Visitor& visit = nullptr);

  int crossing_count() const { return n_; }

  /// Bracket of projection.with_over(over), with bit i of `over` giving crossing i's over flag.
  RationalFn bracket(std::uint64_t over) const;

  /// Trivial circles and delta^sD <D_s> of the smoothing with types `types`
  /// (bit i: smoothing type of crossing i). Under over flags o, s+ has types o.
  int trivial_circles(std::uint64_t types) const { return sD_[types]; }
  const RationalFn& smoothing_value(std::uint64_t types) const { return classes_[class_of_[types]].value; }
  /// ord_inf and ord_0 of delta^sD <D_s>, excluding the A^(sum s) factor.
  Order smoothing_ord_inf(std::uint64_t types) const { return classes_[class_of_[types]].ord_inf; }
  Order smoothing_ord_zero(std::uint64_t types) const { return classes_[class_of_[types]].ord_zero; }
  /// True when every smoothing has vanishing <D_s>, so every assignment has bracket 0.
  bool all_smoothings_vanish() const { return groups_.empty(); }

 private:
  struct Class {
    RationalFn value;  // delta^sD <D_s>
    Order ord_inf = Order::minus_infinity(), ord_zero = Order::plus_infinity();
    std::vector<std::uint64_t> types;  // smoothing-type masks in this class
  };
  struct Group {
    LaurentPoly den;
    std::vector<size_t> classes;
  };
  int n_;
  std::vector<Class> classes_;
  std::vector<Group> groups_;  // nonzero classes sharing a denominator
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint8_t> sD_;
};

}  // namespace skein
