#include "skein/bracket.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "skein/shadow.hpp"

namespace skein {

namespace {

void check_cap(int n, int cap) {
  if (n > cap)
    throw CapExceeded("diagram has " + std::to_string(n) + " crossings, cap is " + std::to_string(cap));
  if (n > 62) throw CapExceeded("state masks support at most 62 crossings");
}

const LaurentPoly& delta_pow(int k) {
  static std::mutex mu;
  static std::vector<LaurentPoly> powers{LaurentPoly(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * delta());
  return powers[k];
}

// Counts of states per (sum s, sD) sharing one region complex.
struct KeyBucket {
  RegionComplex complex;
  std::map<std::pair<int, int>, long> counts;
};
using Buckets = std::unordered_map<std::string, KeyBucket>;

void accumulate(const PuncturedDiagram& d, std::uint64_t lo, std::uint64_t hi, Buckets& out) {
  const int n = d.crossing_count();
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    KauffmanState s = KauffmanState::from_mask(n, mask);
    ResolvedDiagram r = resolve(d, s);
    RegionComplex c = region_complex(r, d);
    std::string key = c.key();
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(std::move(key), KeyBucket{std::move(c), {}}).first;
    ++it->second.counts[{n - 2 * std::popcount(mask), r.sD}];
  }
}

}  // namespace

RationalFn cached_resolution_bracket(const RegionComplex& c) {
  static std::mutex mu;
  static std::unordered_map<std::string, RationalFn> cache;
  std::string key = c.key();
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RationalFn v = resolution_bracket(c);
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), v);
  return v;
}

RationalFn state_term(const PuncturedDiagram& d, const KauffmanState& s) {
  ResolvedDiagram r = resolve(d, s);
  RationalFn inner = cached_resolution_bracket(region_complex(r, d));
  return RationalFn(LaurentPoly::monomial(s.sum()) * delta_pow(r.sD)) * inner;
}

StateRecord state_record(const PuncturedDiagram& d, std::uint64_t mask) {
  const int n = d.crossing_count();
  KauffmanState s = KauffmanState::from_mask(n, mask);
  ResolvedDiagram r = resolve(d, s);
  RegionComplex c = region_complex(r, d);
  RationalFn inner = cached_resolution_bracket(c);
  RationalFn term = RationalFn(LaurentPoly::monomial(s.sum()) * delta_pow(r.sD)) * inner;
  StateRecord rec;
  rec.mask = mask;
  rec.sum = s.sum();
  rec.sD = r.sD;
  rec.p = r.p;
  if (!inner.is_zero()) rec.psi = ord_inf(inner).value() / 2;
  rec.M = ord_inf(term);
  rec.m = ord_zero(term);
  return rec;
}

BracketReport kauffman_bracket(const PuncturedDiagram& d, const BracketOptions& opt) {
  const int n = d.crossing_count();
  check_cap(n, opt.max_crossings);
  const std::uint64_t total = std::uint64_t{1} << n;
  const int jobs = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(opt.jobs, 1), total)));

  std::vector<Buckets> parts(jobs);
  if (jobs == 1) {
    accumulate(d, 0, total, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] { accumulate(d, total * j / jobs, total * (j + 1) / jobs, parts[j]); });
    for (auto& w : workers) w.join();
  }
  // Merge in key order so the result does not depend on the partition.
  std::map<std::string, KeyBucket> merged;
  for (auto& part : parts)
    for (auto& [key, bucket] : part) {
      auto [it, fresh] = merged.try_emplace(key, std::move(bucket));
      if (!fresh)
        for (const auto& [k, v] : bucket.counts) it->second.counts[k] += v;
    }

  BracketReport rep;
  rep.n = n;
  rep.g = d.genus();
  rep.diagram_genus = diagram_genus(d);
  // Sum numerators over each denominator before normalizing.
  std::vector<std::pair<LaurentPoly, LaurentPoly>> by_den;
  for (const auto& [key, bucket] : merged) {
    RationalFn inner = cached_resolution_bracket(bucket.complex);
    if (inner.is_zero()) continue;
    LaurentPoly weight;
    for (const auto& [k, count] : bucket.counts)
      weight += LaurentPoly::monomial(k.first, count) * delta_pow(k.second);
    auto it = std::find_if(by_den.begin(), by_den.end(), [&](const auto& x) { return x.first == inner.den(); });
    if (it == by_den.end()) it = by_den.insert(by_den.end(), {inner.den(), LaurentPoly()});
    it->second += weight * inner.num();
  }
  for (auto& [den, num] : by_den) rep.bracket += rat_normalize(std::move(num), den);
  rep.breadth = breadth(rep.bracket);
  rep.plus = state_record(d, 0);
  rep.minus = state_record(d, total - 1);
  if (opt.state_records) {
    rep.states.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) rep.states.push_back(state_record(d, m));
  }
  return rep;
}

long bracket_breadth(const PuncturedDiagram& d, const BracketOptions& opt) {
  return kauffman_bracket(d, opt).breadth;
}

ProjectionBrackets::ProjectionBrackets(const PuncturedDiagram& projection, int max_crossings, const Visitor& visit)
    : n_(projection.crossing_count()) {
  check_cap(n_, max_crossings);
  // With every over flag 0, the smoothing type at crossing i is 1 exactly when s(i) = -1.
  PuncturedDiagram base = projection.with_over(std::vector<int>(n_, 0));
  const std::uint64_t total = std::uint64_t{1} << n_;
  class_of_.resize(total);
  sD_.resize(total);
  std::map<std::pair<std::string, int>, size_t> index;
  for (std::uint64_t types = 0; types < total; ++types) {
    ResolvedDiagram r = resolve(base, KauffmanState::from_mask(n_, types));
    RegionComplex c = region_complex(r, base);
    std::string key = c.key();
    if (visit) visit(types, r, c, key);
    auto [it, fresh] = index.try_emplace({std::move(key), r.sD}, classes_.size());
    if (fresh) {
      RationalFn v = RationalFn(delta_pow(r.sD)) * cached_resolution_bracket(c);
      Order oi = ord_inf(v), oz = ord_zero(v);
      classes_.push_back({std::move(v), oi, oz, {}});
    }
    classes_[it->second].types.push_back(types);
    class_of_[types] = static_cast<std::uint32_t>(it->second);
    sD_[types] = static_cast<std::uint8_t>(r.sD);
  }
  for (size_t k = 0; k < classes_.size(); ++k) {
    if (classes_[k].value.is_zero()) continue;
    auto g = std::find_if(groups_.begin(), groups_.end(), [&](const Group& x) { return x.den == classes_[k].value.den(); });
    if (g == groups_.end()) g = groups_.insert(groups_.end(), Group{classes_[k].value.den(), {}});
    g->classes.push_back(k);
  }
}

RationalFn ProjectionBrackets::bracket(std::uint64_t over) const {
  RationalFn sum;
  std::vector<long> counts(2 * n_ + 1);
  for (const auto& g : groups_) {
    LaurentPoly num;
    for (size_t k : g.classes) {
      // A state with types T under over flags o has s(i) = -1 exactly where T and o differ.
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t t : classes_[k].types) ++counts[std::popcount(t ^ over)];
      std::vector<LaurentPoly::Term> terms;
      for (int d = n_; d >= 0; --d)
        if (counts[d]) terms.push_back({n_ - 2 * d, counts[d]});
      num += LaurentPoly(std::move(terms)) * classes_[k].value.num();
    }
    sum += rat_normalize(std::move(num), g.den);
  }
  return sum;
}

}  // namespace skein
