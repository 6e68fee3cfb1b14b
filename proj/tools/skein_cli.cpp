#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/gen.hpp"
#include "skein/tait.hpp"

using namespace skein;
using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, counterexample = 1, input_error = 2, cap_error = 3 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "human";
  int jobs = 1;
  int max_crossings = 24;
  std::uint64_t seed = 1;
  std::vector<std::string> predicates;
  int genus = 0;
  int n_min = 0;
  int n_max = 4;
  int loops = 2;
  // check: link-level flags the caller vouches for
  std::vector<std::string> assume;
  std::optional<int> homotopic_genus;
  bool json() const { return format == "json-lines"; }
};

std::string order_text(const Order& o) { return o.to_string(); }

ordered_json order_json(const Order& o) {
  if (o.is_finite()) return o.value();
  return o.to_string();
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

ordered_json verdict_json(const TheoremVerdict& v) {
  ordered_json hyps = ordered_json::object();
  for (const auto& h : v.hypotheses) hyps[h.name] = h.holds;
  return {{"verdict", to_string(v.verdict)}, {"expected", v.expected}, {"actual", v.actual},
          {"n", v.n},                         {"g", v.g},               {"k", v.k},
          {"hypotheses", hyps}};
}

ordered_json bound_json(const BoundCheck& b) {
  return {{"applicable", b.applicable}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}};
}

ordered_json lemma_json(const LemmaReport& r) {
  ordered_json j = {{"applicable", r.applicable}, {"adequate", r.adequate},           {"ineq1", bound_json(r.ineq1)},
                    {"ineq1_equal", r.ineq1_equal}, {"ineq2", bound_json(r.ineq2)}, {"alter_eq", bound_json(r.alter_eq)},
                    {"consistent", r.consistent}};
  j["ineq1_formula"] = r.ineq1_formula ? ordered_json(*r.ineq1_formula) : ordered_json(nullptr);
  return j;
}

std::string bound_text(const BoundCheck& b, const char* rel) {
  std::ostringstream s;
  s << b.lhs << " " << rel << " " << b.rhs << (b.holds ? " holds" : " fails");
  if (!b.applicable) s << " (outside hypotheses, logged only)";
  return s.str();
}

int run_bracket(const RunConfig& cfg) {
  BracketOptions opt;
  opt.jobs = cfg.jobs;
  opt.max_crossings = cfg.max_crossings;
  for (const auto& path : cfg.inputs) {
    const PuncturedDiagram d = load_diagram(path);
    const BracketReport rep = kauffman_bracket(d, opt);
    const Z2Class z2 = z2_class(d);
    const Order top = ord_inf(rep.bracket), bottom = ord_zero(rep.bracket);
    if (cfg.json()) {
      ordered_json j = {{"record", "bracket"},
                        {"input", path},
                        {"bracket", rep.bracket.to_string()},
                        {"breadth", rep.breadth},
                        {"ord_inf", order_json(top)},
                        {"ord_0", order_json(bottom)},
                        {"n", rep.n},
                        {"g", rep.g},
                        {"diagram_genus", rep.diagram_genus},
                        {"z2_class", z2.to_string()},
                        {"z2_trivial", z2.trivial()}};
      emit(j);
    } else {
      std::cout << "input: " << path << "\n"
                << "bracket: " << rep.bracket.to_string() << "\n"
                << "breadth: " << rep.breadth << "\n"
                << "ord_inf: " << order_text(top) << "\n"
                << "ord_0: " << order_text(bottom) << "\n"
                << "n: " << rep.n << "\n"
                << "g: " << rep.g << "\n"
                << "g(D): " << rep.diagram_genus << "\n"
                << "z2 class: " << z2.to_string() << "\n";
      if (!z2.trivial()) std::cout << "note: z2-nontrivial, so the bracket vanishes\n";
    }
  }
  return ok;
}

LinkFlags link_flags(const RunConfig& cfg) {
  LinkFlags f;
  for (const auto& a : cfg.assume) {
    if (a == "non-h-split") f.non_h_split = true;
    else if (a == "z2-trivial") f.z2_trivial = true;
    else if (a == "sphere-condition") f.sphere_condition = true;
    else throw CLI::ValidationError("--assume", "unknown flag " + a);
  }
  f.homotopic_genus = cfg.homotopic_genus;
  return f;
}

int run_check(const RunConfig& cfg) {
  BracketOptions opt;
  opt.jobs = cfg.jobs;
  opt.max_crossings = cfg.max_crossings;
  LinkFlags flags = link_flags(cfg);
  int code = ok;
  for (const auto& path : cfg.inputs) {
    const PuncturedDiagram d = load_diagram(path);
    const BracketReport rep = kauffman_bracket(d, opt);
    const DiagramFacts facts = DiagramFacts::from_diagram(d);
    const TheoremVerdict v = jones_tait_verdict(facts, rep.breadth);
    const LemmaReport lem = lemma_bounds(facts, state_ends(rep));
    const SimplicityReport simp = simplicity_report(d);
    flags.crossings = facts.n;
    const std::vector<Certificate> certs = non_alternating_certificate(rep.bracket, flags);
    std::optional<int> lower;
    if (flags.homotopic_genus) lower = crossing_lower_bound(rep.bracket, *flags.homotopic_genus);
    if (v.verdict == Verdict::fail || !lem.consistent) code = counterexample;

    if (cfg.json()) {
      ordered_json certs_j = ordered_json::array();
      for (const auto& c : certs) certs_j.push_back({{"kind", c.kind}, {"breadth", c.breadth}, {"claim", c.claim}});
      ordered_json j = {{"record", "check"},
                        {"input", path},
                        {"bracket", rep.bracket.to_string()},
                        {"breadth", rep.breadth},
                        {"theorem", verdict_json(v)},
                        {"lemmas", lemma_json(lem)},
                        {"connected", facts.connected},
                        {"alternating", facts.alternating},
                        {"z2_trivial", facts.z2_trivial},
                        {"simple", simp.simple},
                        {"nugatory", simp.nugatory},
                        {"two_external", simp.two_external},
                        {"twice_same_external", simp.twice_same_external},
                        {"adequate_plus", facts.adequacy.plus},
                        {"adequate_minus", facts.adequacy.minus},
                        {"assumed", cfg.assume},
                        {"certificates", certs_j}};
      j["crossing_lower_bound"] = lower ? ordered_json(*lower) : ordered_json(nullptr);
      emit(j);
      continue;
    }
    std::cout << "input: " << path << "\n"
              << "bracket: " << rep.bracket.to_string() << "\n"
              << "breadth formula: " << to_string(v.verdict) << " (expected " << v.expected << ", actual " << v.actual
              << ", n=" << v.n << ", g=" << v.g << ", k=" << v.k << ")\n";
    for (const auto& h : v.hypotheses)
      if (!h.holds) std::cout << "  hypothesis fails: " << h.name << "\n";
    if (lem.applicable) {
      std::cout << "ineq1: " << bound_text(lem.ineq1, "<=") << (lem.adequate ? ", adequate" : ", not adequate")
                << (lem.ineq1_equal ? ", equal" : ", strict") << "\n"
                << "ineq2: " << bound_text(lem.ineq2, "<=") << "\n";
      if (lem.alter_eq.applicable) std::cout << "alter_eq: " << bound_text(lem.alter_eq, "=") << "\n";
    } else {
      std::cout << "lemma bounds: not applicable (needs a connected z2-trivial diagram)\n";
    }
    std::cout << "alternating: " << (facts.alternating ? "yes" : "no") << "\n"
              << "simple: " << (simp.simple ? "yes" : "no") << " (nugatory " << simp.nugatory.size()
              << ", two external " << simp.two_external.size() << ", twice one external "
              << simp.twice_same_external.size() << ")\n"
              << "adequate: plus " << (facts.adequacy.plus ? "yes" : "no") << ", minus "
              << (facts.adequacy.minus ? "yes" : "no") << "\n";
    if (certs.empty()) std::cout << "certificates: none\n";
    for (const auto& c : certs) std::cout << "certificate " << c.kind << ": " << c.claim << "\n";
    if (lower) std::cout << "crossing lower bound: " << *lower << "\n";
  }
  return code;
}

GenSpec gen_spec(const RunConfig& cfg) {
  GenSpec spec;
  spec.min_crossings = cfg.n_min;
  spec.max_crossings = cfg.n_max;
  spec.genus = cfg.genus;
  spec.loops = cfg.loops;
  spec.seed = cfg.seed;
  for (const auto& p : cfg.predicates) {
    if (p == "connected") spec.connected = true;
    else if (p == "alternating") spec.alternating = true;
    else if (p == "z2trivial") spec.z2_trivial = true;
    else if (p == "full-genus") spec.full_genus = true;
    else if (p == "simple") spec.simple = true;
    else throw CLI::ValidationError("--predicate", "unknown predicate " + p);
  }
  return spec;
}

struct Row {
  std::string diagram, bracket;
  long breadth = 0;
  int n = 0, diagram_genus = 0;
  TheoremVerdict theorem;
  LemmaReport lemmas;
};

std::vector<Row> family_rows(const DiagramFamily& fam, int max_crossings) {
  ProjectionBrackets pb(fam.base, max_crossings);
  std::vector<Row> rows;
  for (std::uint64_t o : fam.overs) {
    const PuncturedDiagram d = fam.diagram(o);
    const RationalFn b = pb.bracket(o);
    const DiagramFacts f = DiagramFacts::from_diagram(d);
    Row r;
    r.diagram = serialize(d);
    r.bracket = b.to_string();
    r.breadth = breadth(b);
    r.n = f.n;
    r.diagram_genus = f.diagram_genus;
    r.theorem = jones_tait_verdict(f, r.breadth);
    r.lemmas = lemma_bounds(f, state_ends(pb, o, b));
    rows.push_back(std::move(r));
  }
  return rows;
}

int run_enumerate(const RunConfig& cfg) {
  const GenSpec spec = gen_spec(cfg);
  if (cfg.n_max > cfg.max_crossings)
    throw CapExceeded("--n-max " + std::to_string(cfg.n_max) + " exceeds --max-crossings");
  long count = 0, pass = 0, fail = 0, inapplicable = 0, lemma_violations = 0;
  int code = ok;
  auto report = [&](const Row& r) {
    ++count;
    switch (r.theorem.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; code = counterexample; break;
      case Verdict::inapplicable: ++inapplicable; break;
    }
    if (!r.lemmas.consistent) {
      ++lemma_violations;
      code = counterexample;
    }
    if (cfg.json()) {
      emit({{"record", "diagram"},
            {"index", count},
            {"n", r.n},
            {"diagram_genus", r.diagram_genus},
            {"bracket", r.bracket},
            {"breadth", r.breadth},
            {"theorem", verdict_json(r.theorem)},
            {"lemmas", lemma_json(r.lemmas)},
            {"diagram", r.diagram}});
    } else {
      std::cout << "#" << count << " n=" << r.n << " g(D)=" << r.diagram_genus << " breadth=" << r.breadth
                << " theorem=" << to_string(r.theorem.verdict) << " lemmas=" << (r.lemmas.consistent ? "ok" : "VIOLATED")
                << " bracket=" << r.bracket << "\n";
    }
  };

  // Families are evaluated in batches by a worker pool and reported in order.
  std::vector<DiagramFamily> batch;
  auto flush = [&] {
    std::vector<std::vector<Row>> out(batch.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (size_t i; (i = next++) < batch.size();) out[i] = family_rows(batch[i], cfg.max_crossings);
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < cfg.jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& rows : out)
      for (const auto& r : rows) report(r);
    batch.clear();
  };
  enumerate_families(spec, [&](const DiagramFamily& fam) {
    batch.push_back(fam);
    if (batch.size() >= 256) flush();
    return true;
  });
  flush();

  if (cfg.json()) {
    emit({{"record", "summary"},
          {"diagrams", count},
          {"pass", pass},
          {"fail", fail},
          {"inapplicable", inapplicable},
          {"lemma_violations", lemma_violations}});
  } else {
    std::cout << "summary: " << count << " diagrams, theorem pass " << pass << ", fail " << fail << ", inapplicable "
              << inapplicable << ", lemma violations " << lemma_violations << "\n";
  }
  return code;
}

int run_random(const RunConfig& cfg) {
  GenSpec spec = gen_spec(cfg);
  spec.max_crossings = cfg.n_max;
  std::cout << serialize(random_diagram(spec));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman brackets of diagrams in a disk with holes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "human or json-lines")->check(CLI::IsMember({"human", "json-lines"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing cap")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
  };
  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--input,input", cfg.inputs, "diagram files")->required();
  };
  auto generation = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "number of holes")->check(CLI::NonNegativeNumber);
    sub->add_option("--predicate", cfg.predicates, "connected,alternating,z2trivial,full-genus,simple")
        ->delimiter(',');
    sub->add_option("--loops", cfg.loops, "free loops when n = 0")->check(CLI::NonNegativeNumber);
  };

  CLI::App* bracket = app.add_subcommand("bracket", "bracket, breadth and orders of each input");
  common(bracket);
  inputs(bracket);

  CLI::App* check = app.add_subcommand("check", "breadth formula, lemma bounds and certificates");
  common(check);
  inputs(check);
  check->add_option("--assume", cfg.assume, "link-level flags: non-h-split,z2-trivial,sphere-condition")
      ->delimiter(',');
  check->add_option("--homotopic-genus", cfg.homotopic_genus, "homotopic genus of the link");

  CLI::App* enumerate = app.add_subcommand("enumerate", "census with verdicts");
  common(enumerate);
  generation(enumerate);
  enumerate->add_option("--n-min", cfg.n_min, "least crossing count")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--n-max", cfg.n_max, "greatest crossing count")->check(CLI::NonNegativeNumber);

  CLI::App* random = app.add_subcommand("random", "print a reproducible random diagram");
  common(random);
  generation(random);
  random->add_option("--n", cfg.n_max, "crossing count")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*bracket) return run_bracket(cfg);
    if (*check) return run_check(cfg);
    if (*enumerate) return run_enumerate(cfg);
    if (*random) return run_random(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cap_error;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return ok;
}
