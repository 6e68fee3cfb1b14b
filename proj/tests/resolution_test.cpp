#include <bit>

#include "doctest.h"
#include "skein/resolution.hpp"
#include "test_util.hpp"

using namespace skein;

namespace {

const char* kAll[] = {"e1", "e2", "e5", "e6", "e6_same_over", "trefoil", "unknot", "kinked_unknot",
                      "figure_eight_annulus"};

int essential(const ResolvedDiagram& r) {
  int e = 0;
  for (const auto& c : r.circles) e += !c.trivial;
  return e;
}

}  // namespace

TEST_CASE("e6 states") {
  PuncturedDiagram d = fixture("e6");
  ResolvedDiagram plus = resolve(d, KauffmanState::plus(2));
  CHECK(plus.sD == 0);
  CHECK(essential(plus) == 2);
  CHECK(plus.p == 2);
  CHECK(plus.p_i == std::vector<int>{0, 2});

  ResolvedDiagram mixed = resolve(d, KauffmanState{{1, -1}});
  CHECK(mixed.sD == 1);
  CHECK(essential(mixed) == 0);
  CHECK(mixed.p == 0);

  CHECK_THROWS_AS(resolve(d, KauffmanState{{1}}), std::invalid_argument);
  CHECK_THROWS_AS(resolve(d, KauffmanState{{1, 0}}), std::invalid_argument);
}

TEST_CASE("crossingless resolutions are the components") {
  ResolvedDiagram r = resolve(fixture("e5"), KauffmanState{});
  CHECK(r.circles.size() == 3);
  CHECK(r.sD == 0);
  r = resolve(fixture("unknot"), KauffmanState{});
  CHECK(r.circles.size() == 1);
  CHECK(r.sD == 1);
}

TEST_CASE("region complexes of the loop fixtures") {
  PuncturedDiagram e5 = fixture("e5");
  RegionComplex c = region_complex(resolve(e5, KauffmanState{}), e5);
  CHECK(c.regions.size() == 4);
  CHECK(c.edges.size() == 3);
  int pants = 0;
  for (const auto& r : c.regions)
    if (!r.external) {
      CHECK(r.chi == -1);
      ++pants;
    }
  CHECK(pants == 1);
  CHECK(phi_counts(c) == std::map<int, int>{{2, 1}});

  PuncturedDiagram e2 = fixture("e2");
  c = region_complex(resolve(e2, KauffmanState{}), e2);
  CHECK(c.regions.size() == 3);
  int internal = 0;
  for (const auto& r : c.regions) {
    if (r.external) {
      CHECK(r.chi == 0);
    } else {
      CHECK(r.chi == 0);
      ++internal;
    }
  }
  CHECK(internal == 1);
  CHECK(phi_counts(c) == std::map<int, int>{{1, 1}});

  for (int g = 0; g <= 3; ++g) {
    PuncturedDiagram empty = parse_diagram("skein-diagram 1\ngenus " + std::to_string(g) + "\n");
    c = region_complex(resolve(empty, KauffmanState{}), empty);
    REQUIRE(c.regions.size() == 1);
    CHECK(c.regions[0].external);
    CHECK(c.regions[0].chi == 1 - g);
    CHECK(phi_counts(c).empty());
  }
}

TEST_CASE("complex keys ignore labelling") {
  PuncturedDiagram d = fixture("e6");
  RegionComplex a = region_complex(resolve(d, KauffmanState::plus(2)), d);
  RegionComplex b = region_complex(resolve(fixture("e2"), KauffmanState{}), fixture("e2"));
  CHECK(a.key() == b.key());
  RegionComplex e = region_complex(resolve(fixture("e1"), KauffmanState{}), fixture("e1"));
  CHECK(a.key() != e.key());
}

TEST_CASE("tree, leaf and Euler invariants over all states") {
  for (const char* name : kAll) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    const int n = d.crossing_count();
    const bool z2_trivial = z2_class(d).trivial();
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      CAPTURE(m);
      ResolvedDiagram r = resolve(d, KauffmanState::from_mask(n, m));
      RegionComplex c = region_complex(r, d);
      CHECK(c.edges.size() + 1 == c.regions.size());
      CHECK(static_cast<int>(c.edges.size()) == r.p);
      int chi = 0;
      auto adj = c.adjacency();
      for (size_t v = 0; v < c.regions.size(); ++v) {
        chi += c.regions[v].chi;
        if (adj[v].size() <= 1) CHECK(c.regions[v].external);
        if (!c.regions[v].external) CHECK(c.regions[v].chi <= 0);
      }
      CHECK(chi == 1 - d.genus());
      // Enclosed-puncture parity of all circles matches the diagram's class.
      std::uint64_t parity = 0;
      for (const auto& circ : r.circles)
        for (int p : circ.enclosed) parity ^= 1ull << p;
      const std::uint64_t all = (2ull << d.genus()) - 1;
      CHECK((parity == 0 || parity == all) == z2_trivial);
      int sum_p = r.residual;
      for (int x : r.p_i) sum_p += x;
      CHECK(sum_p == r.p);
    }
  }
}

TEST_CASE("adequacy") {
  CHECK(adequacy(fixture("trefoil")).plus);
  CHECK(adequacy(fixture("trefoil")).minus);
  Adequacy e6 = adequacy(fixture("e6"));
  CHECK_FALSE(e6.plus);
  CHECK(e6.minus);
  CHECK(adequacy(fixture("e5")).plus);
  CHECK(adequacy(fixture("e5")).minus);
  CHECK_FALSE(adequacy(fixture("kinked_unknot")).plus == adequacy(fixture("kinked_unknot")).minus);
}
