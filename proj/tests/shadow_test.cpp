#include "doctest.h"
#include "skein/shadow.hpp"
#include "test_util.hpp"

using namespace skein;

namespace {

RegionComplex crossingless(const PuncturedDiagram& d) { return region_complex(resolve(d, KauffmanState{}), d); }

}  // namespace

TEST_CASE("colourings of loop fixtures") {
  RegionComplex e1 = crossingless(fixture("e1"));
  CHECK(enumerate_colorings(e1).empty());
  CHECK_FALSE(binary_coloring(e1));
  CHECK(resolution_bracket(e1).is_zero());
  PsiResult p1 = psi(e1);
  CHECK_FALSE(p1.value);
  CHECK(p1.consistent);

  RegionComplex e2 = crossingless(fixture("e2"));
  auto cols = enumerate_colorings(e2);
  REQUIRE(cols.size() == 1);
  for (size_t r = 0; r < e2.regions.size(); ++r) CHECK(cols[0][r] == (e2.regions[r].external ? 0 : 1));
  CHECK(resolution_bracket(e2) == RationalFn(1));
  CHECK(psi(e2).value == 0);

  RegionComplex e5 = crossingless(fixture("e5"));
  auto bin = binary_coloring(e5);
  REQUIRE(bin);
  for (size_t r = 0; r < e5.regions.size(); ++r) CHECK((*bin)[r] == (e5.regions[r].external ? 0 : 1));
  CHECK(resolution_bracket(e5) == RationalFn(delta()).reciprocal());
  PsiResult p5 = psi(e5);
  CHECK(p5.value == -1);
  CHECK(p5.consistent);
}

TEST_CASE("parallel circles give lattice paths") {
  CHECK(enumerate_colorings(crossingless(parallel_loops(4))).size() == 2);
  CHECK(enumerate_colorings(crossingless(parallel_loops(6))).size() == 5);
  CHECK(enumerate_colorings(crossingless(parallel_loops(3))).empty());
}

TEST_CASE("empty resolution") {
  for (int g = 0; g <= 2; ++g) {
    RegionComplex c = crossingless(parse_diagram("skein-diagram 1\ngenus " + std::to_string(g) + "\n"));
    auto bin = binary_coloring(c);
    REQUIRE(bin);
    CHECK(*bin == Coloring{0});
    CHECK(resolution_bracket(c) == RationalFn(1));
    CHECK(psi(c).value == 0);
  }
}

TEST_CASE("resolution brackets are symmetric and psi routes agree") {
  const char* names[] = {"e2", "e5", "e6", "trefoil", "figure_eight_annulus", "kinked_unknot"};
  for (const char* name : names) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    const int n = d.crossing_count();
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      RegionComplex c = region_complex(resolve(d, KauffmanState::from_mask(n, m)), d);
      RationalFn b = resolution_bracket(c);
      CHECK(b == b.inverted());
      PsiResult p = psi(c);
      CHECK(p.consistent);
      if (p.value) CHECK(*p.value <= 0);
    }
  }
}
