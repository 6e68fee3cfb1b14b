#include <map>
#include <numeric>

#include "skein/gen.hpp"
#include "skein/resolution.hpp"

namespace skein {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

int partner(int slot, int type) { return ((slot - type) & 1) == 0 ? (slot + 1) % 4 : (slot + 3) % 4; }

// Bracket of the crossingless diagram left after smoothing every crossing
// with `types`, found by exhaustive colour search over the region graph.
RationalFn crossingless_value(const PuncturedDiagram& d, const std::vector<int>& types, UnionFind uf, int& trivial) {
  const int n = d.crossing_count();
  // Circles: each records the two regions beside it.
  std::vector<std::pair<int, int>> circles;
  std::vector<char> used(4 * n, 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (used[s]) continue;
    const int x0 = s / 4, j0 = s % 4;
    circles.push_back({uf.find(d.face_of(Corner{x0, j0})), uf.find(d.face_of(Corner{x0, (j0 + 3) % 4}))});
    int x = x0, j = j0;
    while (!used[4 * x + j]) {
      used[4 * x + j] = 1;
      SlotRef t = d.link({x, j});
      used[4 * t.crossing + t.slot] = 1;
      x = t.crossing;
      j = partner(t.slot, types[x]);
    }
  }
  for (int l = 0; l < d.loop_count(); ++l) circles.push_back({uf.find(d.loop_face(l, 0)), uf.find(d.loop_face(l, 1))});

  std::map<int, int> node;
  for (int f = 0; f < d.face_count(); ++f) node.emplace(uf.find(f), static_cast<int>(node.size()));
  const int nodes = static_cast<int>(node.size());
  std::vector<int> punct(nodes, 0);
  for (int p = 0; p < d.puncture_count(); ++p) ++punct[node[uf.find(d.puncture_face(p))]];

  // A circle is trivial when one side, cut off from the rest, has no punctures.
  auto side_punctures = [&](size_t cut, int start) {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int total = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      total += punct[v];
      for (size_t e = 0; e < circles.size(); ++e) {
        if (e == cut) continue;
        int a = node[circles[e].first], b = node[circles[e].second];
        int w = a == v ? b : b == v ? a : -1;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return total;
  };
  UnionFind merged(nodes);
  std::vector<std::pair<int, int>> essential;
  trivial = 0;
  for (size_t e = 0; e < circles.size(); ++e) {
    int a = node[circles[e].first], b = node[circles[e].second];
    int pa = side_punctures(e, a);
    if (pa == 0 || pa == d.puncture_count()) {
      ++trivial;
      merged.join(a, b);
    } else {
      essential.push_back({a, b});
    }
  }
  std::map<int, int> region;
  for (int v = 0; v < nodes; ++v) region.emplace(merged.find(v), static_cast<int>(region.size()));
  const int R = static_cast<int>(region.size());
  std::vector<int> chi(R, 2), rp(R, 0);
  for (int v = 0; v < nodes; ++v) rp[region[merged.find(v)]] += punct[v];
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : essential) {
    int ra = region[merged.find(a)], rb = region[merged.find(b)];
    edges.push_back({ra, rb});
    --chi[ra];
    --chi[rb];
  }
  for (int r = 0; r < R; ++r) chi[r] -= rp[r];

  std::vector<int> internal;
  for (int r = 0; r < R; ++r)
    if (rp[r] == 0) internal.push_back(r);
  std::vector<int> colour(R, 0);
  RationalFn sum;
  const int top = static_cast<int>(internal.size());
  auto admissible = [&]() {
    for (auto [a, b] : edges)
      if (std::abs(colour[a] - colour[b]) != 1) return false;
    return true;
  };
  // Odometer over all colourings of the internal regions with colours 0..top.
  while (true) {
    if (admissible()) {
      RationalFn term(1);
      for (int r : internal) {
        RationalFn c(circ(colour[r]));
        for (int k = 0; k < std::abs(chi[r]); ++k) term = chi[r] > 0 ? term * c : term / c;
      }
      sum += term;
    }
    size_t i = 0;
    while (i < internal.size() && colour[internal[i]] == top) colour[internal[i++]] = 0;
    if (i == internal.size()) break;
    ++colour[internal[i]];
  }
  return sum;
}

void expand(const PuncturedDiagram& d, int x, std::vector<int>& types, const UnionFind& uf, int sum, RationalFn& total) {
  if (x == d.crossing_count()) {
    int trivial = 0;
    RationalFn inner = crossingless_value(d, types, uf, trivial);
    if (inner.is_zero()) return;
    total += RationalFn(LaurentPoly::monomial(sum) * delta().pow(static_cast<unsigned>(trivial))) * inner;
    return;
  }
  for (int sign : {1, -1}) {
    const int t = smoothing_type(d.crossing(x).over, sign);
    types[x] = t;
    UnionFind next = uf;
    next.join(d.face_of(Corner{x, (t + 1) % 4}), d.face_of(Corner{x, (t + 3) % 4}));
    expand(d, x + 1, types, next, sum + sign, total);
  }
}

}  // namespace

RationalFn oracle_bracket(const PuncturedDiagram& d) {
  std::vector<int> types(d.crossing_count(), 0);
  RationalFn total;
  expand(d, 0, types, UnionFind(d.face_count()), 0, total);
  return total;
}

LaurentPoly classical_bracket(const PuncturedDiagram& d) {
  const int n = d.crossing_count();
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int sum = 0, loops = d.loop_count();
    std::vector<int> types(n);
    for (int x = 0; x < n; ++x) {
      const int sign = (mask >> x) & 1 ? -1 : 1;
      sum += sign;
      types[x] = smoothing_type(d.crossing(x).over, sign);
    }
    std::vector<char> used(4 * n, 0);
    for (int s = 0; s < 4 * n; ++s) {
      if (used[s]) continue;
      ++loops;
      int x = s / 4, j = s % 4;
      while (!used[4 * x + j]) {
        used[4 * x + j] = 1;
        SlotRef t = d.link({x, j});
        used[4 * t.crossing + t.slot] = 1;
        x = t.crossing;
        j = partner(t.slot, types[x]);
      }
    }
    total += LaurentPoly::monomial(sum) * delta().pow(static_cast<unsigned>(loops));
  }
  return total;
}

}  // namespace skein
