#include "skein/shadow.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace skein {

namespace {

struct Tree {
  std::vector<std::vector<int>> adj;
  std::vector<int> order, parent, bound;
};

// Orders regions breadth-first from an external region; bound is the tree
// distance to the nearest external region, which caps any admissible colour.
Tree make_tree(const RegionComplex& c) {
  const int n = static_cast<int>(c.regions.size());
  Tree t;
  t.adj.resize(n);
  for (const auto& e : c.edges) {
    t.adj[e.a].push_back(e.b);
    t.adj[e.b].push_back(e.a);
  }
  t.bound.assign(n, -1);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (c.regions[v].external) {
      t.bound[v] = 0;
      queue.push_back(v);
    }
  for (size_t h = 0; h < queue.size(); ++h)
    for (int w : t.adj[queue[h]])
      if (t.bound[w] < 0) {
        t.bound[w] = t.bound[queue[h]] + 1;
        queue.push_back(w);
      }
  t.parent.assign(n, -1);
  if (n == 0) return t;
  int root = 0;
  for (int v = 0; v < n; ++v)
    if (c.regions[v].external) {
      root = v;
      break;
    }
  std::vector<char> seen(n, 0);
  t.order.push_back(root);
  seen[root] = 1;
  for (size_t h = 0; h < t.order.size(); ++h)
    for (int w : t.adj[t.order[h]])
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = t.order[h];
        t.order.push_back(w);
      }
  return t;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const RegionComplex& c) {
  const int n = static_cast<int>(c.regions.size());
  std::vector<Coloring> out;
  if (n == 0) return out;
  Tree t = make_tree(c);
  if (!c.regions[t.order[0]].external) {
    // No pinned region: colourings are unbounded; a valid complex always has one.
    return out;
  }
  Coloring col(n, 0);
  std::function<void(size_t)> extend = [&](size_t k) {
    if (k == t.order.size()) {
      out.push_back(col);
      return;
    }
    const int v = t.order[k];
    const int pc = col[t.parent[v]];
    for (int cand : {pc - 1, pc + 1}) {
      if (cand < 0 || cand > t.bound[v]) continue;
      if (c.regions[v].external && cand != 0) continue;
      col[v] = cand;
      extend(k + 1);
    }
  };
  col[t.order[0]] = 0;
  extend(1);
  return out;
}

std::optional<Coloring> binary_coloring(const RegionComplex& c) {
  const int n = static_cast<int>(c.regions.size());
  if (n == 0) return Coloring{};
  Tree t = make_tree(c);
  Coloring col(n, 0);
  for (size_t k = 1; k < t.order.size(); ++k) col[t.order[k]] = 1 - col[t.parent[t.order[k]]];
  for (int v = 0; v < n; ++v)
    if (c.regions[v].external && col[v] != 0) return std::nullopt;
  return col;
}

RationalFn resolution_bracket(const RegionComplex& c) {
  RationalFn sum;
  for (const auto& col : enumerate_colorings(c)) {
    LaurentPoly num(1), den(1);
    for (size_t r = 0; r < c.regions.size(); ++r) {
      const int chi = c.regions[r].chi;
      if (col[r] == 0 || chi == 0) continue;
      LaurentPoly f = circ(col[r]).pow(static_cast<unsigned>(std::abs(chi)));
      (chi > 0 ? num : den) *= f;
    }
    sum += rat_normalize(std::move(num), std::move(den));
  }
  return sum;
}

PsiResult psi(const RegionComplex& c) {
  PsiResult r;
  RationalFn b = resolution_bracket(c);
  auto colorings = enumerate_colorings(c);
  auto weight = [&](const Coloring& col) {
    long s = 0;
    for (size_t v = 0; v < c.regions.size(); ++v) s += static_cast<long>(c.regions[v].chi) * col[v];
    return s;
  };
  for (const auto& col : colorings) {
    long w = weight(col);
    if (!r.from_max || w > *r.from_max) r.from_max = w;
  }
  if (auto bin = binary_coloring(c)) r.from_binary = weight(*bin);
  if (b.is_zero()) {
    r.consistent = !r.from_max && !r.from_binary;
    return r;
  }
  long o = ord_inf(b).value();
  if (o % 2 != 0) r.consistent = false;
  r.value = o / 2;
  r.consistent = r.consistent && r.from_max == r.value && r.from_binary == r.value;
  return r;
}

}  // namespace skein
