#include "skein/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "skein/bracket.hpp"

namespace skein {

namespace {

int rot(int d) { return (d & ~3) | ((d + 1) & 3); }

// Face index of every corner.
std::vector<int> corner_faces(const PlanarMap& m, const std::vector<std::vector<int>>& faces) {
  std::vector<int> f(4 * m.n, -1);
  for (size_t i = 0; i < faces.size(); ++i)
    for (int c : faces[i]) f[c] = static_cast<int>(i);
  return f;
}

// Relabelling read from `root`: vertex -> new index, vertex -> slot offset.
struct Labelling {
  std::vector<int> label, base, order;
};

Labelling label_from(const PlanarMap& m, int root) {
  Labelling l;
  l.label.assign(m.n, -1);
  l.base.assign(m.n, 0);
  l.label[root / 4] = 0;
  l.base[root / 4] = root % 4;
  l.order.push_back(root / 4);
  for (size_t h = 0; h < l.order.size(); ++h) {
    const int v = l.order[h];
    for (int k = 0; k < 4; ++k) {
      const int t = m.link[4 * v + (l.base[v] + k) % 4];
      const int y = t / 4;
      if (l.label[y] < 0) {
        l.label[y] = static_cast<int>(l.order.size());
        l.base[y] = t % 4;
        l.order.push_back(y);
      }
    }
  }
  return l;
}

int relabel_dart(const Labelling& l, int d) { return 4 * l.label[d / 4] + (d % 4 - l.base[d / 4] + 4) % 4; }

// Multisets (or sequences) of `k` values from [0, range) in lexicographic order.
void for_each_choice(int range, int k, bool multiset, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur(k, 0);
  if (k == 0) {
    f(cur);
    return;
  }
  if (range == 0) return;
  while (true) {
    f(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == range - 1) --i;
    if (i < 0) return;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = multiset ? cur[i] : 0;
  }
}

bool base_predicates(const GenSpec& spec, const PuncturedDiagram& d) {
  if (spec.connected && !is_connected(d)) return false;
  if (spec.full_genus && diagram_genus(d) != spec.genus) return false;
  if (spec.z2_trivial && !z2_class(d).trivial()) return false;
  if (spec.simple && !simplicity_report(d).simple) return false;
  return true;
}

// ---- crossingless diagrams: trees of regions, loops as edges ----

std::string tree_code(const std::vector<std::vector<int>>& adj, const std::vector<std::string>& label, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(tree_code(adj, label, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + label[v];
  for (auto& k : kids) s += k;
  return s + ")";
}

std::string tree_key(const std::vector<std::vector<int>>& adj, const std::vector<std::string>& label) {
  std::string best;
  for (size_t v = 0; v < adj.size(); ++v) {
    std::string c = tree_code(adj, label, static_cast<int>(v), -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

// Loop e joins regions edges[e].first and edges[e].second; punctures[p] is a region.
PuncturedDiagram loops_diagram(int genus, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& punctures) {
  DiagramData data;
  data.genus = genus;
  const int k = static_cast<int>(edges.size());
  data.loops = k;
  if (k == 0) return PuncturedDiagram(data);
  const int nodes = k + 1;
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // region -> (loop, other region)
  for (int e = 0; e < k; ++e) {
    adj[edges[e].first].push_back({e, edges[e].second});
    adj[edges[e].second].push_back({e, edges[e].first});
  }
  // Loop 0 is the root piece: side 1 ("out") faces region a, side 0 ("in") faces b.
  std::vector<Anchor> facing(nodes);  // some loop side facing each region
  std::vector<char> seen(nodes, 0);
  std::vector<int> queue;
  auto visit = [&](int region, Anchor side) {
    facing[region] = side;
    seen[region] = 1;
    queue.push_back(region);
  };
  visit(edges[0].first, Anchor::loop(0, 1));
  visit(edges[0].second, Anchor::loop(0, 0));
  for (size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (auto [e, v] : adj[u]) {
      if (seen[v]) continue;
      data.placements.push_back({Anchor::loop(e, 1), facing[u]});
      visit(v, Anchor::loop(e, 0));
    }
  }
  for (int r : punctures) data.punctures.push_back(facing[r]);
  return PuncturedDiagram(std::move(data));
}

void enumerate_loops(const GenSpec& spec, const std::function<bool(const DiagramFamily&)>& sink, bool& stop) {
  const int k = spec.loops;
  const int nodes = k + 1;
  const int punct = spec.genus + 1;
  std::set<std::string> seen;
  auto emit = [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for_each_choice(nodes, punct, spec.quotient_punctures, [&](const std::vector<int>& where) {
      if (stop) return;
      std::vector<std::string> label(nodes);
      if (spec.quotient_punctures) {
        for (int r : where) label[r] += "p";
      } else {
        for (int p = 0; p < punct; ++p) label[where[p]] += std::to_string(p) + ",";
      }
      if (!seen.insert(tree_key(adj, label)).second) return;
      PuncturedDiagram d = loops_diagram(spec.genus, edges, where);
      if (!base_predicates(spec, d)) return;
      if (!sink(DiagramFamily{d, {0}})) stop = true;
    });
  };
  if (nodes == 1) {
    emit({});
    return;
  }
  if (nodes == 2) {
    emit({{0, 1}});
    return;
  }
  // Labelled trees from Pruefer sequences; duplicates fall to the canonical key.
  std::vector<int> seq(nodes - 2, 0);
  while (!stop) {
    std::vector<int> degree(nodes, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({leaf, x});
      --degree[leaf];
      --degree[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < nodes; ++i)
      if (degree[i] == 1) (u < 0 ? u : v) = i;
    edges.push_back({u, v});
    emit(edges);
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == nodes - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

// ---- diagrams on maps ----

void enumerate_on_map(const GenSpec& spec, const PlanarMap& m, const std::vector<std::vector<int>>& auts,
                      const std::function<bool(const DiagramFamily&)>& sink, bool& stop) {
  const auto faces = m.faces();
  const auto cf = corner_faces(m, faces);
  const int nf = static_cast<int>(faces.size());
  const int punct = spec.genus + 1;
  const std::uint64_t masks = std::uint64_t{1} << m.n;

  // Face permutation and vertex parity shift of each automorphism.
  std::vector<std::vector<int>> face_map(auts.size(), std::vector<int>(nf));
  std::vector<std::vector<int>> vertex_map(auts.size(), std::vector<int>(m.n)), shift(auts.size(), std::vector<int>(m.n));
  for (size_t a = 0; a < auts.size(); ++a) {
    for (int f = 0; f < nf; ++f) face_map[a][f] = cf[auts[a][faces[f][0]]];
    for (int x = 0; x < m.n; ++x) {
      vertex_map[a][x] = auts[a][4 * x] / 4;
      shift[a][x] = (auts[a][4 * x] % 4) & 1;
    }
  }
  auto image = [&](size_t a, const std::vector<int>& where) {
    std::vector<int> w(where.size());
    for (size_t p = 0; p < where.size(); ++p) w[p] = face_map[a][where[p]];
    if (spec.quotient_punctures) std::sort(w.begin(), w.end());
    return w;
  };

  for_each_choice(nf, punct, spec.quotient_punctures, [&](const std::vector<int>& where) {
    if (stop) return;
    std::vector<size_t> stabilizer;
    for (size_t a = 0; a < auts.size(); ++a) {
      std::vector<int> w = image(a, where);
      if (w < where) return;
      if (w == where) stabilizer.push_back(a);
    }
    PuncturedDiagram base = map_diagram(m, spec.genus, where);
    if (!base_predicates(spec, base)) return;
    DiagramFamily fam{base, {}};
    auto keep = [&](std::uint64_t o) {
      for (size_t a : stabilizer) {
        std::uint64_t img = 0;
        for (int x = 0; x < m.n; ++x)
          if (((o >> x) & 1) ^ shift[a][x]) img |= std::uint64_t{1} << vertex_map[a][x];
        if (img < o) return;
      }
      fam.overs.push_back(o);
    };
    if (spec.alternating) {
      for (std::uint64_t o : alternating_masks(base)) keep(o);
    } else {
      for (std::uint64_t o = 0; o < masks; ++o) keep(o);
    }
    if (fam.overs.empty()) return;
    if (!sink(fam)) stop = true;
  });
}

}  // namespace

std::vector<std::vector<int>> PlanarMap::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(4 * n, 0);
  for (int c = 0; c < 4 * n; ++c) {
    if (seen[c]) continue;
    out.emplace_back();
    for (int x = c; !seen[x]; x = link[rot(x)]) {
      seen[x] = 1;
      out.back().push_back(x);
    }
  }
  return out;
}

std::vector<int> map_code(const PlanarMap& m, int root) {
  Labelling l = label_from(m, root);
  std::vector<int> code;
  code.reserve(4 * m.n);
  for (int v : l.order)
    for (int k = 0; k < 4; ++k) code.push_back(relabel_dart(l, m.link[4 * v + (l.base[v] + k) % 4]));
  return code;
}

PlanarMap canonical_map(const PlanarMap& m, std::vector<std::vector<int>>* automorphisms) {
  std::vector<int> best;
  std::vector<int> roots;
  for (int r = 0; r < 4 * m.n; ++r) {
    std::vector<int> c = map_code(m, r);
    if (roots.empty() || c < best) {
      best = std::move(c);
      roots = {r};
    } else if (c == best) {
      roots.push_back(r);
    }
  }
  PlanarMap out{m.n, std::vector<int>(4 * m.n)};
  if (m.n == 0) return out;
  Labelling l0 = label_from(m, roots[0]);
  for (int d = 0; d < 4 * m.n; ++d) out.link[relabel_dart(l0, d)] = relabel_dart(l0, m.link[d]);
  if (automorphisms) {
    automorphisms->clear();
    for (int r : roots) {
      // Root r of m is dart relabel(r) of the canonical map; reading from there is an automorphism.
      Labelling l = label_from(out, relabel_dart(l0, r));
      std::vector<int> perm(4 * m.n);
      for (int d = 0; d < 4 * m.n; ++d) perm[d] = relabel_dart(l, d);
      automorphisms->push_back(std::move(perm));
    }
  }
  return out;
}

PlanarMap pinch(const PlanarMap& m, int c1, int c2) {
  PlanarMap out{m.n + 1, m.link};
  out.link.resize(4 * out.n);
  const int v = 4 * m.n;
  // New slots in counterclockwise order: a_in, b_out, b_in, a_out.
  auto join = [&](int a, int b) {
    out.link[a] = b;
    out.link[b] = a;
  };
  if (c1 == c2) {
    const int u = rot(c1), w = m.link[u];
    join(u, v + 0);
    join(v + 3, v + 2);
    join(v + 1, w);
  } else {
    const int u1 = rot(c1), w1 = m.link[u1], u2 = rot(c2), w2 = m.link[u2];
    join(u1, v + 0);
    join(v + 3, w1);
    join(u2, v + 2);
    join(v + 1, w2);
  }
  return out;
}

std::vector<PlanarMap> planar_maps(int n) {
  if (n < 1) return {};
  std::set<PlanarMap> level{PlanarMap{1, {1, 0, 3, 2}}};
  for (int k = 1; k < n; ++k) {
    std::set<PlanarMap> next;
    for (const PlanarMap& m : level)
      for (const auto& face : m.faces())
        for (size_t i = 0; i < face.size(); ++i)
          for (size_t j = i; j < face.size(); ++j) next.insert(canonical_map(pinch(m, face[i], face[j])));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

PuncturedDiagram map_diagram(const PlanarMap& m, int genus, const std::vector<int>& faces) {
  DiagramData data;
  data.genus = genus;
  data.crossings.resize(m.n);
  for (int x = 0; x < m.n; ++x)
    for (int i = 0; i < 4; ++i) data.crossings[x].link[i] = {m.link[4 * x + i] / 4, m.link[4 * x + i] % 4};
  const auto fs = m.faces();
  for (int f : faces) {
    const int c = *std::min_element(fs[f].begin(), fs[f].end());
    data.punctures.push_back(Anchor::corner(c / 4, c % 4));
  }
  return PuncturedDiagram(std::move(data));
}

std::vector<std::uint64_t> alternating_masks(const PuncturedDiagram& d) {
  const int n = d.crossing_count();
  // Constraint o_y = o_x ^ p along each pass to the next crossing of a strand.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int x = 0; x < n; ++x)
    for (int j = 0; j < 4; ++j) {
      SlotRef next = d.link({x, (j + 2) % 4});
      const int p = (j & 1) ^ (next.slot & 1) ^ 1;
      adj[x].push_back({next.crossing, p});
      adj[next.crossing].push_back({x, p});
    }
  std::vector<int> value(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (value[s] >= 0) continue;
    comps.emplace_back();
    value[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comps.back().push_back(x);
      for (auto [y, p] : adj[x]) {
        if (value[y] < 0) {
          value[y] = value[x] ^ p;
          stack.push_back(y);
        } else if (value[y] != (value[x] ^ p)) {
          return {};
        }
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << comps.size()); ++flip) {
    std::uint64_t mask = 0;
    for (size_t c = 0; c < comps.size(); ++c)
      for (int x : comps[c])
        if (value[x] ^ ((flip >> c) & 1)) mask |= std::uint64_t{1} << x;
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PuncturedDiagram DiagramFamily::diagram(std::uint64_t over) const {
  std::vector<int> o(base.crossing_count());
  for (size_t i = 0; i < o.size(); ++i) o[i] = (over >> i) & 1;
  return base.with_over(o);
}

void enumerate_families(const GenSpec& spec, const std::function<bool(const DiagramFamily&)>& sink) {
  if (spec.max_crossings > spec.cap)
    throw CapExceeded("enumeration up to " + std::to_string(spec.max_crossings) + " crossings exceeds the cap of " +
                      std::to_string(spec.cap));
  if (spec.genus < 0 || spec.genus > 62) throw std::invalid_argument("genus out of range");
  bool stop = false;
  for (int n = std::max(spec.min_crossings, 0); n <= spec.max_crossings && !stop; ++n) {
    if (n == 0) {
      enumerate_loops(spec, sink, stop);
      continue;
    }
    for (const PlanarMap& m : planar_maps(n)) {
      std::vector<std::vector<int>> auts;
      canonical_map(m, &auts);
      enumerate_on_map(spec, m, auts, sink, stop);
      if (stop) break;
    }
  }
}

std::vector<PuncturedDiagram> enumerate_diagrams(const GenSpec& spec) {
  std::vector<PuncturedDiagram> out;
  enumerate_families(spec, [&](const DiagramFamily& f) {
    for (std::uint64_t o : f.overs) out.push_back(f.diagram(o));
    return true;
  });
  return out;
}

PuncturedDiagram random_diagram(const GenSpec& spec) {
  const int n = spec.max_crossings;
  if (n > spec.cap)
    throw CapExceeded("random diagram with " + std::to_string(n) + " crossings exceeds the cap of " + std::to_string(spec.cap));
  std::mt19937_64 rng(spec.seed);
  if (n == 0) {
    GenSpec s = spec;
    s.min_crossings = 0;
    std::vector<PuncturedDiagram> all = enumerate_diagrams(s);
    if (all.empty()) throw std::runtime_error("no crossingless diagram satisfies the predicates");
    return all[rng() % all.size()];
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    PlanarMap m{1, {1, 0, 3, 2}};
    while (m.n < n) {
      auto faces = m.faces();
      const auto& f = faces[rng() % faces.size()];
      size_t i = rng() % f.size(), j = rng() % f.size();
      m = pinch(m, f[std::min(i, j)], f[std::max(i, j)]);
    }
    m = canonical_map(m);
    const int nf = n + 2;
    std::vector<int> where(spec.genus + 1);
    for (int& w : where) w = static_cast<int>(rng() % nf);
    PuncturedDiagram base = map_diagram(m, spec.genus, where);
    std::uint64_t over = rng() & ((std::uint64_t{1} << n) - 1);
    if (spec.alternating) {
      auto alts = alternating_masks(base);
      if (alts.empty()) continue;
      over = alts[rng() % alts.size()];
    }
    if (!base_predicates(spec, base)) continue;
    return DiagramFamily{base, {over}}.diagram(over);
  }
  throw std::runtime_error("no random diagram satisfies the predicates");
}

}  // namespace skein
