#include "skein/resolution.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "resolver.hpp"

namespace skein {

namespace {

std::vector<int> bits_to_list(std::uint64_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::vector<std::uint8_t> state_types(const PuncturedDiagram& d, const KauffmanState& s) {
  const int n = d.crossing_count();
  if (static_cast<int>(s.signs.size()) != n)
    throw std::invalid_argument("state assigns " + std::to_string(s.signs.size()) + " crossings, diagram has " +
                                std::to_string(n));
  std::vector<std::uint8_t> types(n);
  for (int x = 0; x < n; ++x) {
    if (s.signs[x] != 1 && s.signs[x] != -1)
      throw std::invalid_argument("state value at crossing " + std::to_string(x) + " is not +1 or -1");
    types[x] = static_cast<std::uint8_t>(smoothing_type(d.crossing(x).over, s.signs[x]));
  }
  return types;
}

std::string encode(const std::vector<std::vector<int>>& adj, const std::vector<std::string>& label, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(encode(adj, label, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + label[v];
  for (auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

KauffmanState KauffmanState::from_mask(int n, std::uint64_t mask) {
  KauffmanState s = plus(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.signs[i] = -1;
  return s;
}

int KauffmanState::sum() const { return std::accumulate(signs.begin(), signs.end(), 0); }

ResolvedDiagram resolve(const PuncturedDiagram& d, const KauffmanState& s) {
  std::vector<std::uint8_t> types = state_types(d, s);
  detail::Resolver res(d);
  res.run(types.data());
  ResolvedDiagram r;
  r.genus = d.genus();
  r.region_count = res.regions();
  r.p_i.assign(d.puncture_count(), 0);
  const std::uint64_t all = (d.puncture_count() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << d.puncture_count()) - 1);
  for (int c = 0; c < res.circles(); ++c) {
    Circle circle;
    circle.id = c;
    circle.enclosed = bits_to_list(res.enclosed(c));
    circle.trivial = res.is_trivial(c);
    circle.side_a = res.side_a(c);
    circle.side_b = res.side_b(c);
    circle.loop = res.loop(c);
    circle.start = res.start(c);
    if (circle.trivial) {
      ++r.sD;
    } else {
      ++r.p;
      const std::uint64_t m = res.enclosed(c);
      if (std::popcount(m) == 1) {
        ++r.p_i[std::countr_zero(m)];
      } else if (m == (all & ~std::uint64_t{1})) {
        ++r.p_i[0];
      } else {
        ++r.residual;
      }
    }
    r.circles.push_back(std::move(circle));
  }
  for (int p = 0; p < d.puncture_count(); ++p) r.puncture_region.push_back(res.puncture_region(p));
  return r;
}

RegionComplex region_complex(const ResolvedDiagram& r, const PuncturedDiagram& d) {
  // Merge fine regions across trivial circles.
  std::vector<int> parent(r.region_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : r.circles)
    if (c.trivial) {
      int a = find(c.side_a), b = find(c.side_b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> id(r.region_count, -1);
  RegionComplex out;
  out.genus = d.genus();
  for (int f = 0; f < r.region_count; ++f) {
    int root = find(f);
    if (id[root] < 0) {
      id[root] = static_cast<int>(out.regions.size());
      out.regions.push_back({id[root], 2, false, {}});
    }
  }
  for (int p = 0; p < static_cast<int>(r.puncture_region.size()); ++p) {
    Region& reg = out.regions[id[find(r.puncture_region[p])]];
    reg.punctures.push_back(p);
    reg.external = true;
    --reg.chi;
  }
  for (const auto& c : r.circles)
    if (!c.trivial) {
      RegionEdge e{c.id, id[find(c.side_a)], id[find(c.side_b)]};
      --out.regions[e.a].chi;
      --out.regions[e.b].chi;
      out.edges.push_back(e);
    }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> RegionComplex::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(regions.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].a].push_back({e, edges[e].b});
    adj[edges[e].b].push_back({e, edges[e].a});
  }
  return adj;
}

std::string RegionComplex::key() const {
  const int n = static_cast<int>(regions.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::string> label(n);
  for (int v = 0; v < n; ++v) label[v] = regions[v].external ? "e" : std::to_string(regions[v].chi);
  // Centres by leaf peeling.
  std::vector<int> deg(n), layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string s = encode(adj, label, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::map<int, int> phi_counts(const RegionComplex& c) {
  std::map<int, int> phi;
  for (const auto& r : c.regions)
    if (!r.external) ++phi[1 - r.chi];
  return phi;
}

Adequacy adequacy(const PuncturedDiagram& d) {
  const int n = d.crossing_count();
  detail::Resolver res(d);
  Adequacy a;
  for (int sign : {1, -1}) {
    std::vector<std::uint8_t> types(n);
    for (int x = 0; x < n; ++x) types[x] = static_cast<std::uint8_t>(smoothing_type(d.crossing(x).over, sign));
    res.run(types.data());
    const int base = res.trivial();
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      types[x] ^= 1;
      res.run(types.data());
      ok = res.trivial() < base;
      types[x] ^= 1;
    }
    (sign > 0 ? a.plus : a.minus) = ok;
  }
  return a;
}

}  // namespace skein
