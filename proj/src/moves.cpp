#include "skein/moves.hpp"

#include <algorithm>
#include <map>

namespace skein {

namespace {

int rot(int d) { return (d & ~3) | ((d + 1) & 3); }
int opp(int d) { return (d & ~3) | ((d + 2) & 3); }
int dart(int x, int s) { return 4 * x + (s & 3); }

// Mutable copy of a diagram: crossings as a dart array plus every anchor.
struct Work {
  int genus = 0;
  std::vector<int> link;
  std::vector<int> over;
  int loops = 0;
  std::vector<Placement> placements;
  std::vector<Anchor> punctures;

  explicit Work(const PuncturedDiagram& d)
      : genus(d.genus()), loops(d.loop_count()), placements(d.data().placements), punctures(d.data().punctures) {
    for (const Crossing& c : d.crossings()) {
      for (const SlotRef& s : c.link) link.push_back(dart(s.crossing, s.slot));
      over.push_back(c.over);
    }
  }

  int n() const { return static_cast<int>(over.size()); }

  template <class F>
  void each_anchor(F f) {
    for (auto& p : punctures) f(p);
    for (auto& pl : placements) {
      f(pl.own);
      f(pl.host);
    }
  }

  void join(int a, int b) {
    link[a] = b;
    link[b] = a;
  }

  int add_crossing(int o) {
    link.resize(link.size() + 4, -1);
    over.push_back(o);
    return n() - 1;
  }

  // Same construction as the map pinch: new slots a_in, b_out, b_in, a_out.
  int pinch(int c1, int c2, int o) {
    const int u1 = rot(c1), w1 = link[u1], u2 = rot(c2), w2 = link[u2];
    const int v = 4 * add_crossing(o);
    if (c1 == c2) {
      join(u1, v + 0);
      join(v + 3, v + 2);
      join(v + 1, w1);
    } else {
      join(u1, v + 0);
      join(v + 3, w1);
      join(u2, v + 2);
      join(v + 1, w2);
    }
    return v / 4;
  }

  // Replaces loop l by crossings: its sides move to the given anchors.
  void replace_loop(int l, Anchor side0, Anchor side1) {
    each_anchor([&](Anchor& a) {
      if (a.kind != Anchor::Kind::loop_side) return;
      if (a.index == l)
        a = a.sub == 0 ? side0 : side1;
      else if (a.index > l)
        --a.index;
    });
    --loops;
  }

  // Deletes crossings, joining strands straight through them. Anchors at deleted
  // corners move to the next surviving corner of their old face.
  void remove_crossings(const std::vector<int>& gone, bool allow_closed = false) {
    const int N = n();
    std::vector<char> dead(N, 0);
    for (int x : gone) dead[x] = 1;
    each_anchor([&](Anchor& a) {
      if (!a.is_corner() || !dead[a.index]) return;
      int c = dart(a.index, a.sub);
      for (int k = 0; k < 4 * N && dead[c / 4]; ++k) c = link[rot(c)];
      if (dead[c / 4]) throw DiagramError("move leaves a face with no surviving corner");
      a = Anchor::corner(c / 4, c % 4);
    });
    std::vector<int> next = link;
    std::vector<char> reached(4 * N, 0);
    for (int s = 0; s < 4 * N; ++s) {
      if (dead[s / 4]) continue;
      int t = link[s];
      while (dead[t / 4]) {
        reached[t] = reached[opp(t)] = 1;
        t = link[opp(t)];
      }
      next[s] = t;
    }
    for (int x : gone)
      for (int i = 0; i < 4; ++i)
        if (!reached[dart(x, i)] && !allow_closed) throw DiagramError("move would leave a closed strand with no crossings");
    std::vector<int> index(N, -1);
    int k = 0;
    for (int x = 0; x < N; ++x)
      if (!dead[x]) index[x] = k++;
    std::vector<int> nl(4 * k), no(k);
    for (int x = 0; x < N; ++x) {
      if (dead[x]) continue;
      no[index[x]] = over[x];
      for (int i = 0; i < 4; ++i) {
        const int t = next[dart(x, i)];
        nl[dart(index[x], i)] = dart(index[t / 4], t % 4);
      }
    }
    link = std::move(nl);
    over = std::move(no);
    each_anchor([&](Anchor& a) {
      if (a.is_corner()) a.index = index[a.index];
    });
  }

  PuncturedDiagram build() const {
    DiagramData data;
    data.genus = genus;
    data.loops = loops;
    data.placements = placements;
    data.punctures = punctures;
    data.crossings.resize(over.size());
    for (int x = 0; x < n(); ++x) {
      data.crossings[x].over = over[x];
      for (int i = 0; i < 4; ++i) data.crossings[x].link[i] = {link[dart(x, i)] / 4, link[dart(x, i)] % 4};
    }
    return PuncturedDiagram(std::move(data));
  }
};

bool face_empty(const PuncturedDiagram& d, const Anchor& face) {
  const int piece = d.piece_of(face), lf = d.local_face(face);
  for (const auto& p : d.data().punctures)
    if (d.piece_of(p) == piece && d.local_face(p) == lf) return false;
  for (const auto& pl : d.data().placements)
    if (d.piece_of(pl.host) == piece && d.local_face(pl.host) == lf) return false;
  return true;
}

void require_corner(const PuncturedDiagram& d, const Anchor& a, const char* what) {
  if (!a.is_corner()) throw DiagramError(std::string(what) + " needs a crossing corner");
  if (a.index < 0 || a.index >= d.crossing_count() || a.sub < 0 || a.sub > 3)
    throw DiagramError(std::string(what) + " names a corner that does not exist");
}

void require_loop(const PuncturedDiagram& d, const Anchor& a, const char* what) {
  if (a.index < 0 || a.index >= d.loop_count() || a.sub < 0 || a.sub > 1)
    throw DiagramError(std::string(what) + " names a loop side that does not exist");
}

void require_empty(const PuncturedDiagram& d, const Anchor& a, const char* what) {
  if (!face_empty(d, a)) throw DiagramError(std::string(what) + " holds a puncture or a nested piece");
}

LaurentPoly kink_factor(int e) { return LaurentPoly::monomial(3 * e, -1); }

// Corners of the local face through corner `c`, following the face walk.
std::vector<int> face_walk(const Work& w, int c) {
  std::vector<int> out{c};
  for (int x = w.link[rot(c)]; x != c; x = w.link[rot(x)]) out.push_back(x);
  return out;
}

MoveResult r1_add(const PuncturedDiagram& d, const MoveSite& s) {
  Work w(d);
  // The kink's monogon is corner 2 of the new crossing.
  const int e = s.over == 0 ? 1 : -1;
  if (s.a.is_corner()) {
    require_corner(d, s.a, "R1 site");
    w.pinch(dart(s.a.index, s.a.sub), dart(s.a.index, s.a.sub), s.over);
  } else {
    require_loop(d, s.a, "R1 site");
    const int v = w.add_crossing(s.over);
    w.join(dart(v, 0), dart(v, 1));
    w.join(dart(v, 2), dart(v, 3));
    // The kinked side touches both lobes; the far side is the other lobe.
    Anchor near = Anchor::corner(v, 1), far = Anchor::corner(v, 0);
    w.replace_loop(s.a.index, s.a.sub == 0 ? near : far, s.a.sub == 0 ? far : near);
  }
  return {w.build(), kink_factor(e)};
}

MoveResult r1_remove(const PuncturedDiagram& d, const MoveSite& s) {
  require_corner(d, s.a, "R1 removal");
  Work w(d);
  const int x = s.a.index, m = s.a.sub;
  if (w.link[dart(x, m + 1)] != dart(x, m)) throw DiagramError("R1 removal site is not a monogon");
  require_empty(d, s.a, "R1 monogon");
  const int e = (m % 2 == w.over[x]) ? 1 : -1;
  const bool opens = w.link[dart(x, m + 2)] == dart(x, m + 3);
  if (opens) {
    // A one-crossing piece opens into a free loop.
    const int l = w.loops++;
    w.each_anchor([&](Anchor& a) {
      if (a.is_corner() && a.index == x) a = Anchor::loop(l, a.sub == (m + 2) % 4 ? 0 : 1);
    });
  }
  w.remove_crossings({x}, opens);
  return {w.build(), kink_factor(-e)};
}

MoveResult r2_add(const PuncturedDiagram& d, const MoveSite& s) {
  Work w(d);
  const int top_a_v = s.over == 0 ? 1 : 0;  // over flags: edge a uses slots 1,3 at v and 0,2 at v2
  if (!s.a.is_corner()) {
    require_loop(d, s.a, "R2 site");
    const int v = w.add_crossing(top_a_v), v2 = w.add_crossing(1 - top_a_v);
    w.join(dart(v, 0), dart(v2, 3));
    w.join(dart(v, 1), dart(v2, 2));
    w.join(dart(v, 2), dart(v, 3));
    w.join(dart(v2, 0), dart(v2, 1));
    Anchor lobe = Anchor::corner(v, 2), outer = Anchor::corner(v, 1);
    w.replace_loop(s.a.index, s.a.sub == 0 ? lobe : outer, s.a.sub == 0 ? outer : lobe);
    return {w.build(), LaurentPoly(1)};
  }
  require_corner(d, s.a, "R2 site");
  require_corner(d, s.b, "R2 site");
  const int c1 = dart(s.a.index, s.a.sub), c2 = dart(s.b.index, s.b.sub);
  if (c1 == c2) throw DiagramError("R2 site needs two distinct corners");
  auto face = face_walk(w, c1);
  if (std::find(face.begin(), face.end(), c2) == face.end()) throw DiagramError("R2 site corners lie in different faces");
  const int v = w.pinch(c1, c2, top_a_v);
  w.pinch(c1, dart(v, 0), 1 - top_a_v);
  return {w.build(), LaurentPoly(1)};
}

MoveResult r2_remove(const PuncturedDiagram& d, const MoveSite& s) {
  require_corner(d, s.a, "R2 removal");
  Work w(d);
  auto face = face_walk(w, dart(s.a.index, s.a.sub));
  if (face.size() != 2 || face[0] / 4 == face[1] / 4) throw DiagramError("R2 removal site is not a bigon");
  const int y = face[0] / 4, j = face[0] % 4, x = face[1] / 4, i = face[1] % 4;
  // Strand through x.i and x.i+2 continues through y.j+1 and y.j+3.
  const bool over_x = w.over[x] == i % 2, over_y = w.over[y] == (j + 1) % 2;
  if (over_x != over_y) throw DiagramError("R2 removal site is a clasp, not a bigon of one strand over another");
  require_empty(d, s.a, "R2 bigon");
  const int piece = d.piece_of_crossing(x);
  w.remove_crossings({x, y});
  PuncturedDiagram out = w.build();
  // The remaining crossings of the piece must stay one piece.
  std::vector<int> old_to_new(d.crossing_count(), -1);
  for (int c = 0, k = 0; c < d.crossing_count(); ++c)
    if (c != x && c != y) old_to_new[c] = k++;
  int pieces = 0;
  std::vector<int> seen;
  for (int c : d.pieces()[piece].crossings)
    if (old_to_new[c] >= 0) {
      int p = out.piece_of_crossing(old_to_new[c]);
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
        seen.push_back(p);
        ++pieces;
      }
    }
  if (pieces != 1) throw DiagramError("R2 removal would split the piece");
  return {std::move(out), LaurentPoly(1)};
}

MoveResult r3(const PuncturedDiagram& d, const MoveSite& s) {
  require_corner(d, s.a, "R3 site");
  Work w(d);
  auto face = face_walk(w, dart(s.a.index, s.a.sub));
  if (face.size() != 3) throw DiagramError("R3 site is not a triangle");
  const int x = face[0] / 4, i = face[0] % 4, z = face[1] / 4, k = face[1] % 4, y = face[2] / 4, j = face[2] % 4;
  if (x == y || y == z || x == z) throw DiagramError("R3 triangle repeats a crossing");
  require_empty(d, s.a, "R3 triangle");
  // Strands: xy through x.i/x.i+2 and y.j+1/y.j+3; xz through x.i+1/x.i+3 and z.k/z.k+2;
  // zy through z.k+1/z.k+3 and y.j/y.j+2.
  const bool xy_over_xz = w.over[x] == i % 2;
  const bool zy_over_xy = w.over[y] == j % 2;
  const bool xz_over_zy = w.over[z] == k % 2;
  if (xy_over_xz == zy_over_xy && zy_over_xy == xz_over_zy) throw DiagramError("R3 triangle is cyclic: no strand lies on top");

  // Old outer slots and the new slots that take their place.
  const std::map<int, int> outer = {{dart(x, i + 2), dart(y, 3)}, {dart(x, i + 3), dart(z, 2)}, {dart(y, j + 2), dart(z, 3)},
                                    {dart(y, j + 3), dart(x, 0)}, {dart(z, k + 2), dart(x, 1)}, {dart(z, k + 3), dart(y, 2)}};
  std::vector<std::pair<int, int>> ends;
  for (auto [old_slot, new_slot] : outer) {
    const int t = w.link[old_slot];
    auto it = outer.find(t);
    ends.push_back({new_slot, it == outer.end() ? t : it->second});
  }
  for (int v : {x, y, z})
    for (int q = 0; q < 4; ++q) w.link[dart(v, q)] = -1;
  for (auto [a, b] : ends) w.join(a, b);
  w.join(dart(x, 2), dart(y, 1));
  w.join(dart(x, 3), dart(z, 0));
  w.join(dart(y, 0), dart(z, 1));
  w.over[x] = xy_over_xz ? 0 : 1;
  w.over[y] = zy_over_xy ? 0 : 1;
  w.over[z] = xz_over_zy ? 0 : 1;

  const std::map<int, int> corners = {
      {dart(x, i + 2), dart(y, 3)}, {dart(x, i + 1), dart(y, 2)}, {dart(z, k + 3), dart(y, 2)},
      {dart(x, i + 3), dart(z, 2)}, {dart(y, j + 1), dart(z, 2)}, {dart(y, j + 2), dart(x, 3)},
      {dart(y, j + 3), dart(x, 0)}, {dart(z, k + 1), dart(x, 0)}, {dart(z, k + 2), dart(x, 1)},
      {dart(x, i), dart(x, 2)},     {dart(y, j), dart(x, 2)},     {dart(z, k), dart(x, 2)}};
  w.each_anchor([&](Anchor& a) {
    if (!a.is_corner()) return;
    auto it = corners.find(dart(a.index, a.sub));
    if (it != corners.end()) a = Anchor::corner(it->second / 4, it->second % 4);
  });
  return {w.build(), LaurentPoly(1)};
}

std::string anchor_text(const Anchor& a) {
  return a.is_corner() ? std::to_string(a.index) + "." + std::to_string(a.sub)
                       : "O" + std::to_string(a.index) + (a.sub == 0 ? ".in" : ".out");
}

}  // namespace

MoveResult apply_move(const PuncturedDiagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::r1_add: return r1_add(d, site);
    case MoveKind::r1_remove: return r1_remove(d, site);
    case MoveKind::r2_add: return r2_add(d, site);
    case MoveKind::r2_remove: return r2_remove(d, site);
    case MoveKind::r3: return r3(d, site);
  }
  throw DiagramError("unknown move");
}

std::vector<MoveSite> legal_moves(const PuncturedDiagram& d) {
  std::vector<MoveSite> out;
  auto try_add = [&](const MoveSite& s) {
    try {
      apply_move(d, s);
      out.push_back(s);
    } catch (const DiagramError&) {
    }
  };
  for (int l = 0; l < d.loop_count(); ++l)
    for (int side = 0; side < 2; ++side)
      for (int o = 0; o < 2; ++o) {
        out.push_back({MoveKind::r1_add, Anchor::loop(l, side), {}, o});
        out.push_back({MoveKind::r2_add, Anchor::loop(l, side), {}, o});
      }
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int c = 0; c < 4; ++c)
      for (int o = 0; o < 2; ++o) out.push_back({MoveKind::r1_add, Anchor::corner(x, c), {}, o});
  for (const Piece& p : d.pieces()) {
    if (p.is_loop()) continue;
    for (const auto& f : p.faces) {
      for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = a + 1; b < f.size(); ++b)
          for (int o = 0; o < 2; ++o) out.push_back({MoveKind::r2_add, Anchor::corner(f[a]), Anchor::corner(f[b]), o});
      const Anchor first = Anchor::corner(*std::min_element(f.begin(), f.end()));
      if (f.size() == 1) try_add({MoveKind::r1_remove, first, {}, 0});
      if (f.size() == 2) try_add({MoveKind::r2_remove, first, {}, 0});
      if (f.size() == 3) try_add({MoveKind::r3, first, {}, 0});
    }
  }
  return out;
}

std::string to_string(const MoveSite& s) {
  static const char* names[] = {"r1_add", "r1_remove", "r2_add", "r2_remove", "r3"};
  std::string out = std::string(names[static_cast<int>(s.kind)]) + " " + anchor_text(s.a);
  if (s.kind == MoveKind::r2_add && s.a.is_corner()) out += " " + anchor_text(s.b);
  if (s.kind == MoveKind::r1_add || s.kind == MoveKind::r2_add) out += " over " + std::to_string(s.over);
  return out;
}

}  // namespace skein
