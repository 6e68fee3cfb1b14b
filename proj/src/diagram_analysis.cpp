#include <algorithm>
#include <map>
#include <set>

#include "skein/diagram.hpp"

namespace skein {

namespace {

// Global-face adjacency across every arc and every free loop.
std::vector<std::vector<int>> face_adjacency(const PuncturedDiagram& d) {
  std::vector<std::set<int>> adj(d.face_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int i = 0; i < 4; ++i) {
      int a = d.face_of(Corner{c, (i + 3) % 4}), b = d.face_of(Corner{c, i});
      adj[a].insert(b);
      adj[b].insert(a);
    }
  for (int l = 0; l < d.loop_count(); ++l) {
    int a = d.loop_face(l, 0), b = d.loop_face(l, 1);
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<std::vector<int>> out(adj.size());
  for (size_t f = 0; f < adj.size(); ++f) out[f].assign(adj[f].begin(), adj[f].end());
  return out;
}

// Two-colouring of a piece's local faces; faces across an arc differ.
std::vector<int> checkerboard(const PuncturedDiagram& d, int piece) {
  const Piece& p = d.pieces()[piece];
  if (p.is_loop()) return {1, 0};
  std::vector<int> color(p.faces.size(), -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const Corner& c : p.faces[f]) {
      // The arc at slot c.slot+1 separates corner c from corner c.slot+1 of the same crossing.
      int g = d.local_face(Corner{c.crossing, (c.slot + 1) % 4});
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      }
    }
  }
  return color;
}

}  // namespace

FaceStructure faces(const PuncturedDiagram& d) {
  FaceStructure fs;
  fs.faces.resize(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) fs.faces[f].id = f;
  std::vector<char> named(d.face_count(), 0);
  auto note = [&](int f, const Anchor& a) {
    if (!named[f] || a < fs.faces[f].name) fs.faces[f].name = a;
    named[f] = 1;
  };
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int i = 0; i < 4; ++i) {
      int f = d.face_of(Corner{c, i});
      fs.faces[f].corners.push_back({c, i});
      note(f, Anchor::corner(c, i));
    }
  for (int l = 0; l < d.loop_count(); ++l)
    for (int s = 0; s < 2; ++s) {
      int f = d.loop_face(l, s);
      fs.faces[f].loop_sides.push_back(Anchor::loop(l, s));
      note(f, Anchor::loop(l, s));
    }
  for (int p = 0; p < d.puncture_count(); ++p) {
    Face& f = fs.faces[d.puncture_face(p)];
    f.punctures.push_back(p);
    f.external = true;
  }
  return fs;
}

bool is_alternating(const PuncturedDiagram& d) {
  const int n = d.crossing_count();
  // A pass through crossing x uses slots {j, j+2}; index it by 2x + j % 2.
  std::vector<char> visited(2 * n, 0);
  std::vector<int> overs;
  for (int start = 0; start < 2 * n; ++start) {
    if (visited[start]) continue;
    overs.clear();
    int x = start / 2, j = start % 2;
    while (!visited[2 * x + j % 2]) {
      visited[2 * x + j % 2] = 1;
      overs.push_back((j % 2) == d.crossing(x).over);
      SlotRef next = d.link({x, (j + 2) % 4});
      x = next.crossing;
      j = next.slot;
    }
    for (size_t k = 0; k < overs.size(); ++k)
      if (overs[k] == overs[(k + 1) % overs.size()]) return false;
  }
  return true;
}

bool is_connected(const PuncturedDiagram& d) { return d.pieces().size() == 1; }

bool Z2Class::trivial() const {
  return std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 0; });
}

std::string Z2Class::to_string() const {
  std::string s;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s += (s.empty() ? "p" : ",p") + std::to_string(i);
  return "{" + s + "}";
}

Z2Class z2_class(const PuncturedDiagram& d) {
  Z2Class z;
  z.bits.assign(d.puncture_count(), 0);
  for (int p = 0; p < static_cast<int>(d.pieces().size()); ++p) {
    std::vector<int> color = checkerboard(d, p);
    for (int q = 0; q < d.puncture_count(); ++q) {
      const Anchor& a = d.data().punctures[q];
      z.bits[q] ^= static_cast<std::uint8_t>(color[d.face_containing(p, d.piece_of(a), d.local_face(a))]);
    }
  }
  if (z.bits[0])
    for (auto& b : z.bits) b ^= 1;
  return z;
}

int diagram_genus(const PuncturedDiagram& d) {
  std::set<int> fs;
  for (int p = 0; p < d.puncture_count(); ++p) fs.insert(d.puncture_face(p));
  return static_cast<int>(fs.size()) - 1;
}

SimplicityReport simplicity_report(const PuncturedDiagram& d) {
  SimplicityReport r;
  std::vector<int> punct(d.face_count(), 0);
  for (int p = 0; p < d.puncture_count(); ++p) ++punct[d.puncture_face(p)];
  auto adj = face_adjacency(d);

  // Punctures reachable from `from` without entering `removed`.
  auto side_punctures = [&](int from, int removed) {
    std::vector<char> seen(d.face_count(), 0);
    seen[removed] = 1;
    seen[from] = 1;
    std::vector<int> stack{from};
    int total = 0;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      total += punct[f];
      for (int g : adj[f])
        if (!seen[g]) {
          seen[g] = 1;
          stack.push_back(g);
        }
    }
    return total;
  };

  for (int c = 0; c < d.crossing_count(); ++c) {
    std::array<int, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = d.face_of(Corner{c, i});
    bool nugatory = false;
    for (int i = 0; i < 2 && !nugatory; ++i) {
      if (f[i] != f[i + 2]) continue;
      const int a = f[i + 1], b = f[(i + 3) % 4];
      if (a == f[i] || b == f[i]) continue;
      nugatory = side_punctures(a, f[i]) == 0 || side_punctures(b, f[i]) == 0;
    }
    if (nugatory) r.nugatory.push_back(c);

    std::map<int, int> ext;
    for (int i = 0; i < 4; ++i)
      if (punct[f[i]] > 0) ++ext[f[i]];
    bool twice = std::any_of(ext.begin(), ext.end(), [](const auto& kv) { return kv.second >= 2; });
    if (ext.size() >= 2) r.two_external.push_back(c);
    if (twice) r.twice_same_external.push_back(c);
    if (ext.size() >= 2 && !twice) ++r.k;
  }
  r.simple = r.nugatory.empty() && r.two_external.empty() && r.twice_same_external.empty();
  return r;
}

}  // namespace skein
