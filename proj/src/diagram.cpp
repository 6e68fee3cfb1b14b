#include "skein/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace skein {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

constexpr int kMaxGenus = 62;

}  // namespace

std::string anchor_face_name(const Anchor& a) {
  if (a.is_corner()) return std::to_string(a.index) + "." + std::to_string(a.sub);
  return a.sub == 0 ? "in" : "out";
}

std::string piece_name(const PuncturedDiagram& d, int piece) {
  const Piece& p = d.pieces()[static_cast<size_t>(piece)];
  if (p.is_loop()) return "O" + std::to_string(p.loop);
  return "C" + std::to_string(p.crossings.front());
}

PuncturedDiagram::PuncturedDiagram(DiagramData data) : data_(std::move(data)) {
  if (data_.genus < 0 || data_.genus > kMaxGenus)
    throw DiagramError("genus out of range: " + std::to_string(data_.genus));
  if (data_.loops < 0) throw DiagramError("negative loop count");
  const int n = crossing_count();

  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossing(c);
    if (x.over != 0 && x.over != 1)
      throw DiagramError("crossing " + std::to_string(c) + ": over must be 0 or 1");
    for (int i = 0; i < 4; ++i) {
      SlotRef t = x.link[static_cast<size_t>(i)];
      if (t.crossing < 0 || t.crossing >= n || t.slot < 0 || t.slot > 3)
        throw DiagramError("dangling arc at slot " + std::to_string(c) + "." + std::to_string(i));
      if (t == SlotRef{c, i})
        throw DiagramError("arc joins slot " + std::to_string(c) + "." + std::to_string(i) + " to itself");
      if (link(t) != SlotRef{c, i})
        throw DiagramError("slot conflict at " + std::to_string(t.crossing) + "." + std::to_string(t.slot));
    }
  }

  // Crossing pieces.
  UnionFind uf(n);
  for (int c = 0; c < n; ++c)
    for (const auto& t : crossing(c).link) uf.unite(c, t.crossing);
  crossing_piece_.assign(static_cast<size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    const int root = uf.find(c);
    if (root == c) {
      crossing_piece_[static_cast<size_t>(c)] = static_cast<int>(pieces_.size());
      pieces_.emplace_back();
    } else {
      crossing_piece_[static_cast<size_t>(c)] = crossing_piece_[static_cast<size_t>(root)];
    }
    pieces_[static_cast<size_t>(crossing_piece_[static_cast<size_t>(c)])].crossings.push_back(c);
  }

  // Local faces: corner (x,i) is followed by corner (y,j) when the arc leaving
  // slot i+1 of x ends at slot j of y. Corners are visited in increasing order,
  // so each walk starts at its least corner and faces come out sorted.
  corner_local_.assign(static_cast<size_t>(4 * n), -1);
  for (auto& piece : pieces_) {
    for (int c : piece.crossings) {
      for (int i = 0; i < 4; ++i) {
        if (corner_local_[static_cast<size_t>(4 * c + i)] >= 0) continue;
        const int id = static_cast<int>(piece.faces.size());
        piece.faces.emplace_back();
        Corner cur{c, i};
        while (corner_local_[static_cast<size_t>(4 * cur.crossing + cur.slot)] < 0) {
          corner_local_[static_cast<size_t>(4 * cur.crossing + cur.slot)] = id;
          piece.faces.back().push_back(cur);
          cur = link({cur.crossing, (cur.slot + 1) % 4});
        }
        if (cur != Corner{c, i})
          throw DiagramError("face walk does not close at corner " + std::to_string(c) + "." +
                             std::to_string(i));
      }
    }
    if (piece.faces.size() != piece.crossings.size() + 2)
      throw DiagramError("rotation system of piece C" + std::to_string(piece.crossings.front()) +
                         " is not planar (" + std::to_string(piece.faces.size()) + " faces for " +
                         std::to_string(piece.crossings.size()) + " crossings)");
  }

  loop_piece_.resize(static_cast<size_t>(data_.loops));
  for (int l = 0; l < data_.loops; ++l) {
    loop_piece_[static_cast<size_t>(l)] = static_cast<int>(pieces_.size());
    Piece p;
    p.loop = l;
    p.faces.resize(2);
    pieces_.push_back(std::move(p));
  }

  auto validate = [&](const Anchor& a, const std::string& what) {
    bool ok = a.is_corner() ? (a.index >= 0 && a.index < n && a.sub >= 0 && a.sub < 4)
                            : (a.index >= 0 && a.index < data_.loops && (a.sub == 0 || a.sub == 1));
    if (!ok) throw DiagramError("unknown face " + anchor_face_name(a) + " in " + what);
  };

  // Nesting forest.
  const int pieces = static_cast<int>(pieces_.size());
  for (const auto& pl : data_.placements) {
    validate(pl.own, "placement");
    validate(pl.host, "placement");
    const int own = piece_of(pl.own), host = piece_of(pl.host);
    Piece& p = pieces_[static_cast<size_t>(own)];
    if (p.host_piece >= 0) throw DiagramError("piece " + piece_name(*this, own) + " placed twice");
    if (own == host) throw DiagramError("piece " + piece_name(*this, own) + " placed in itself");
    p.host_piece = host;
    p.host_face = local_face(pl.host);
    p.own_face = local_face(pl.own);
  }
  if (pieces > 0) {
    int roots = 0;
    for (const auto& p : pieces_) roots += p.host_piece < 0;
    if (roots != 1)
      throw DiagramError(roots == 0 ? "nesting cycle: no root piece"
                                    : "multiple root pieces: every piece but one needs a placement");
  }
  depth_.assign(static_cast<size_t>(pieces), -1);
  for (int p = 0; p < pieces; ++p) {
    int cur = p, steps = 0;
    while (pieces_[static_cast<size_t>(cur)].host_piece >= 0) {
      cur = pieces_[static_cast<size_t>(cur)].host_piece;
      if (++steps > pieces) throw DiagramError("nesting cycle through piece " + piece_name(*this, p));
    }
    depth_[static_cast<size_t>(p)] = steps;
  }

  if (pieces == 0) {
    if (!data_.punctures.empty()) throw DiagramError("punctures placed in an empty diagram");
  } else if (static_cast<int>(data_.punctures.size()) != puncture_count()) {
    throw DiagramError("expected " + std::to_string(puncture_count()) + " punctures, found " +
                       std::to_string(data_.punctures.size()));
  }
  for (const auto& a : data_.punctures) validate(a, "puncture placement");

  // Canonical anchors.
  auto canon = [&](const Anchor& a) { return face_anchor(piece_of(a), local_face(a)); };
  for (auto& pl : data_.placements) pl = {canon(pl.own), canon(pl.host)};
  std::sort(data_.placements.begin(), data_.placements.end());
  for (auto& a : data_.punctures) a = canon(a);

  // Global faces.
  piece_face_offset_.assign(static_cast<size_t>(pieces) + 1, 0);
  for (int p = 0; p < pieces; ++p)
    piece_face_offset_[static_cast<size_t>(p) + 1] =
        piece_face_offset_[static_cast<size_t>(p)] + static_cast<int>(pieces_[static_cast<size_t>(p)].faces.size());
  const int nodes = piece_face_offset_.back();
  UnionFind gu(std::max(nodes, 1));
  for (int p = 0; p < pieces; ++p) {
    const Piece& pc = pieces_[static_cast<size_t>(p)];
    if (pc.host_piece >= 0)
      gu.unite(piece_face_offset_[static_cast<size_t>(p)] + pc.own_face,
               piece_face_offset_[static_cast<size_t>(pc.host_piece)] + pc.host_face);
  }
  std::vector<Anchor> least(static_cast<size_t>(std::max(nodes, 1)));
  std::vector<char> seen(least.size(), 0);
  for (int p = 0; p < pieces; ++p)
    for (int f = 0; f < static_cast<int>(pieces_[static_cast<size_t>(p)].faces.size()); ++f) {
      const int r = gu.find(piece_face_offset_[static_cast<size_t>(p)] + f);
      Anchor a = face_anchor(p, f);
      if (!seen[static_cast<size_t>(r)] || a < least[static_cast<size_t>(r)]) least[static_cast<size_t>(r)] = a;
      seen[static_cast<size_t>(r)] = 1;
    }
  std::vector<std::pair<Anchor, int>> classes;
  for (int r = 0; r < nodes; ++r)
    if (seen[static_cast<size_t>(r)]) classes.push_back({least[static_cast<size_t>(r)], r});
  std::sort(classes.begin(), classes.end());
  std::vector<int> class_id(static_cast<size_t>(std::max(nodes, 1)), -1);
  for (size_t i = 0; i < classes.size(); ++i) class_id[static_cast<size_t>(classes[i].second)] = static_cast<int>(i);
  face_count_ = pieces == 0 ? 1 : static_cast<int>(classes.size());
  node_global_.resize(static_cast<size_t>(nodes));
  for (int v = 0; v < nodes; ++v) node_global_[static_cast<size_t>(v)] = class_id[static_cast<size_t>(gu.find(v))];

  corner_global_.resize(static_cast<size_t>(4 * n));
  for (int k = 0; k < 4 * n; ++k)
    corner_global_[static_cast<size_t>(k)] = global_face(crossing_piece_[static_cast<size_t>(k / 4)], corner_local_[static_cast<size_t>(k)]);
  loop_global_.resize(static_cast<size_t>(2 * data_.loops));
  for (int l = 0; l < data_.loops; ++l)
    for (int s = 0; s < 2; ++s) loop_global_[static_cast<size_t>(2 * l + s)] = global_face(loop_piece_[static_cast<size_t>(l)], s);
  puncture_global_.assign(static_cast<size_t>(puncture_count()), 0);
  if (pieces > 0)
    for (int p = 0; p < puncture_count(); ++p) puncture_global_[static_cast<size_t>(p)] = face_of(data_.punctures[static_cast<size_t>(p)]);
}

int PuncturedDiagram::piece_of(const Anchor& a) const {
  return a.is_corner() ? piece_of_crossing(a.index) : piece_of_loop(a.index);
}

int PuncturedDiagram::local_face(const Anchor& a) const {
  return a.is_corner() ? local_face(Corner{a.index, a.sub}) : a.sub;
}

Anchor PuncturedDiagram::face_anchor(int piece, int local) const {
  const Piece& p = pieces_[static_cast<size_t>(piece)];
  if (p.is_loop()) return Anchor::loop(p.loop, local);
  return Anchor::corner(p.faces[static_cast<size_t>(local)].front());
}

int PuncturedDiagram::global_face(int piece, int local) const {
  return node_global_[static_cast<size_t>(piece_face_offset_[static_cast<size_t>(piece)] + local)];
}

int PuncturedDiagram::face_of(const Anchor& a) const { return global_face(piece_of(a), local_face(a)); }

int PuncturedDiagram::face_containing(int piece, int other, int other_face) const {
  if (piece == other) return other_face;
  int cur = other;
  while (depth_[static_cast<size_t>(cur)] > depth_[static_cast<size_t>(piece)]) {
    const Piece& c = pieces_[static_cast<size_t>(cur)];
    if (c.host_piece == piece) return c.host_face;
    cur = c.host_piece;
  }
  return pieces_[static_cast<size_t>(piece)].own_face;
}

PuncturedDiagram PuncturedDiagram::with_over(std::span<const int> over) const {
  if (over.size() != data_.crossings.size()) throw DiagramError("with_over: wrong number of flags");
  PuncturedDiagram r = *this;
  for (size_t c = 0; c < over.size(); ++c) {
    if (over[c] != 0 && over[c] != 1) throw DiagramError("over must be 0 or 1");
    r.data_.crossings[c].over = over[c];
  }
  return r;
}

}  // namespace skein
