#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// Slot `slot` (0..3, counterclockwise) of crossing `crossing`. Corner i of a
/// crossing is the angle between slots i and i+1.
struct SlotRef {
  int crossing = 0;
  int slot = 0;
  auto operator<=>(const SlotRef&) const = default;
};
using Corner = SlotRef;

/// `link[i]` is the slot at the far end of the arc leaving slot i. The over
/// strand runs through slots `over` and `over + 2`.
struct Crossing {
  std::array<SlotRef, 4> link;
  int over = 0;
  bool operator==(const Crossing&) const = default;
};

/// Names a face of one piece: a crossing corner, or a side of a free loop
/// (side 0 = "in", side 1 = "out").
struct Anchor {
  enum class Kind : std::uint8_t { corner = 0, loop_side = 1 };
  Kind kind = Kind::corner;
  int index = 0;
  int sub = 0;

  static Anchor corner(int crossing, int corner) { return {Kind::corner, crossing, corner}; }
  static Anchor corner(Corner c) { return {Kind::corner, c.crossing, c.slot}; }
  static Anchor loop(int loop, int side) { return {Kind::loop_side, loop, side}; }
  bool is_corner() const { return kind == Kind::corner; }
  auto operator<=>(const Anchor&) const = default;
};

/// Places the piece containing `own` so that the face named by `own` is the
/// side facing the face named by `host` (of another piece).
struct Placement {
  Anchor own;
  Anchor host;
  auto operator<=>(const Placement&) const = default;
};

/// Raw description of a diagram in a sphere with genus+1 punctures.
struct DiagramData {
  int genus = 0;
  std::vector<Crossing> crossings;
  int loops = 0;
  std::vector<Placement> placements;
  std::vector<Anchor> punctures;  // one per puncture; empty iff there are no pieces
  bool operator==(const DiagramData&) const = default;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A connected component of the diagram: crossings with their local faces, or a free loop.
struct Piece {
  std::vector<int> crossings;  // sorted; empty for a free loop
  int loop = -1;
  std::vector<std::vector<Corner>> faces;  // boundary walks; a free loop has two empty faces
  int host_piece = -1;  // -1 for the root piece
  int host_face = -1;
  int own_face = -1;
  bool is_loop() const { return crossings.empty(); }
};

/// Validated diagram. Stored data is canonical: anchors name the least corner of
/// their face and placements are sorted, so equal diagrams compare equal.
class PuncturedDiagram {
 public:
  PuncturedDiagram() : PuncturedDiagram(DiagramData{}) {}
  explicit PuncturedDiagram(DiagramData data);

  const DiagramData& data() const { return data_; }
  int genus() const { return data_.genus; }
  int puncture_count() const { return data_.genus + 1; }
  int crossing_count() const { return static_cast<int>(data_.crossings.size()); }
  int loop_count() const { return data_.loops; }
  bool empty() const { return pieces_.empty(); }
  const std::vector<Crossing>& crossings() const { return data_.crossings; }
  const Crossing& crossing(int c) const { return data_.crossings[static_cast<size_t>(c)]; }
  SlotRef link(SlotRef s) const { return crossing(s.crossing).link[static_cast<size_t>(s.slot)]; }

  const std::vector<Piece>& pieces() const { return pieces_; }
  int piece_of_crossing(int c) const { return crossing_piece_[static_cast<size_t>(c)]; }
  int piece_of_loop(int l) const { return loop_piece_[static_cast<size_t>(l)]; }
  int piece_of(const Anchor& a) const;
  int local_face(const Anchor& a) const;
  int local_face(Corner c) const { return corner_local_[static_cast<size_t>(4 * c.crossing + c.slot)]; }
  /// Least anchor of a local face, used as its canonical name.
  Anchor face_anchor(int piece, int local_face) const;

  /// Global faces: local faces merged along the nesting forest.
  int face_count() const { return face_count_; }
  int face_of(Corner c) const { return corner_global_[static_cast<size_t>(4 * c.crossing + c.slot)]; }
  int loop_face(int loop, int side) const { return loop_global_[static_cast<size_t>(2 * loop + side)]; }
  int face_of(const Anchor& a) const;
  int global_face(int piece, int local_face) const;
  int puncture_face(int p) const { return puncture_global_[static_cast<size_t>(p)]; }

  /// Local face of `piece` that contains the given local face of another piece.
  int face_containing(int piece, int other_piece, int other_face) const;

  /// Same projection and placements, new over flags.
  PuncturedDiagram with_over(std::span<const int> over) const;

  bool operator==(const PuncturedDiagram& o) const { return data_ == o.data_; }

 private:
  DiagramData data_;
  std::vector<Piece> pieces_;
  std::vector<int> crossing_piece_, loop_piece_;
  std::vector<int> corner_local_;
  std::vector<int> piece_face_offset_;  // global index base of each piece's local faces
  std::vector<int> node_global_;        // (piece, local face) node -> global face
  std::vector<int> corner_global_, loop_global_, puncture_global_;
  std::vector<int> depth_;
  int face_count_ = 1;
};

/// Text form of a face anchor: "c.i", "in", "out".
std::string anchor_face_name(const Anchor& a);
/// Text form of a piece: "C<least crossing>" or "O<loop>".
std::string piece_name(const PuncturedDiagram& d, int piece);

PuncturedDiagram parse_diagram(std::string_view text);
PuncturedDiagram load_diagram(const std::string& path);
std::string serialize(const PuncturedDiagram& d);

struct Face {
  int id = 0;
  Anchor name;                    // least anchor of the face
  std::vector<Corner> corners;    // all crossing corners in the face
  std::vector<Anchor> loop_sides; // free-loop sides bounding the face
  std::vector<int> punctures;
  bool external = false;
};

struct FaceStructure {
  std::vector<Face> faces;
};

FaceStructure faces(const PuncturedDiagram& d);

bool is_alternating(const PuncturedDiagram& d);
/// One piece. The empty diagram has no component and is not connected.
bool is_connected(const PuncturedDiagram& d);

/// Mod-2 class as a puncture-indexed vector with coordinate 0 cleared.
struct Z2Class {
  std::vector<std::uint8_t> bits;
  bool trivial() const;
  bool operator==(const Z2Class&) const = default;
  std::string to_string() const;
};

Z2Class z2_class(const PuncturedDiagram& d);

/// Number of distinct faces holding punctures, minus one.
int diagram_genus(const PuncturedDiagram& d);

struct SimplicityReport {
  std::vector<int> nugatory;
  std::vector<int> two_external;
  std::vector<int> twice_same_external;
  int k = 0;
  bool simple = true;
};

SimplicityReport simplicity_report(const PuncturedDiagram& d);

struct Adequacy {
  bool plus = true;
  bool minus = true;
};

Adequacy adequacy(const PuncturedDiagram& d);

}  // namespace skein
