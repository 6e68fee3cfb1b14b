#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

/// +1 or -1 per crossing. At a crossing whose over strand runs through slots
/// a = over and a+2, the +1 smoothing joins slots (a, a+1) and (a+2, a+3).
struct KauffmanState {
  std::vector<int> signs;

  static KauffmanState plus(int n) { return {std::vector<int>(static_cast<size_t>(n), 1)}; }
  static KauffmanState minus(int n) { return {std::vector<int>(static_cast<size_t>(n), -1)}; }
  /// Bit i of `mask` set means crossing i gets -1.
  static KauffmanState from_mask(int n, std::uint64_t mask);
  int sum() const;
};

/// Smoothing type (0 or 1) of a crossing under a sign: type t joins (t, t+1) and (t+2, t+3).
inline int smoothing_type(int over, int sign) { return sign > 0 ? over : 1 - over; }

struct Circle {
  int id = 0;
  std::vector<int> enclosed;  // punctures on the side away from puncture 0
  bool trivial = false;
  int side_a = 0, side_b = 0;  // fine regions on either side; side_b is away from puncture 0
  int loop = -1;               // free-loop index, or -1 for a circle through smoothed crossings
  SlotRef start;               // a slot the circle leaves through (crossing circles only)
};

struct ResolvedDiagram {
  int genus = 0;
  std::vector<Circle> circles;
  int sD = 0;
  int p = 0;
  std::vector<int> p_i;  // essential circles with one side holding exactly puncture i
  int residual = 0;      // essential circles parallel to no single boundary
  int region_count = 1;  // regions of the sphere cut along all circles
  std::vector<int> puncture_region;
};

ResolvedDiagram resolve(const PuncturedDiagram& d, const KauffmanState& s);

struct Region {
  int id = 0;
  int chi = 0;
  bool external = false;
  std::vector<int> punctures;
};

struct RegionEdge {
  int circle = 0;
  int a = 0, b = 0;
};

/// Sphere cut along the essential circles; a tree whose edges are circles.
struct RegionComplex {
  int genus = 0;
  std::vector<Region> regions;
  std::vector<RegionEdge> edges;

  std::vector<std::vector<std::pair<int, int>>> adjacency() const;  // region -> (edge, neighbour)
  /// Canonical encoding of the labelled tree (internal regions carry chi).
  std::string key() const;
};

RegionComplex region_complex(const ResolvedDiagram& r, const PuncturedDiagram& d);

/// h -> number of internal regions that are disks with h holes (chi = 1 - h).
std::map<int, int> phi_counts(const RegionComplex& c);

}  // namespace skein
