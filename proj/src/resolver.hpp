#pragma once

#include <cstdint>
#include <vector>

#include "skein/diagram.hpp"

namespace skein::detail {

/// Reusable scratch for smoothing a diagram. `run` takes a smoothing type
/// (0 or 1) per crossing and fills circle and region data.
class Resolver {
 public:
  explicit Resolver(const PuncturedDiagram& d);

  void run(const std::uint8_t* types);

  const PuncturedDiagram& diagram() const { return d_; }
  int circles() const { return circle_count_; }
  int regions() const { return region_count_; }
  int trivial() const { return trivial_count_; }
  int essential() const { return circle_count_ - trivial_count_; }

  // Per circle.
  int side_a(int c) const { return side_a_[c]; }
  int side_b(int c) const { return side_b_[c]; }
  std::uint64_t enclosed(int c) const { return enclosed_[c]; }
  bool is_trivial(int c) const { return enclosed_[c] == 0; }
  SlotRef start(int c) const { return start_[c]; }
  int loop(int c) const { return loop_[c]; }

  // Per fine region.
  std::uint64_t region_punctures(int r) const { return region_punct_[r]; }
  int puncture_region(int p) const { return puncture_region_[p]; }

 private:
  int find(int x);

  const PuncturedDiagram& d_;
  int n_, faces_, punctures_;
  std::vector<int> parent_;
  std::vector<int> root_region_;
  std::vector<char> visited_;
  int circle_count_ = 0, region_count_ = 0, trivial_count_ = 0;
  std::vector<int> side_a_, side_b_, loop_;
  std::vector<SlotRef> start_;
  std::vector<std::uint64_t> enclosed_, region_punct_;
  std::vector<int> puncture_region_;
  // Tree traversal scratch.
  std::vector<int> adj_start_, adj_next_, adj_circle_, order_, parent_circle_, parent_region_;
  std::vector<std::uint64_t> subtree_;
};

}  // namespace skein::detail
