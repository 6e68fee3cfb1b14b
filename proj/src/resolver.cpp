#include "resolver.hpp"

#include <numeric>
#include <stdexcept>

namespace skein::detail {

Resolver::Resolver(const PuncturedDiagram& d)
    : d_(d), n_(d.crossing_count()), faces_(d.face_count()), punctures_(d.puncture_count()) {
  parent_.resize(faces_);
  root_region_.resize(faces_);
  visited_.resize(4 * n_);
  const int max_circles = 2 * n_ + d.loop_count() + 1;
  side_a_.resize(max_circles);
  side_b_.resize(max_circles);
  loop_.resize(max_circles);
  start_.resize(max_circles);
  enclosed_.resize(max_circles);
  const int max_regions = faces_;
  region_punct_.resize(max_regions);
  puncture_region_.resize(punctures_);
  adj_start_.resize(max_regions);
  adj_next_.resize(2 * max_circles);
  adj_circle_.resize(2 * max_circles);
  order_.resize(max_regions);
  parent_circle_.resize(max_regions);
  parent_region_.resize(max_regions);
  subtree_.resize(max_regions);
}

int Resolver::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void Resolver::run(const std::uint8_t* types) {
  std::iota(parent_.begin(), parent_.end(), 0);
  for (int x = 0; x < n_; ++x) {
    const int t = types[x];
    int a = find(d_.face_of(Corner{x, (t + 1) % 4})), b = find(d_.face_of(Corner{x, (t + 3) % 4}));
    if (a != b) parent_[a] = b;
  }
  std::fill(root_region_.begin(), root_region_.end(), -1);
  region_count_ = 0;
  for (int f = 0; f < faces_; ++f) {
    int r = find(f);
    if (root_region_[r] < 0) root_region_[r] = region_count_++;
  }
  auto region = [&](int face) { return root_region_[find(face)]; };

  circle_count_ = 0;
  std::fill(visited_.begin(), visited_.end(), 0);
  for (int x = 0; x < n_; ++x)
    for (int i = 0; i < 4; ++i) {
      if (visited_[4 * x + i]) continue;
      const int c = circle_count_++;
      start_[c] = {x, i};
      loop_[c] = -1;
      side_a_[c] = region(d_.face_of(Corner{x, (i + 3) % 4}));
      side_b_[c] = region(d_.face_of(Corner{x, i}));
      SlotRef cur{x, i};
      do {
        visited_[4 * cur.crossing + cur.slot] = 1;
        SlotRef nxt = d_.link(cur);
        visited_[4 * nxt.crossing + nxt.slot] = 1;
        const int t = types[nxt.crossing];
        const int j = nxt.slot;
        cur = {nxt.crossing, ((j - t + 4) % 2 == 0) ? (j + 1) % 4 : (j + 3) % 4};
      } while (cur != SlotRef{x, i});
    }
  for (int l = 0; l < d_.loop_count(); ++l) {
    const int c = circle_count_++;
    loop_[c] = l;
    start_[c] = {-1, 0};
    side_a_[c] = region(d_.loop_face(l, 0));
    side_b_[c] = region(d_.loop_face(l, 1));
  }
  if (region_count_ != circle_count_ + 1)
    throw std::logic_error("resolution: region graph is not a tree");

  std::fill(region_punct_.begin(), region_punct_.begin() + region_count_, 0);
  for (int p = 0; p < punctures_; ++p) {
    puncture_region_[p] = region(d_.puncture_face(p));
    region_punct_[puncture_region_[p]] |= std::uint64_t{1} << p;
  }

  // Root the region tree at puncture 0 and accumulate puncture sets of subtrees.
  std::fill(adj_start_.begin(), adj_start_.begin() + region_count_, -1);
  for (int c = 0; c < circle_count_; ++c) {
    adj_circle_[2 * c] = c;
    adj_next_[2 * c] = adj_start_[side_a_[c]];
    adj_start_[side_a_[c]] = 2 * c;
    adj_circle_[2 * c + 1] = c;
    adj_next_[2 * c + 1] = adj_start_[side_b_[c]];
    adj_start_[side_b_[c]] = 2 * c + 1;
  }
  const int root = puncture_region_[0];
  int head = 0, tail = 0;
  order_[tail++] = root;
  parent_circle_[root] = -1;
  parent_region_[root] = -1;
  while (head < tail) {
    const int r = order_[head++];
    for (int e = adj_start_[r]; e >= 0; e = adj_next_[e]) {
      const int c = adj_circle_[e];
      if (c == parent_circle_[r]) continue;
      const int other = (e & 1) ? side_a_[c] : side_b_[c];
      parent_circle_[other] = c;
      parent_region_[other] = r;
      order_[tail++] = other;
    }
  }
  if (tail != region_count_) throw std::logic_error("resolution: region graph is disconnected");
  for (int r = 0; r < region_count_; ++r) subtree_[r] = region_punct_[r];
  trivial_count_ = 0;
  for (int k = region_count_ - 1; k > 0; --k) {
    const int r = order_[k];
    const int c = parent_circle_[r];
    subtree_[parent_region_[r]] |= subtree_[r];
    enclosed_[c] = subtree_[r];
    if (side_b_[c] != r) std::swap(side_a_[c], side_b_[c]);
    trivial_count_ += subtree_[r] == 0;
  }
}

}  // namespace skein::detail
