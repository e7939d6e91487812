#pragma once

// Independent enumeration oracle used only by the tests.  It never touches
// the library's semigroup machinery: a genus-g semigroup is a set of g gaps
// inside [1, 2g-1] whose complement is closed under addition, found by
// choosing gap positions in ascending order.  A position may be declared a
// gap only if it is not the sum of two already-decided members; that check
// is both necessary and sufficient, because every violating sum s + t = x
// with s, t < x is tested the moment x is chosen.

#include <cstdint>
#include <vector>

namespace oracle {

namespace detail {

template <typename Leaf>
void walk_gap_sets(int64_t g, Leaf&& leaf) {
  if (g == 0) {
    std::vector<int64_t> none;
    leaf(none);
    return;
  }
  int64_t top = 2 * g - 1;
  std::vector<int64_t> gaps;
  uint64_t members = 1;  // bit x = "x is a member"; bit 0 = the identity
  auto rec = [&](auto&& self, int64_t pos) -> void {
    int64_t chosen = (int64_t)gaps.size();
    if (chosen == g) {
      leaf(gaps);
      return;
    }
    if (pos > top || top - pos + 1 < g - chosen) return;
    bool sum_of_members = false;
    for (int64_t s = 1; 2 * s <= pos; ++s)
      if ((members >> s & 1) && (members >> (pos - s) & 1)) {
        sum_of_members = true;
        break;
      }
    if (!sum_of_members) {
      gaps.push_back(pos);
      self(self, pos + 1);
      gaps.pop_back();
    }
    members |= uint64_t(1) << pos;
    self(self, pos + 1);
    members &= ~(uint64_t(1) << pos);
  };
  rec(rec, 1);
}

}  // namespace detail

// Gap sets of every genus-g semigroup, ascending within each set,
// lexicographically ordered across sets.
inline std::vector<std::vector<int64_t>> gap_sets(int64_t g) {
  std::vector<std::vector<int64_t>> out;
  detail::walk_gap_sets(g, [&](const std::vector<int64_t>& gaps) { out.push_back(gaps); });
  return out;
}

// Count per ordinarization number r = #(members in [1, g]) = g - #(gaps <= g).
inline std::vector<int64_t> depth_census(int64_t g) {
  std::vector<int64_t> counts;
  detail::walk_gap_sets(g, [&](const std::vector<int64_t>& gaps) {
    int64_t low = 0;
    for (int64_t x : gaps)
      if (x <= g) ++low;
    int64_t depth = g - low;
    if ((int64_t)counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
  });
  return counts;
}

inline int64_t total_count(int64_t g) {
  int64_t n = 0;
  detail::walk_gap_sets(g, [&](const std::vector<int64_t>&) { ++n; });
  return n;
}

}  // namespace oracle
