#pragma once

// Word-packed bit table used for semigroup membership over a bounded window.

#include <bit>
#include <cstdint>
#include <vector>

namespace nsemi::detail {

class BitTable {
 public:
  BitTable() : size_(0) {}
  explicit BitTable(int64_t n, bool fill = false)
      : size_(n), words_((n + 63) / 64, fill ? ~uint64_t{0} : 0) {
    trim();
  }

  int64_t size() const { return size_; }

  bool test(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  // Number of set bits in [lo, hi).
  int64_t count_range(int64_t lo, int64_t hi) const {
    if (lo < 0) lo = 0;
    if (hi > size_) hi = size_;
    if (lo >= hi) return 0;
    int64_t wl = lo >> 6, wh = (hi - 1) >> 6;
    uint64_t ml = ~uint64_t{0} << (lo & 63);
    uint64_t mh = ~uint64_t{0} >> (63 - ((hi - 1) & 63));
    if (wl == wh) return std::popcount(words_[wl] & ml & mh);
    int64_t c = std::popcount(words_[wl] & ml) + std::popcount(words_[wh] & mh);
    for (int64_t w = wl + 1; w < wh; ++w) c += std::popcount(words_[w]);
    return c;
  }

  // Largest i in [0, size) with bit i clear, or -1.
  int64_t find_last_clear() const {
    for (int64_t w = (int64_t)words_.size() - 1; w >= 0; --w) {
      uint64_t inv = ~words_[w];
      if (w == (int64_t)words_.size() - 1 && (size_ & 63))
        inv &= (~uint64_t{0}) >> (64 - (size_ & 63));
      if (inv) return (w << 6) + 63 - std::countl_zero(inv);
    }
    return -1;
  }

  // Shrinks the window; membership above n is dropped.
  void truncate(int64_t n) {
    if (n >= size_) return;
    size_ = n;
    words_.resize((n + 63) / 64);
    trim();
  }

  friend bool operator==(const BitTable& a, const BitTable& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  size_t hash() const {
    size_t h = (size_t)size_ * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (size_ & 63 && !words_.empty()) words_.back() &= (~uint64_t{0}) >> (64 - (size_ & 63));
  }

  int64_t size_;
  std::vector<uint64_t> words_;
};

}  // namespace nsemi::detail
