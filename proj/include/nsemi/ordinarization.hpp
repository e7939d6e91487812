#pragma once

// The ordinarization transform, the ordinarization tree of a fixed genus, and
// the two independent ways of counting tree nodes by depth (walking the genus
// tree vs direct gap/member tuple enumeration).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

#include "nsemi/semigroup.hpp"

namespace nsemi::ord {

struct EnumOptions {
  int64_t node_cap = 100'000'000;  // visited-node budget; beyond it ResourceLimit
  int threads = 1;                 // 0 = hardware concurrency
};

// S' = S u {F(S)} \ {m(S)}; keeps the genus, lowers the depth by one.
inline NumericalSemigroup ordinarization_transform(const NumericalSemigroup& s) {
  if (s.is_full_monoid() || s.is_ordinary())
    throw OrdinaryInput("ordinarization_transform: input is ordinary");
  int64_t f = s.frobenius(), m = s.multiplicity();
  detail::BitTable bits = s.table();
  bits.set(f);
  bits.reset(m);
  int64_t new_f = bits.find_last_clear();
  detail::BitTable shrunk(new_f + 1);
  for (int64_t x = 0; x <= new_f; ++x)
    if (bits.test(x)) shrunk.set(x);
  return NumericalSemigroup::from_table_unchecked(std::move(shrunk), new_f + 1);
}

// Depth of S in the ordinarization tree of its genus.
inline int64_t ordinarization_number(const NumericalSemigroup& s) {
  return s.members_up_to_genus();
}

namespace detail {

using nsemi::detail::BitTable;

inline bool is_closed_table(const BitTable& bits, int64_t conductor) {
  for (int64_t x = 1; 2 * x < conductor; ++x) {
    if (!bits.test(x)) continue;
    for (int64_t y = x; x + y < conductor; ++y)
      if (bits.test(y) && !bits.test(x + y)) return false;
  }
  return true;
}

// Snapshot of a genus-tree walk position, used for thread fan-out.
struct WalkState {
  std::vector<uint64_t> bits;
  int64_t genus, frob, mult;
  std::vector<int32_t> eg;  // effective generators, ascending
};

inline void noop_leaf(const std::vector<uint64_t>&, int64_t, int64_t,
                      const std::vector<int32_t>&) {}

// Depth-first walk of the genus tree down to a target genus.  Children of S
// are S \ {n} for each effective generator n; the effective generator list is
// maintained incrementally (removing n keeps every larger effective generator
// minimal and can only add n + m as a new one, except that removing the
// multiplicity of an ordinary semigroup yields the next ordinary semigroup).
template <class Leaf>
class GenusWalker {
 public:
  GenusWalker(int64_t target, int64_t node_cap, Leaf leaf)
      : target_(target), cap_(node_cap), leaf_(leaf) {
    window_ = 3 * std::max<int64_t>(target, 1) + 10;
    words_.assign((window_ + 63) / 64, ~uint64_t{0});
    if (window_ & 63) words_.back() >>= (64 - (window_ & 63));
    pool_.resize(target + 2);  // fixed up front: parent frames hold references in
  }

  uint64_t visited() const { return visited_; }

  void run() {
    std::vector<int32_t> eg{1};
    rec(0, -1, 1, eg);
  }

  void run_from(const WalkState& st) {
    words_ = st.bits;
    std::vector<int32_t> eg = st.eg;
    rec(st.genus, st.frob, st.mult, eg);
  }

  // Expands the walk breadth-first until at least want_items positions are
  // pending (or everything reached the target genus); used to split work.
  // Kept in depth-first order: an expanded item is replaced in place by its
  // children, so concatenating per-item walk results reproduces the
  // single-threaded visit order exactly.
  static std::vector<WalkState> frontier(int64_t target, int64_t want_items) {
    GenusWalker probe(target, std::numeric_limits<int64_t>::max(), noop_leaf);
    std::deque<WalkState> queue;
    queue.push_back(WalkState{probe.words_, 0, -1, 1, {1}});
    for (;;) {
      if ((int64_t)queue.size() >= want_items) break;
      auto it = std::find_if(queue.begin(), queue.end(),
                             [&](const WalkState& s) { return s.genus < target; });
      if (it == queue.end()) break;
      WalkState cur = *it;
      size_t pos = (size_t)(it - queue.begin());
      queue.erase(it);
      probe.words_ = cur.bits;
      std::deque<WalkState> kids;
      probe.expand(cur, &kids);
      queue.insert(queue.begin() + pos, kids.begin(), kids.end());
    }
    return {queue.begin(), queue.end()};
  }

 private:
  bool test(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void clear(int64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  // True when x has no decomposition into two positive members of the current
  // table (x itself need not be a member yet).
  bool minimal_in_current(int64_t x, int64_t m) const {
    int64_t hi = x / 2;
    for (int64_t y = m; y <= hi;) {
      uint64_t w = words_[y >> 6] >> (y & 63);
      if (w == 0) {
        y = (y | 63) + 1;
        continue;
      }
      int64_t step = std::countr_zero(w);
      y += step;
      if (y > hi) break;
      if (test(x - y)) return false;
      ++y;
    }
    return true;
  }

  void child_eg(const std::vector<int32_t>& eg, size_t i, int64_t genus, int64_t m,
                std::vector<int32_t>* out) {
    int32_t n = eg[i];
    out->clear();
    if (n == m) {  // ordinary parent: child is the next ordinary semigroup
      for (int64_t s = genus + 2; s <= 2 * genus + 3; ++s) out->push_back((int32_t)s);
      return;
    }
    out->assign(eg.begin() + i + 1, eg.end());
    if (minimal_in_current(n + m, m)) out->push_back((int32_t)(n + m));
  }

  void rec(int64_t genus, int64_t frob, int64_t m, const std::vector<int32_t>& eg) {
    if ((int64_t)++visited_ > cap_) throw ResourceLimit("genus walk exceeded node cap");
    if (genus == target_) {
      leaf_(words_, frob, m, eg);
      return;
    }
    std::vector<int32_t>& ceg = pool_[genus];
    for (size_t i = 0; i < eg.size(); ++i) {
      int32_t n = eg[i];
      clear(n);
      child_eg(eg, i, genus, m, &ceg);
      rec(genus + 1, n, n == m ? m + 1 : m, ceg);
      set(n);
    }
  }

  void expand(const WalkState& cur, std::deque<WalkState>* out) {
    std::vector<int32_t> ceg;
    for (size_t i = 0; i < cur.eg.size(); ++i) {
      int32_t n = cur.eg[i];
      clear(n);
      child_eg(cur.eg, i, cur.genus, cur.mult, &ceg);
      out->push_back(WalkState{words_, cur.genus + 1, n,
                               n == cur.mult ? cur.mult + 1 : cur.mult, ceg});
      set(n);
    }
  }

  int64_t target_, window_, cap_;
  uint64_t visited_ = 0;
  Leaf leaf_;
  std::vector<uint64_t> words_;
  std::vector<std::vector<int32_t>> pool_;
};

inline int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// Runs fn(state) over a deterministic frontier, merging results in frontier
// order so output is independent of scheduling.
template <class Result, class PerState>
std::vector<Result> map_frontier(int64_t target, const EnumOptions& opts, PerState fn) {
  int threads = effective_threads(opts.threads);
  auto items = GenusWalker<void (*)(const std::vector<uint64_t>&, int64_t, int64_t,
                                    const std::vector<int32_t>&)>::
      frontier(target, threads > 1 ? (int64_t)threads * 4 : 1);
  std::vector<Result> results(items.size());
  if (threads <= 1 || items.size() <= 1) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex err_mu;
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= items.size() || failed.load()) return;
      try {
        results[i] = fn(items[i]);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(err_mu);
        failed.store(true);
        if (error.empty()) error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) throw ResourceLimit(error.empty() ? "genus walk failed" : error);
  return results;
}

}  // namespace detail

// Number of genus-g semigroups at each ordinarization depth, by walking the
// genus tree and classifying every leaf by its member count in [1, g].
inline std::vector<int64_t> depth_census(int64_t g, const EnumOptions& opts = {}) {
  if (g < 0) throw BadRange("depth_census: negative genus");
  // popcount mask for the member window [1, g]
  std::vector<uint64_t> gmask(g / 64 + 1, 0);
  for (int64_t x = 1; x <= g; ++x) gmask[x >> 6] |= uint64_t{1} << (x & 63);
  auto per_state = [&](const detail::WalkState& st) {
    std::vector<int64_t> counts(g + 1, 0);
    detail::GenusWalker walker(
        g, opts.node_cap,
        [&](const std::vector<uint64_t>& words, int64_t, int64_t,
            const std::vector<int32_t>&) {
          int64_t r = 0;
          for (size_t w = 0; w < gmask.size(); ++w) r += std::popcount(words[w] & gmask[w]);
          ++counts[r];
        });
    walker.run_from(st);
    return counts;
  };
  auto partials = detail::map_frontier<std::vector<int64_t>>(g, opts, per_state);
  std::vector<int64_t> counts(g + 1, 0);
  for (const auto& part : partials)
    for (int64_t r = 0; r <= g; ++r) counts[r] += part[r];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

// All numerical semigroups of genus g, in a deterministic walk order.
inline std::vector<NumericalSemigroup> enumerate_genus(int64_t g, const EnumOptions& opts = {}) {
  if (g < 0) throw BadRange("enumerate_genus: negative genus");
  auto per_state = [&](const detail::WalkState& st) {
    std::vector<NumericalSemigroup> out;
    detail::GenusWalker walker(
        g, opts.node_cap,
        [&](const std::vector<uint64_t>& words, int64_t frob, int64_t,
            const std::vector<int32_t>&) {
          nsemi::detail::BitTable bits(frob + 1);
          for (int64_t x = 0; x <= frob; ++x)
            if ((words[x >> 6] >> (x & 63)) & 1) bits.set(x);
          out.push_back(NumericalSemigroup::from_table_unchecked(std::move(bits), frob + 1));
        });
    walker.run_from(st);
    return out;
  };
  auto partials = detail::map_frontier<std::vector<NumericalSemigroup>>(g, opts, per_state);
  std::vector<NumericalSemigroup> out;
  for (auto& part : partials)
    for (auto& s : part) out.push_back(std::move(s));
  return out;
}

// Histogram of the effectivity h over all genus-g semigroups.
inline std::map<int64_t, int64_t> effectivity_histogram(int64_t g, const EnumOptions& opts = {}) {
  if (g < 0) throw BadRange("effectivity_histogram: negative genus");
  auto per_state = [&](const detail::WalkState& st) {
    std::map<int64_t, int64_t> hist;
    detail::GenusWalker walker(g, opts.node_cap,
                               [&](const std::vector<uint64_t>&, int64_t, int64_t,
                                   const std::vector<int32_t>& eg) { ++hist[(int64_t)eg.size()]; });
    walker.run_from(st);
    return hist;
  };
  auto partials = detail::map_frontier<std::map<int64_t, int64_t>>(g, opts, per_state);
  std::map<int64_t, int64_t> hist;
  for (const auto& part : partials)
    for (auto [h, c] : part) hist[h] += c;
  return hist;
}

// Children of S in the ordinarization tree of its genus: replace an effective
// generator a by a gap b with ceil(m/2) <= b <= m-1 whenever the result is
// still closed under addition.  Sorted by (multiplicity, frobenius).
inline std::vector<NumericalSemigroup> children_in_tree(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  if (s.is_full_monoid()) return out;
  int64_t m = s.multiplicity();
  auto gd = s.minimal_generators();
  for (int64_t b = (m + 1) / 2; b <= m - 1; ++b) {
    for (int64_t a : gd.effective) {
      detail::BitTable bits(a + 1);
      for (int64_t x = 0; x <= a; ++x)
        if (s.contains(x)) bits.set(x);
      bits.reset(a);
      bits.set(b);
      if (!detail::is_closed_table(bits, a + 1)) continue;
      out.push_back(NumericalSemigroup::from_table_unchecked(std::move(bits), a + 1));
    }
  }
  return out;
}

inline int64_t children_h0_count(const NumericalSemigroup& s) {
  int64_t c = 0;
  for (const auto& child : children_in_tree(s))
    if (child.minimal_generators().h == 0) ++c;
  return c;
}

// Counts genus-g semigroups at depth r directly: choose the r members
// b_1 > ... > b_r in [1, g] and the r gaps a_1 < ... < a_r in [g+1, 2g-1] of
// S = ({0} u [g+1, inf) u {b_i}) \ {a_k}, keeping exactly the closed ones.
// Closure reduces to: pairwise sums b_i + b_j land in {b} (if <= g) and avoid
// {a} (if > g); differences a_k - b_i avoid {b} (if <= g) and land in {a}
// (if > g).
inline int64_t depth_count_tuples(int64_t g, int64_t r) {
  if (g < 0 || r < 0) throw BadRange("depth_count_tuples: negative argument");
  if (r == 0) return 1;
  if (g < 1 || r > g) return 0;
  constexpr int64_t kMaxG = 8000;  // word-mask width guard
  if (g > kMaxG) throw ResourceLimit("depth_count_tuples: genus too large");

  std::vector<uint64_t> bmask((2 * g + 64) / 64, 0), amask(bmask.size(), 0),
      forbid(bmask.size(), 0);
  auto get = [](const std::vector<uint64_t>& m, int64_t i) -> bool {
    return (m[i >> 6] >> (i & 63)) & 1;
  };
  auto flip = [](std::vector<uint64_t>& m, int64_t i) { m[i >> 6] ^= uint64_t{1} << (i & 63); };

  std::vector<int64_t> bs;
  bs.reserve(r);
  int64_t count = 0;

  auto choose_a = [&](auto&& self, int64_t k, int64_t lo) -> void {
    if (k == r) {
      ++count;
      return;
    }
    for (int64_t a = lo; a <= 2 * g - 1 - (r - 1 - k); ++a) {
      if (get(forbid, a)) continue;
      bool ok = true;
      for (int64_t b : bs) {
        int64_t w = a - b;
        if (w <= g ? get(bmask, w) : !get(amask, w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      flip(amask, a);
      self(self, k + 1, a + 1);
      flip(amask, a);
    }
  };

  auto validate_b = [&]() -> bool {
    // pairwise member sums that stay <= g must be members themselves
    std::fill(forbid.begin(), forbid.end(), 0);
    for (size_t i = 0; i < bs.size(); ++i)
      for (size_t j = i; j < bs.size(); ++j) {
        int64_t v = bs[i] + bs[j];
        if (v <= g) {
          if (!get(bmask, v)) return false;
        } else if (v <= 2 * g - 1) {
          forbid[v >> 6] |= uint64_t{1} << (v & 63);
        }
      }
    return true;
  };

  auto choose_b = [&](auto&& self, int64_t k, int64_t hi) -> void {
    if (k == r) {
      if (validate_b()) choose_a(choose_a, 0, g + 1);
      return;
    }
    for (int64_t b = hi; b >= 1 + (r - 1 - k); --b) {
      bs.push_back(b);
      flip(bmask, b);
      self(self, k + 1, b - 1);
      flip(bmask, b);
      bs.pop_back();
    }
  };

  choose_b(choose_b, 0, g);
  return count;
}

// n_{g,r} computed both ways; the two independent methods must agree.
inline int64_t depth_count_brute(int64_t g, int64_t r, const EnumOptions& opts = {}) {
  if (g < 0 || r < 0) throw BadRange("depth_count_brute: negative argument");
  std::vector<int64_t> census = depth_census(g, opts);
  int64_t by_census = r < (int64_t)census.size() ? census[r] : 0;
  int64_t by_tuples = depth_count_tuples(g, r);
  if (by_census != by_tuples)
    throw CrossCheckError("depth count mismatch at g=" + std::to_string(g) +
                          " r=" + std::to_string(r) + ": census " + std::to_string(by_census) +
                          " vs tuples " + std::to_string(by_tuples));
  return by_census;
}

struct OrdinarizationTree {
  int64_t genus = 0;
  std::vector<NumericalSemigroup> nodes;       // breadth-first order, root first
  std::vector<int64_t> parent;                 // -1 at the root
  std::vector<int64_t> depth;
  std::vector<std::vector<int64_t>> children;  // sorted by (multiplicity, frobenius)
  std::vector<int64_t> level_counts;
};

// Builds the ordinarization tree of genus g.  Nodes are enumerated via the
// genus tree, linked by the ordinarization transform, and laid out
// breadth-first with children sorted by (multiplicity, frobenius).
inline OrdinarizationTree build_ordinarization_tree(int64_t g, const EnumOptions& opts = {}) {
  OrdinarizationTree tree;
  tree.genus = g;
  std::vector<NumericalSemigroup> all = enumerate_genus(g, opts);

  std::unordered_map<NumericalSemigroup, int64_t, SemigroupHash> index;
  for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i], (int64_t)i);

  int64_t root = -1;
  std::vector<int64_t> par(all.size(), -1), dep(all.size(), 0);
  std::vector<std::vector<int64_t>> kids(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    dep[i] = ordinarization_number(all[i]);
    if (dep[i] == 0) {
      root = (int64_t)i;
      continue;
    }
    auto up = ordinarization_transform(all[i]);
    auto it = index.find(up);
    if (it == index.end())
      throw CrossCheckError("ordinarization transform left the enumerated set at genus " +
                            std::to_string(g));
    par[i] = it->second;
    kids[it->second].push_back((int64_t)i);
  }
  if (root < 0) throw CrossCheckError("no ordinary semigroup found at genus " + std::to_string(g));

  for (auto& list : kids)
    std::sort(list.begin(), list.end(), [&](int64_t x, int64_t y) {
      auto kx = std::make_pair(all[x].multiplicity(), all[x].frobenius());
      auto ky = std::make_pair(all[y].multiplicity(), all[y].frobenius());
      return kx < ky;
    });

  // breadth-first renumbering
  std::vector<int64_t> order;
  order.reserve(all.size());
  order.push_back(root);
  for (size_t q = 0; q < order.size(); ++q)
    for (int64_t c : kids[order[q]]) order.push_back(c);
  if (order.size() != all.size())
    throw CrossCheckError("ordinarization tree is not connected at genus " + std::to_string(g));

  std::vector<int64_t> new_id(all.size());
  for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = (int64_t)i;

  tree.nodes.reserve(all.size());
  tree.parent.resize(all.size());
  tree.depth.resize(all.size());
  tree.children.resize(all.size());
  int64_t max_depth = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int64_t old = order[i];
    tree.nodes.push_back(all[old]);
    tree.parent[i] = par[old] < 0 ? -1 : new_id[par[old]];
    tree.depth[i] = dep[old];
    if (tree.parent[i] >= 0 && tree.depth[i] != tree.depth[tree.parent[i]] + 1)
      throw CrossCheckError("tree depth is inconsistent with parent links");
    for (int64_t c : kids[old]) tree.children[i].push_back(new_id[c]);
    max_depth = std::max(max_depth, tree.depth[i]);
  }
  tree.level_counts.assign(max_depth + 1, 0);
  for (int64_t d : tree.depth) ++tree.level_counts[d];
  return tree;
}

// Multiplicity 2k+1 with Kunz coordinates (k,k,k-1,k-1,...,1,1); for k >= 2
// this has effectivity 4 and at least one tree child.
inline NumericalSemigroup staircase_family(int64_t k) {
  if (k < 1) throw BadRange("staircase_family: k must be >= 1");
  int64_t m = 2 * k + 1;
  std::vector<int64_t> kunz(m - 1);
  for (int64_t i = 1; i < m; ++i) kunz[i - 1] = k - (i - 1) / 2;
  return NumericalSemigroup::from_kunz(m, kunz);
}

}  // namespace nsemi::ord
