#pragma once

// Numerical semigroups (cofinite additive submonoids of the naturals)
// represented by a membership bit table over [0, conductor).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "nsemi/bit_table.hpp"
#include "nsemi/errors.hpp"
#include "nsemi/rational.hpp"

namespace nsemi {

using FactorizationVector = std::vector<int64_t>;

struct GeneratorData {
  std::vector<int64_t> minimal;    // minimal generating set, ascending
  std::vector<int64_t> effective;  // minimal generators greater than the Frobenius number
  int64_t e = 0;                   // embedding dimension, |minimal|
  int64_t h = 0;                   // effectivity, |effective|
};

struct AperyData {
  int64_t modulus = 0;
  std::vector<int64_t> apery;  // apery[i] = least member congruent to i (mod modulus)
  std::vector<int64_t> kunz;   // (apery[i]-i)/modulus for i=1..m-1, only when modulus = multiplicity
};

class NumericalSemigroup {
 public:
  // Window cap for sieves; construction beyond this raises ResourceLimit.
  static constexpr int64_t kConductorCap = 200'000'000;

  static NumericalSemigroup from_generators(std::span<const int64_t> gens) {
    if (gens.empty()) throw EmptyInput("from_generators: empty generator list");
    std::vector<int64_t> g(gens.begin(), gens.end());
    for (int64_t x : g)
      if (x < 1) throw BadRange("from_generators: generators must be positive");
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    int64_t d = 0;
    for (int64_t x : g) d = std::gcd(d, x);
    if (d != 1) throw GcdError("from_generators: gcd of generators is " + std::to_string(d));
    if (g[0] == 1) return NumericalSemigroup();  // full monoid

    int64_t m = g[0];
    int64_t window = std::max<int64_t>(2 * g.back() + 2, 64);
    for (;;) {
      if (window > kConductorCap) throw ResourceLimit("from_generators: conductor beyond cap");
      detail::BitTable bits(window);
      bits.set(0);
      for (int64_t x = m; x < window; ++x) {
        for (int64_t gen : g) {
          if (gen > x) break;
          if (bits.test(x - gen)) {
            bits.set(x);
            break;
          }
        }
      }
      // conductor found once a run of m consecutive members appears
      int64_t last_gap = 0, conductor = -1;
      for (int64_t x = 1; x < window; ++x) {
        if (!bits.test(x))
          last_gap = x;
        else if (x - last_gap >= m) {
          conductor = last_gap + 1;
          break;
        }
      }
      if (conductor >= 0) return NumericalSemigroup(std::move(bits), conductor);
      window *= 2;
    }
  }

  static NumericalSemigroup from_generators(std::initializer_list<int64_t> gens) {
    return from_generators(std::span<const int64_t>(gens.begin(), gens.size()));
  }

  static NumericalSemigroup from_gaps(std::span<const int64_t> gap_list) {
    if (gap_list.empty()) return NumericalSemigroup();
    std::vector<int64_t> gs(gap_list.begin(), gap_list.end());
    for (int64_t x : gs)
      if (x < 1) throw BadRange("from_gaps: gaps must be positive");
    std::sort(gs.begin(), gs.end());
    if (std::adjacent_find(gs.begin(), gs.end()) != gs.end())
      throw BadRange("from_gaps: duplicate gap");
    int64_t conductor = gs.back() + 1;
    if (conductor > kConductorCap) throw ResourceLimit("from_gaps: conductor beyond cap");
    detail::BitTable bits(conductor, true);
    for (int64_t x : gs) bits.reset(x);
    // complement must be closed under addition below the conductor
    for (int64_t x = 1; 2 * x < conductor; ++x) {
      if (!bits.test(x)) continue;
      for (int64_t y = x; x + y < conductor; ++y)
        if (bits.test(y) && !bits.test(x + y))
          throw NotClosed("from_gaps: " + std::to_string(x) + "+" + std::to_string(y) +
                          " is a gap");
    }
    return NumericalSemigroup(std::move(bits), conductor);
  }

  static NumericalSemigroup from_gaps(std::initializer_list<int64_t> gap_list) {
    return from_gaps(std::span<const int64_t>(gap_list.begin(), gap_list.size()));
  }

  // Gaps exactly {1, ..., genus}.
  static NumericalSemigroup ordinary(int64_t genus) {
    if (genus < 0) throw BadRange("ordinary: negative genus");
    if (genus == 0) return NumericalSemigroup();
    detail::BitTable bits(genus + 1);
    bits.set(0);
    return NumericalSemigroup(std::move(bits), genus + 1);
  }

  // Rebuild from multiplicity and Kunz coordinates (apery[i] = kunz[i-1]*m + i).
  static NumericalSemigroup from_kunz(int64_t m, std::span<const int64_t> kunz) {
    if (m < 2) throw BadRange("from_kunz: multiplicity must be >= 2");
    if ((int64_t)kunz.size() != m - 1)
      throw BadRange("from_kunz: need exactly m-1 coordinates");
    std::vector<int64_t> apery(m);
    apery[0] = 0;
    int64_t top = 0;
    for (int64_t i = 1; i < m; ++i) {
      if (kunz[i - 1] < 1) throw BadRange("from_kunz: coordinates must be >= 1");
      apery[i] = checked_add(checked_mul(kunz[i - 1], m), i);
      top = std::max(top, apery[i]);
    }
    int64_t conductor = top - m + 1;
    if (conductor > kConductorCap) throw ResourceLimit("from_kunz: conductor beyond cap");
    detail::BitTable bits(conductor);
    for (int64_t x = 0; x < conductor; ++x)
      if (x >= apery[x % m]) bits.set(x);
    for (int64_t x = 1; 2 * x < conductor; ++x) {
      if (!bits.test(x)) continue;
      for (int64_t y = x; x + y < conductor; ++y)
        if (bits.test(y) && !bits.test(x + y))
          throw NotClosed("from_kunz: coordinates do not describe a semigroup");
    }
    return NumericalSemigroup(std::move(bits), conductor);
  }

  static NumericalSemigroup from_kunz(int64_t m, std::initializer_list<int64_t> kunz) {
    return from_kunz(m, std::span<const int64_t>(kunz.begin(), kunz.size()));
  }

  // Adopts a membership table over [0, conductor); caller guarantees closure.
  static NumericalSemigroup from_table_unchecked(detail::BitTable bits, int64_t conductor) {
    return NumericalSemigroup(std::move(bits), conductor);
  }

  NumericalSemigroup() : conductor_(0), genus_(0), multiplicity_(1) {}  // full monoid

  bool contains(int64_t x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return bits_.test(x);
  }

  int64_t conductor() const { return conductor_; }
  int64_t frobenius() const { return conductor_ - 1; }  // -1 for the full monoid
  int64_t genus() const { return genus_; }
  int64_t multiplicity() const { return multiplicity_; }
  bool is_full_monoid() const { return conductor_ == 0; }
  bool is_ordinary() const { return conductor_ == genus_ + 1 && genus_ > 0; }

  std::vector<int64_t> gaps() const {
    std::vector<int64_t> out;
    out.reserve(genus_);
    for (int64_t x = 1; x < conductor_; ++x)
      if (!bits_.test(x)) out.push_back(x);
    return out;
  }

  // Members in [1, genus]; this equals the node depth in the ordinarization tree.
  int64_t members_up_to_genus() const { return count_members(1, genus_ + 1); }

  int64_t count_members(int64_t lo, int64_t hi) const {  // members in [lo, hi)
    if (lo < 0) lo = 0;
    if (hi <= lo) return 0;
    int64_t in_window = bits_.count_range(lo, std::min(hi, conductor_));
    int64_t above = std::max<int64_t>(0, hi - std::max(lo, conductor_));
    return in_window + above;
  }

  GeneratorData minimal_generators() const {
    GeneratorData out;
    if (is_full_monoid()) {
      out.minimal = {1};
      out.effective = {1};
      out.e = out.h = 1;
      return out;
    }
    int64_t m = multiplicity_;
    for (int64_t x = m; x <= frobenius() + m; ++x) {
      if (!contains(x)) continue;
      bool minimal = true;
      for (int64_t y = m; 2 * y <= x; ++y)
        if (contains(y) && contains(x - y)) {
          minimal = false;
          break;
        }
      if (minimal) out.minimal.push_back(x);
    }
    for (int64_t x : out.minimal)
      if (x > frobenius()) out.effective.push_back(x);
    out.e = (int64_t)out.minimal.size();
    out.h = (int64_t)out.effective.size();
    return out;
  }

  AperyData apery_set(int64_t n) const {
    if (n < 1 || !contains(n)) throw NotMember("apery_set: modulus must be a positive member");
    AperyData out;
    out.modulus = n;
    out.apery.assign(n, -1);
    out.apery[0] = 0;
    for (int64_t i = 1; i < n; ++i) {
      for (int64_t x = i;; x += n)
        if (contains(x)) {
          out.apery[i] = x;
          break;
        }
    }
    if (n == multiplicity_ && n >= 2) {
      out.kunz.resize(n - 1);
      for (int64_t i = 1; i < n; ++i) out.kunz[i - 1] = (out.apery[i] - i) / n;
    }
    return out;
  }

  // All factorizations of n over the minimal generators, coefficients in
  // ascending generator order, listed lexicographically.
  std::vector<FactorizationVector> factorizations(int64_t n) const {
    if (n < 0) throw BadRange("factorizations: negative argument");
    std::vector<int64_t> gens = minimal_generators().minimal;
    std::vector<FactorizationVector> out;
    FactorizationVector cur(gens.size(), 0);
    factorization_rec(gens, 0, n, cur, &out, nullptr, -1);
    return out;
  }

  int64_t factorization_count(int64_t n, int64_t cap = -1) const {
    if (n < 0) throw BadRange("factorizations: negative argument");
    std::vector<int64_t> gens = minimal_generators().minimal;
    FactorizationVector cur(gens.size(), 0);
    int64_t count = 0;
    factorization_rec(gens, 0, n, cur, nullptr, &count, cap);
    return count;
  }

  // Least member <= bound admitting at least two factorizations, if any.
  std::optional<int64_t> first_multi_factorization(int64_t bound) const {
    std::vector<int64_t> gens = minimal_generators().minimal;
    for (int64_t n = multiplicity_; n <= bound; ++n) {
      if (!contains(n)) continue;
      FactorizationVector cur(gens.size(), 0);
      int64_t count = 0;
      factorization_rec(gens, 0, n, cur, nullptr, &count, 2);
      if (count >= 2) return n;
    }
    return std::nullopt;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return !(a == b);
  }

  size_t hash() const { return bits_.hash() ^ (size_t)conductor_; }

  // "<g1,g2,...>" over the minimal generating set.
  std::string label() const {
    std::ostringstream os;
    os << '<';
    auto gd = minimal_generators();
    for (size_t i = 0; i < gd.minimal.size(); ++i) {
      if (i) os << ',';
      os << gd.minimal[i];
    }
    os << '>';
    return os.str();
  }

  std::string gap_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int64_t x : gaps()) {
      if (!first) os << ',';
      os << x;
      first = false;
    }
    os << '}';
    return os.str();
  }

  const detail::BitTable& table() const { return bits_; }

 private:
  NumericalSemigroup(detail::BitTable bits, int64_t conductor)
      : bits_(std::move(bits)), conductor_(conductor) {
    bits_.truncate(conductor_);  // canonical window, so == and hash() see one representation
    genus_ = conductor_ - bits_.count_range(0, conductor_);
    multiplicity_ = conductor_;
    for (int64_t x = 1; x < conductor_; ++x)
      if (bits_.test(x)) {
        multiplicity_ = x;
        break;
      }
    if (conductor_ == 0) multiplicity_ = 1;
  }

  void factorization_rec(const std::vector<int64_t>& gens, size_t idx, int64_t rem,
                         FactorizationVector& cur, std::vector<FactorizationVector>* out,
                         int64_t* count, int64_t cap) const {
    if (count && cap >= 0 && *count >= cap) return;
    if (idx + 1 == gens.size()) {
      if (rem % gens[idx] == 0) {
        cur[idx] = rem / gens[idx];
        if (out) out->push_back(cur);
        if (count) ++*count;
        cur[idx] = 0;
      }
      return;
    }
    for (int64_t c = 0; c * gens[idx] <= rem; ++c) {
      cur[idx] = c;
      factorization_rec(gens, idx + 1, rem - c * gens[idx], cur, out, count, cap);
    }
    cur[idx] = 0;
  }

  detail::BitTable bits_;
  int64_t conductor_;
  int64_t genus_;
  int64_t multiplicity_;
};

struct SemigroupHash {
  size_t operator()(const NumericalSemigroup& s) const { return s.hash(); }
};

}  // namespace nsemi
