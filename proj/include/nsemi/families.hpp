#pragma once

// Closed-form ordinarization counts and formulas for specific families:
// the depth-1 and depth-2 level counts of the ordinarization tree,
// two-generator semigroups, supersymmetric semigroups, and intervals.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "nsemi/errors.hpp"
#include "nsemi/lattice.hpp"
#include "nsemi/quasipoly.hpp"
#include "nsemi/rational.hpp"

namespace nsemi::families {

// ---------------------------------------------------------------------------
// Level counts of the ordinarization tree (depths 1 and 2).

// Number of genus-g semigroups at ordinarization depth 1.
inline int64_t count_depth1(int64_t g) {
  if (g < 0) throw BadRange("count_depth1: negative genus");
  int64_t num = g % 2 == 0 ? checked_sub(checked_mul(3, checked_mul(g, g)), checked_mul(2, g))
                           : checked_sub(checked_mul(3, checked_mul(g, g)), 3);
  if (num % 8 != 0) throw IntegralityViolation("count_depth1: value is not integral");
  return num / 8;
}

inline lattice::QuasiPolynomial depth1_quasipolynomial() {
  return lattice::make_quasipolynomial({
      {Rational(0), Rational(-1, 4), Rational(3, 8)},   // even genus
      {Rational(-3, 8), Rational(0), Rational(3, 8)},   // odd genus
  });
}

namespace detail {

// Depth-2 level count: degree-4 quasipolynomial of period 12 with leading
// coefficient 11/384.  rows[i] holds 384/11 times the residue-i polynomial,
// ascending powers; entries are exact.
inline const std::vector<std::vector<Rational>>& depth2_scaled_rows() {
  static const std::vector<std::vector<Rational>> rows = {
      {Rational(0), Rational(-1376, 33), Rational(336, 11), Rational(-2548, 297), Rational(1)},
      {Rational(541, 297), Rational(-1384, 99), Rational(1846, 99), Rational(-2224, 297),
       Rational(1)},
      {Rational(6704, 297), Rational(-4816, 99), Rational(3152, 99), Rational(-2548, 297),
       Rational(1)},
      {Rational(-153, 11), Rational(-296, 33), Rational(18), Rational(-2224, 297), Rational(1)},
      {Rational(-512, 297), Rational(-4192, 99), Rational(3088, 99), Rational(-2548, 297),
       Rational(1)},
      {Rational(-6499, 297), Rational(-1576, 99), Rational(1910, 99), Rational(-2224, 297),
       Rational(1)},
      {Rational(48), Rational(-1520, 33), Rational(336, 11), Rational(-2548, 297), Rational(1)},
      {Rational(-4643, 297), Rational(-952, 99), Rational(1846, 99), Rational(-2224, 297),
       Rational(1)},
      {Rational(-7552, 297), Rational(-4384, 99), Rational(3152, 99), Rational(-2548, 297),
       Rational(1)},
      {Rational(39, 11), Rational(-40, 3), Rational(18), Rational(-2224, 297), Rational(1)},
      {Rational(13744, 297), Rational(-4624, 99), Rational(3088, 99), Rational(-2548, 297),
       Rational(1)},
      {Rational(-11683, 297), Rational(-104, 9), Rational(1910, 99), Rational(-2224, 297),
       Rational(1)},
  };
  return rows;
}

inline std::vector<Rational> mul_linear(int64_t root_negated, const std::vector<Rational>& cubic) {
  // (x + root_negated) * cubic, ascending coefficients
  std::vector<Rational> out(cubic.size() + 1, Rational(0));
  for (size_t i = 0; i < cubic.size(); ++i) {
    out[i + 1] += cubic[i];
    out[i] += cubic[i] * Rational(root_negated);
  }
  return out;
}

// Five of the twelve residue polynomials are transcribed in factored form;
// re-multiplying them must reproduce the expanded table.
inline void check_depth2_table() {
  const auto& rows = depth2_scaled_rows();
  struct Factored {
    int64_t residue;
    int64_t root_negated;  // factor (x + root_negated)
    std::vector<Rational> cubic;
  };
  const std::vector<Factored> factored = {
      {0, 0, {Rational(-1376, 33), Rational(336, 11), Rational(-2548, 297), Rational(1)}},
      {1, -1, {Rational(-541, 297), Rational(3611, 297), Rational(-1927, 297), Rational(1)}},
      {2, -2, {Rational(-3352, 297), Rational(5548, 297), Rational(-1954, 297), Rational(1)}},
      {3, -3, {Rational(51, 11), Rational(449, 99), Rational(-1333, 297), Rational(1)}},
      {11, 1, {Rational(-11683, 297), Rational(8251, 297), Rational(-2521, 297), Rational(1)}},
  };
  for (const auto& f : factored)
    if (mul_linear(f.root_negated, f.cubic) != rows[f.residue])
      throw CrossCheckError("depth-2 table row " + std::to_string(f.residue) +
                            " does not match its factored form");
}

}  // namespace detail

inline lattice::QuasiPolynomial depth2_quasipolynomial() {
  static const lattice::QuasiPolynomial poly = [] {
    detail::check_depth2_table();
    std::vector<std::vector<Rational>> rows = detail::depth2_scaled_rows();
    for (auto& row : rows)
      for (auto& c : row) c *= Rational(11, 384);
    return lattice::make_quasipolynomial(std::move(rows));
  }();
  return poly;
}

// Number of genus-g semigroups at ordinarization depth 2.
inline int64_t count_depth2(int64_t g) {
  if (g < 0) throw BadRange("count_depth2: negative genus");
  return lattice::eval_count(depth2_quasipolynomial(), g);
}

// ---------------------------------------------------------------------------
// Two-generator semigroups <a,b>, 2 <= a < b, gcd(a,b) = 1.

namespace detail {
inline void check_two_gen(int64_t a, int64_t b) {
  if (a < 2 || b <= a) throw BadOrder("two-generator semigroup needs 2 <= a < b");
  if (std::gcd(a, b) != 1) throw GcdError("two-generator semigroup needs gcd(a,b) = 1");
}
}  // namespace detail

inline int64_t two_gen_genus(int64_t a, int64_t b) {
  detail::check_two_gen(a, b);
  return checked_mul(a - 1, b - 1) / 2;
}

inline int64_t two_gen_frobenius(int64_t a, int64_t b) {
  detail::check_two_gen(a, b);
  return checked_sub(checked_mul(a, b), checked_add(a, b));
}

// Ordinarization number of <a,b>: floor(g/b) + sum_n floor((g-nb)/a).
inline int64_t two_gen_r(int64_t a, int64_t b) {
  int64_t g = two_gen_genus(a, b);
  int64_t top = g / b;
  int64_t r = top;
  for (int64_t n = 0; n <= top; ++n) r = checked_add(r, (g - n * b) / a);
  return r;
}

struct RationalBounds {
  Rational lower, upper;
};

// Sandwich for r(<a,b>): lower <= r <= lower + width with width a/4 - 1/(4a)
// for odd a and a/4 for even a.
inline RationalBounds two_gen_r_bounds(int64_t a, int64_t b) {
  detail::check_two_gen(a, b);
  Rational base = Rational(checked_sub(checked_mul(a, b), checked_add(a, 4)), 8);
  if (a % 2 == 1) {
    Rational lower = base - Rational(b + 3, 8 * a);
    return {lower, lower + Rational(a, 4) - Rational(1, 4 * a)};
  }
  return {base, base + Rational(a, 4)};
}

struct TwoGenTable {
  lattice::QuasiPolynomial poly;      // linear rows per residue of b
  std::vector<char> applicable;       // rows meaningful only where gcd(residue, a) = 1
};

// Fits the linear quasipolynomial b -> r(<a,b>) for fixed a from exact
// values; period a for odd a and 2a for even a.
inline TwoGenTable fit_two_gen_table(int64_t a, int64_t samples_per_class = 4) {
  if (a < 2) throw BadRange("fit_two_gen_table: a must be >= 2");
  if (samples_per_class < 3)
    throw InsufficientSamples("fit_two_gen_table: need >= 3 samples per class");
  int64_t p = a % 2 == 1 ? a : 2 * a;
  TwoGenTable out;
  out.applicable.assign(p, 0);
  std::vector<std::vector<Rational>> rows(p, {Rational(0), Rational(0)});
  for (int64_t rho = 0; rho < p; ++rho) {
    if (std::gcd(rho, a) != 1) continue;
    out.applicable[rho] = 1;
    std::vector<std::pair<int64_t, Rational>> pts;
    for (int64_t b = rho; (int64_t)pts.size() < samples_per_class; b += p) {
      if (b <= a) continue;
      pts.push_back({b, Rational(two_gen_r(a, b))});
    }
    std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.first > y.first; });
    std::vector<Rational> coeffs =
        lattice::fit_polynomial({pts.begin(), pts.begin() + 2}, 1);
    for (size_t k = 2; k < pts.size(); ++k) {
      Rational have = coeffs[0] + coeffs[1] * Rational(pts[k].first);
      if (have != pts[k].second)
        throw InconsistentSamples("two-generator table for a=" + std::to_string(a) +
                                  " is not linear with period " + std::to_string(p));
    }
    rows[rho] = std::move(coeffs);
  }
  out.poly = lattice::make_quasipolynomial(std::move(rows));
  return out;
}

// Transcribed reference tables for a = 2..6.
inline TwoGenTable two_gen_reference_table(int64_t a) {
  auto table = [](int64_t p, std::vector<std::pair<int64_t, std::pair<Rational, Rational>>> rs) {
    TwoGenTable out;
    out.applicable.assign(p, 0);
    std::vector<std::vector<Rational>> rows(p, {Rational(0), Rational(0)});
    for (auto& [rho, cs] : rs) {
      out.applicable[rho] = 1;
      rows[rho] = {cs.first, cs.second};
    }
    out.poly = lattice::make_quasipolynomial(std::move(rows));
    return out;
  };
  switch (a) {
    case 2:
      return table(4, {{1, {Rational(-1, 4), Rational(1, 4)}},
                       {3, {Rational(-3, 4), Rational(1, 4)}}});
    case 3:
      return table(3, {{1, {Rational(-1, 3), Rational(1, 3)}},
                       {2, {Rational(-2, 3), Rational(1, 3)}}});
    case 4:
      return table(8, {{1, {Rational(-1, 2), Rational(1, 2)}},
                       {3, {Rational(-1, 2), Rational(1, 2)}},
                       {5, {Rational(-1, 2), Rational(1, 2)}},
                       {7, {Rational(-1, 2), Rational(1, 2)}}});
    case 5:
      return table(5, {{1, {Rational(-3, 5), Rational(3, 5)}},
                       {2, {Rational(-1, 5), Rational(3, 5)}},
                       {3, {Rational(-4, 5), Rational(3, 5)}},
                       {4, {Rational(-2, 5), Rational(3, 5)}}});
    case 6:
      return table(12, {{1, {Rational(-3, 4), Rational(3, 4)}},
                        {5, {Rational(-3, 4), Rational(3, 4)}},
                        {7, {Rational(-1, 4), Rational(3, 4)}},
                        {11, {Rational(-1, 4), Rational(3, 4)}}});
    default:
      throw BadRange("two_gen_reference_table: only a = 2..6 are transcribed");
  }
}

// ---------------------------------------------------------------------------
// Factorization counts over two generators (Barlow / Popoviciu).

namespace detail {
inline int64_t mod_inverse(int64_t v, int64_t m) {
  int64_t t = 0, nt = 1, r = m, nr = ((v % m) + m) % m;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw GcdError("mod_inverse: arguments not coprime");
  return ((t % m) + m) % m;
}
}  // namespace detail

// #factorizations of n over <a,b>:
// n/(ab) - {b^{-1}n/a} - {a^{-1}n/b} + 1, always a nonnegative integer.
inline int64_t barlow_popoviciu(int64_t a, int64_t b, int64_t n) {
  detail::check_two_gen(a, b);
  if (n < 0) throw BadRange("barlow_popoviciu: negative argument");
  int64_t ra = checked_mul(detail::mod_inverse(b, a), n % a) % a;
  int64_t rb = checked_mul(detail::mod_inverse(a, b), n % b) % b;
  Rational v = Rational(n, checked_mul(a, b)) - Rational(ra, a) - Rational(rb, b) + Rational(1);
  if (!v.is_integer() || v.num() < 0)
    throw IntegralityViolation("barlow_popoviciu: value " + v.str() + " is not a count");
  return v.num();
}

// ---------------------------------------------------------------------------
// Supersymmetric semigroups: pairwise coprime a_1 < ... < a_n, generators
// A/a_i where A is the product.

struct SupersymmetricSpec {
  std::vector<int64_t> factors;    // ascending, pairwise coprime, each >= 2
  std::vector<int64_t> cofactors;  // A / factors[i], the minimal generators
  int64_t product = 0;             // A, the unique element with several factorizations
  int64_t frobenius = 0;
  int64_t genus = 0;
};

inline SupersymmetricSpec supersym_spec(std::span<const int64_t> factors) {
  if (factors.size() < 2) throw EmptyInput("supersym_spec: need at least two factors");
  SupersymmetricSpec spec;
  spec.factors.assign(factors.begin(), factors.end());
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    if (spec.factors[i] < 2) throw BadRange("supersym_spec: factors must be >= 2");
    if (i && spec.factors[i - 1] >= spec.factors[i])
      throw BadOrder("supersym_spec: factors must be strictly ascending");
    for (size_t j = 0; j < i; ++j)
      if (std::gcd(spec.factors[j], spec.factors[i]) != 1)
        throw NotPairwiseCoprime("supersym_spec: factors " + std::to_string(spec.factors[j]) +
                                 " and " + std::to_string(spec.factors[i]) + " share a divisor");
  }
  spec.product = 1;
  for (int64_t a : spec.factors) spec.product = checked_mul(spec.product, a);
  int64_t cof_sum = 0;
  for (int64_t a : spec.factors) {
    spec.cofactors.push_back(spec.product / a);
    cof_sum = checked_add(cof_sum, spec.product / a);
  }
  spec.frobenius =
      checked_sub(checked_mul((int64_t)spec.factors.size() - 1, spec.product), cof_sum);
  if (spec.frobenius < 1 || spec.frobenius % 2 == 0)
    throw CrossCheckError("supersym_spec: frobenius " + std::to_string(spec.frobenius) +
                          " is not an odd positive integer");
  spec.genus = (spec.frobenius + 1) / 2;
  return spec;
}

inline SupersymmetricSpec supersym_spec(std::initializer_list<int64_t> factors) {
  return supersym_spec(std::span<const int64_t>(factors.begin(), factors.size()));
}

namespace detail {
// (generator, cap) pairs in ascending generator order; the cap of generator
// A/a_i is a_i.  Coefficient vectors below g are unique once every generator
// but the smallest is reduced modulo its cap.
inline std::vector<std::pair<int64_t, int64_t>> sorted_gens(const SupersymmetricSpec& spec) {
  std::vector<std::pair<int64_t, int64_t>> gens;
  for (size_t i = 0; i < spec.factors.size(); ++i)
    gens.push_back({spec.cofactors[i], spec.factors[i]});
  std::sort(gens.begin(), gens.end());
  return gens;
}
}  // namespace detail

// #factorizations of member x: binomial(n + lambda - 1, n - 1) where lambda
// counts how many times the product A can be traded between coordinates.
inline int64_t supersym_factor_count(const SupersymmetricSpec& spec, int64_t x) {
  if (x < 0) throw NotMember("supersym_factor_count: negative argument");
  int64_t n = (int64_t)spec.factors.size();
  int64_t canonical = 0;
  for (int64_t i = 0; i < n; ++i) {
    int64_t a = spec.factors[i], q = spec.cofactors[i];
    int64_t xi = checked_mul(detail::mod_inverse(q % a, a), x % a) % a;
    canonical = checked_add(canonical, checked_mul(xi, q));
  }
  int64_t lambda_num = checked_sub(x, canonical);
  if (lambda_num % spec.product != 0)
    throw CrossCheckError("supersym_factor_count: canonical coordinates are inconsistent");
  int64_t lambda = lambda_num / spec.product;
  if (lambda < 0) throw NotMember(std::to_string(x) + " is not a member");
  return checked_binomial(n + lambda - 1, n - 1);
}

inline int64_t supersym_factor_count(const SupersymmetricSpec& spec,
                                     const std::vector<int64_t>& coeffs) {
  auto gens = detail::sorted_gens(spec);
  if (coeffs.size() != gens.size())
    throw BadRange("supersym_factor_count: coefficient count mismatch");
  int64_t n = (int64_t)gens.size();
  int64_t lambda = 0;
  for (int64_t j = 0; j < n; ++j) {
    if (coeffs[j] < 0) throw BadRange("supersym_factor_count: negative coefficient");
    lambda = checked_add(lambda, coeffs[j] / gens[j].second);
  }
  return checked_binomial(n + lambda - 1, n - 1);
}

// Ordinarization number: members in [1, g] correspond to coefficient tuples
// with every generator except the smallest reduced below its cap.
inline int64_t supersym_r(const SupersymmetricSpec& spec) {
  auto gens = detail::sorted_gens(spec);
  int64_t g = spec.genus;
  int64_t count = 0;
  auto rec = [&](auto&& self, size_t j, int64_t budget) -> void {
    if (j == 0) {
      count = checked_add(count, budget / gens[0].first + 1);
      return;
    }
    auto [gen, cap] = gens[j];
    for (int64_t c = 0; c < cap && c * gen <= budget; ++c) self(self, j - 1, budget - c * gen);
  };
  rec(rec, gens.size() - 1, g);
  return count - 1;
}

// r/g for the three-factor family; approaches 1/6 as the factors grow.
inline Rational dim3_ratio(int64_t a, int64_t b, int64_t c) {
  SupersymmetricSpec spec = supersym_spec(std::initializer_list<int64_t>{a, b, c});
  return Rational(supersym_r(spec), spec.genus);
}

// ---------------------------------------------------------------------------
// Interval-generated semigroups <a, a+1, ..., a+x>.

struct IntervalSpec {
  int64_t a = 0, x = 0;
  int64_t n = 0;  // ceil((a-1)/x), the number of "blocks" below the conductor
  int64_t frobenius = 0;
  int64_t genus = 0;
};

inline IntervalSpec interval_spec(int64_t a, int64_t x) {
  if (a < 2 || x < 1 || x > a - 1) throw BadRange("interval_spec: need a >= 2, 1 <= x <= a-1");
  IntervalSpec spec;
  spec.a = a;
  spec.x = x;
  spec.n = (a - 2) / x + 1;
  spec.frobenius = checked_sub(checked_mul(spec.n, a), 1);
  spec.genus = checked_sub(checked_mul(spec.n, a),
                           checked_add(checked_mul(spec.n, checked_mul(spec.n - 1, x)) / 2, spec.n));
  return spec;
}

// Ordinarization number of <a, ..., a+x>; x = a-1 gives the ordinary
// semigroup and 0.
inline int64_t interval_r(int64_t a, int64_t x) {
  IntervalSpec spec = interval_spec(a, x);
  int64_t n = spec.n;
  int64_t num;
  if (n % 2 == 1)
    num = checked_add(checked_mul(checked_mul(n, n) - 1, x), checked_mul(4, n - 1));
  else
    num = checked_add(checked_mul(-checked_mul(n, 3 * n - 2), x), checked_mul(4 * n, a - 1));
  if (num % 8 != 0) throw IntegralityViolation("interval_r: value is not integral");
  return num / 8;
}

// ---------------------------------------------------------------------------
// Reference lattice systems (variables a1, a2, b1, b2 unless noted).

// 1 <= b2 < b1 <= g, g+1 <= a1 < a2 <= 2g-1, 2b2 >= g+1, a2 - b2 <= g.
inline lattice::LinearSystem depth2_outer_system() {
  return lattice::parse_linear_system(
      "ge 0 0 -1 0 1 0\n"   // b1 <= g
      "ge 0 0 1 -1 0 1\n"   // b2 <= b1 - 1
      "ge 1 0 0 0 -1 1\n"   // a1 >= g + 1
      "ge -1 1 0 0 0 1\n"   // a2 >= a1 + 1
      "ge 0 -1 0 0 2 1\n"   // a2 <= 2g - 1
      "ge 0 -1 0 1 1 0\n"   // a2 - b2 <= g
      "ge 0 0 0 2 -1 1\n"); // 2 b2 >= g + 1
}

// Point count of the system above, from its Hilbert series.
inline int64_t depth2_outer_reference(int64_t g) {
  if (g < 0) throw BadRange("depth2_outer_reference: negative genus");
  __int128 v = g % 2 == 0
                   ? (__int128)(g - 2) * g * (11 * g * g - 6 * g - 8)
                   : (__int128)(g - 1) * (g + 1) * (11 * g * g - 16 * g - 3);
  if (v % 384 != 0) throw IntegralityViolation("depth2_outer_reference: not integral");
  v /= 384;
  return (int64_t)v;
}

// Slice of the above with b1 = 2 b2 and a1 = b1 + b2 (and the 2b2 >= g+1 row
// dropped); period-6 point count.
inline lattice::LinearSystem depth2_slice_system() {
  return lattice::parse_linear_system(
      "ge 0 0 -1 0 1 0\n"
      "ge 0 0 1 -1 0 1\n"
      "ge 1 0 0 0 -1 1\n"
      "ge -1 1 0 0 0 1\n"
      "ge 0 -1 0 0 2 1\n"
      "ge 0 -1 0 1 1 0\n"
      "eq 0 0 -1 2 0 0\n"   // b1 = 2 b2
      "eq -1 0 1 1 0 0\n"); // a1 = b1 + b2
}

inline int64_t depth2_slice_reference(int64_t g) {
  if (g < 1) throw BadRange("depth2_slice_reference: genus must be positive");
  static const int64_t shift_a[6] = {0, -1, -2, -3, -4, 1};
  static const int64_t shift_b[6] = {-6, -1, 4, -3, 2, 1};
  int64_t rho = g % 6;
  int64_t v = checked_mul(g + shift_a[rho], g + shift_b[rho]);
  if (v % 36 != 0) throw IntegralityViolation("depth2_slice_reference: not integral");
  return v / 36;
}

// Depth-1 count as a difference of two planar systems (variables a, b):
// g+1 <= a <= 2g-1, b <= g, a - b <= g, 2b >= g+1, minus its 2b = a slice.
inline lattice::LinearSystem depth1_outer_system() {
  return lattice::parse_linear_system(
      "ge 1 0 -1 1\n"   // a >= g + 1
      "ge -1 0 2 1\n"   // a <= 2g - 1
      "ge 0 -1 1 0\n"   // b <= g
      "ge -1 1 1 0\n"   // a - b <= g
      "ge 0 2 -1 1\n"); // 2b >= g + 1
}

inline lattice::LinearSystem depth1_slice_system() {
  lattice::LinearSystem sys = depth1_outer_system();
  sys.rows.push_back(lattice::LinearRow{true, {-1, 2}, 0, 0});  // 2b = a
  return sys;
}

inline int64_t depth1_outer_reference(int64_t g) {
  if (g < 1) throw BadRange("depth1_outer_reference: genus must be positive");
  int64_t v = g % 2 == 0 ? checked_mul(g + 2, 3 * g - 4) : checked_mul(g - 1, 3 * g + 7);
  if (v % 8 != 0) throw IntegralityViolation("depth1_outer_reference: not integral");
  return v / 8;
}

inline int64_t depth1_slice_reference(int64_t g) {
  if (g < 1) throw BadRange("depth1_slice_reference: genus must be positive");
  return (g - 1) / 2;
}

}  // namespace nsemi::families
