#pragma once

// Property suites driven by the `verify` command.  Every closed form in the
// library is compared here against an independent computation: member-scan
// sieves, tuple enumeration, naive box counting, or a second formula.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsemi/families.hpp"
#include "nsemi/lattice.hpp"
#include "nsemi/ordinarization.hpp"
#include "nsemi/quasipoly.hpp"
#include "nsemi/report.hpp"
#include "nsemi/semigroup.hpp"

namespace nsemi::verify {

struct VerifyOptions {
  int64_t max_genus = 10;        // cap for enumeration-backed suites
  int64_t twogen_max = 60;       // b cap for the two-generator sweep
  int64_t barlow_max = 25;       // b cap for the factorization-count sweep
  int64_t supersym_cap = 20000;  // product cap for the supersymmetric sweep
  int64_t factor_count_cap = 2000;  // product cap for factorization-count invariance
  int64_t interval_max = 100;    // a cap for the interval sweep
  int64_t polytope_max = 40;     // g cap for lattice systems vs printed counts
  ord::EnumOptions enum_opts;
};

namespace detail {

// Number of numerical semigroups per genus, 0..14 (frozen reference data).
inline const std::vector<int64_t>& genus_counts() {
  static const std::vector<int64_t> counts = {1,   1,   2,   4,   7,    12,   23,  39,
                                              67,  118, 204, 343, 592,  1001, 1693};
  return counts;
}

// Members of <gens> in [1, genus], by a plain sieve; independent of
// NumericalSemigroup.
inline int64_t member_scan_r(const std::vector<int64_t>& gens, int64_t genus) {
  std::vector<char> member(genus + 1, 0);
  member[0] = 1;
  int64_t count = 0;
  for (int64_t x = 1; x <= genus; ++x) {
    for (int64_t gen : gens) {
      if (gen > x) break;
      if (member[x - gen]) {
        member[x] = 1;
        ++count;
        break;
      }
    }
  }
  return count;
}

// All ascending pairwise-coprime tuples (>= 2 entries, entries >= 2) with
// product <= cap.
inline std::vector<std::vector<int64_t>> coprime_tuples(int64_t cap) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> cur;
  auto rec = [&](auto&& self, int64_t product, int64_t start) -> void {
    for (int64_t a = start; product <= cap / a; ++a) {
      bool ok = true;
      for (int64_t b : cur)
        if (std::gcd(a, b) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(a);
      if (cur.size() >= 2) out.push_back(cur);
      self(self, product * a, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1, 2);
  return out;
}

inline int64_t count_factorizations(const std::vector<int64_t>& gens, int64_t x) {
  auto rec = [&](auto&& self, size_t idx, int64_t rem) -> int64_t {
    if (idx + 1 == gens.size()) return rem % gens[idx] == 0 ? 1 : 0;
    int64_t total = 0;
    for (int64_t c = 0; c * gens[idx] <= rem; ++c) total += self(self, idx + 1, rem - c * gens[idx]);
    return total;
  };
  return rec(rec, 0, x);
}

inline std::string str(int64_t v) { return std::to_string(v); }

struct SweepResult {
  int64_t cases = 0;
  int64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& detail) {
    if (failures == 0) first_failure = detail;
    ++failures;
  }
  std::string summary() const {
    std::ostringstream os;
    os << cases << " cases, " << failures << " failures";
    if (failures) os << " (first: " << first_failure << ")";
    return os.str();
  }
  void report_into(RunReport& rep, const std::string& name, const std::string& provenance) const {
    std::ostringstream expect;
    expect << cases << " cases, 0 failures";
    rep.check(name, expect.str(), summary(), provenance);
  }
};

}  // namespace detail

// Gap-set and generator round trips, plus the classical invariant bounds,
// over every semigroup of genus <= min(max_genus, 9).
inline void suite_roundtrip(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = std::min<int64_t>(opts.max_genus, 9);
  detail::SweepResult gaps_rt, gens_rt, frob_bound, apery_ok;
  for (int64_t g = 0; g <= gmax; ++g) {
    for (const NumericalSemigroup& s : ord::enumerate_genus(g, opts.enum_opts)) {
      ++gaps_rt.cases;
      if (NumericalSemigroup::from_gaps(s.gaps()) != s) gaps_rt.fail(s.label());
      ++gens_rt.cases;
      GeneratorData gd = s.minimal_generators();
      if (NumericalSemigroup::from_generators(gd.minimal) != s) gens_rt.fail(s.label());
      ++frob_bound.cases;
      if (g >= 1 && s.frobenius() > 2 * g - 1) frob_bound.fail(s.label());
      if (g >= 1) {
        ++apery_ok.cases;
        AperyData ap = s.apery_set(s.multiplicity());
        bool ok = ap.apery[0] == 0 && s.frobenius() == *std::max_element(ap.apery.begin(),
                                                                         ap.apery.end()) -
                                          s.multiplicity();
        for (int64_t k : ap.kunz) ok = ok && k >= 1;
        if (ok && s.multiplicity() >= 2)
          ok = NumericalSemigroup::from_kunz(s.multiplicity(), ap.kunz) == s;
        if (!ok) apery_ok.fail(s.label());
      }
    }
  }
  gaps_rt.report_into(rep, "gap-set round trip, g <= " + detail::str(gmax), "cross-check");
  gens_rt.report_into(rep, "generator round trip, g <= " + detail::str(gmax), "cross-check");
  frob_bound.report_into(rep, "frobenius <= 2g-1, g <= " + detail::str(gmax), "cross-check");
  apery_ok.report_into(rep, "apery/kunz invariants, g <= " + detail::str(gmax), "cross-check");
}

// Depth censuses agree with direct tuple enumeration and with the frozen
// total counts; the deepest level is floor(g/2).
inline void suite_counts(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = opts.max_genus;
  detail::SweepResult tuples_ok, totals_ok, depth_ok;
  for (int64_t g = 1; g <= gmax; ++g) {
    std::vector<int64_t> census = ord::depth_census(g, opts.enum_opts);
    for (int64_t r = 1; r <= 2; ++r) {
      ++tuples_ok.cases;
      int64_t have = r < (int64_t)census.size() ? census[r] : 0;
      if (ord::depth_count_tuples(g, r) != have)
        tuples_ok.fail("g=" + detail::str(g) + " r=" + detail::str(r));
    }
    if (g < (int64_t)detail::genus_counts().size()) {
      ++totals_ok.cases;
      int64_t total = std::accumulate(census.begin(), census.end(), (int64_t)0);
      if (total != detail::genus_counts()[g]) totals_ok.fail("g=" + detail::str(g));
    }
    ++depth_ok.cases;
    if ((int64_t)census.size() - 1 != g / 2 || census.back() < 1)
      depth_ok.fail("g=" + detail::str(g));
  }
  tuples_ok.report_into(rep, "census = tuple count (r=1,2), g <= " + detail::str(gmax),
                        "brute-force");
  totals_ok.report_into(rep, "census totals vs frozen N(g)", "cross-check");
  depth_ok.report_into(rep, "max depth = floor(g/2), g <= " + detail::str(gmax), "brute-force");
}

// Structure of the ordinarization tree: depth/parent linkage, strictly
// decreasing effectivity, the h=0 children bound, and the staircase family.
inline void suite_tree(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = std::min<int64_t>(opts.max_genus, 12);
  detail::SweepResult depth_ok, h_decreases, eg_nested, h0_bound, adjacency;
  for (int64_t g = 1; g <= gmax; ++g) {
    ord::OrdinarizationTree tree = ord::build_ordinarization_tree(g, opts.enum_opts);
    std::vector<GeneratorData> gen_data;
    gen_data.reserve(tree.nodes.size());
    for (const NumericalSemigroup& s : tree.nodes) gen_data.push_back(s.minimal_generators());
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
      const NumericalSemigroup& s = tree.nodes[i];
      ++depth_ok.cases;
      if (ord::ordinarization_number(s) != tree.depth[i]) depth_ok.fail(s.label());
      if (tree.parent[i] >= 0) {
        const auto& par = gen_data[tree.parent[i]];
        const auto& own = gen_data[i];
        ++h_decreases.cases;
        if (par.effective.size() <= own.effective.size()) h_decreases.fail(s.label());
        ++eg_nested.cases;
        bool nested = std::includes(par.effective.begin(), par.effective.end(),
                                    own.effective.begin(), own.effective.end());
        bool frob_in = std::binary_search(par.effective.begin(), par.effective.end(),
                                          s.frobenius()) &&
                       !std::binary_search(own.effective.begin(), own.effective.end(),
                                           s.frobenius());
        if (!nested || !frob_in) eg_nested.fail(s.label());
      }
      ++h0_bound.cases;
      if (ord::children_h0_count(s) > s.multiplicity() / 2) h0_bound.fail(s.label());
      ++adjacency.cases;
      std::vector<NumericalSemigroup> kids = ord::children_in_tree(s);
      bool same = kids.size() == tree.children[i].size();
      for (size_t k = 0; same && k < kids.size(); ++k)
        same = kids[k] == tree.nodes[tree.children[i][k]];
      if (!same) adjacency.fail(s.label());
    }
  }
  depth_ok.report_into(rep, "node depth = ordinarization number, g <= " + detail::str(gmax),
                       "cross-check");
  h_decreases.report_into(rep, "h decreases along every edge, g <= " + detail::str(gmax),
                          "brute-force");
  eg_nested.report_into(rep, "eg(parent) contains eg(child) plus frobenius", "brute-force");
  h0_bound.report_into(rep, "h=0 children <= floor(m/2)", "brute-force");
  adjacency.report_into(rep, "children_in_tree = tree adjacency", "cross-check");

  NumericalSemigroup sharp = NumericalSemigroup::from_generators({7, 8, 10, 11, 12, 13});
  rep.check("h=0 children of <7,8,10,11,12,13>", "3", detail::str(ord::children_h0_count(sharp)),
            "brute-force");
  detail::SweepResult staircase;
  for (int64_t k = 2; k <= 6; ++k) {
    ++staircase.cases;
    NumericalSemigroup tk = ord::staircase_family(k);
    GeneratorData gd = tk.minimal_generators();
    bool ok = tk.multiplicity() == 2 * k + 1 && tk.frobenius() == (k - 1) * (2 * k + 1) + 2 &&
              (int64_t)gd.effective.size() == 4 && !ord::children_in_tree(tk).empty();
    if (!ok) staircase.fail("k=" + detail::str(k));
  }
  staircase.report_into(rep, "staircase family: h = 4 and a child exists, k = 2..6",
                        "cross-check");
}

// Closed forms for the first two depth counts against brute force.
inline void suite_formulas(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = opts.max_genus;
  detail::SweepResult d1, d2;
  for (int64_t g = 1; g <= gmax; ++g) {
    std::vector<int64_t> census = ord::depth_census(g, opts.enum_opts);
    auto level = [&](int64_t r) { return r < (int64_t)census.size() ? census[r] : 0; };
    ++d1.cases;
    if (families::count_depth1(g) != level(1)) d1.fail("g=" + detail::str(g));
    ++d2.cases;
    if (families::count_depth2(g) != level(2)) d2.fail("g=" + detail::str(g));
  }
  d1.report_into(rep, "depth-1 closed form = census, g <= " + detail::str(gmax), "formula");
  d2.report_into(rep, "depth-2 closed form = census, g <= " + detail::str(gmax), "formula");
}

// Quasipolynomial fitting recovers the stored coefficient tables.
inline void suite_fit(RunReport& rep, const VerifyOptions&) {
  lattice::SampleSet d1;
  for (int64_t g = 1; g <= 12; ++g) d1.push_back({g, ord::depth_count_tuples(g, 1)});
  lattice::QuasiPolynomial f1 = lattice::fit_quasipolynomial(d1, 2, 2);
  rep.check("depth-1 fit (degree 2, period 2)", lattice::quasipolynomial_str(
                families::depth1_quasipolynomial()),
            lattice::quasipolynomial_str(f1), "cross-check");

  lattice::SampleSet d2;
  for (int64_t g = 1; g <= 72; ++g) d2.push_back({g, ord::depth_count_tuples(g, 2)});
  lattice::QuasiPolynomial f2 = lattice::fit_quasipolynomial(d2, 4, 12);
  rep.check("depth-2 fit (degree 4, period 12)", lattice::quasipolynomial_str(
                families::depth2_quasipolynomial()),
            lattice::quasipolynomial_str(f2), "cross-check");

  detail::SweepResult qa_ref, qa_repro;
  for (int64_t a = 2; a <= 6; ++a) {
    ++qa_ref.cases;
    families::TwoGenTable fitted = families::fit_two_gen_table(a);
    families::TwoGenTable ref = families::two_gen_reference_table(a);
    if (fitted.poly.rows != ref.poly.rows || fitted.applicable != ref.applicable)
      qa_ref.fail("a=" + detail::str(a));
  }
  qa_ref.report_into(rep, "fitted two-generator tables match stored tables, a = 2..6",
                     "cross-check");
  for (int64_t a = 2; a <= 12; ++a) {
    families::TwoGenTable fitted = families::fit_two_gen_table(a);
    int64_t p = fitted.poly.period;
    for (int64_t b = a + 1; b <= a + 6 * p; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++qa_repro.cases;
      if (lattice::eval_count(fitted.poly, b) != families::two_gen_r(a, b))
        qa_repro.fail("a=" + detail::str(a) + " b=" + detail::str(b));
    }
  }
  qa_repro.report_into(rep, "fitted tables reproduce r(<a,b>), a <= 12, b <= a + 6p",
                       "formula");
}

// Floor sum = simplex count - 1 = member scan, and the sandwich bounds.
inline void suite_twogen(RunReport& rep, const VerifyOptions& opts) {
  detail::SweepResult triple, bounds;
  for (int64_t a = 2; a <= opts.twogen_max; ++a) {
    for (int64_t b = a + 1; b <= opts.twogen_max; ++b) {
      if (std::gcd(a, b) != 1) continue;
      int64_t g = families::two_gen_genus(a, b);
      int64_t by_formula = families::two_gen_r(a, b);
      int64_t by_simplex = lattice::count_right_simplex({{a, b}, g}) - 1;
      int64_t by_scan = detail::member_scan_r({a, b}, g);
      ++triple.cases;
      if (by_formula != by_simplex || by_formula != by_scan)
        triple.fail("a=" + detail::str(a) + " b=" + detail::str(b));
      ++bounds.cases;
      families::RationalBounds bd = families::two_gen_r_bounds(a, b);
      Rational r(by_formula);
      if (r < bd.lower || r > bd.upper)
        bounds.fail("a=" + detail::str(a) + " b=" + detail::str(b));
    }
  }
  triple.report_into(rep, "floor sum = simplex - 1 = member scan, a < b <= " +
                              detail::str(opts.twogen_max),
                     "cross-check");
  bounds.report_into(rep, "sandwich bounds hold, a < b <= " + detail::str(opts.twogen_max),
                     "formula");
}

// Closed-form factorization counts vs exhaustive factorization search.
inline void suite_barlow(RunReport& rep, const VerifyOptions& opts) {
  detail::SweepResult sweep;
  for (int64_t a = 2; a <= opts.barlow_max; ++a) {
    for (int64_t b = a + 1; b <= opts.barlow_max; ++b) {
      if (std::gcd(a, b) != 1) continue;
      NumericalSemigroup s = NumericalSemigroup::from_generators({a, b});
      for (int64_t n = 0; n <= 3 * a * b; ++n) {
        ++sweep.cases;
        if (families::barlow_popoviciu(a, b, n) != s.factorization_count(n))
          sweep.fail("a=" + detail::str(a) + " b=" + detail::str(b) + " n=" + detail::str(n));
      }
    }
  }
  sweep.report_into(rep, "two-generator factorization counts, a < b <= " +
                             detail::str(opts.barlow_max) + ", n <= 3ab",
                    "brute-force");
}

// Nested sum vs member scan for every spec with bounded product, plus
// factorization-count invariance.
inline void suite_supersym(RunReport& rep, const VerifyOptions& opts) {
  detail::SweepResult r_ok, count_ok;
  for (const std::vector<int64_t>& factors : detail::coprime_tuples(opts.supersym_cap)) {
    families::SupersymmetricSpec spec = families::supersym_spec(factors);
    ++r_ok.cases;
    std::vector<int64_t> gens = spec.cofactors;
    std::sort(gens.begin(), gens.end());
    if (families::supersym_r(spec) != detail::member_scan_r(gens, spec.genus)) {
      std::ostringstream os;
      os << "factors";
      for (int64_t a : factors) os << " " << a;
      r_ok.fail(os.str());
    }
  }
  r_ok.report_into(rep, "nested sum = member scan, product <= " +
                            detail::str(opts.supersym_cap),
                   "brute-force");

  for (const std::vector<int64_t>& factors : detail::coprime_tuples(opts.factor_count_cap)) {
    families::SupersymmetricSpec spec = families::supersym_spec(factors);
    std::vector<int64_t> gens = spec.cofactors;
    std::sort(gens.begin(), gens.end());
    std::vector<char> member(spec.genus + 1, 0);
    member[0] = 1;
    for (int64_t x = 1; x <= spec.genus; ++x)
      for (int64_t gen : gens) {
        if (gen > x) break;
        if (member[x - gen]) {
          member[x] = 1;
          break;
        }
      }
    for (int64_t x = 1; x <= spec.genus; ++x) {
      if (!member[x]) continue;
      ++count_ok.cases;
      if (families::supersym_factor_count(spec, x) != detail::count_factorizations(gens, x)) {
        std::ostringstream os;
        os << "x=" << x << " in";
        for (int64_t a : factors) os << " " << a;
        count_ok.fail(os.str());
      }
    }
  }
  count_ok.report_into(rep, "binomial factorization count = exhaustive count, product <= " +
                                detail::str(opts.factor_count_cap),
                       "brute-force");
}

// Interval formula vs member scan; the x = 1 column matches the
// two-generator formula for <a, a+1>.
inline void suite_interval(RunReport& rep, const VerifyOptions& opts) {
  detail::SweepResult scan_ok, twogen_col, ordinary_col;
  for (int64_t a = 2; a <= opts.interval_max; ++a) {
    for (int64_t x = 1; x <= a - 1; ++x) {
      families::IntervalSpec spec = families::interval_spec(a, x);
      std::vector<int64_t> gens;
      for (int64_t v = a; v <= a + x; ++v) gens.push_back(v);
      if (x < a - 1) {
        ++scan_ok.cases;
        if (families::interval_r(a, x) != detail::member_scan_r(gens, spec.genus))
          scan_ok.fail("a=" + detail::str(a) + " x=" + detail::str(x));
      } else {
        ++ordinary_col.cases;
        if (families::interval_r(a, x) != 0 || spec.n != 1 || spec.genus != a - 1)
          ordinary_col.fail("a=" + detail::str(a));
      }
    }
    if (a >= 3) {
      ++twogen_col.cases;
      if (families::interval_r(a, 1) != families::two_gen_r(a, a + 1))
        twogen_col.fail("a=" + detail::str(a));
    }
  }
  scan_ok.report_into(rep, "interval closed form = member scan, a <= " +
                               detail::str(opts.interval_max),
                      "brute-force");
  twogen_col.report_into(rep, "interval x=1 column = two-generator formula", "cross-check");
  ordinary_col.report_into(rep, "x = a-1 gives the ordinary semigroup and 0", "formula");
}

// Lattice systems vs printed quasipolynomials and vs the difference
// identity behind the depth-1 count.
inline void suite_polytopes(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = opts.polytope_max;
  lattice::LinearSystem outer4 = families::depth2_outer_system();
  lattice::LinearSystem slice4 = families::depth2_slice_system();
  lattice::LinearSystem outer2 = families::depth1_outer_system();
  lattice::LinearSystem slice2 = families::depth1_slice_system();
  detail::SweepResult outer4_ok, slice4_ok, planar_ok, diff_ok;
  for (int64_t g = 2; g <= gmax; ++g) {
    ++outer4_ok.cases;
    if (lattice::count_system(outer4, g) != families::depth2_outer_reference(g))
      outer4_ok.fail("g=" + detail::str(g));
  }
  for (int64_t g = 1; g <= gmax; ++g) {
    ++slice4_ok.cases;
    if (lattice::count_system(slice4, g) != families::depth2_slice_reference(g))
      slice4_ok.fail("g=" + detail::str(g));
    int64_t n1 = lattice::count_system(outer2, g);
    int64_t n2 = lattice::count_system(slice2, g);
    ++planar_ok.cases;
    if (n1 != families::depth1_outer_reference(g) || n2 != families::depth1_slice_reference(g))
      planar_ok.fail("g=" + detail::str(g));
    ++diff_ok.cases;
    if (n1 - n2 != families::count_depth1(g)) diff_ok.fail("g=" + detail::str(g));
  }
  outer4_ok.report_into(rep, "4-variable system = printed quasipolynomial, g <= " +
                                 detail::str(gmax),
                        "formula");
  slice4_ok.report_into(rep, "sliced system = period-6 quasipolynomial, g <= " +
                                 detail::str(gmax),
                        "formula");
  planar_ok.report_into(rep, "planar systems = closed forms, g <= " + detail::str(gmax),
                        "formula");
  diff_ok.report_into(rep, "planar difference = depth-1 count, g <= " + detail::str(gmax),
                      "cross-check");
  rep.check("4-variable system at g = 6", "22",
            detail::str(lattice::count_system(outer4, 6)), "formula");
}

// Regression probe: depth counts never shrink when the genus grows.
// An empirical check at desk scale, not a proof.
inline void suite_monotone(RunReport& rep, const VerifyOptions& opts) {
  int64_t gmax = std::min<int64_t>(opts.max_genus, 13);
  detail::SweepResult sweep;
  std::vector<int64_t> prev = ord::depth_census(1, opts.enum_opts);
  for (int64_t g = 1; g <= gmax; ++g) {
    std::vector<int64_t> next = ord::depth_census(g + 1, opts.enum_opts);
    for (size_t r = 1; r < prev.size(); ++r) {
      ++sweep.cases;
      int64_t after = r < next.size() ? next[r] : 0;
      if (prev[r] > after) sweep.fail("g=" + detail::str(g) + " r=" + detail::str(r));
    }
    prev = std::move(next);
  }
  sweep.report_into(rep, "depth counts nondecreasing in g, g <= " + detail::str(gmax),
                    "brute-force");
}

// Trend probe for three-factor specs: r/g stays within 0.02 of 1/6.
inline void suite_dim3(RunReport& rep, const VerifyOptions&) {
  detail::SweepResult sweep;
  for (int64_t a = 40; a <= 60; ++a)
    for (int64_t b = a + 1; b <= 60; ++b)
      for (int64_t c = b + 1; c <= 60; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        ++sweep.cases;
        Rational diff = (families::dim3_ratio(a, b, c) - Rational(1, 6)).abs();
        if (!(diff < Rational(1, 50)))
          sweep.fail("a=" + detail::str(a) + " b=" + detail::str(b) + " c=" + detail::str(c));
      }
  sweep.report_into(rep, "|r/g - 1/6| < 0.02 for coprime triples in [40,60]", "cross-check");
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roundtrip", "counts",   "tree",     "formulas", "fit",      "twogen",
      "barlow",    "supersym", "interval", "polytopes", "monotone", "dim3"};
  return names;
}

inline void run_suite(const std::string& name, RunReport& rep, const VerifyOptions& opts) {
  if (name == "roundtrip")
    suite_roundtrip(rep, opts);
  else if (name == "counts")
    suite_counts(rep, opts);
  else if (name == "tree")
    suite_tree(rep, opts);
  else if (name == "formulas")
    suite_formulas(rep, opts);
  else if (name == "fit")
    suite_fit(rep, opts);
  else if (name == "twogen")
    suite_twogen(rep, opts);
  else if (name == "barlow")
    suite_barlow(rep, opts);
  else if (name == "supersym")
    suite_supersym(rep, opts);
  else if (name == "interval")
    suite_interval(rep, opts);
  else if (name == "polytopes")
    suite_polytopes(rep, opts);
  else if (name == "monotone")
    suite_monotone(rep, opts);
  else if (name == "dim3")
    suite_dim3(rep, opts);
  else
    throw BadRange("unknown verification suite: " + name);
}

}  // namespace nsemi::verify
