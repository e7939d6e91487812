#pragma once

// Implementations of the CLI subcommands.  Each returns a RunReport; the
// binary renders it as text or JSON and exits nonzero iff a check failed.

#include <fstream>
#include <iostream>
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
#include "nsemi/tree_export.hpp"
#include "nsemi/verify.hpp"

namespace nsemi {

namespace detail {

inline std::string int_list_str(const std::vector<int64_t>& xs) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

// r(S) by repeatedly applying the transform until the ordinary semigroup.
inline int64_t transform_steps_to_root(NumericalSemigroup s) {
  int64_t steps = 0;
  while (!s.is_full_monoid() && !s.is_ordinary()) {
    s = ord::ordinarization_transform(s);
    ++steps;
  }
  return steps;
}

}  // namespace detail

// Build the tree of one genus and export it as DOT or JSON.
inline RunReport cmd_tree(int64_t genus, const std::string& format, const std::string& out_path,
                          const ord::EnumOptions& opts, std::ostream* fallback = &std::cout) {
  RunReport rep;
  rep.command = "tree";
  rep.param("genus", std::to_string(genus));
  rep.param("format", format);
  Stopwatch sw;
  ord::OrdinarizationTree tree = ord::build_ordinarization_tree(genus, opts);
  rep.timing("build", sw.ms());

  std::string text;
  Stopwatch sw2;
  if (format == "dot")
    text = tree_to_dot(tree);
  else if (format == "json")
    text = tree_to_json_text(tree);
  else
    throw BadRange("tree: format must be dot or json");
  rep.timing("serialize", sw2.ms());

  if (!out_path.empty()) {
    detail::write_text_file(out_path, text);
    rep.result("written", out_path);
  } else if (fallback) {
    *fallback << text;
  }
  rep.result("nodes", std::to_string(tree.nodes.size()));
  rep.result("levels", detail::int_list_str(tree.level_counts));
  rep.check("level counts = depth census", detail::int_list_str(ord::depth_census(genus, opts)),
            detail::int_list_str(tree.level_counts), "cross-check");
  return rep;
}

// Depth counts of one genus, by brute force, closed form, or both.
inline RunReport cmd_count(int64_t genus, std::optional<int64_t> depth, const std::string& method,
                           const ord::EnumOptions& opts) {
  if (method != "brute" && method != "formula" && method != "both")
    throw BadRange("count: method must be brute, formula or both");
  RunReport rep;
  rep.command = "count";
  rep.param("genus", std::to_string(genus));
  rep.param("method", method);
  if (depth) rep.param("depth", std::to_string(*depth));

  auto formula_level = [&](int64_t r) -> std::optional<int64_t> {
    if (r == 0) return genus >= 0 ? 1 : 0;
    if (r == 1) return families::count_depth1(genus);
    if (r == 2) return families::count_depth2(genus);
    return std::nullopt;
  };

  Stopwatch sw;
  if (method == "formula") {
    if (!depth) throw BadRange("count: method=formula needs --depth 0, 1 or 2");
    std::optional<int64_t> v = formula_level(*depth);
    if (!v) throw BadRange("count: no closed form for depth " + std::to_string(*depth));
    rep.result("count", std::to_string(*v));
  } else {
    std::vector<int64_t> census = ord::depth_census(genus, opts);
    auto level = [&](int64_t r) { return r < (int64_t)census.size() ? census[r] : 0; };
    if (depth) {
      int64_t brute = ord::depth_count_brute(genus, *depth, opts);
      rep.result("count", std::to_string(brute));
      rep.check("tuple enumeration = depth census", std::to_string(level(*depth)),
                std::to_string(brute), "brute-force");
      if (method == "both") {
        std::optional<int64_t> v = formula_level(*depth);
        if (!v) throw BadRange("count: no closed form for depth " + std::to_string(*depth));
        rep.check("closed form = brute force", std::to_string(brute), std::to_string(*v),
                  "formula");
      }
    } else {
      rep.result("levels", detail::int_list_str(census));
      rep.result("total", std::to_string(std::accumulate(census.begin(), census.end(),
                                                         (int64_t)0)));
      if (method == "both" && genus >= 1) {
        rep.check("depth-1 closed form", std::to_string(level(1)),
                  std::to_string(families::count_depth1(genus)), "formula");
        rep.check("depth-2 closed form", std::to_string(level(2)),
                  std::to_string(families::count_depth2(genus)), "formula");
      }
    }
  }
  rep.timing("count", sw.ms());
  return rep;
}

// Invariants of one semigroup given by generators.
inline RunReport cmd_ord(const std::vector<int64_t>& gens) {
  RunReport rep;
  rep.command = "ord";
  rep.param("generators", detail::int_list_str(gens));
  Stopwatch sw;
  NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  GeneratorData gd = s.minimal_generators();
  int64_t r = ord::ordinarization_number(s);
  rep.result("label", s.label());
  rep.result("genus", std::to_string(s.genus()));
  rep.result("frobenius", std::to_string(s.frobenius()));
  rep.result("multiplicity", std::to_string(s.multiplicity()));
  rep.result("embedding_dimension", std::to_string(gd.minimal.size()));
  rep.result("effectivity", std::to_string(gd.effective.size()));
  rep.result("effective_generators", detail::int_list_str(gd.effective));
  rep.result("ordinarization_number", std::to_string(r));
  rep.check("member count = transform steps to the root", std::to_string(r),
            std::to_string(detail::transform_steps_to_root(s)), "cross-check");
  rep.timing("total", sw.ms());
  return rep;
}

inline RunReport cmd_family_twogen(int64_t a, int64_t b) {
  RunReport rep;
  rep.command = "family twogen";
  rep.param("a", std::to_string(a));
  rep.param("b", std::to_string(b));
  int64_t g = families::two_gen_genus(a, b);
  int64_t r = families::two_gen_r(a, b);
  rep.result("frobenius", std::to_string(families::two_gen_frobenius(a, b)));
  rep.result("genus", std::to_string(g));
  rep.result("ordinarization_number", std::to_string(r));
  families::RationalBounds bd = families::two_gen_r_bounds(a, b);
  rep.result("bounds", "[" + bd.lower.str() + ", " + bd.upper.str() + "]");
  rep.check("simplex count - 1", std::to_string(r),
            std::to_string(lattice::count_right_simplex({{a, b}, g}) - 1), "cross-check");
  rep.check("member scan", std::to_string(r),
            std::to_string(verify::detail::member_scan_r({a, b}, g)), "brute-force");
  rep.check_true("bounds sandwich the value",
                 Rational(r) >= bd.lower && Rational(r) <= bd.upper, "formula",
                 std::to_string(r) + " outside [" + bd.lower.str() + ", " + bd.upper.str() + "]");
  return rep;
}

inline RunReport cmd_family_supersym(const std::vector<int64_t>& factors) {
  RunReport rep;
  rep.command = "family supersym";
  rep.param("factors", detail::int_list_str(factors));
  Stopwatch sw;
  families::SupersymmetricSpec spec = families::supersym_spec(factors);
  int64_t r = families::supersym_r(spec);
  rep.result("product", std::to_string(spec.product));
  rep.result("generators", detail::int_list_str(spec.cofactors));
  rep.result("frobenius", std::to_string(spec.frobenius));
  rep.result("genus", std::to_string(spec.genus));
  rep.result("ordinarization_number", std::to_string(r));
  rep.check("factorizations of the product", std::to_string(spec.factors.size()),
            std::to_string(families::supersym_factor_count(spec, spec.product)), "formula");
  if (spec.genus <= 5'000'000) {
    std::vector<int64_t> gens = spec.cofactors;
    std::sort(gens.begin(), gens.end());
    rep.check("member scan", std::to_string(r),
              std::to_string(verify::detail::member_scan_r(gens, spec.genus)), "brute-force");
  }
  rep.timing("total", sw.ms());
  return rep;
}

inline RunReport cmd_family_interval(int64_t a, int64_t x) {
  RunReport rep;
  rep.command = "family interval";
  rep.param("a", std::to_string(a));
  rep.param("x", std::to_string(x));
  families::IntervalSpec spec = families::interval_spec(a, x);
  int64_t r = families::interval_r(a, x);
  rep.result("n", std::to_string(spec.n));
  rep.result("frobenius", std::to_string(spec.frobenius));
  rep.result("genus", std::to_string(spec.genus));
  rep.result("ordinarization_number", std::to_string(r));
  std::vector<int64_t> gens;
  for (int64_t v = a; v <= a + x; ++v) gens.push_back(v);
  rep.check("member scan", std::to_string(r),
            std::to_string(verify::detail::member_scan_r(gens, spec.genus)), "brute-force");
  if (x == 1 && a >= 3)
    rep.check("two-generator formula for <a,a+1>", std::to_string(r),
              std::to_string(families::two_gen_r(a, a + 1)), "formula");
  return rep;
}

// Fit a quasipolynomial from exact samples and compare to the stored table.
inline RunReport cmd_fit(const std::string& family, int64_t a, int64_t g_lo, int64_t g_hi) {
  RunReport rep;
  rep.command = "fit " + family;
  Stopwatch sw;
  if (family == "ng1" || family == "ng2") {
    int64_t r = family == "ng1" ? 1 : 2;
    int64_t degree = family == "ng1" ? 2 : 4;
    int64_t period = family == "ng1" ? 2 : 12;
    if (g_lo < 1) g_lo = 1;
    if (g_hi <= 0) g_hi = family == "ng1" ? 12 : 72;
    rep.param("range", "[" + std::to_string(g_lo) + ", " + std::to_string(g_hi) + "]");
    rep.param("degree", std::to_string(degree));
    rep.param("period", std::to_string(period));
    lattice::SampleSet samples;
    for (int64_t g = g_lo; g <= g_hi; ++g) samples.push_back({g, ord::depth_count_tuples(g, r)});
    lattice::QuasiPolynomial fit = lattice::fit_quasipolynomial(samples, degree, period);
    rep.result("fitted", lattice::quasipolynomial_str(fit));
    lattice::QuasiPolynomial ref = family == "ng1" ? families::depth1_quasipolynomial()
                                                   : families::depth2_quasipolynomial();
    rep.check("fitted table = stored table", lattice::quasipolynomial_str(ref),
              lattice::quasipolynomial_str(fit), "cross-check");
    if (family == "ng2") {
      bool lead_ok = true;
      for (const auto& row : fit.rows) lead_ok = lead_ok && row.back() == Rational(11, 384);
      rep.check_true("leading coefficient 11/384 on every residue", lead_ok, "formula");
    }
  } else if (family == "qa") {
    if (a < 2) throw BadRange("fit qa: need a >= 2");
    rep.param("a", std::to_string(a));
    families::TwoGenTable fitted = families::fit_two_gen_table(a);
    rep.result("period", std::to_string(fitted.poly.period));
    std::ostringstream rows;
    for (int64_t rho = 0; rho < fitted.poly.period; ++rho) {
      if (!fitted.applicable[rho]) continue;
      rows << "b=" << rho << " (mod " << fitted.poly.period << "): "
           << fitted.poly.rows[rho][1] << "*b + " << fitted.poly.rows[rho][0] << "; ";
    }
    rep.result("rows", rows.str());
    if (a <= 6) {
      families::TwoGenTable ref = families::two_gen_reference_table(a);
      rep.check_true("fitted table = stored table",
                     fitted.poly.rows == ref.poly.rows && fitted.applicable == ref.applicable,
                     "cross-check");
    }
    verify::detail::SweepResult repro;
    for (int64_t b = a + 1; b <= a + 6 * fitted.poly.period; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++repro.cases;
      if (lattice::eval_count(fitted.poly, b) != families::two_gen_r(a, b))
        repro.fail("b=" + std::to_string(b));
    }
    repro.report_into(rep, "fitted table reproduces the floor sum", "formula");
  } else {
    throw BadRange("fit: family must be ng1, ng2 or qa");
  }
  rep.timing("fit", sw.ms());
  return rep;
}

// Run the selected property suites (all by default).
inline RunReport cmd_verify(int64_t max_genus, std::vector<std::string> suites,
                            const ord::EnumOptions& opts) {
  RunReport rep;
  rep.command = "verify";
  verify::VerifyOptions vopts;
  vopts.max_genus = max_genus;
  vopts.enum_opts = opts;
  if (suites.empty()) suites = verify::suite_names();
  rep.param("max_genus", std::to_string(max_genus));
  std::ostringstream names;
  for (size_t i = 0; i < suites.size(); ++i) names << (i ? "," : "") << suites[i];
  rep.param("suites", names.str());
  for (const std::string& name : suites) {
    Stopwatch sw;
    verify::run_suite(name, rep, vopts);
    rep.timing(name, sw.ms());
  }
  return rep;
}

// Count integer points of a serialized system at one grading value.
inline RunReport cmd_count_system(const std::string& path, int64_t g) {
  RunReport rep;
  rep.command = "count-system";
  rep.param("file", path);
  rep.param("g", std::to_string(g));
  std::ifstream in(path);
  if (!in) throw IoError("cannot open system file: " + path);
  lattice::LinearSystem sys = lattice::parse_linear_system(in);
  rep.result("dimension", std::to_string(sys.dim));
  rep.result("rows", std::to_string(sys.rows.size()));
  Stopwatch sw;
  rep.result("count", std::to_string(lattice::count_system(sys, g)));
  rep.timing("count", sw.ms());
  return rep;
}

// Wall-clock timings for the heavy operations at one genus.
inline RunReport cmd_bench(int64_t genus, const ord::EnumOptions& opts) {
  RunReport rep;
  rep.command = "bench";
  rep.param("genus", std::to_string(genus));
  Stopwatch sw1;
  std::vector<int64_t> census = ord::depth_census(genus, opts);
  rep.timing("depth_census", sw1.ms());
  rep.result("total", std::to_string(std::accumulate(census.begin(), census.end(), (int64_t)0)));
  Stopwatch sw2;
  int64_t tuples = ord::depth_count_tuples(genus, 2);
  rep.timing("depth_count_tuples(r=2)", sw2.ms());
  rep.result("depth_2", std::to_string(tuples));
  int64_t tree_g = std::min<int64_t>(genus, 12);
  Stopwatch sw3;
  ord::OrdinarizationTree tree = ord::build_ordinarization_tree(tree_g, opts);
  rep.timing("build_tree(g=" + std::to_string(tree_g) + ")", sw3.ms());
  rep.result("tree_nodes", std::to_string(tree.nodes.size()));
  Stopwatch sw4;
  int64_t points = lattice::count_system(families::depth2_outer_system(), 40);
  rep.timing("count_system(4 vars, g=40)", sw4.ms());
  rep.result("points_g40", std::to_string(points));
  return rep;
}

}  // namespace nsemi
