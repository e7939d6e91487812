#pragma once

// Quasipolynomials with exact rational coefficients: one polynomial row per
// residue class mod the period, plus interpolation from integer samples.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nsemi/errors.hpp"
#include "nsemi/rational.hpp"

namespace nsemi::lattice {

struct QuasiPolynomial {
  int64_t period = 1;
  int64_t degree = 0;
  // rows[rho][j] is the coefficient of t^j on residue class rho
  std::vector<std::vector<Rational>> rows;

  Rational eval(int64_t t) const {
    if (t < 0) throw BadRange("QuasiPolynomial::eval: negative argument");
    const auto& row = rows[t % period];
    Rational acc = 0;
    for (size_t j = row.size(); j-- > 0;) acc = acc * Rational(t) + row[j];
    return acc;
  }

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a.period == b.period && a.rows == b.rows;
  }
};

// Normalizes row lengths and trims trailing all-zero coefficient columns.
inline QuasiPolynomial make_quasipolynomial(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) throw BadRange("quasipolynomial needs at least one residue row");
  size_t width = 1;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (auto& r : rows) r.resize(width, Rational(0));
  while (width > 1) {
    bool all_zero = true;
    for (const auto& r : rows)
      if (r[width - 1] != Rational(0)) all_zero = false;
    if (!all_zero) break;
    for (auto& r : rows) r.pop_back();
    --width;
  }
  QuasiPolynomial q;
  q.period = (int64_t)rows.size();
  q.degree = (int64_t)width - 1;
  q.rows = std::move(rows);
  return q;
}

inline Rational eval_quasipolynomial(const QuasiPolynomial& q, int64_t t) { return q.eval(t); }

// Evaluation for counting quasipolynomials: the value must be a nonnegative
// integer, anything else signals a transcription or fitting bug.
inline int64_t eval_count(const QuasiPolynomial& q, int64_t t) {
  Rational v = q.eval(t);
  if (!v.is_integer() || v.num() < 0)
    throw IntegralityViolation("quasipolynomial value " + v.str() + " at t=" + std::to_string(t) +
                               " is not a nonnegative integer");
  return v.num();
}

// Exact Lagrange interpolation through d+1 points with distinct abscissas.
inline std::vector<Rational> fit_polynomial(const std::vector<std::pair<int64_t, Rational>>& pts,
                                            int64_t d) {
  if ((int64_t)pts.size() < d + 1)
    throw InsufficientSamples("fit_polynomial: need " + std::to_string(d + 1) + " points, have " +
                              std::to_string(pts.size()));
  std::vector<Rational> acc(d + 1, Rational(0));
  for (int64_t i = 0; i <= d; ++i) {
    // basis polynomial prod_{j != i} (x - t_j) / (t_i - t_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int64_t j = 0; j <= d; ++j) {
      if (j == i) continue;
      if (pts[j].first == pts[i].first)
        throw BadRange("fit_polynomial: duplicate abscissa " + std::to_string(pts[j].first));
      basis.push_back(Rational(0));
      for (size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - basis[k] * Rational(pts[j].first);
      basis[0] = basis[0] * Rational(-pts[j].first);
      denom = denom * Rational(pts[i].first - pts[j].first);
    }
    Rational scale = pts[i].second / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  return acc;
}

using SampleSet = std::vector<std::pair<int64_t, int64_t>>;  // (t, count)

struct QuasiFit {
  QuasiPolynomial poly;
  std::optional<int64_t> first_mismatch;  // largest sample t the fit fails on
  int64_t validated_from = 0;             // all samples with t >= this matched
};

// Fits one polynomial of degree d per residue class mod p, interpolating on
// the d+1 largest abscissas of each class and validating the rest.  This
// separates pre-periodic noise (mismatches only below some t) from a wrong
// (d, p) guess (mismatches everywhere).
inline QuasiFit try_fit_quasipolynomial(const SampleSet& samples, int64_t d, int64_t p) {
  if (p < 1 || d < 0) throw BadRange("try_fit_quasipolynomial: need p >= 1, d >= 0");
  std::vector<std::vector<std::pair<int64_t, Rational>>> by_res(p);
  for (auto [t, v] : samples) {
    if (t < 0) throw BadRange("try_fit_quasipolynomial: negative abscissa");
    by_res[t % p].push_back({t, Rational(v)});
  }
  QuasiFit out;
  std::vector<std::vector<Rational>> rows;
  int64_t min_t = std::numeric_limits<int64_t>::max();
  for (int64_t rho = 0; rho < p; ++rho) {
    auto& pts = by_res[rho];
    if ((int64_t)pts.size() < d + 2)
      throw InsufficientSamples("residue " + std::to_string(rho) + " mod " + std::to_string(p) +
                                " has " + std::to_string(pts.size()) + " samples, needs " +
                                std::to_string(d + 2));
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    min_t = std::min(min_t, pts.back().first);
    std::vector<std::pair<int64_t, Rational>> head(pts.begin(), pts.begin() + d + 1);
    std::vector<Rational> coeffs = fit_polynomial(head, d);
    for (size_t k = d + 1; k < pts.size(); ++k) {
      Rational have = 0;
      for (size_t j = coeffs.size(); j-- > 0;)
        have = have * Rational(pts[k].first) + coeffs[j];
      if (have != pts[k].second) {
        if (!out.first_mismatch || pts[k].first > *out.first_mismatch)
          out.first_mismatch = pts[k].first;
        break;  // pts are descending; the largest failing t in this class
      }
    }
    rows.push_back(std::move(coeffs));
  }
  out.poly = make_quasipolynomial(std::move(rows));
  out.validated_from = out.first_mismatch ? *out.first_mismatch + 1 : min_t;
  return out;
}

inline QuasiPolynomial fit_quasipolynomial(const SampleSet& samples, int64_t d, int64_t p) {
  QuasiFit fit = try_fit_quasipolynomial(samples, d, p);
  if (fit.first_mismatch)
    throw InconsistentSamples("sample at t=" + std::to_string(*fit.first_mismatch) +
                              " does not match the degree-" + std::to_string(d) + " period-" +
                              std::to_string(p) + " fit");
  return fit.poly;
}

inline std::string quasipolynomial_str(const QuasiPolynomial& q) {
  std::ostringstream os;
  for (int64_t rho = 0; rho < q.period; ++rho) {
    os << "t=" << rho << " (mod " << q.period << "):";
    for (size_t j = 0; j < q.rows[rho].size(); ++j) os << ' ' << q.rows[rho][j].str();
    os << '\n';
  }
  return os.str();
}

}  // namespace nsemi::lattice
