#pragma once

// Integer-point counting: weighted right simplices and small linear systems
// over nonnegative integer variables with a genus parameter.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "nsemi/errors.hpp"
#include "nsemi/rational.hpp"

namespace nsemi::lattice {

struct RightSimplex {
  std::vector<int64_t> weights;  // all positive
  int64_t bound = 0;
};

// #{x >= 0 integer : sum w_i x_i <= bound}
inline int64_t count_right_simplex(const RightSimplex& s) {
  for (int64_t w : s.weights)
    if (w <= 0) throw BadRange("count_right_simplex: weights must be positive");
  struct Rec {
    const std::vector<int64_t>& w;
    int64_t operator()(size_t i, int64_t bound) const {
      if (bound < 0) return 0;
      if (i == w.size()) return 1;
      if (i + 1 == w.size()) return bound / w[i] + 1;
      int64_t total = 0;
      for (int64_t k = 0; k * w[i] <= bound; ++k) total += (*this)(i + 1, bound - k * w[i]);
      return total;
    }
  };
  return Rec{s.weights}(0, s.bound);
}

// One constraint: sum coeffs[i]*x_i + g_coeff*g >= constant (or == when
// equality is set), over variables x_i >= 0.
struct LinearRow {
  bool equality = false;
  std::vector<int64_t> coeffs;
  int64_t g_coeff = 0;
  int64_t constant = 0;
};

struct LinearSystem {
  int64_t dim = 0;
  std::vector<LinearRow> rows;
};

// Text format, one row per line: ("ge"|"eq") c_1 ... c_d c_g k
// with '#' starting a comment.  The dimension is set by the first row.
inline LinearSystem parse_linear_system(std::istream& in) {
  LinearSystem sys;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    LinearRow row;
    if (kind == "eq")
      row.equality = true;
    else if (kind != "ge")
      throw IoError("line " + std::to_string(lineno) + ": row kind must be ge or eq");
    std::vector<int64_t> nums;
    int64_t v;
    while (ls >> v) nums.push_back(v);
    if (!ls.eof()) throw IoError("line " + std::to_string(lineno) + ": malformed integer");
    if (nums.size() < 2)
      throw IoError("line " + std::to_string(lineno) + ": need coefficients, g-coefficient, constant");
    if (sys.rows.empty())
      sys.dim = (int64_t)nums.size() - 2;
    else if ((int64_t)nums.size() - 2 != sys.dim)
      throw IoError("line " + std::to_string(lineno) + ": expected " + std::to_string(sys.dim) +
                    " variable coefficients");
    row.coeffs.assign(nums.begin(), nums.end() - 2);
    row.g_coeff = nums[nums.size() - 2];
    row.constant = nums.back();
    sys.rows.push_back(std::move(row));
  }
  if (sys.rows.empty()) throw IoError("empty linear system");
  return sys;
}

inline LinearSystem parse_linear_system(const std::string& text) {
  std::istringstream in(text);
  return parse_linear_system(in);
}

inline std::string serialize_linear_system(const LinearSystem& sys) {
  std::ostringstream os;
  for (const auto& row : sys.rows) {
    os << (row.equality ? "eq" : "ge");
    for (int64_t c : row.coeffs) os << ' ' << c;
    os << ' ' << row.g_coeff << ' ' << row.constant << '\n';
  }
  return os.str();
}

namespace detail {

constexpr int64_t kBoundSentinel = 1'000'000'000'000;  // divergence guard

struct Box {
  std::vector<int64_t> lo, hi;  // hi may be kBoundSentinel meaning "no bound yet"
};

// One round of interval propagation over all (in)equality rows; returns false
// when some variable's interval became empty.
inline bool propagate_once(const LinearSystem& sys, int64_t g, Box& box, bool* changed) {
  auto tighten_ge = [&](const std::vector<int64_t>& coeffs, int64_t rhs) -> bool {
    // sum coeffs[i] x_i >= rhs
    for (int64_t j = 0; j < sys.dim; ++j) {
      if (coeffs[j] == 0) continue;
      // maximum of the other terms
      int64_t other_max = 0;
      bool unbounded = false;
      for (int64_t i = 0; i < sys.dim; ++i) {
        if (i == j || coeffs[i] == 0) continue;
        if (coeffs[i] > 0) {
          if (box.hi[i] >= kBoundSentinel) {
            unbounded = true;
            break;
          }
          other_max = checked_add(other_max, checked_mul(coeffs[i], box.hi[i]));
        } else {
          other_max = checked_add(other_max, checked_mul(coeffs[i], box.lo[i]));
        }
      }
      if (unbounded) continue;
      int64_t need = checked_sub(rhs, other_max);  // coeffs[j] * x_j >= need
      if (coeffs[j] > 0) {
        int64_t lo = -floor_div(-need, coeffs[j]);  // ceil
        if (lo > box.lo[j]) {
          if (lo > detail::kBoundSentinel) throw UnboundedSystem("bounds diverged upward");
          box.lo[j] = lo;
          *changed = true;
        }
      } else {
        int64_t hi = floor_div(-need, -coeffs[j]);
        if (hi < box.hi[j]) {
          box.hi[j] = hi;
          *changed = true;
        }
      }
      if (box.lo[j] > box.hi[j]) return false;
    }
    return true;
  };

  for (const auto& row : sys.rows) {
    int64_t rhs = checked_sub(row.constant, checked_mul(row.g_coeff, g));
    if (!tighten_ge(row.coeffs, rhs)) return false;
    if (row.equality) {
      std::vector<int64_t> neg(row.coeffs);
      for (auto& c : neg) c = -c;
      if (!tighten_ge(neg, -rhs)) return false;
    }
  }
  return true;
}

inline int propagate(const LinearSystem& sys, int64_t g, Box& box) {
  // returns 1 = consistent, 0 = empty
  for (int round = 0; round < 4096; ++round) {
    bool changed = false;
    if (!propagate_once(sys, g, box, &changed)) return 0;
    if (!changed) return 1;
  }
  throw UnboundedSystem("interval propagation did not reach a fixpoint");
}

inline bool rows_satisfied(const LinearSystem& sys, int64_t g, const std::vector<int64_t>& x) {
  for (const auto& row : sys.rows) {
    int64_t lhs = 0;
    for (int64_t i = 0; i < sys.dim; ++i) lhs = checked_add(lhs, checked_mul(row.coeffs[i], x[i]));
    int64_t rhs = checked_sub(row.constant, checked_mul(row.g_coeff, g));
    if (row.equality ? lhs != rhs : lhs < rhs) return false;
  }
  return true;
}

inline void count_rec(const LinearSystem& sys, int64_t g, Box box, int64_t var, int64_t* count,
                      int64_t* budget) {
  if (propagate(sys, g, box) == 0) return;
  if (var == sys.dim) {
    if (rows_satisfied(sys, g, box.lo)) ++*count;
    return;
  }
  if (box.hi[var] >= kBoundSentinel)
    throw UnboundedSystem("variable " + std::to_string(var + 1) + " has no upper bound");
  for (int64_t v = box.lo[var]; v <= box.hi[var]; ++v) {
    if (--*budget < 0) throw ResourceLimit("count_system enumeration budget exhausted");
    Box child = box;
    child.lo[var] = child.hi[var] = v;
    count_rec(sys, g, std::move(child), var + 1, count, budget);
  }
}

}  // namespace detail

// #{x in Z^dim, x >= 0 : every row holds at genus parameter g}.  Interval
// propagation bounds every variable (UnboundedSystem otherwise), then the box
// is enumerated variable by variable in input order.
inline int64_t count_system(const LinearSystem& sys, int64_t g,
                            int64_t budget = 200'000'000) {
  if (sys.dim < 1) throw BadRange("count_system: system has no variables");
  detail::Box box;
  box.lo.assign(sys.dim, 0);
  box.hi.assign(sys.dim, detail::kBoundSentinel);
  int64_t count = 0;
  detail::count_rec(sys, g, std::move(box), 0, &count, &budget);
  return count;
}

}  // namespace nsemi::lattice
