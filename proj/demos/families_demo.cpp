// Ordinarization numbers of the closed-form families, next to a plain member
// scan so the formulas can be eyeballed.

#include <iomanip>
#include <iostream>

#include "nsemi/families.hpp"
#include "nsemi/ordinarization.hpp"
#include "nsemi/semigroup.hpp"

using nsemi::NumericalSemigroup;
namespace fam = nsemi::families;

int main() {
  std::cout << "two generators <a,b>\n";
  for (auto [a, b] : {std::pair<int64_t, int64_t>{2, 15}, {3, 7}, {5, 7}, {8, 13}}) {
    NumericalSemigroup s = NumericalSemigroup::from_generators({a, b});
    fam::RationalBounds bd = fam::two_gen_r_bounds(a, b);
    std::cout << "  " << s.label() << ": g=" << std::setw(3) << s.genus()
              << "  r=" << std::setw(3) << fam::two_gen_r(a, b) << "  scan "
              << nsemi::ord::ordinarization_number(s) << "  bounds [" << bd.lower.str() << ", "
              << bd.upper.str() << "]\n";
  }

  std::cout << "supersymmetric (pairwise coprime factors)\n";
  for (auto factors : {std::initializer_list<int64_t>{2, 3, 5}, {3, 4, 5}, {3, 5, 7, 11}}) {
    fam::SupersymmetricSpec spec = fam::supersym_spec(factors);
    std::cout << "  A=" << spec.product << ": F=" << spec.frobenius << "  g=" << spec.genus
              << "  r=" << fam::supersym_r(spec) << "  factorizations(A)="
              << fam::supersym_factor_count(spec, spec.product) << "\n";
  }

  std::cout << "intervals <a..a+x>\n";
  for (auto [a, x] : {std::pair<int64_t, int64_t>{4, 1}, {10, 3}, {12, 5}, {30, 7}}) {
    fam::IntervalSpec spec = fam::interval_spec(a, x);
    std::cout << "  <" << a << ".." << a + x << ">: F=" << spec.frobenius
              << "  g=" << spec.genus << "  r=" << fam::interval_r(a, x) << "\n";
  }
  return 0;
}
