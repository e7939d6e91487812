// Recovers the depth-1 and depth-2 counting tables from raw enumeration and
// prints them; the depth-2 fit needs samples up to genus 72 (degree 4,
// period 12, plus validation points).

#include <iostream>

#include "nsemi/families.hpp"
#include "nsemi/ordinarization.hpp"
#include "nsemi/quasipoly.hpp"

namespace lat = nsemi::lattice;

int main() {
  lat::SampleSet d1, d2;
  for (int64_t g = 1; g <= 12; ++g) d1.push_back({g, nsemi::ord::depth_count_tuples(g, 1)});
  for (int64_t g = 1; g <= 72; ++g) d2.push_back({g, nsemi::ord::depth_count_tuples(g, 2)});

  lat::QuasiPolynomial q1 = lat::fit_quasipolynomial(d1, 2, 2);
  std::cout << "depth-1 counts (coefficients ascending):\n"
            << lat::quasipolynomial_str(q1);
  std::cout << "matches stored table: "
            << (q1 == nsemi::families::depth1_quasipolynomial() ? "yes" : "NO") << "\n\n";

  lat::QuasiPolynomial q2 = lat::fit_quasipolynomial(d2, 4, 12);
  std::cout << "depth-2 counts (coefficients ascending):\n"
            << lat::quasipolynomial_str(q2);
  std::cout << "matches stored table: "
            << (q2 == nsemi::families::depth2_quasipolynomial() ? "yes" : "NO") << "\n";
  return 0;
}
