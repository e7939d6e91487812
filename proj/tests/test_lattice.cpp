#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "nsemi/lattice.hpp"

using namespace nsemi::lattice;

#ifndef NSEMI_DATA_DIR
#error "NSEMI_DATA_DIR must point at the data/ directory"
#endif

namespace {

LinearSystem load(const std::string& name) {
  std::ifstream in(std::string(NSEMI_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return parse_linear_system(in);
}

// Reference count: enumerate the full box [0, cap]^dim and test every row.
int64_t box_count(const LinearSystem& sys, int64_t g, int64_t cap) {
  std::vector<int64_t> x(sys.dim, 0);
  int64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& row : sys.rows) {
      int64_t lhs = 0;
      for (int64_t i = 0; i < sys.dim; ++i) lhs += row.coeffs[i] * x[i];
      int64_t rhs = row.constant - row.g_coeff * g;
      if (row.equality ? lhs != rhs : lhs < rhs) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int64_t i = 0;
    while (i < sys.dim && x[i] == cap) x[i++] = 0;
    if (i == sys.dim) return count;
    ++x[i];
  }
}

}  // namespace

TEST_CASE("right simplex counts") {
  CHECK(count_right_simplex({{3, 7}, 6}) == 3);    // (0,0),(1,0),(2,0)
  CHECK(count_right_simplex({{2, 15}, 7}) == 4);   // x <= 3, y = 0
  CHECK(count_right_simplex({{3, 7}, 0}) == 1);    // origin only
  CHECK(count_right_simplex({{3, 7}, -1}) == 0);
  CHECK(count_right_simplex({{1}, 5}) == 6);
  CHECK(count_right_simplex({{5, 3, 2}, 10}) == 20);

  CHECK_THROWS_AS(count_right_simplex({{3, 0}, 5}), nsemi::BadRange);
  CHECK_THROWS_AS(count_right_simplex({{-1}, 5}), nsemi::BadRange);
}

TEST_CASE("right simplex counts agree with box enumeration") {
  const std::vector<std::vector<int64_t>> weight_sets = {
      {1}, {2}, {2, 3}, {3, 7}, {1, 1, 1}, {2, 3, 5}, {4, 4, 7, 9}};
  for (const auto& w : weight_sets) {
    for (int64_t bound : {0, 1, 5, 17, 40}) {
      LinearSystem sys;
      sys.dim = (int64_t)w.size();
      LinearRow row;  // -sum w_i x_i >= -bound
      for (int64_t wi : w) row.coeffs.push_back(-wi);
      row.constant = -bound;
      sys.rows.push_back(row);
      CHECK(count_right_simplex({w, bound}) == box_count(sys, 0, bound));
    }
  }
}

TEST_CASE("parsing a linear system") {
  LinearSystem sys = parse_linear_system(
      "# leading comment\n"
      "\n"
      "ge 1 -2 0 5   # trailing comment\n"
      "eq 0 3 -1 0\n");
  CHECK(sys.dim == 2);
  REQUIRE(sys.rows.size() == 2);
  CHECK_FALSE(sys.rows[0].equality);
  CHECK(sys.rows[0].coeffs == std::vector<int64_t>{1, -2});
  CHECK(sys.rows[0].g_coeff == 0);
  CHECK(sys.rows[0].constant == 5);
  CHECK(sys.rows[1].equality);
  CHECK(sys.rows[1].coeffs == std::vector<int64_t>{0, 3});
  CHECK(sys.rows[1].g_coeff == -1);
  CHECK(sys.rows[1].constant == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_linear_system(""), nsemi::IoError);
  CHECK_THROWS_AS(parse_linear_system("# comments only\n"), nsemi::IoError);
  CHECK_THROWS_AS(parse_linear_system("le 1 0 0\n"), nsemi::IoError);
  CHECK_THROWS_AS(parse_linear_system("ge 1\n"), nsemi::IoError);
  CHECK_THROWS_AS(parse_linear_system("ge 1 x 0\n"), nsemi::IoError);
  // second row changes the dimension
  CHECK_THROWS_AS(parse_linear_system("ge 1 0 0\nge 1 1 0 0\n"), nsemi::IoError);
}

TEST_CASE("serialize round trip") {
  for (const char* name :
       {"pstar.sys", "ord1_p1.sys", "ord1_p2.sys", "example.sys", "infeasible.sys"}) {
    LinearSystem sys = load(name);
    LinearSystem again = parse_linear_system(serialize_linear_system(sys));
    REQUIRE(again.dim == sys.dim);
    REQUIRE(again.rows.size() == sys.rows.size());
    for (size_t i = 0; i < sys.rows.size(); ++i) {
      CHECK(again.rows[i].equality == sys.rows[i].equality);
      CHECK(again.rows[i].coeffs == sys.rows[i].coeffs);
      CHECK(again.rows[i].g_coeff == sys.rows[i].g_coeff);
      CHECK(again.rows[i].constant == sys.rows[i].constant);
    }
  }
}

TEST_CASE("data files have the expected shape") {
  LinearSystem pstar = load("pstar.sys");
  CHECK(pstar.dim == 4);
  CHECK(pstar.rows.size() == 7);

  LinearSystem p1 = load("ord1_p1.sys");
  CHECK(p1.dim == 2);
  CHECK(p1.rows.size() == 5);

  LinearSystem p2 = load("ord1_p2.sys");
  CHECK(p2.dim == 2);
  REQUIRE(p2.rows.size() == 6);
  CHECK(p2.rows.back().equality);

  LinearSystem example = load("example.sys");
  CHECK(example.dim == 4);
  REQUIRE(example.rows.size() == 8);
  CHECK(example.rows[6].equality);
  CHECK(example.rows[7].equality);
}

TEST_CASE("count_system basics") {
  // x <= g
  CHECK(count_system(parse_linear_system("ge -1 1 0\n"), 7) == 8);
  CHECK(count_system(parse_linear_system("ge -1 1 0\n"), 0) == 1);
  // x1 + x2 = g
  LinearSystem diag = parse_linear_system("eq 1 1 -1 0\n");
  for (int64_t g = 0; g <= 12; ++g) CHECK(count_system(diag, g) == g + 1);

  CHECK(count_system(load("infeasible.sys"), 0) == 0);
  CHECK(count_system(load("infeasible.sys"), 50) == 0);
}

TEST_CASE("count_system failure modes") {
  CHECK_THROWS_AS(count_system(parse_linear_system("ge 1 0 0\n"), 3), nsemi::UnboundedSystem);
  // x1 >= x2 leaves both variables free upward
  CHECK_THROWS_AS(count_system(parse_linear_system("ge 1 -1 0 0\n"), 3),
                  nsemi::UnboundedSystem);
  // tight budget
  CHECK_THROWS_AS(count_system(load("pstar.sys"), 30, 10), nsemi::ResourceLimit);
}

TEST_CASE("count_system matches box enumeration on the data files") {
  for (const char* name : {"ord1_p1.sys", "ord1_p2.sys"}) {
    LinearSystem sys = load(name);
    for (int64_t g = 0; g <= 14; ++g)
      CHECK(count_system(sys, g) == box_count(sys, g, 2 * g + 3));
  }
  for (const char* name : {"pstar.sys", "example.sys"}) {
    LinearSystem sys = load(name);
    for (int64_t g = 0; g <= 9; ++g)
      CHECK(count_system(sys, g) == box_count(sys, g, 2 * g + 3));
  }
}

TEST_CASE("four-variable count at genus six") {
  CHECK(count_system(load("pstar.sys"), 6) == 22);
}
