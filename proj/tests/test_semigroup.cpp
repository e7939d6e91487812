#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "nsemi/semigroup.hpp"
#include "oracles.hpp"

using nsemi::NumericalSemigroup;

TEST_CASE("construction from generators") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 15});
  CHECK(s.genus() == 7);
  CHECK(s.frobenius() == 13);
  CHECK(s.multiplicity() == 2);
  CHECK(s.conductor() == 14);

  NumericalSemigroup t = NumericalSemigroup::from_generators({3, 7});
  CHECK(t.genus() == 6);
  CHECK(t.frobenius() == 11);

  NumericalSemigroup full = NumericalSemigroup::from_generators({1});
  CHECK(full.is_full_monoid());
  CHECK(full.genus() == 0);
  CHECK(full.frobenius() == -1);
  CHECK(full.multiplicity() == 1);

  CHECK(NumericalSemigroup::from_generators({15, 2}) == s);
  CHECK(NumericalSemigroup::from_generators({2, 15, 17, 2}) == s);

  CHECK_THROWS_AS(NumericalSemigroup::from_generators(std::vector<int64_t>{}),
                  nsemi::EmptyInput);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), nsemi::BadRange);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), nsemi::GcdError);
}

TEST_CASE("construction from gaps") {
  CHECK(NumericalSemigroup::from_gaps(std::vector<int64_t>{}).is_full_monoid());
  CHECK(NumericalSemigroup::from_gaps({1, 2, 3, 4}) == NumericalSemigroup::ordinary(4));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 4}).genus() == 3);
  CHECK(NumericalSemigroup::from_gaps({4, 2, 1}) ==
        NumericalSemigroup::from_gaps({1, 2, 4}));

  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), nsemi::NotClosed);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({1, 1}), nsemi::BadRange);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0, 1}), nsemi::BadRange);
}

TEST_CASE("ordinary semigroups") {
  CHECK(NumericalSemigroup::ordinary(0).is_full_monoid());
  NumericalSemigroup s7 = NumericalSemigroup::ordinary(7);
  CHECK(s7.genus() == 7);
  CHECK(s7.frobenius() == 7);
  CHECK(s7.multiplicity() == 8);
  CHECK(s7.is_ordinary());
  CHECK_FALSE(NumericalSemigroup::from_generators({2, 15}).is_ordinary());

  CHECK(NumericalSemigroup::ordinary(4).minimal_generators().minimal ==
        std::vector<int64_t>{5, 6, 7, 8, 9});
}

TEST_CASE("membership and gaps") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({3, 7});
  CHECK(s.contains(6));
  CHECK_FALSE(s.contains(11));
  CHECK(s.contains(0));
  CHECK(s.contains(12));
  CHECK_FALSE(s.contains(-3));

  CHECK(NumericalSemigroup::from_generators({2, 15}).gaps() ==
        std::vector<int64_t>{1, 3, 5, 7, 9, 11, 13});
  CHECK(NumericalSemigroup::from_generators({4, 5}).gaps() ==
        std::vector<int64_t>{1, 2, 3, 6, 7, 11});
  CHECK(NumericalSemigroup::from_generators({1}).gaps().empty());
}

TEST_CASE("minimal and effective generators") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({7, 8, 10, 11, 12, 13});
  nsemi::GeneratorData gd = s.minimal_generators();
  CHECK(gd.minimal == std::vector<int64_t>{7, 8, 10, 11, 12, 13});

  NumericalSemigroup t2 = NumericalSemigroup::from_kunz(5, {2, 2, 1, 1});
  CHECK(t2.frobenius() == 7);
  nsemi::GeneratorData t2gd = t2.minimal_generators();
  CHECK(t2gd.effective == std::vector<int64_t>{8, 9, 11, 12});

  for (int64_t g = 1; g <= 6; ++g) {
    nsemi::GeneratorData og = NumericalSemigroup::ordinary(g).minimal_generators();
    CHECK((int64_t)og.minimal.size() == g + 1);
    CHECK(og.minimal == og.effective);
    CHECK(og.minimal.front() == g + 1);
    CHECK(og.minimal.back() == 2 * g + 1);
  }

  CHECK(NumericalSemigroup::from_generators({1}).minimal_generators().minimal ==
        std::vector<int64_t>{1});
}

TEST_CASE("apery sets and kunz coordinates") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 15});
  nsemi::AperyData ap = s.apery_set(2);
  CHECK(ap.apery == std::vector<int64_t>{0, 15});

  NumericalSemigroup t2 = NumericalSemigroup::from_kunz(5, {2, 2, 1, 1});
  nsemi::AperyData t2ap = t2.apery_set(5);
  CHECK(t2ap.apery == std::vector<int64_t>{0, 11, 12, 8, 9});
  CHECK(t2ap.kunz == std::vector<int64_t>{2, 2, 1, 1});

  CHECK(NumericalSemigroup::from_generators({1}).apery_set(1).apery ==
        std::vector<int64_t>{0});
  CHECK_THROWS_AS(s.apery_set(3), nsemi::NotMember);

  NumericalSemigroup u = NumericalSemigroup::from_generators({3, 7});
  for (int64_t n : {3, 7, 9, 10}) {
    nsemi::AperyData a = u.apery_set(n);
    CHECK((int64_t)a.apery.size() == n);
    CHECK(a.apery[0] == 0);
    for (int64_t i = 0; i < n; ++i) {
      CHECK(a.apery[i] % n == i);
      CHECK(u.contains(a.apery[i]));
      CHECK_FALSE(u.contains(a.apery[i] - n));
    }
    CHECK(u.frobenius() == *std::max_element(a.apery.begin(), a.apery.end()) - n);
  }
}

TEST_CASE("kunz coordinate round trips") {
  for (int64_t g = 1; g <= 8; ++g) {
    auto two = NumericalSemigroup::from_kunz(2, {g});
    CHECK(two == NumericalSemigroup::from_generators({2, 2 * g + 1}));
  }
  CHECK(NumericalSemigroup::from_kunz(3, {1, 2}) ==
        NumericalSemigroup::from_generators({3, 4}));

  CHECK_THROWS_AS(NumericalSemigroup::from_kunz(3, {1, 3}), nsemi::NotClosed);
  CHECK_THROWS_AS(NumericalSemigroup::from_kunz(3, {0, 1}), nsemi::BadRange);
  CHECK_THROWS_AS(NumericalSemigroup::from_kunz(1, std::vector<int64_t>{}), nsemi::BadRange);
}

TEST_CASE("factorizations") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 15});
  auto f30 = s.factorizations(30);
  REQUIRE(f30.size() == 2);
  CHECK(f30[0] == nsemi::FactorizationVector{0, 2});
  CHECK(f30[1] == nsemi::FactorizationVector{15, 0});

  CHECK(s.factorizations(0) == std::vector<nsemi::FactorizationVector>{{0, 0}});
  CHECK(s.factorizations(13).empty());

  for (auto [a, b] : {std::pair<int64_t, int64_t>{3, 5}, {4, 7}, {5, 6}}) {
    NumericalSemigroup t = NumericalSemigroup::from_generators({a, b});
    for (int64_t n = 0; n < a * b; ++n) CHECK(t.factorization_count(n) <= 1);
    CHECK(t.factorization_count(a * b) == 2);
  }
}

TEST_CASE("first element with several factorizations") {
  CHECK(NumericalSemigroup::from_generators({3, 7}).first_multi_factorization(30) == 21);
  CHECK(NumericalSemigroup::from_generators({2, 15}).first_multi_factorization(29) ==
        std::nullopt);
  CHECK(NumericalSemigroup::from_generators({2, 15}).first_multi_factorization(30) == 30);
  // the full monoid's minimal generating set is {1}, so every value has
  // exactly one factorization
  CHECK(NumericalSemigroup::from_generators({1}).first_multi_factorization(10) ==
        std::nullopt);
}

TEST_CASE("round trips over every small semigroup") {
  for (int64_t g = 0; g <= 8; ++g) {
    for (const auto& gaps : oracle::gap_sets(g)) {
      NumericalSemigroup s = NumericalSemigroup::from_gaps(gaps);
      CHECK(s.genus() == g);
      CHECK(s.gaps() == gaps);
      CHECK(NumericalSemigroup::from_generators(s.minimal_generators().minimal) == s);
      if (g >= 1) {
        CHECK(s.frobenius() <= 2 * g - 1);
        CHECK(s.frobenius() == gaps.back());
        nsemi::AperyData ap = s.apery_set(s.multiplicity());
        for (int64_t k : ap.kunz) CHECK(k >= 1);
        CHECK(NumericalSemigroup::from_kunz(s.multiplicity(), ap.kunz) == s);
      }
    }
  }
}

TEST_CASE("labels and counters") {
  NumericalSemigroup s = NumericalSemigroup::from_generators({2, 15});
  CHECK(s.label() == "<2,15>");
  CHECK(s.gap_string() == "{1,3,5,7,9,11,13}");
  CHECK(s.members_up_to_genus() == 3);
  CHECK(s.count_members(0, 14) == 7);
  CHECK(s.count_members(14, 20) == 6);
  CHECK(NumericalSemigroup::from_generators({1}).members_up_to_genus() == 0);
}
