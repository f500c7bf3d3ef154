#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("partitions normalize and validate") {
  CHECK(Partition({1, 3, 0, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(Partition({2, -1}), InputError);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(Partition({0, 0}), InputError);
}

TEST_CASE("conjugate partition examples") {
  CHECK(conjugate_partition(Partition{4}) == Partition{1, 1, 1, 1});
  CHECK(conjugate_partition(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate_partition(Partition{4, 3, 1}) == Partition{3, 2, 2, 1});
}

TEST_CASE("conjugation is an involution on partitions up to 12") {
  std::size_t count = 0;
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate_partition(conjugate_partition(p)) == p);
      CHECK(conjugate_partition(p).size() == n);
      ++count;
    }
  CHECK(count == 271); // sum of p(n), n = 1..12
}

TEST_CASE("rank sequence examples") {
  const JnfShape a({{2, 1}, {4, 3, 1}});
  const auto r = rank_sequence(a, 1);
  CHECK(r.ranks == std::vector<int>{8, 6, 4, 3});
  CHECK(r.stable == 3);
  CHECK(rank_sequence(shape({{1, 1, 1, 1}}), 0).ranks == std::vector<int>{0});
  CHECK(rank_sequence(shape({{4}}), 0).ranks == std::vector<int>{3, 2, 1, 0});
  CHECK_THROWS_AS(rank_sequence(shape({{4}}), 1), std::out_of_range);
}

TEST_CASE("rank sequences decrease weakly and stabilize at n - multiplicity") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const JnfShape s = random_shape(rng, uniform(rng, 1, 10));
    for (std::size_t l = 0; l < s.labels(); ++l) {
      const auto r = rank_sequence(s, l);
      CHECK(r.ranks.size() == static_cast<std::size_t>(s.at(l).largest()));
      CHECK(std::is_sorted(r.ranks.rbegin(), r.ranks.rend()));
      CHECK(r.ranks.back() == s.size() - s.at(l).size());
      CHECK(r.stable == s.size() - s.at(l).size());
      for (int v : r.ranks) CHECK(v >= r.stable);
      CHECK(r.at(s.at(l).largest() + 5) == r.stable);
    }
  }
}

TEST_CASE("r and d examples") {
  CHECK(r_of(shape({{2, 1}, {4, 3, 1}})) == 8);
  CHECK(r_of(shape({{4}})) == 3);
  CHECK(r_of(shape({{1, 1, 1, 1}})) == 0);
  CHECK(d_of(shape({{4}})) == 12);
  CHECK(d_of(shape({{1, 1}, {2}})) == 10);
  CHECK(d_of(shape({{1, 1}})) == 0);
}

TEST_CASE("d matches the commutant of a Jordan matrix, n <= 5") {
  // n = 6 is covered by the acceptance suite
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : partitions_of(n)) {
      const JnfShape single({p});
      CHECK(d_of(single) == n * n - static_cast<int>(commutant_dimension_oracle(jordan_matrix(single))));
    }
  const JnfShape mixed({{2, 1}, {1, 1}});
  CHECK(d_of(mixed) == 25 - static_cast<int>(commutant_dimension_oracle(jordan_matrix(mixed))));
}

TEST_CASE("subordination examples") {
  const auto z = av("0");
  const ClassSpec diag = cls({{z, {1, 1, 1, 1}}}), block = cls({{z, {4}}});
  const auto r = is_subordinate(diag, block);
  CHECK(r.subordinate);
  CHECK(r.strict);
  CHECK_FALSE(is_subordinate(block, diag).subordinate);

  const ClassSpec c22 = cls({{z, {2, 2}}}), c31 = cls({{z, {3, 1}}});
  CHECK(is_subordinate(c22, c31).subordinate);
  CHECK_FALSE(is_subordinate(c31, c22).subordinate);
  CHECK(is_subordinate(c31, c31).subordinate);
  CHECK_FALSE(is_subordinate(c31, c31).strict);

  const ClassSpec other = cls({{av("1"), {3, 1}}});
  const auto mismatch = is_subordinate(other, c31);
  CHECK_FALSE(mismatch.subordinate);
  CHECK_FALSE(mismatch.reason.empty());
}

namespace {

ClassSpec random_class_with(Rng& rng, const std::vector<int>& mults) {
  ClassSpec c;
  for (std::size_t k = 0; k < mults.size(); ++k)
    c.slots.push_back({av(std::to_string(k)), random_partition(rng, mults[k])});
  return c;
}

} // namespace

TEST_CASE("subordination is a partial order on classes with fixed eigenvalue data") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform(rng, 1, 8);
    std::vector<int> mults;
    for (int left = n; left > 0;) {
      mults.push_back(uniform(rng, 1, left));
      left -= mults.back();
    }
    const auto a = random_class_with(rng, mults), b = random_class_with(rng, mults), c = random_class_with(rng, mults);
    CHECK(is_subordinate(a, a).subordinate);
    if (is_subordinate(a, b).subordinate && is_subordinate(b, a).subordinate) CHECK(a == b);
    if (is_subordinate(a, b).subordinate && is_subordinate(b, c).subordinate) CHECK(is_subordinate(a, c).subordinate);
  }
}

TEST_CASE("the semisimple class lies below every class with the same eigenvalue data") {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 1, 10);
    std::vector<int> mults;
    for (int left = n; left > 0;) {
      mults.push_back(uniform(rng, 1, left));
      left -= mults.back();
    }
    const auto c = random_class_with(rng, mults);
    ClassSpec ss;
    for (const auto& s : c.slots) ss.slots.push_back({s.value, Partition(std::vector<int>(s.multiplicity(), 1))});
    CHECK(is_subordinate(ss, c).subordinate);
  }
}

TEST_CASE("dominance order on partitions") {
  CHECK(dominated_by(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominated_by(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominated_by(Partition{1, 1, 1}, Partition{3}));
  CHECK(repeat_parts(Partition{2, 1}, 2) == Partition{2, 2, 1, 1});
}
