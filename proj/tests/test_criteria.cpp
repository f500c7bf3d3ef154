#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("rigidity report of the n=4 triple") {
  const auto r = rigidity_report(n4_shapes());
  CHECK(r.kappa == 2);
  CHECK(r.sum_d == 30);
  CHECK(r.alpha);
  CHECK(r.beta);
  CHECK_FALSE(r.omega);
  CHECK(r.r == std::vector<int>{3, 2, 2});
  CHECK(r.sum_r == 7);
}

TEST_CASE("rigidity report of scalar classes") {
  const std::vector<JnfShape> s(3, shape({{1, 1}}));
  const auto r = rigidity_report(s);
  CHECK(r.d == std::vector<int>{0, 0, 0});
  CHECK(r.kappa == 8);
  CHECK_FALSE(r.alpha);
  CHECK_FALSE(r.beta);
  CHECK(r.beta_failures == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rigidity report of the n=9 triple") {
  const auto r = rigidity_report(n9_shapes());
  CHECK(r.kappa == 2);
  CHECK(r.r == std::vector<int>{5, 5, 5});
  CHECK(r.sum_r == 15);
  CHECK_FALSE(r.omega);
  int sum_d = 0;
  for (const auto& s : n9_shapes())
    sum_d += 81 - static_cast<int>(commutant_dimension_oracle(jordan_matrix(s)));
  CHECK(sum_d == 160);
}

TEST_CASE("rigidity report rejects mixed sizes") {
  CHECK_THROWS_AS(rigidity_report({shape({{2}}), shape({{3}})}), InputError);
}

TEST_CASE("one Psi step on the n=4 triple") {
  const auto step = psi_reduce(n4_shapes());
  CHECK(step.n1 == 3);
  CHECK(step.shapes == std::vector<JnfShape>{shape({{3}}), shape({{1}, {2}}), shape({{1}, {1, 1}})});
}

TEST_CASE("Psi tie at n=3: default takes the first tied label, the other branch is reachable") {
  const std::vector<JnfShape> level3{shape({{3}}), shape({{1}, {2}}), shape({{1}, {1, 1}})};
  CHECK(psi_candidates(level3)[1] == std::vector<std::size_t>{0, 1});
  const auto first = psi_reduce(level3);
  CHECK(first.n1 == 2);
  CHECK(first.shapes == std::vector<JnfShape>{shape({{2}}), shape({{2}}), shape({{1}, {1}})});
  const auto second = psi_reduce(level3, std::vector<std::size_t>{0, 1, 1});
  CHECK(second.shapes == std::vector<JnfShape>{shape({{2}}), shape({{1}, {1}}), shape({{1}, {1}})});
  CHECK_THROWS_AS(psi_reduce(level3, std::vector<std::size_t>{0, 1, 0}), PsiUndefined);
}

TEST_CASE("one Psi step on the n=9 triple") {
  const auto step = psi_reduce(n9_shapes());
  CHECK(step.n1 == 6);
  CHECK(step.shapes ==
        std::vector<JnfShape>{shape({{2, 1}, {1, 1, 1}}), shape({{2, 1}, {1, 1, 1}}), shape({{2, 1}, {2, 1}})});
}

TEST_CASE("Psi preconditions are reported") {
  CHECK_THROWS_AS(psi_reduce({shape({{1}}), shape({{1}})}), PsiUndefined);
  CHECK_THROWS_AS(psi_reduce(std::vector<JnfShape>(3, shape({{1, 1}}))), PsiUndefined);
  // omega holds: four classes with distinct eigenvalues, n=2
  CHECK_THROWS_AS(psi_reduce(std::vector<JnfShape>(4, shape({{1}, {1}}))), PsiUndefined);
}

TEST_CASE("goodness of the worked examples") {
  const auto n4 = is_good(n4_shapes());
  CHECK(n4.good);
  CHECK(n4.trace.status == PsiStatus::reached_n_equals_1);
  REQUIRE(n4.trace.levels.size() == 4);
  CHECK(n4.trace.levels[0].n == 4);
  CHECK(n4.trace.levels[1].n == 3);
  CHECK(n4.trace.levels[2].n == 2);
  CHECK(n4.trace.levels[3].n == 1);

  const auto n9 = is_good(n9_shapes());
  CHECK(n9.good);
  std::vector<int> sizes;
  for (const auto& l : n9.trace.levels) sizes.push_back(l.n);
  CHECK(sizes == std::vector<int>{9, 6, 4, 2, 1});

  const auto scalar = is_good(std::vector<JnfShape>(3, shape({{1, 1}})));
  CHECK_FALSE(scalar.good);
  CHECK(scalar.trace.status == PsiStatus::alpha_failed);

  CHECK(is_good({shape({{1}}), shape({{1}})}).good);
}

TEST_CASE("exhaustive tie exploration agrees on the worked examples") {
  GoodOptions ex{true};
  const auto n4 = is_good(n4_shapes(), ex);
  CHECK(n4.good);
  CHECK(n4.branches_explored >= 4);
  CHECK(is_good(n9_shapes(), ex).good);
}

TEST_CASE("Psi invariants on random reducible tuples") {
  Rng rng(2024);
  int reducible = 0;
  for (int t = 0; t < 4000 && reducible < 300; ++t) {
    const int n = uniform(rng, 2, 10);
    const auto shapes = random_shapes(rng, n, uniform(rng, 2, 5), true);
    const auto rep = rigidity_report(shapes);
    if (rep.omega) CHECK(rep.sum_d > 2L * n * n - 2);
    if (!rep.alpha || !rep.beta || rep.omega || rep.sum_r - n < 1) continue;
    ++reducible;
    const auto step = psi_reduce(shapes);
    CHECK(step.n1 == rep.sum_r - n);
    CHECK(common_size(step.shapes) == step.n1);
    CHECK(rigidity_report(step.shapes).kappa == rep.kappa);

    const auto plain = is_good(shapes);
    for (const auto& level : plain.trace.levels) {
      const auto lr = rigidity_report(level.shapes);
      CHECK(lr.kappa == rep.kappa);
      if (lr.omega) CHECK(lr.sum_d > 2L * lr.n * lr.n - 2);
    }
    for (std::size_t i = 1; i < plain.trace.levels.size(); ++i)
      CHECK(plain.trace.levels[i].n < plain.trace.levels[i - 1].n);
    const auto ex = is_good(shapes, GoodOptions{true});
    CHECK(ex.good == plain.good);
  }
  CHECK(reducible >= 100);
}
