#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsp/families.hpp"
#include "gsp/l1.hpp"
#include "gsp/trees.hpp"
#include "test_support.hpp"

using namespace gsp;

TEST_CASE("is_tree") {
  CHECK(is_tree(generate(FamilySpec::path(5))));
  CHECK_FALSE(is_tree(generate(FamilySpec::cycle(5))));
  CHECK(is_tree(generate(FamilySpec::star(6))));
  CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));  // right edge count, disconnected
}

TEST_CASE("center edges of paths") {
  for (int n = 2; n <= 16; n += 2) {
    auto r = center_edges(generate(FamilySpec::path(n)));
    CHECK(r.delta == 0);
    CHECK(r.center_edges.size() == 1);
    CHECK(r.center_edges[0] == std::pair<int, int>{n / 2 - 1, n / 2});
    CHECK(r.component_sizes[0] == std::pair<int, int>{n / 2, n / 2});
  }
  for (int n = 3; n <= 15; n += 2) {
    auto r = center_edges(generate(FamilySpec::path(n)));
    CHECK(r.delta == 1);
    CHECK(r.center_edges.size() == 2);
  }
}

TEST_CASE("center edges of stars") {
  for (int n = 3; n <= 10; ++n) {
    auto r = center_edges(generate(FamilySpec::star(n)));
    CHECK(r.delta == n - 2);
    CHECK(r.center_edges.size() == static_cast<size_t>(n - 1));
    CHECK(substar_check(generate(FamilySpec::star(n)), r.center_edges));
  }
}

TEST_CASE("b_tree closed values") {
  CHECK(b_tree(generate(FamilySpec::path(6))) == Rational(1, 3));
  CHECK(b_tree(generate(FamilySpec::path(5))) == Rational(5, 12));
  CHECK(b_tree(generate(FamilySpec::star(5))) == Rational(5, 8));
  CHECK_THROWS_AS(b_tree(generate(FamilySpec::cycle(4))), std::invalid_argument);
}

TEST_CASE("b_tree equals exhaustive b on random trees") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);  // up to 16
    Graph t = testsupport::random_tree(n, rng);
    auto exact = b_exact(t);
    CHECK(b_tree(t) == exact.b);
    // the exact witness removes a single tree edge
    CHECK(exact.sparsest.boundary_size == 1);
  }
}

TEST_CASE("b_tree equals exhaustive b on every path, star, and broom up to 16") {
  for (int n = 2; n <= 16; ++n) {
    CHECK(b_tree(generate(FamilySpec::path(n))) == b_exact(generate(FamilySpec::path(n))).b);
    CHECK(b_tree(generate(FamilySpec::star(n))) == b_exact(generate(FamilySpec::star(n))).b);
  }
  for (int n = 3; n <= 16; ++n)
    for (int ell = 2; ell < n; ++ell) {
      Graph broom = generate(FamilySpec::broom(ell, n));
      CHECK(b_tree(broom) == b_exact(broom).b);
    }
}

TEST_CASE("substar_check") {
  Graph p5 = generate(FamilySpec::path(5));
  CHECK(substar_check(p5, {{1, 2}}));
  CHECK(substar_check(p5, {{1, 2}, {2, 3}}));
  CHECK_FALSE(substar_check(p5, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(substar_check(p5, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(substar_check(p5, {}), std::invalid_argument);
}

TEST_CASE("center edges always form a substar") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 99);  // up to 100
    Graph t = testsupport::random_tree(n, rng);
    auto r = center_edges(t);
    CHECK(substar_check(t, r.center_edges));
    // every listed edge achieves the minimal imbalance
    for (auto [su, sv] : r.component_sizes) {
      CHECK(std::abs(su - sv) == r.delta);
      CHECK(su + sv == n);
    }
    auto [su, sv] = r.component_sizes[0];
    CHECK(r.b == Rational(1, 2) * (Rational(1, su) + Rational(1, sv)));
  }
}
