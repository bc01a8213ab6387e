#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsp/families.hpp"
#include "gsp/l1.hpp"
#include "gsp/mincut.hpp"
#include "test_support.hpp"

using namespace gsp;

TEST_CASE("min cut of simple families") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Graph t = testsupport::random_tree(3 + static_cast<int>(rng() % 10), rng);
    auto [mc, side] = min_cut(t);
    CHECK(mc == 1);
    CHECK(boundary_size(t, side) == 1);
  }

  auto [mc_c6, side_c6] = min_cut(generate(FamilySpec::cycle(6)));
  CHECK(mc_c6 == 2);
  CHECK(boundary_size(generate(FamilySpec::cycle(6)), side_c6) == 2);

  auto [mc_k4, side_k4] = min_cut(generate(FamilySpec::complete(4)));
  CHECK(mc_k4 == 3);
  CHECK(mc_k4 == testsupport::brute_force_min_cut(generate(FamilySpec::complete(4))));
}

TEST_CASE("min cut matches brute force on random graphs") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 9);
    Graph g = testsupport::random_connected_graph(n, 0.45, rng);
    auto [mc, side] = min_cut(g);
    CHECK(mc == testsupport::brute_force_min_cut(g));
    CHECK(boundary_size(g, side) == mc);
    CHECK(side.size() > 0);
    CHECK(side.size() < n);
  }
}

TEST_CASE("min cut guards") {
  CHECK_THROWS_AS(min_cut(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(min_cut(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("heuristic upper bound evaluates (n/2) rho at the min-cut side") {
  auto s5 = heuristic_b_upper(generate(FamilySpec::star(5)));
  CHECK(s5.bound == Rational(5, 8));  // a pendant edge: (5/2) * (1/4)

  auto k4 = heuristic_b_upper(generate(FamilySpec::complete(4)));
  CHECK(k4.bound == Rational(2));  // (4/2) * (3/3), equals b(K4)

  auto p6 = heuristic_b_upper(generate(FamilySpec::path(6)));
  Rational b6 = b_exact(generate(FamilySpec::path(6))).b;
  CHECK(b6 == Rational(1, 3));
  CHECK(p6.bound >= b6);  // any bridge is a minimum cut; only the middle one is tight
}

TEST_CASE("heuristic bound dominates exact b") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testsupport::random_connected_graph(4 + static_cast<int>(rng() % 8), 0.4, rng);
    auto ub = heuristic_b_upper(g);
    CHECK(b_exact(g).b <= ub.bound);
  }
}
