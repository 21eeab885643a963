#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"

using namespace relipoly;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

}  // namespace

TEST_CASE("brute force matches the reference") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = 2 + trial % 7;
    const Graph g = oracle::random_graph(rng, v, 1 + trial % 13);
    for (const RuleSpec& rule : oracle::builtin_rules(v)) {
      const RkVector r = brute_force_rk(g, rule, 1 + trial % 3);
      CHECK(r.values == oracle::rk(g, rule));
      CHECK(r.edge_count == g.edge_count());
    }
  }
}

TEST_CASE("brute force across chunk boundaries is thread independent") {
  const Graph g = grid_graph(3, 4);  // 17 edges, two chunks
  const RuleSpec rule = RuleSpec::two_terminal(0, 11);
  CHECK(brute_force_rk(g, rule, 1) == brute_force_rk(g, rule, 4));
  CHECK_THROWS_AS(brute_force_rk(grid_graph(4, 5), rule), CapacityError);
}

TEST_CASE("P_k is nondecreasing and the curve is monotone for coherent rules") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const int v = 3 + trial % 5;
    const Graph g = oracle::random_graph(rng, v, 2 + trial % 11);
    for (const RuleSpec& rule : oracle::builtin_rules(v)) {
      const RkVector r = brute_force_rk(g, rule);
      const PkVector p = rk_to_pk(r);
      for (int k = 1; k <= g.edge_count(); ++k) CHECK(p[k - 1] <= p[k]);
      Rational prev = -1;
      for (int i = 0; i <= 64; ++i) {
        const Rational value = evaluate_exact(r, Rational(i, 64));
        CHECK(value >= prev);
        CHECK(value >= 0);
        CHECK(value <= 1);
        prev = value;
      }
    }
  }
}

TEST_CASE("Monte Carlo is within four standard errors of the exact P_k") {
  const Graph toy = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/toy.edges");
  const std::vector<std::pair<Graph, RuleSpec>> cases = {
      {cycle(3), RuleSpec::all_terminal()},
      {cycle(4), RuleSpec::all_terminal()},
      {cycle(4), RuleSpec::two_terminal(0, 2)},
      {toy, RuleSpec::two_terminal(0, 3)},
      {toy, RuleSpec::ear_alpha(Rational(1, 3))},
  };
  for (const auto& [g, rule] : cases) {
    const PkVector exact = rk_to_pk(brute_force_rk(g, rule));
    const McEstimate mc = monte_carlo_pk(g, rule, 20000, 2024);
    REQUIRE(mc.p_hat.size() == static_cast<std::size_t>(g.edge_count() + 1));
    for (int k = 0; k <= g.edge_count(); ++k) {
      const double p = to_double(exact[k]);
      const double se = std::sqrt(p * (1 - p) / mc.samples_per_k);
      CAPTURE(k);
      if (se == 0.0)
        CHECK(mc.p_hat[k] == p);
      else
        CHECK(std::abs(mc.p_hat[k] - p) <= 4 * se);
    }
  }
}

TEST_CASE("Monte Carlo depends on the seed but not the thread count") {
  const Graph g = grid_graph(3, 3);
  const RuleSpec rule = RuleSpec::all_terminal();
  const McEstimate a = monte_carlo_pk(g, rule, 10000, 77, 1);
  const McEstimate b = monte_carlo_pk(g, rule, 10000, 77, 3);
  const McEstimate c = monte_carlo_pk(g, rule, 10000, 78, 1);
  CHECK(a.accepted == b.accepted);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.std_err == b.std_err);
  CHECK(a.accepted != c.accepted);
  CHECK(a.seed == 77);
  CHECK(a.samples_per_k == 10000);
  // Sample counts that are not a multiple of the block size.
  CHECK(monte_carlo_pk(g, rule, 4097, 5, 1).accepted == monte_carlo_pk(g, rule, 4097, 5, 2).accepted);
}

TEST_CASE("Monte Carlo works beyond the exact caps") {
  const Graph g = grid_graph(8, 8);  // 112 edges
  const McEstimate mc = monte_carlo_pk(g, RuleSpec::two_terminal(0, 63), 500, 1);
  CHECK(mc.p_hat.front() == 0.0);
  CHECK(mc.p_hat.back() == 1.0);
  // Past the 128-edge bitmask width as well.
  const McEstimate big = monte_carlo_pk(grid_graph(10, 10), RuleSpec::all_terminal(), 10, 1);
  CHECK(big.edge_count == 180);
  CHECK(big.p_hat[98] == 0.0);
  CHECK(big.p_hat[180] == 1.0);
}

TEST_CASE("reliability curves") {
  const Graph tri = cycle(3);
  const RkVector r = brute_force_rk(tri, RuleSpec::all_terminal());
  const auto curve = reliability_curve(r);
  REQUIRE(curve.size() == 201);
  CHECK(curve.front().x == 0.0);
  CHECK(curve.back().x == 1.0);
  CHECK(curve[100].x == 0.5);
  CHECK(curve[100].r == 0.5);
  CHECK(curve.back().r == 1.0);
  const auto n_curve = reliability_curve(rk_to_nk(r), 11);
  const auto p_curve = reliability_curve(rk_to_pk(r), 11);
  for (std::size_t i = 0; i < n_curve.size(); ++i) CHECK(n_curve[i].r == p_curve[i].r);

  const McEstimate mc = monte_carlo_pk(tri, RuleSpec::all_terminal(), 4096, 3);
  const auto mc_curve = reliability_curve(mc, 201);
  for (std::size_t i = 0; i < curve.size(); ++i) CHECK(std::abs(mc_curve[i].r - curve[i].r) < 0.02);
  CHECK_THROWS_AS(reliability_curve(r, 1), DomainError);
}
