#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/special_cases.hpp"

using namespace relipoly;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

RkVector random_rk(std::mt19937_64& rng, int e) {
  RkVector r(e);
  for (int k = 0; k <= e; ++k) r[k] = std::uniform_int_distribution<long>(0, 1000000)(rng) % (binomial(e, k) + 1).convert_to<long>();
  return r;
}

}  // namespace

TEST_CASE("table conversion R -> N and back") {
  const RkVector r(7, ints({0, 0, 0, 3, 12, 17, 7, 1}));
  const NkVector n = rk_to_nk(r);
  CHECK(n == NkVector(7, ints({0, 0, 0, 3, 0, -1, -3, 2})));
  CHECK(nk_to_rk(n) == r);
}

TEST_CASE("P_k is R_k over the binomial") {
  const RkVector r(7, ints({0, 0, 0, 3, 12, 17, 7, 1}));
  const PkVector p = rk_to_pk(r);
  CHECK(p[3] == Rational(3, 35));
  CHECK(p[7] == 1);
  CHECK(pk_to_rk(p) == r);
}

TEST_CASE("R -> N matches expanding the polynomial") {
  std::mt19937_64 rng(1);
  for (int e = 0; e <= 20; ++e) {
    const RkVector r = random_rk(rng, e);
    CHECK(rk_to_nk(r).values == oracle::power_from_rk(r.values));
  }
}

TEST_CASE("round trips on random vectors") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int e = 1 + trial % 40;
    const RkVector r = random_rk(rng, e);
    CHECK(nk_to_rk(rk_to_nk(r)) == r);
    CHECK(pk_to_rk(rk_to_pk(r)) == r);
    NkVector n(e);
    for (int k = 0; k <= e; ++k) n[k] = std::uniform_int_distribution<long>(-50, 50)(rng);
    CHECK(rk_to_nk(nk_to_rk(n)) == n);
  }
}

TEST_CASE("the three bases evaluate to the same function") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int e : {1, 5, 12, 30, 59}) {
    const RkVector r = random_rk(rng, e);
    const NkVector n = rk_to_nk(r);
    const PkVector p = rk_to_pk(r);
    for (int i = 0; i < 40; ++i) {
      const double x = i < 2 ? double(i) : unit(rng);
      const double exact = to_double(oracle::horner(n.values, to_rational(x)));
      CHECK(std::abs(evaluate(r, x) - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
      CHECK(std::abs(evaluate(p, x) - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
      CHECK(evaluate_exact(r, to_rational(x)) == oracle::horner(n.values, to_rational(x)));
      CHECK(evaluate_exact(n, to_rational(x)) == evaluate_exact(p, to_rational(x)));
    }
  }
}

TEST_CASE("large edge counts evaluate in log space without overflow") {
  // 1 - (1 - x^4)^30 on 200 edges.
  const NkVector n = closed_form_disjoint(30, 4, 200);
  const RkVector r = nk_to_rk(n);
  const PkVector p = rk_to_pk(r);
  for (double x : {0.0, 0.1, 0.35, 0.5, 0.77, 0.99, 1.0}) {
    const double expect = 1.0 - std::pow(1.0 - std::pow(x, 4), 30);
    CHECK(evaluate(r, x) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(evaluate(p, x) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("power basis evaluation is compensated") {
  // Alternating coefficients of (1 - x)^40 cancel almost completely near 1.
  NkVector n(40);
  for (int k = 0; k <= 40; ++k) n[k] = (k % 2 ? -1 : 1) * binomial(40, k);
  CHECK(std::abs(evaluate(n, 0.5) - std::pow(0.5, 40)) < 1e-12);
}

TEST_CASE("truncated vectors convert but refuse evaluation") {
  NkVector t(24, ints({0, 0, 0, 0, 0, 0, 20, 0, 6, -84, 10}));
  t.complete_through = 10;
  const RkVector r = nk_to_rk(t);
  CHECK(r.complete_through == 10);
  CHECK(r[10] == 60670);
  CHECK(rk_to_nk(r).complete_through == 10);
  CHECK(rk_to_pk(r).complete_through == 10);
  CHECK_THROWS_AS(evaluate(t, 0.5), DomainError);
  CHECK_THROWS_AS(evaluate_exact(r, Rational(1, 2)), DomainError);
}

TEST_CASE("evaluation domain") {
  const NkVector n(3, ints({0, 0, 0, 1}));
  CHECK(evaluate(n, 0.5) == 0.125);
  CHECK_THROWS_AS(evaluate(n, -0.01), DomainError);
  CHECK_THROWS_AS(evaluate(n, 1.5), DomainError);
  CHECK_THROWS_AS(evaluate(n, std::nan("")), DomainError);
  CHECK_THROWS_AS(evaluate_exact(n, Rational(3, 2)), DomainError);
}

TEST_CASE("coefficient sums") {
  const NkVector n(9, ints({0, 0, 0, 1, 2, 0, -1, -2, 0, 1}));
  CHECK(coefficient_sum(n) == 1);
  CHECK(coefficient_abs_sum(n) == 7);
  CHECK(evaluate_power(n.values, Rational(1)) == 1);
}

TEST_CASE("N_k^(l) table accessors") {
  NklTable t;
  t.edge_count = 7;
  t.motif_count = 4;
  t.entries = {{{1, 3}, 3}, {{1, 5}, 1}, {{2, 5}, 2}, {{2, 6}, 3}, {{2, 7}, 1}, {{3, 7}, 4}, {{4, 7}, 1}};
  CHECK(t.at(2, 6) == 3);
  CHECK(t.at(3, 3) == 0);
  CHECK(t.max_l() == 4);
  CHECK(t.row_sum(2) == 6);
}
