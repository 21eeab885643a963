#pragma once

#include "relipoly/graph.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/rules.hpp"

#include <cstdint>
#include <vector>

namespace relipoly {

/// Largest edge count for exhaustive subgraph enumeration.
inline constexpr int kBruteForceEdgeCap = 25;

/// R_k by visiting all 2^E edge subsets. The reference every other exact
/// pipeline is checked against.
RkVector brute_force_rk(const Graph& g, const RuleSpec& rule, int threads = 1);

/// Per-size Monte Carlo estimate of P_k from uniform random k-subsets.
struct McEstimate {
  int edge_count = 0;
  int samples_per_k = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> accepted;
  std::vector<double> p_hat;
  std::vector<double> std_err;  // sqrt(p_hat (1 - p_hat) / n)
};

/// Samples are drawn in fixed blocks of kMonteCarloBlock; block b of size k
/// uses Philox stream (seed, k, b), so the result depends only on the seed
/// and not on the number of threads.
inline constexpr int kMonteCarloBlock = 4096;

McEstimate monte_carlo_pk(const Graph& g, const RuleSpec& rule, int samples_per_k, std::uint64_t seed,
                          int threads = 1);

struct CurvePoint {
  double x;
  double r;
};

/// R(x) on the uniform grid x_i = i / (grid_points - 1). Exact vectors are
/// evaluated in rational arithmetic and rounded once; Monte Carlo estimates
/// use the binomial form with log-space weights.
std::vector<CurvePoint> reliability_curve(const RkVector& r, int grid_points = 201);
std::vector<CurvePoint> reliability_curve(const NkVector& n, int grid_points = 201);
std::vector<CurvePoint> reliability_curve(const PkVector& p, int grid_points = 201);
std::vector<CurvePoint> reliability_curve(const McEstimate& mc, int grid_points = 201);

}  // namespace relipoly
