#include "relipoly/estimate.hpp"

#include "relipoly/errors.hpp"
#include "relipoly/parallel.hpp"
#include "relipoly/random.hpp"

#include <cmath>
#include <numeric>

namespace relipoly {

RkVector brute_force_rk(const Graph& g, const RuleSpec& rule, int threads) {
  const int e = g.edge_count();
  if (e > kBruteForceEdgeCap)
    throw CapacityError("brute force supports at most " + std::to_string(kBruteForceEdgeCap) + " edges (graph has " +
                        std::to_string(e) + ")");
  rule.validate(g);

  const std::uint64_t total = std::uint64_t{1} << e;
  const int chunk_bits = std::min(e, 16);
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const int tasks = static_cast<int>(total / chunk);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(tasks));

  parallel_for(tasks, threads, [&](int t) {
    RuleEvaluator eval(rule, g);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(e) + 1, 0);
    const std::uint64_t begin = static_cast<std::uint64_t>(t) * chunk;
    for (std::uint64_t mask = begin; mask < begin + chunk; ++mask) {
      if (eval(EdgeSet::from_word(mask))) ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    partial[t] = std::move(counts);
  });

  RkVector r(e);
  for (const auto& counts : partial)
    for (int k = 0; k <= e; ++k) r[k] += counts[k];
  return r;
}

McEstimate monte_carlo_pk(const Graph& g, const RuleSpec& rule, int samples_per_k, std::uint64_t seed,
                          int threads) {
  if (samples_per_k < 1) throw DomainError("samples_per_k must be at least 1");
  rule.validate(g);
  const int e = g.edge_count();
  const int blocks = (samples_per_k + kMonteCarloBlock - 1) / kMonteCarloBlock;
  const int tasks = (e + 1) * blocks;
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(tasks), 0);

  parallel_for(tasks, threads, [&](int t) {
    const int k = t / blocks;
    const int b = t % blocks;
    const int n = std::min(kMonteCarloBlock, samples_per_k - b * kMonteCarloBlock);
    RuleEvaluator eval(rule, g);
    PhiloxStream rng(seed, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(b));
    std::vector<int> order(static_cast<std::size_t>(e));
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t hits = 0;
    for (int s = 0; s < n; ++s) {
      // Partial Fisher-Yates: the first k slots become a uniform k-subset.
      for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(e - i)));
        std::swap(order[i], order[j]);
      }
      hits += eval(std::span<const int>(order.data(), static_cast<std::size_t>(k)));
    }
    partial[t] = hits;
  });

  McEstimate mc;
  mc.edge_count = e;
  mc.samples_per_k = samples_per_k;
  mc.seed = seed;
  mc.accepted.assign(static_cast<std::size_t>(e) + 1, 0);
  for (int t = 0; t < tasks; ++t) mc.accepted[t / blocks] += partial[t];
  for (int k = 0; k <= e; ++k) {
    const double p = static_cast<double>(mc.accepted[k]) / samples_per_k;
    mc.p_hat.push_back(p);
    mc.std_err.push_back(std::sqrt(p * (1.0 - p) / samples_per_k));
  }
  return mc;
}

namespace {

void check_grid(int grid_points) {
  if (grid_points < 2) throw DomainError("grid_points must be at least 2");
}

template <class V>
std::vector<CurvePoint> exact_curve(const V& v, int grid_points) {
  check_grid(grid_points);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const Rational x(i, grid_points - 1);
    out.push_back({to_double(x), to_double(evaluate_exact(v, x))});
  }
  return out;
}

}  // namespace

std::vector<CurvePoint> reliability_curve(const RkVector& r, int grid_points) { return exact_curve(r, grid_points); }
std::vector<CurvePoint> reliability_curve(const NkVector& n, int grid_points) { return exact_curve(n, grid_points); }
std::vector<CurvePoint> reliability_curve(const PkVector& p, int grid_points) { return exact_curve(p, grid_points); }

std::vector<CurvePoint> reliability_curve(const McEstimate& mc, int grid_points) {
  check_grid(grid_points);
  const int e = mc.edge_count;
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(grid_points));
  const long double lfe = std::lgamma(static_cast<long double>(e) + 1);
  for (int i = 0; i < grid_points; ++i) {
    const double x = to_double(Rational(i, grid_points - 1));
    double r = 0.0;
    if (x == 0.0) {
      r = mc.p_hat[0];
    } else if (x == 1.0) {
      r = mc.p_hat[e];
    } else {
      const long double lx = std::log(static_cast<long double>(x));
      const long double ly = std::log1p(-static_cast<long double>(x));
      long double sum = 0.0L;
      for (int k = 0; k <= e; ++k) {
        if (mc.p_hat[k] == 0.0) continue;
        const long double lw = lfe - std::lgamma(static_cast<long double>(k) + 1) -
                               std::lgamma(static_cast<long double>(e - k) + 1) + k * lx + (e - k) * ly;
        sum += std::exp(lw) * mc.p_hat[k];
      }
      r = static_cast<double>(sum);
    }
    out.push_back({x, r});
  }
  return out;
}

}  // namespace relipoly
