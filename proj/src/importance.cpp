#include "relipoly/importance.hpp"

#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/parallel.hpp"

#include <algorithm>

namespace relipoly {

ExactReliability exact_reliability(const Graph& g, const RuleSpec& rule, int threads) {
  rule.validate(g);
  if (g.edge_count() <= kExactEdgeCap) {
    try {
      const MotifFamily family = enumerate_motifs(g, rule, kFullUnionMotifCap);
      return {nk_from_table(nkl_full(family, threads)), ExactRoute::motif_inclusion_exclusion, family.count()};
    } catch (const CapacityError&) {
      if (g.edge_count() > kBruteForceEdgeCap) throw;
    }
  }
  if (g.edge_count() > kBruteForceEdgeCap)
    throw CapacityError("no exact pipeline for a graph with " + std::to_string(g.edge_count()) + " edges");
  return {rk_to_nk(brute_force_rk(g, rule, threads)), ExactRoute::brute_force, 0};
}

double EdgeImportance::at(double x) const { return to_double(at_exact(to_rational(x))); }

Rational EdgeImportance::at_exact(const Rational& x) const {
  return evaluate_exact(with_edge, x) - evaluate_exact(without_edge, x);
}

EdgeImportance edge_importance(const Graph& g, const RuleSpec& rule, int edge, int threads) {
  if (edge < 0 || edge >= g.edge_count()) throw ConstraintError("edge index " + std::to_string(edge) + " out of range");
  EdgeImportance imp;
  imp.edge = edge;
  imp.with_edge = exact_reliability(g, rule, threads).nk;
  imp.without_edge = exact_reliability(g.without_edge(edge), rule, threads).nk;
  return imp;
}

namespace {

std::vector<NkVector> all_removals(const Graph& g, const RuleSpec& rule, int threads) {
  std::vector<NkVector> out(static_cast<std::size_t>(g.edge_count()));
  parallel_for(g.edge_count(), threads, [&](int e) { out[e] = exact_reliability(g.without_edge(e), rule, 1).nk; });
  return out;
}

std::vector<RankTier> tiers(const NkVector& full, const std::vector<NkVector>& removed, const Rational& x) {
  const Rational base = evaluate_exact(full, x);
  std::vector<std::pair<Rational, int>> values;
  for (int e = 0; e < static_cast<int>(removed.size()); ++e) values.emplace_back(base - evaluate_exact(removed[e], x), e);
  std::stable_sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<RankTier> out;
  for (const auto& [value, e] : values) {
    if (out.empty() || out.back().importance != value) out.push_back({value, {}});
    out.back().edges.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<RankTier> rank_edges(const Graph& g, const RuleSpec& rule, const Rational& x, int threads) {
  if (x < 0 || x > 1) throw DomainError("x must lie in [0, 1]");
  const NkVector full = exact_reliability(g, rule, threads).nk;
  return tiers(full, all_removals(g, rule, threads), x);
}

std::vector<RankTier> rank_edges(const Graph& g, const RuleSpec& rule, double x, int threads) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
  return rank_edges(g, rule, to_rational(x), threads);
}

std::vector<SignChange> find_crossings(const Graph& g, const RuleSpec& rule, int edge_a, int edge_b, double tol,
                                       int threads) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  for (int e : {edge_a, edge_b})
    if (e < 0 || e >= g.edge_count()) throw ConstraintError("edge index " + std::to_string(e) + " out of range");
  const NkVector without_a = exact_reliability(g.without_edge(edge_a), rule, threads).nk;
  const NkVector without_b = exact_reliability(g.without_edge(edge_b), rule, threads).nk;
  return find_sign_changes(
      [&](const Rational& x) {
        const Rational d = evaluate_exact(without_b, x) - evaluate_exact(without_a, x);
        return d.sign();
      },
      tol);
}

ImportanceReport importance_report(const Graph& g, const RuleSpec& rule, const std::vector<double>& xs,
                                   const std::vector<std::pair<int, int>>& pairs, double tol, int threads) {
  ImportanceReport rep;
  const NkVector full = exact_reliability(g, rule, threads).nk;
  const std::vector<NkVector> removed = all_removals(g, rule, threads);
  for (int e = 0; e < g.edge_count(); ++e) rep.per_edge[e] = EdgeImportance{e, full, removed[e]};
  for (double x : xs) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
    rep.ranking_at[x] = tiers(full, removed, to_rational(x));
  }
  for (auto [a, b] : pairs) {
    for (int e : {a, b})
      if (e < 0 || e >= g.edge_count()) throw ConstraintError("edge index " + std::to_string(e) + " out of range");
    const auto roots = find_sign_changes(
        [&](const Rational& x) { return Rational(evaluate_exact(removed[b], x) - evaluate_exact(removed[a], x)).sign(); },
        tol);
    for (const SignChange& r : roots) rep.crossings.push_back({a, b, r});
  }
  return rep;
}

RemovalExperiment edge_removal_experiment(const Graph& g, const RuleSpec& rule_a, const RuleSpec& rule_b,
                                          const EdgeSet& removed, int grid_points, int threads) {
  if (grid_points < 2) throw DomainError("grid_points must be at least 2");
  const Graph damaged = g.without_edges(removed);
  RemovalExperiment ex;
  ex.exact_a_before = exact_reliability(g, rule_a, threads);
  ex.exact_a_after = exact_reliability(damaged, rule_a, threads);
  ex.exact_b_before = exact_reliability(g, rule_b, threads);
  ex.exact_b_after = exact_reliability(damaged, rule_b, threads);

  ex.min_b_minus_a_before = 1.0;
  for (int i = 0; i < grid_points; ++i) {
    const Rational x(i, grid_points - 1);
    const Rational ab = evaluate_exact(ex.exact_a_before.nk, x);
    const Rational bb = evaluate_exact(ex.exact_b_before.nk, x);
    ex.x.push_back(to_double(x));
    ex.a_before.push_back(to_double(ab));
    ex.a_after.push_back(to_double(evaluate_exact(ex.exact_a_after.nk, x)));
    ex.b_before.push_back(to_double(bb));
    ex.b_after.push_back(to_double(evaluate_exact(ex.exact_b_after.nk, x)));
    ex.min_b_minus_a_before = std::min(ex.min_b_minus_a_before, to_double(bb - ab));
  }
  ex.b_dominates_before = ex.min_b_minus_a_before >= -1e-12;
  const Rational half(1, 2);
  ex.drop_a = evaluate_exact(ex.exact_a_before.nk, half) - evaluate_exact(ex.exact_a_after.nk, half);
  ex.drop_b = evaluate_exact(ex.exact_b_before.nk, half) - evaluate_exact(ex.exact_b_after.nk, half);
  ex.a_drops_more = ex.drop_a > ex.drop_b;
  const Rational a_half = evaluate_exact(ex.exact_a_before.nk, half);
  const Rational b_half = evaluate_exact(ex.exact_b_before.nk, half);
  ex.relative_drop_a = a_half == 0 ? Rational(0) : Rational(ex.drop_a / a_half);
  ex.relative_drop_b = b_half == 0 ? Rational(0) : Rational(ex.drop_b / b_half);
  ex.a_drops_more_relative = ex.relative_drop_a > ex.relative_drop_b;
  return ex;
}

}  // namespace relipoly
