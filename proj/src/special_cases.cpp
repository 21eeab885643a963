#include "relipoly/special_cases.hpp"

#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace relipoly {

namespace {

BigInt signed_binomial(int m, int l) {
  BigInt c = binomial(m, l);
  return (l % 2 == 1) ? c : BigInt(-c);  // (-1)^(l+1) C(m, l)
}

std::vector<BigInt> one_minus_x_pow(int t) {
  std::vector<BigInt> out(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) out[i] = (i % 2 == 0) ? binomial(t, i) : BigInt(-binomial(t, i));
  return out;
}

std::vector<BigInt> shift(const std::vector<BigInt>& p, int by) {
  std::vector<BigInt> out(static_cast<std::size_t>(by), BigInt(0));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

NkVector closed_form_disjoint(int m, int k0, int edge_count) {
  if (m < 1 || k0 < 1) throw ConstraintError("closed form needs m >= 1 and k0 >= 1");
  if (static_cast<long>(m) * k0 > edge_count)
    throw ConstraintError("m disjoint motifs of size k0 need m*k0 <= E edges");
  NkVector n(edge_count);
  for (int l = 1; l <= m; ++l) n[l * k0] = signed_binomial(m, l);
  return n;
}

NkVector closed_form_chain_overlap(int m, int k0, int edge_count) {
  if (m < 1 || k0 < 1) throw ConstraintError("closed form needs m >= 1 and k0 >= 1");
  if (k0 - 1 + m > edge_count) throw ConstraintError("m motifs sharing k0-1 edges need k0-1+m <= E edges");
  NkVector n(edge_count);
  for (int l = 1; l <= m; ++l) n[k0 + l - 1] = signed_binomial(m, l);
  return n;
}

NkVector sparse_nk_solutions(int m, int k0, int k1, std::optional<int> k2) {
  if (k0 < 1) throw ConstraintError("k0 must be at least 1");
  if (!k2) {
    if (m != 2) throw ConstraintError("two nonzero coefficients admit a solution only for m = 2");
    if (k1 < k0 + 1 || k1 > m * k0) throw ConstraintError("two-support solution needs k0 + 1 <= k1 <= m*k0");
    NkVector n(k1);
    n[k0] = 2;
    n[k1] = -1;
    return n;
  }
  if (m < 3) throw ConstraintError("three nonzero coefficients with N_k2 >= 1 need m >= 3");
  if (!(k0 < k1 && k1 < *k2)) throw ConstraintError("three-support solution needs k0 < k1 < k2");
  if (m > 62) throw ConstraintError("m too large");
  const BigInt half = BigInt(1) << (m - 1);
  NkVector n(*k2);
  n[k0] = m;
  n[k1] = 1 - half;
  n[*k2] = half - m;
  return n;
}

std::pair<int, BigInt> leading_term(const MotifFamily& family) {
  auto [k_min, count] = minimal_size_and_count(family);
  return {k_min, BigInt(count)};
}

StarOfChainsReport analyze_star_of_chains(int arms, int chain_len, const Rational& alpha) {
  StarOfChainsReport rep;
  rep.arms = arms;
  rep.chain_len = chain_len;
  rep.alpha = alpha;
  const Graph g = star_of_chains_graph(arms, chain_len);
  const RuleSpec rule = RuleSpec::ar_alpha(alpha);
  const BigInt av = boost::multiprecision::numerator(alpha) * g.vertex_count();
  const BigInt den = boost::multiprecision::denominator(alpha);
  rep.threshold_vertices = BigInt((av + den - 1) / den).convert_to<int>();
  if (rep.threshold_vertices < 2) throw DomainError("star-of-chains formulas need alpha*V >= 2");

  rep.family = enumerate_minimal_generic(g, rule);
  const auto& motifs = rep.family.motifs;
  for (std::size_t i = 0; i < motifs.size(); ++i)
    for (std::size_t j = i + 1; j < motifs.size(); ++j) ++rep.pairwise_difference_histogram[(motifs[i] ^ motifs[j]).size()];
  rep.all_pairs_differ_by_two =
      motifs.size() >= 2 && rep.pairwise_difference_histogram.size() == 1 && rep.pairwise_difference_histogram.count(2);

  rep.oracle = rk_to_nk(brute_force_rk(g, rule));
  const int base = rep.threshold_vertices - 2;
  rep.stated_formula = shift(one_minus_x_pow(arms), base);
  std::vector<BigInt> tail = one_minus_x_pow(arms);
  for (auto& c : tail) c = -c;
  tail[0] += 1;
  rep.overlap_formula = shift(tail, base);

  double previous = -1.0;
  rep.stated_is_monotone = true;
  for (int i = 0; i <= 100; ++i) {
    const Rational x(i, 100);
    const double oracle = to_double(evaluate_exact(rep.oracle, x));
    const double stated = to_double(evaluate_power(rep.stated_formula, x));
    const double overlap = to_double(evaluate_power(rep.overlap_formula, x));
    rep.stated_max_deviation = std::max(rep.stated_max_deviation, std::fabs(stated - oracle));
    rep.overlap_max_deviation = std::max(rep.overlap_max_deviation, std::fabs(overlap - oracle));
    if (stated < previous) rep.stated_is_monotone = false;
    previous = stated;
  }
  return rep;
}

}  // namespace relipoly
