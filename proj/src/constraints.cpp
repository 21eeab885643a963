#include "relipoly/constraints.hpp"

#include <algorithm>

namespace relipoly {

bool ConstraintReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

void fail(IdentityCheck& check, const std::string& detail) {
  check.passed = false;
  if (!check.detail.empty()) check.detail += "; ";
  check.detail += detail;
}

}  // namespace

ConstraintReport check_constraints(const NklTable& table, const NkVector& nk) {
  ConstraintReport rep;
  const std::size_t f = table.motif_count;
  rep.motif_count = f;
  rep.empty_family = f == 0;
  rep.partial = table.truncation_bound.has_value() || nk.truncated();
  rep.abs_coefficient_sum = coefficient_abs_sum(nk);
  rep.two_pow_f_minus_one = (BigInt(1) << f) - 1;
  rep.abs_sum_matches = rep.abs_coefficient_sum == rep.two_pow_f_minus_one;

  int k_limit = table.edge_count;
  if (table.truncation_bound) k_limit = std::min(k_limit, *table.truncation_bound);
  if (nk.complete_through) k_limit = std::min(k_limit, *nk.complete_through);
  const int l_max = table.max_l();

  IdentityCheck collapse{"nk_collapse", true, {}};
  for (int k = 0; k <= std::min(k_limit, nk.edge_count); ++k) {
    BigInt expected = 0;
    for (int l = 1; l <= l_max; ++l) expected += (l % 2 == 1 ? 1 : -1) * table.at(l, k);
    if (expected != nk[k]) fail(collapse, "k=" + std::to_string(k) + ": N_k=" + to_string(nk[k]) +
                                              " but table gives " + to_string(expected));
  }
  rep.checks.push_back(collapse);

  if (!rep.partial) {
    IdentityCheck rows{"row_sums", true, {}};
    for (std::size_t l = 1; l <= f; ++l) {
      const BigInt sum = table.row_sum(static_cast<int>(l));
      const BigInt expected = binomial(static_cast<long>(f), static_cast<long>(l));
      if (sum != expected)
        fail(rows, "l=" + std::to_string(l) + ": sum=" + to_string(sum) + " expected " + to_string(expected));
    }
    rep.checks.push_back(rows);

    IdentityCheck sum_check{"nk_sum", true, {}};
    const BigInt total = coefficient_sum(nk);
    const BigInt expected = rep.empty_family ? BigInt(0) : BigInt(1);
    if (total != expected) fail(sum_check, "sum N_k = " + to_string(total) + " expected " + to_string(expected));
    rep.checks.push_back(sum_check);

    IdentityCheck mass{"signed_mass", true, {}};
    BigInt all = 0;
    for (const auto& [key, count] : table.entries) all += count;
    if (all != rep.two_pow_f_minus_one)
      fail(mass, "sum N_k^(l) = " + to_string(all) + " expected " + to_string(rep.two_pow_f_minus_one));
    rep.checks.push_back(mass);
  }

  IdentityCheck pair_bound{"pair_union_bound", true, {}};
  IdentityCheck triple_bound{"triple_union_bound", true, {}};
  BigInt s1 = 0, s2 = 0;
  for (int k = 0; k <= k_limit; ++k) {
    s1 += table.at(1, k);
    s2 += table.at(2, k);
    const BigInt n2 = table.at(2, k);
    const BigInt n3 = table.at(3, k);
    const BigInt pairs = s1 * (s1 - 1) / 2;
    const BigInt triples = s1 >= 3 ? BigInt(s1 * (s1 - 1) * (s1 - 2) / 6) : BigInt(0);
    if (n2 > pairs) fail(pair_bound, "k=" + std::to_string(k) + ": N^(2)=" + to_string(n2) + " > " + to_string(pairs));
    const BigInt bound3 = s1 * s2 + triples;
    if (n3 > bound3)
      fail(triple_bound, "k=" + std::to_string(k) + ": N^(3)=" + to_string(n3) + " > " + to_string(bound3));
  }
  rep.checks.push_back(pair_bound);
  rep.checks.push_back(triple_bound);
  return rep;
}

}  // namespace relipoly
