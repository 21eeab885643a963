#pragma once

#include "relipoly/exact.hpp"
#include "relipoly/poly.hpp"

#include <string>
#include <vector>

namespace relipoly {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  /// Offending values when the check fails, empty otherwise.
  std::string detail;
};

/// Combinatorial identities that every exact motif-union table satisfies.
struct ConstraintReport {
  std::size_t motif_count = 0;
  bool empty_family = false;
  /// Truncated table: the whole-family identities were skipped.
  bool partial = false;
  std::vector<IdentityCheck> checks;

  /// Reported only. sum_k |N_k| equals 2^f - 1 exactly when no two
  /// contributions of opposite sign land on the same k.
  BigInt abs_coefficient_sum;
  BigInt two_pow_f_minus_one;
  bool abs_sum_matches = false;

  bool all_passed() const;
};

/// Checks, for the given table and its collapsed N_k:
///   nk_collapse         N_k = sum_l (-1)^(l+1) N_k^(l)
///   row_sums            sum_k N_k^(l) = C(f, l) for every l
///   nk_sum              sum_k N_k = 1
///   signed_mass         sum_k sum_l N_k^(l) = 2^f - 1
///   pair_union_bound    N_k^(2) <= C(S1, 2)
///   triple_union_bound  N_k^(3) <= S1 * S2 + C(S1, 3)
/// where Sl = sum_{k' <= k} N_k'^(l). row_sums, nk_sum and signed_mass need
/// the whole table and are skipped for truncated ones, which are flagged
/// partial.
ConstraintReport check_constraints(const NklTable& table, const NkVector& nk);

}  // namespace relipoly
