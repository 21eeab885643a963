#pragma once

#include "relipoly/exact.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relipoly {

/// Largest family for the exhaustive 2^f subset walk.
inline constexpr std::size_t kFullUnionMotifCap = 20;

struct UnionEnumerationPlan {
  enum class Mode { full, truncated };
  Mode mode = Mode::full;
  std::optional<int> k_max;

  static UnionEnumerationPlan full() { return {}; }
  static UnionEnumerationPlan truncated(int k_max) { return {Mode::truncated, k_max}; }
};

/// N_k^(l) over every non-empty subset of the family. CapacityError when the
/// family has more than kFullUnionMotifCap motifs.
NklTable nkl_full(const MotifFamily& family, int threads = 1);

/// N_k^(l) exact for k <= k_max. Subsets are grown in increasing motif index
/// order and abandoned as soon as the union exceeds k_max; union size is
/// monotone under growth, so the pruning is exact.
NklTable nkl_truncated(const MotifFamily& family, int k_max, int threads = 1);

NklTable nkl_table(const MotifFamily& family, const UnionEnumerationPlan& plan, int threads = 1);

/// N_k = sum_l (-1)^(l+1) N_k^(l); the truncation bound carries over.
NkVector nk_from_table(const NklTable& table);

/// Two ways of spending a fixed edge budget on motifs: r1 motifs of size k1
/// differing pairwise in two edges, against r2 disjoint motifs of size k2.
struct TradeoffRecord {
  int r1 = 0;
  int k1 = 0;
  int k2 = 0;
  long edge_budget = 0;        // 2 r1 + k1 - 2
  Rational r2_formula;         // edge_budget / k2, possibly non-integral
  int r2 = 0;                  // value used for the disjoint family
  bool r2_overridden = false;

  /// sum_i (-1)^(i+1) C(r1, i) x^(k1 + r1 (i - 1)), power basis.
  std::vector<BigInt> overlapping_as_stated;
  /// Shared core of k1 - 1 edges plus one private edge per motif:
  /// x^(k1-1) [1 - (1-x)^r1].
  std::vector<BigInt> overlapping_core_variant;
  /// 1 - (1 - x^k2)^r2
  std::vector<BigInt> disjoint;

  /// Max of each polynomial on a 1001-point grid; values above 1 mean the
  /// polynomial is not a reliability.
  double stated_max = 0.0;
  double core_variant_max = 0.0;
  double disjoint_max = 0.0;

  /// (x, disjoint - overlapping) on a 201-point grid.
  std::vector<std::pair<double, double>> stated_difference;
  std::vector<std::pair<double, double>> core_variant_difference;
  std::vector<SignChange> stated_sign_changes;
  std::vector<SignChange> core_variant_sign_changes;
};

/// ConstraintError when k2 does not divide 2 r1 + k1 - 2 and no r2 override
/// is given.
TradeoffRecord tradeoff_compare(int r1, int k1, int k2, std::optional<int> r2_override = std::nullopt);

}  // namespace relipoly
