#include "relipoly/incexc.hpp"

#include "relipoly/errors.hpp"
#include "relipoly/parallel.hpp"

#include <algorithm>
#include <cstdint>

namespace relipoly {

namespace {

using Counts = std::vector<std::vector<std::uint64_t>>;  // [l][k]

class UnionWalk {
 public:
  UnionWalk(const std::vector<EdgeSet>& motifs, int k_max, int edge_count)
      : motifs_(motifs), k_max_(k_max), edge_count_(edge_count) {}

  Counts from_first(std::size_t first) const {
    Counts counts;
    grow(first, motifs_[first], 1, counts);
    return counts;
  }

 private:
  void grow(std::size_t last, const EdgeSet& current, int l, Counts& counts) const {
    if (counts.size() <= static_cast<std::size_t>(l))
      counts.resize(static_cast<std::size_t>(l) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(edge_count_) + 1, 0));
    ++counts[l][current.size()];
    for (std::size_t j = last + 1; j < motifs_.size(); ++j) {
      const EdgeSet next = current | motifs_[j];
      if (next.size() > k_max_) continue;
      grow(j, next, l + 1, counts);
    }
  }

  const std::vector<EdgeSet>& motifs_;
  int k_max_;
  int edge_count_;
};

NklTable walk(const MotifFamily& family, int k_max, int threads) {
  std::vector<EdgeSet> usable;
  for (const EdgeSet& m : family.motifs)
    if (m.size() <= k_max) usable.push_back(m);

  UnionWalk walker(usable, k_max, family.edge_count);
  std::vector<Counts> partial(usable.size());
  parallel_for(static_cast<int>(usable.size()), threads,
               [&](int i) { partial[i] = walker.from_first(static_cast<std::size_t>(i)); });

  Counts total;
  for (const Counts& c : partial) {
    if (total.size() < c.size()) total.resize(c.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(family.edge_count) + 1, 0));
    for (std::size_t l = 0; l < c.size(); ++l)
      for (std::size_t k = 0; k < c[l].size(); ++k) total[l][k] += c[l][k];
  }

  NklTable table;
  table.edge_count = family.edge_count;
  table.motif_count = family.count();
  for (std::size_t l = 1; l < total.size(); ++l)
    for (std::size_t k = 0; k < total[l].size(); ++k)
      if (total[l][k]) table.entries[{static_cast<int>(l), static_cast<int>(k)}] = total[l][k];
  return table;
}

}  // namespace

NklTable nkl_full(const MotifFamily& family, int threads) {
  if (family.count() > kFullUnionMotifCap)
    throw CapacityError("full inclusion-exclusion supports at most " + std::to_string(kFullUnionMotifCap) +
                        " motifs (family has " + std::to_string(family.count()) + "); use truncated mode with --k-max");
  return walk(family, family.edge_count, threads);
}

NklTable nkl_truncated(const MotifFamily& family, int k_max, int threads) {
  NklTable table = walk(family, k_max, threads);
  if (k_max < family.edge_count) table.truncation_bound = k_max;
  return table;
}

NklTable nkl_table(const MotifFamily& family, const UnionEnumerationPlan& plan, int threads) {
  if (plan.mode == UnionEnumerationPlan::Mode::full) return nkl_full(family, threads);
  if (!plan.k_max) throw ConstraintError("truncated union enumeration needs k_max");
  return nkl_truncated(family, *plan.k_max, threads);
}

NkVector nk_from_table(const NklTable& table) {
  NkVector n(table.edge_count);
  n.complete_through = table.truncation_bound;
  for (const auto& [key, count] : table.entries) {
    const auto [l, k] = key;
    if (l % 2 == 1)
      n[k] += count;
    else
      n[k] -= count;
  }
  return n;
}

namespace {

long double horner(const std::vector<BigInt>& c, long double x) {
  long double acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_long_double(*it);
  return acc;
}

std::vector<BigInt> difference(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

double grid_max(const std::vector<BigInt>& c) {
  double best = -1e300;
  for (int i = 0; i <= 1000; ++i) best = std::max(best, static_cast<double>(horner(c, i / 1000.0L)));
  return best;
}

std::vector<std::pair<double, double>> sample(const std::vector<BigInt>& c) {
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i <= 200; ++i) {
    const double x = to_double(Rational(i, 200));
    out.emplace_back(x, static_cast<double>(horner(c, x)));
  }
  return out;
}

}  // namespace

TradeoffRecord tradeoff_compare(int r1, int k1, int k2, std::optional<int> r2_override) {
  if (r1 < 1 || k1 < 1 || k2 < 1) throw ConstraintError("tradeoff needs r1, k1, k2 >= 1");
  TradeoffRecord rec;
  rec.r1 = r1;
  rec.k1 = k1;
  rec.k2 = k2;
  rec.edge_budget = 2L * r1 + k1 - 2;
  rec.r2_formula = Rational(rec.edge_budget, k2);
  if (r2_override) {
    if (*r2_override < 1) throw ConstraintError("r2 must be at least 1");
    rec.r2 = *r2_override;
    rec.r2_overridden = true;
  } else {
    if (rec.edge_budget % k2 != 0)
      throw ConstraintError("k2 = " + std::to_string(k2) + " does not divide the edge budget 2*r1 + k1 - 2 = " +
                            std::to_string(rec.edge_budget) + "; pass an explicit r2");
    rec.r2 = static_cast<int>(rec.edge_budget / k2);
  }

  rec.overlapping_as_stated.assign(static_cast<std::size_t>(k1 + r1 * (r1 - 1)) + 1, BigInt(0));
  for (int i = 1; i <= r1; ++i) {
    const BigInt c = binomial(r1, i);
    rec.overlapping_as_stated[static_cast<std::size_t>(k1 + r1 * (i - 1))] += (i % 2 == 1) ? c : BigInt(-c);
  }

  rec.overlapping_core_variant.assign(static_cast<std::size_t>(k1 - 1 + r1) + 1, BigInt(0));
  for (int i = 1; i <= r1; ++i) {
    const BigInt c = binomial(r1, i);
    rec.overlapping_core_variant[static_cast<std::size_t>(k1 - 1 + i)] = (i % 2 == 1) ? c : BigInt(-c);
  }

  rec.disjoint.assign(static_cast<std::size_t>(rec.r2) * k2 + 1, BigInt(0));
  for (int i = 1; i <= rec.r2; ++i) {
    const BigInt c = binomial(rec.r2, i);
    rec.disjoint[static_cast<std::size_t>(i) * k2] = (i % 2 == 1) ? c : BigInt(-c);
  }

  rec.stated_max = grid_max(rec.overlapping_as_stated);
  rec.core_variant_max = grid_max(rec.overlapping_core_variant);
  rec.disjoint_max = grid_max(rec.disjoint);

  const auto stated_diff = difference(rec.disjoint, rec.overlapping_as_stated);
  const auto core_diff = difference(rec.disjoint, rec.overlapping_core_variant);
  rec.stated_difference = sample(stated_diff);
  rec.core_variant_difference = sample(core_diff);
  rec.stated_sign_changes = find_sign_changes([&](const Rational& x) { return power_sign(stated_diff, x); });
  rec.core_variant_sign_changes = find_sign_changes([&](const Rational& x) { return power_sign(core_diff, x); });
  return rec;
}

}  // namespace relipoly
