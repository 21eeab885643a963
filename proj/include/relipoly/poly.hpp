#pragma once

#include "relipoly/exact.hpp"

#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace relipoly {

/// Coefficient bases of the reliability polynomial:
///   Rk  R(x) = sum R_k x^k (1-x)^(E-k), R_k = accepted k-edge subgraphs
///   Pk  P_k = R_k / C(E, k)
///   Nk  R(x) = sum N_k x^k
enum class Basis { Rk, Pk, Nk };

/// Exact coefficients indexed k = 0..E. A truncated vector is exact only for
/// k <= complete_through; the remaining entries are zero placeholders.
template <Basis B>
struct CoefficientVector {
  using Scalar = std::conditional_t<B == Basis::Pk, Rational, BigInt>;
  static constexpr Basis basis = B;

  int edge_count = 0;
  std::vector<Scalar> values;
  std::optional<int> complete_through;

  CoefficientVector() = default;
  explicit CoefficientVector(int e) : edge_count(e), values(static_cast<std::size_t>(e) + 1) {}
  CoefficientVector(int e, std::vector<Scalar> v) : edge_count(e), values(std::move(v)) {
    values.resize(static_cast<std::size_t>(e) + 1);
  }

  bool truncated() const noexcept { return complete_through.has_value(); }
  const Scalar& operator[](int k) const { return values.at(static_cast<std::size_t>(k)); }
  Scalar& operator[](int k) { return values.at(static_cast<std::size_t>(k)); }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

using RkVector = CoefficientVector<Basis::Rk>;
using PkVector = CoefficientVector<Basis::Pk>;
using NkVector = CoefficientVector<Basis::Nk>;

/// N_k^(l): the number of l-subsets of the motif family whose union has
/// exactly k edges. Entries that are zero are not stored.
struct NklTable {
  int edge_count = 0;
  std::size_t motif_count = 0;
  std::map<std::pair<int, int>, BigInt> entries;  // (l, k) -> count
  /// When set, entries are complete only for k <= truncation_bound.
  std::optional<int> truncation_bound;

  BigInt at(int l, int k) const;
  int max_l() const;
  /// sum over k of N_k^(l)
  BigInt row_sum(int l) const;
};

PkVector rk_to_pk(const RkVector& r);
RkVector pk_to_rk(const PkVector& p);

/// N_l = (-1)^l sum_{k<=l} (-1)^k C(E-k, l-k) R_k
NkVector rk_to_nk(const RkVector& r);
/// R_k = sum_{k'<=k} N_k' C(E-k', k-k')
RkVector nk_to_rk(const NkVector& n);

/// Floating evaluation with Neumaier-compensated long double summation.
/// DomainError when x is outside [0, 1] or the vector is truncated.
double evaluate(const RkVector& r, double x);
double evaluate(const NkVector& n, double x);
/// Binomially weighted form; weights go through log space when E > 60.
double evaluate(const PkVector& p, double x);

/// Exact evaluation at a rational point.
Rational evaluate_exact(const RkVector& r, const Rational& x);
Rational evaluate_exact(const NkVector& n, const Rational& x);
Rational evaluate_exact(const PkVector& p, const Rational& x);

/// Power-basis polynomial sum N_k x^k at a rational point; no domain check.
Rational evaluate_power(const std::vector<BigInt>& coefficients, const Rational& x);

/// sum_k N_k
BigInt coefficient_sum(const NkVector& n);
/// sum_k |N_k|
BigInt coefficient_abs_sum(const NkVector& n);

}  // namespace relipoly
