#pragma once

#include "relipoly/exact.hpp"
#include "relipoly/graph.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/poly.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace relipoly {

/// m pairwise disjoint motifs of size k0 in a graph with E edges:
/// R(x) = 1 - (1 - x^k0)^m, i.e. N_{l k0} = (-1)^(l+1) C(m, l).
/// ConstraintError when m * k0 > E.
NkVector closed_form_disjoint(int m, int k0, int edge_count);

/// m motifs of size k0, every pair sharing all but one edge:
/// R(x) = x^(k0-1) [1 - (1 - x)^m], i.e. N_{k0+l-1} = (-1)^(l+1) C(m, l).
/// ConstraintError when k0 - 1 + m > E.
NkVector closed_form_chain_overlap(int m, int k0, int edge_count);

/// Families of m equal-size motifs whose N_k vanish outside two or three
/// sizes. Two supports (no k2) require m = 2 and k0 < k1 <= 2 k0 and give
/// N_k0 = 2, N_k1 = -1. Three supports require m >= 3 and k0 < k1 < k2 and
/// give N_k0 = m, N_k1 = 1 - 2^(m-1), N_k2 = 2^(m-1) - m. The vector's edge
/// count is the largest support.
NkVector sparse_nk_solutions(int m, int k0, int k1, std::optional<int> k2 = std::nullopt);

/// Lowest-order term N_kmin x^kmin of the reliability polynomial: the
/// smallest motif size and the number of motifs of that size.
std::pair<int, BigInt> leading_term(const MotifFamily& family);

/// Brute-force examination of the AR-alpha rule on a star of chains.
struct StarOfChainsReport {
  int arms = 0;
  int chain_len = 0;
  Rational alpha;
  int threshold_vertices = 0;  // ceil(alpha V)
  MotifFamily family;
  /// |a xor b| over unordered motif pairs -> number of pairs
  std::map<int, std::size_t> pairwise_difference_histogram;
  bool all_pairs_differ_by_two = false;
  NkVector oracle;                       // from brute-force R_k
  std::vector<BigInt> stated_formula;    // x^(aV-2) (1-x)^t, power basis
  std::vector<BigInt> overlap_formula;   // x^(aV-2) [1-(1-x)^t], power basis
  double stated_max_deviation = 0.0;     // max |formula - oracle| on 101 points
  double overlap_max_deviation = 0.0;
  bool stated_is_monotone = false;
};

StarOfChainsReport analyze_star_of_chains(int arms, int chain_len, const Rational& alpha);

}  // namespace relipoly
