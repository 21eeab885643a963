#pragma once

#include "relipoly/exact.hpp"
#include "relipoly/graph.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/roots.hpp"
#include "relipoly/rules.hpp"

#include <map>
#include <vector>

namespace relipoly {

enum class ExactRoute { motif_inclusion_exclusion, brute_force };

struct ExactReliability {
  NkVector nk;
  ExactRoute route = ExactRoute::motif_inclusion_exclusion;
  std::size_t motif_count = 0;  // only meaningful for the motif route
};

/// The exact reliability polynomial: motif enumeration with full
/// inclusion-exclusion when the family is small enough, otherwise exhaustive
/// subgraph enumeration. CapacityError when neither is feasible.
ExactReliability exact_reliability(const Graph& g, const RuleSpec& rule, int threads = 1);

/// Birnbaum importance of one edge: R of the graph minus R of the graph with
/// that edge deleted. The two polynomials live on E and E-1 edges and are
/// compared as functions of x.
struct EdgeImportance {
  int edge = -1;
  NkVector with_edge;
  NkVector without_edge;

  double at(double x) const;
  Rational at_exact(const Rational& x) const;
};

EdgeImportance edge_importance(const Graph& g, const RuleSpec& rule, int edge, int threads = 1);

/// Edges sharing one importance value at x, most important tier first.
struct RankTier {
  Rational importance;
  std::vector<int> edges;
};

std::vector<RankTier> rank_edges(const Graph& g, const RuleSpec& rule, const Rational& x, int threads = 1);
std::vector<RankTier> rank_edges(const Graph& g, const RuleSpec& rule, double x, int threads = 1);

/// x in (0, 1) where the importance order of edges a and b flips, i.e. sign
/// changes of R_without_b(x) - R_without_a(x).
std::vector<SignChange> find_crossings(const Graph& g, const RuleSpec& rule, int edge_a, int edge_b,
                                       double tol = 1e-9, int threads = 1);

struct ImportanceReport {
  std::map<int, EdgeImportance> per_edge;
  std::map<double, std::vector<RankTier>> ranking_at;
  struct Crossing {
    int edge_a;
    int edge_b;
    SignChange root;
  };
  std::vector<Crossing> crossings;
};

/// Importance of every edge, rankings at each requested x, and crossings for
/// each requested pair.
ImportanceReport importance_report(const Graph& g, const RuleSpec& rule, const std::vector<double>& xs,
                                   const std::vector<std::pair<int, int>>& pairs, double tol = 1e-9,
                                   int threads = 1);

/// Reliability under two rules before and after deleting a set of edges.
struct RemovalExperiment {
  std::vector<double> x;
  std::vector<double> a_before, a_after, b_before, b_after;
  ExactReliability exact_a_before, exact_a_after, exact_b_before, exact_b_after;
  /// R_before(1/2) - R_after(1/2), exact.
  Rational drop_a;
  Rational drop_b;
  /// min over the grid of b_before - a_before, exact values rounded once.
  double min_b_minus_a_before = 0.0;
  bool b_dominates_before = false;  // min_b_minus_a_before >= -1e-12
  bool a_drops_more = false;
  /// drop / R_before(1/2)
  Rational relative_drop_a;
  Rational relative_drop_b;
  bool a_drops_more_relative = false;
};

RemovalExperiment edge_removal_experiment(const Graph& g, const RuleSpec& rule_a, const RuleSpec& rule_b,
                                          const EdgeSet& removed, int grid_points = 201, int threads = 1);

}  // namespace relipoly
