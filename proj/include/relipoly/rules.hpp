#pragma once

#include "relipoly/exact.hpp"
#include "relipoly/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relipoly {

enum class RuleKind { two_terminal, k_terminal, all_terminal, ar_alpha, ear_alpha };

std::string to_string(RuleKind kind);
/// Accepts the snake_case names used in rule JSON and on the command line.
RuleKind parse_rule_kind(std::string_view name);

/// A coherent reliability property. Vertex parameters are graph vertex ids.
struct RuleSpec {
  RuleKind kind = RuleKind::all_terminal;
  std::optional<int> source;
  std::optional<int> target;
  std::vector<int> terminals;
  std::optional<Rational> alpha;

  static RuleSpec two_terminal(int source, int target);
  static RuleSpec k_terminal(std::vector<int> terminals);
  static RuleSpec all_terminal();
  static RuleSpec ar_alpha(Rational alpha);
  static RuleSpec ear_alpha(Rational alpha);

  /// Throws ConstraintError when the parameters do not fit the rule kind or
  /// reference vertices outside the graph.
  void validate(const Graph& g) const;

  std::string describe() const;
};

/// Edge-operational probability of the independent edge damage model.
class DamageModel {
 public:
  explicit DamageModel(double x);
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Evaluates one rule on many subgraphs of one graph, reusing scratch
/// buffers. Not thread-safe; make one per worker.
class RuleEvaluator {
 public:
  RuleEvaluator(const RuleSpec& rule, const Graph& g);

  bool operator()(const EdgeSet& active);
  bool operator()(std::span<const int> active);

  const RuleSpec& rule() const noexcept { return rule_; }

 private:
  template <class ForEachEdge>
  bool evaluate(ForEachEdge&& for_each_edge);
  bool decide();

  RuleSpec rule_;
  const Graph* graph_;
  DisjointSets dsu_;
  int ar_threshold_ = 0;      // ceil(alpha * V)
  __int128 ear_lhs_scale_ = 0;  // alpha = p/q: accept iff q * sum(pi^2) >= p * V^2
  __int128 ear_rhs_ = 0;
};

/// r_P(g') for the subgraph formed by the active edges.
bool accepts(const RuleSpec& rule, const Graph& g, const EdgeSet& active);
bool accepts(const RuleSpec& rule, const Graph& g, std::span<const int> active);

struct CoherenceResult {
  bool coherent = true;
  int accepted_samples = 0;
  /// When violated: an accepted subgraph and the edge whose addition is rejected.
  std::optional<EdgeSet> counterexample;
  int added_edge = -1;
};

using SubgraphPredicate = std::function<bool(const EdgeSet&)>;

/// Randomized monotonicity check: samples subgraphs, and for each accepted one
/// verifies that every single-edge superset is accepted.
CoherenceResult is_coherent_witness(const SubgraphPredicate& accepts, const Graph& g, int trials,
                                    std::uint64_t seed);
CoherenceResult is_coherent_witness(const RuleSpec& rule, const Graph& g, int trials, std::uint64_t seed);

}  // namespace relipoly
