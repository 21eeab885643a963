#pragma once

#include "relipoly/graph.hpp"
#include "relipoly/rules.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace relipoly {

/// Largest edge count the generic lattice scan accepts.
inline constexpr int kGenericEdgeCap = 25;

inline constexpr std::size_t kNoMotifLimit = std::numeric_limits<std::size_t>::max();

/// The P-minimal subgraphs of a graph under one rule, in canonical order
/// (size, then mask value) with no duplicates.
struct MotifFamily {
  RuleSpec rule;
  int edge_count = 0;
  std::vector<EdgeSet> motifs;

  std::size_t count() const noexcept { return motifs.size(); }
  bool empty() const noexcept { return motifs.empty(); }
  /// motif size -> number of motifs of that size
  std::map<int, std::size_t> size_histogram() const;
  /// Sorts into canonical order and removes duplicates.
  void canonicalize();
};

/// All simple S-T paths as edge sets; parallel edges yield distinct paths.
/// Throws CapacityError once more than `limit` paths are found.
MotifFamily enumerate_paths(const Graph& g, int source, int target, std::size_t limit = kNoMotifLimit);

/// All spanning trees by deletion/contraction branching that never enters a
/// branch without a tree. Empty when g is disconnected.
MotifFamily enumerate_spanning_trees(const Graph& g, std::size_t limit = kNoMotifLimit);

/// Minimal accepted subgraphs for any coherent rule: scans subgraphs by
/// increasing size and keeps accepted ones that contain no earlier motif.
/// Throws CapacityError when E exceeds kGenericEdgeCap.
MotifFamily enumerate_minimal_generic(const Graph& g, const RuleSpec& rule, std::size_t limit = kNoMotifLimit);

/// Dispatches to the specialised enumerator when one exists for the rule.
MotifFamily enumerate_motifs(const Graph& g, const RuleSpec& rule, std::size_t limit = kNoMotifLimit);

/// (k_min, number of motifs of size k_min). DomainError on an empty family.
std::pair<int, std::size_t> minimal_size_and_count(const MotifFamily& family);

}  // namespace relipoly
