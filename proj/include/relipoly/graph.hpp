#pragma once

#include "relipoly/exact.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace relipoly {

/// Upper bound on the number of edges handled by the exact (bitmask) pipelines.
inline constexpr int kExactEdgeCap = 128;

/// A subset of the edge indices of a graph, stored as a 128-bit mask.
///
/// Ordering is canonical: by cardinality first, then by mask value with the
/// highest edge index most significant.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  EdgeSet(std::initializer_list<int> edges);

  /// The set {0, 1, ..., count-1}.
  static EdgeSet first(int count);
  /// A set from the low 64 bits only.
  static constexpr EdgeSet from_word(std::uint64_t low) {
    EdgeSet s;
    s.words_[0] = low;
    return s;
  }

  void insert(int edge) { words_[edge >> 6] |= std::uint64_t{1} << (edge & 63); }
  void erase(int edge) { words_[edge >> 6] &= ~(std::uint64_t{1} << (edge & 63)); }
  bool contains(int edge) const { return (words_[edge >> 6] >> (edge & 63)) & 1U; }

  int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  bool is_subset_of(const EdgeSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }

  /// Largest member index, or -1 when empty.
  int max_index() const;

  std::vector<int> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) {
    a.words_[0] ^= b.words_[0];
    a.words_[1] ^= b.words_[1];
    return a;
  }
  /// Set difference.
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.words()[0] * 0x9E3779B97F4A7C15ULL ^ s.words()[1]);
  }
};

struct Edge {
  int a;
  int b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with indexed edges. Parallel edges keep distinct
/// identities; self-loops are rejected. Immutable after construction.
class Graph {
 public:
  /// Throws ConstraintError on out-of-range endpoints or self-loops.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  /// Label of a vertex; the decimal id when the graph was built without labels.
  std::string label(int vertex) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Resolves a label (or, for unlabeled graphs, a decimal id) to a vertex id.
  std::optional<int> find_vertex(std::string_view label) const;
  /// Same as find_vertex but throws ConstraintError for unknown labels.
  int vertex(std::string_view label) const;

  /// Edge indices incident to each vertex.
  const std::vector<std::vector<int>>& incidence() const noexcept { return incidence_; }

  EdgeSet all_edges() const;

  /// A copy with the given edges deleted; remaining edges keep their relative
  /// order and are renumbered densely. Vertex ids and labels are unchanged.
  Graph without_edges(const EdgeSet& removed) const;
  Graph without_edge(int index) const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_index_;
  std::vector<std::vector<int>> incidence_;
};

/// Reads the edge-list format: one edge per line as two whitespace-separated
/// vertex labels, `#` comment lines and blank lines ignored. Vertex ids follow
/// first appearance; edges follow file order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Writes a graph in the edge-list format.
std::string format_edge_list(const Graph& g);

/// Connected components of the spanning subgraph on all V vertices formed by
/// the active edges. Isolated vertices are singleton components. Components
/// are listed by smallest member; members are sorted.
std::vector<std::vector<int>> components(const Graph& g, const EdgeSet& active);
std::vector<std::vector<int>> components(const Graph& g, std::span<const int> active);

bool is_connected(const Graph& g);

/// Number of spanning trees by the matrix-tree theorem, using fraction-free
/// (Bareiss) elimination over big integers. Zero for disconnected graphs.
BigInt spanning_tree_count(const Graph& g);

/// rows x cols lattice. Vertices row-major; all horizontal edges row-major,
/// then all vertical edges row-major.
Graph grid_graph(int rows, int cols);

/// A centre vertex joined to `arms` linear chains of `chain_len` edges each.
/// Vertex 0 is the centre; chain edges are listed arm by arm from the centre
/// outwards.
Graph star_of_chains_graph(int arms, int chain_len);

/// Union-find over vertex ids with cheap reset, reused across many subset
/// evaluations.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  void reset();
  int find(int v);
  /// Returns true if the two vertices were in different sets.
  bool unite(int a, int b);
  int size_of(int root) const { return size_[root]; }
  int set_count() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

}  // namespace relipoly
