#include "relipoly/graph.hpp"

#include "relipoly/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace relipoly {

EdgeSet::EdgeSet(std::initializer_list<int> edges) {
  for (int e : edges) insert(e);
}

EdgeSet EdgeSet::first(int count) {
  EdgeSet s;
  for (int e = 0; e < count; ++e) s.insert(e);
  return s;
}

int EdgeSet::max_index() const {
  if (words_[1]) return 127 - std::countl_zero(words_[1]);
  if (words_[0]) return 63 - std::countl_zero(words_[0]);
  return -1;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count_ < 1) throw ConstraintError("graph needs at least one vertex");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
    throw ConstraintError("label count does not match vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count_));
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= vertex_count_ || e.b < 0 || e.b >= vertex_count_)
      throw ConstraintError("edge " + std::to_string(i) + " has an endpoint outside [0, V)");
    if (e.a == e.b) throw ConstraintError("edge " + std::to_string(i) + " is a self-loop");
    incidence_[e.a].push_back(i);
    incidence_[e.b].push_back(i);
  }
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
    if (!label_index_.emplace(labels_[v], v).second)
      throw ConstraintError("duplicate vertex label '" + labels_[v] + "'");
  }
}

std::string Graph::label(int vertex) const {
  if (labels_.empty()) return std::to_string(vertex);
  return labels_.at(static_cast<std::size_t>(vertex));
}

std::optional<int> Graph::find_vertex(std::string_view label) const {
  if (!labels_.empty()) {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }
  int id = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), id);
  if (ec != std::errc{} || ptr != label.data() + label.size() || id < 0 || id >= vertex_count_)
    return std::nullopt;
  return id;
}

int Graph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw ConstraintError("unknown vertex '" + std::string(label) + "'");
}

EdgeSet Graph::all_edges() const {
  if (edge_count() > kExactEdgeCap)
    throw CapacityError("graph has " + std::to_string(edge_count()) + " edges; exact pipelines support at most " +
                        std::to_string(kExactEdgeCap));
  return EdgeSet::first(edge_count());
}

Graph Graph::without_edges(const EdgeSet& removed) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (int i = 0; i < edge_count(); ++i) {
    if (i < kExactEdgeCap && removed.contains(i)) continue;
    kept.push_back(edges_[i]);
  }
  return Graph(vertex_count_, std::move(kept), labels_);
}

Graph Graph::without_edge(int index) const {
  if (index < 0 || index >= edge_count()) throw ConstraintError("edge index " + std::to_string(index) + " out of range");
  EdgeSet removed;
  removed.insert(index);
  return without_edges(removed);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;
  std::vector<Edge> edges;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;
    if (a.front() == '#') continue;
    if (!(tokens >> b) || (tokens >> extra))
      throw ParseError("expected exactly two vertex labels", line_no);
    if (a == b) throw ParseError("self-loop on vertex '" + a + "'", line_no);
    const int ia = id_of(a);
    const int ib = id_of(b);
    edges.push_back({ia, ib});
  }
  if (labels.empty()) throw ParseError("edge list contains no edges");
  const int v = static_cast<int>(labels.size());
  return Graph(v, std::move(edges), std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += g.label(e.a) + " " + g.label(e.b) + "\n";
  return out;
}

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n)), sets_(n) {
  reset();
}

void DisjointSets::reset() {
  std::iota(parent_.begin(), parent_.end(), 0);
  std::fill(size_.begin(), size_.end(), 1);
  sets_ = static_cast<int>(parent_.size());
}

int DisjointSets::find(int v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

namespace {

std::vector<std::vector<int>> collect(DisjointSets& dsu, int v) {
  std::vector<int> slot(static_cast<std::size_t>(v), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < v; ++i) {
    const int r = dsu.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> components(const Graph& g, const EdgeSet& active) {
  DisjointSets dsu(g.vertex_count());
  active.for_each([&](int e) {
    const Edge& ed = g.edge(e);
    dsu.unite(ed.a, ed.b);
  });
  return collect(dsu, g.vertex_count());
}

std::vector<std::vector<int>> components(const Graph& g, std::span<const int> active) {
  DisjointSets dsu(g.vertex_count());
  for (int e : active) {
    const Edge& ed = g.edge(e);
    dsu.unite(ed.a, ed.b);
  }
  return collect(dsu, g.vertex_count());
}

bool is_connected(const Graph& g) {
  DisjointSets dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(e.a, e.b);
  return dsu.set_count() == 1;
}

BigInt spanning_tree_count(const Graph& g) {
  if (!is_connected(g)) return 0;
  const int n = g.vertex_count() - 1;
  if (n == 0) return 1;

  // Laplacian with the last row and column deleted.
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges()) {
    if (e.a < n) m[e.a][e.a] += 1;
    if (e.b < n) m[e.b][e.b] += 1;
    if (e.a < n && e.b < n) {
      m[e.a][e.b] -= 1;
      m[e.b][e.a] -= 1;
    }
  }

  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  return sign < 0 ? BigInt(-det) : det;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid dimensions must be at least 1");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) edges.push_back({id(r, c), id(r, c + 1)});
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) edges.push_back({id(r, c), id(r + 1, c)});
  return Graph(rows * cols, std::move(edges));
}

Graph star_of_chains_graph(int arms, int chain_len) {
  if (arms < 1 || chain_len < 1) throw DomainError("star of chains needs arms >= 1 and chain_len >= 1");
  std::vector<Edge> edges;
  int next = 1;
  for (int a = 0; a < arms; ++a) {
    int prev = 0;
    for (int s = 0; s < chain_len; ++s) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

}  // namespace relipoly
