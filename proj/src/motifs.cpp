#include "relipoly/motifs.hpp"

#include "relipoly/errors.hpp"

#include <algorithm>

namespace relipoly {

std::map<int, std::size_t> MotifFamily::size_histogram() const {
  std::map<int, std::size_t> out;
  for (const EdgeSet& m : motifs) ++out[m.size()];
  return out;
}

void MotifFamily::canonicalize() {
  std::sort(motifs.begin(), motifs.end());
  motifs.erase(std::unique(motifs.begin(), motifs.end()), motifs.end());
}

namespace {

void check_limit(const MotifFamily& family, std::size_t limit) {
  if (family.motifs.size() > limit)
    throw CapacityError("motif family exceeds the limit of " + std::to_string(limit) + " motifs");
}

class PathSearch {
 public:
  PathSearch(const Graph& g, int target, MotifFamily& out, std::size_t limit)
      : g_(g), target_(target), out_(out), limit_(limit), on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  void run(int v) {
    if (v == target_) {
      out_.motifs.push_back(path_);
      check_limit(out_, limit_);
      return;
    }
    on_path_[v] = 1;
    for (int e : g_.incidence()[v]) {
      const Edge& ed = g_.edge(e);
      const int w = ed.a == v ? ed.b : ed.a;
      if (on_path_[w]) continue;
      path_.insert(e);
      run(w);
      path_.erase(e);
    }
    on_path_[v] = 0;
  }

 private:
  const Graph& g_;
  int target_;
  MotifFamily& out_;
  std::size_t limit_;
  std::vector<char> on_path_;
  EdgeSet path_;
};

class TreeSearch {
 public:
  TreeSearch(const Graph& g, MotifFamily& out, std::size_t limit) : g_(g), out_(out), limit_(limit) {}

  void run(int index, const EdgeSet& chosen, int chosen_count, const EdgeSet& excluded) {
    if (chosen_count == g_.vertex_count() - 1) {
      out_.motifs.push_back(chosen);
      check_limit(out_, limit_);
      return;
    }
    if (index == g_.edge_count()) return;

    const Edge& e = g_.edge(index);
    DisjointSets forest(g_.vertex_count());
    chosen.for_each([&](int c) { forest.unite(g_.edge(c).a, g_.edge(c).b); });
    EdgeSet dropped = excluded;
    dropped.insert(index);
    if (forest.find(e.a) == forest.find(e.b)) {
      // Closes a cycle in the contracted graph.
      run(index + 1, chosen, chosen_count, dropped);
      return;
    }
    EdgeSet grown = chosen;
    grown.insert(index);
    run(index + 1, grown, chosen_count + 1, excluded);
    if (stays_connected(dropped)) run(index + 1, chosen, chosen_count, dropped);
  }

 private:
  bool stays_connected(const EdgeSet& dropped) const {
    DisjointSets dsu(g_.vertex_count());
    for (int i = 0; i < g_.edge_count(); ++i) {
      if (dropped.contains(i)) continue;
      dsu.unite(g_.edge(i).a, g_.edge(i).b);
    }
    return dsu.set_count() == 1;
  }

  const Graph& g_;
  MotifFamily& out_;
  std::size_t limit_;
};

}  // namespace

MotifFamily enumerate_paths(const Graph& g, int source, int target, std::size_t limit) {
  MotifFamily family;
  family.rule = RuleSpec::two_terminal(source, target);
  family.rule.validate(g);
  family.edge_count = g.edge_count();
  g.all_edges();  // capacity check
  PathSearch search(g, target, family, limit);
  search.run(source);
  family.canonicalize();
  return family;
}

MotifFamily enumerate_spanning_trees(const Graph& g, std::size_t limit) {
  MotifFamily family;
  family.rule = RuleSpec::all_terminal();
  family.edge_count = g.edge_count();
  g.all_edges();
  if (!is_connected(g)) return family;
  TreeSearch search(g, family, limit);
  search.run(0, EdgeSet{}, 0, EdgeSet{});
  family.canonicalize();
  return family;
}

MotifFamily enumerate_minimal_generic(const Graph& g, const RuleSpec& rule, std::size_t limit) {
  const int e_count = g.edge_count();
  if (e_count > kGenericEdgeCap)
    throw CapacityError("generic motif enumeration supports at most " + std::to_string(kGenericEdgeCap) +
                        " edges (graph has " + std::to_string(e_count) + "); use Monte Carlo estimation instead");
  MotifFamily family;
  family.rule = rule;
  family.edge_count = e_count;
  RuleEvaluator eval(rule, g);

  std::vector<std::uint64_t> kept;
  const std::uint64_t full = e_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e_count) - 1;
  for (int k = 0; k <= e_count; ++k) {
    // Gosper's hack over all k-subsets; motifs found at size k are only
    // compared against strictly smaller ones, so they join `kept` afterwards.
    const std::size_t stratum_start = kept.size();
    std::vector<std::uint64_t> found;
    std::uint64_t mask = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    while (true) {
      bool covered = false;
      for (std::size_t i = 0; i < stratum_start && !covered; ++i) covered = (mask & kept[i]) == kept[i];
      if (!covered && eval(EdgeSet::from_word(mask))) {
        found.push_back(mask);
        if (kept.size() + found.size() > limit)
          throw CapacityError("motif family exceeds the limit of " + std::to_string(limit) + " motifs");
      }
      if (k == 0 || mask == (full & ~((std::uint64_t{1} << (e_count - k)) - 1))) break;
      const std::uint64_t c = mask & -mask;
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    kept.insert(kept.end(), found.begin(), found.end());
  }
  for (std::uint64_t m : kept) family.motifs.push_back(EdgeSet::from_word(m));
  family.canonicalize();
  return family;
}

MotifFamily enumerate_motifs(const Graph& g, const RuleSpec& rule, std::size_t limit) {
  rule.validate(g);
  switch (rule.kind) {
    case RuleKind::two_terminal: return enumerate_paths(g, *rule.source, *rule.target, limit);
    case RuleKind::all_terminal: return enumerate_spanning_trees(g, limit);
    default: return enumerate_minimal_generic(g, rule, limit);
  }
}

std::pair<int, std::size_t> minimal_size_and_count(const MotifFamily& family) {
  if (family.empty()) throw DomainError("motif family is empty");
  const int k_min = family.motifs.front().size();
  std::size_t count = 0;
  for (const EdgeSet& m : family.motifs) count += m.size() == k_min;
  return {k_min, count};
}

}  // namespace relipoly
