// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "relipoly/constraints.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"
#include "relipoly/importance.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/special_cases.hpp"

using namespace relipoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %s  %s  [%.3f s", id, pass ? "PASS" : "FAIL", title, secs);
  if (limit_seconds > 0) std::printf(" / limit %g s", limit_seconds);
  std::printf("]%s%s\n", out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Graph toy() { return read_edge_list_file(RELIPOLY_FIXTURE_DIR "/toy.edges"); }

/// enumerate_motifs with a capacity probe: throws CapacityError past f = 20.
MotifFamily exact_family(const Graph& g, const RuleSpec& rule) {
  return enumerate_motifs(g, rule, kFullUnionMotifCap);
}

/// Random graphs with V <= 8, E <= 14 whose families under every built-in
/// rule are small enough for full inclusion-exclusion, followed by every
/// multigraph with 1..4 edges on 2..5 vertices.
std::vector<Graph> oracle_graphs(int random_count, int& rejected) {
  std::vector<Graph> out;
  std::mt19937_64 rng(20240501);
  rejected = 0;
  while (static_cast<int>(out.size()) < random_count) {
    const int v = std::uniform_int_distribution<int>(2, 8)(rng);
    const int e = std::uniform_int_distribution<int>(1, 14)(rng);
    Graph g = oracle::random_graph(rng, v, e);
    bool fits = true;
    for (const RuleSpec& rule : oracle::builtin_rules(v)) {
      try {
        exact_family(g, rule);
      } catch (const CapacityError&) {
        fits = false;
      }
    }
    if (fits)
      out.push_back(std::move(g));
    else
      ++rejected;
  }
  for (int v = 2; v <= 5; ++v) {
    std::vector<Edge> pairs;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) pairs.push_back({a, b});
    const int p = static_cast<int>(pairs.size());
    // Non-decreasing index sequences = multisets of pairs.
    std::function<void(std::vector<Edge>&, int, int)> grow = [&](std::vector<Edge>& cur, int from, int left) {
      if (!cur.empty()) out.emplace_back(v, cur);
      if (left == 0) return;
      for (int i = from; i < p; ++i) {
        cur.push_back(pairs[i]);
        grow(cur, i, left - 1);
        cur.pop_back();
      }
    };
    std::vector<Edge> cur;
    grow(cur, 0, 4);
  }
  return out;
}

}  // namespace

int main() {
  criterion("AC1", "7-edge toy table N -> R conversion and round trip", 1e-3, [] {
    const NkVector n(7, ints({0, 0, 0, 3, 0, -1, -3, 2}));
    const RkVector r = nk_to_rk(n);
    const bool forward = r == RkVector(7, ints({0, 0, 0, 3, 12, 17, 7, 1}));
    const bool back = rk_to_nk(r) == n;
    return Outcome{forward && back, forward ? (back ? "" : "round trip differs") : "R differs"};
  });

  criterion("AC2", "4x4 grid corner-to-corner table, k_max = 10, one thread", 60, [] {
    const MotifFamily f = enumerate_paths(grid_graph(4, 4), 0, 15);
    const NklTable t = nkl_truncated(f, 10, 1);
    const NkVector n = nk_from_table(t);
    const RkVector r = nk_to_rk(n);
    std::ostringstream bad;
    auto expect = [&](bool ok, const std::string& what) {
      if (!ok) bad << what << "; ";
    };
    expect(f.count() == 184, "motif count");
    const auto hist = f.size_histogram();
    expect(hist.begin()->first == 6 && hist.rbegin()->first == 14, "motif sizes");
    expect(t.at(1, 6) == 20 && t.at(1, 8) == 36 && t.at(1, 10) == 48, "N^(1)");
    expect(t.at(2, 8) == 30 && t.at(2, 9) == 84 && t.at(2, 10) == 146, "N^(2)");
    expect(t.at(3, 10) == 144, "N^(3)");
    expect(n[6] == 20 && n[7] == 0 && n[8] == 6 && n[9] == -84 && n[10] == 10, "N");
    expect(r[6] == 20 && r[7] == 360 && r[8] == 3066 && r[9] == 16332 && r[10] == 60670, "R");
    return Outcome{bad.str().empty(), bad.str()};
  });

  criterion("AC3", "toy polynomial x^3+2x^4-x^6-2x^7+x^9 and its sums", 1, [] {
    const Graph g = toy();
    const MotifFamily f = enumerate_motifs(g, RuleSpec::two_terminal(g.vertex("S"), g.vertex("T")));
    const NklTable t = nkl_full(f);
    const NkVector n = nk_from_table(t);
    const ConstraintReport rep = check_constraints(t, n);
    const bool poly = n == NkVector(9, ints({0, 0, 0, 1, 2, 0, -1, -2, 0, 1}));
    const bool sums = coefficient_sum(n) == 1 && rep.abs_coefficient_sum == 7 && rep.two_pow_f_minus_one == 7;
    std::ostringstream d;
    d << "sum N=" << coefficient_sum(n) << ", sum |N|=" << rep.abs_coefficient_sum << ", 2^f-1="
      << rep.two_pow_f_minus_one;
    return Outcome{poly && sums && rep.all_passed(), d.str()};
  });

  criterion("AC4", "toy importance crossing of S1 and S3", 1, [] {
    const Graph g = toy();
    const auto roots = find_crossings(g, RuleSpec::two_terminal(g.vertex("S"), g.vertex("T")), 0, 3);
    std::ostringstream d;
    d.precision(12);
    d << roots.size() << " root(s)";
    if (!roots.empty()) d << ", x* = " << roots[0].x_star;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    return Outcome{roots.size() == 1 && std::abs(roots[0].x_star - golden) <= 1e-6, d.str()};
  });

  int rejected = 0;
  const std::vector<Graph> graphs = oracle_graphs(240, rejected);

  criterion("AC5", "brute force equals inclusion-exclusion on every built-in rule", 600, [&] {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    for (const Graph& g : graphs) {
      for (const RuleSpec& rule : oracle::builtin_rules(g.vertex_count())) {
        const RkVector brute = brute_force_rk(g, rule);
        const RkVector via_motifs = nk_to_rk(nk_from_table(nkl_full(exact_family(g, rule))));
        if (brute != via_motifs || brute.values != oracle::rk(g, rule)) ++mismatches;
        ++cases;
      }
    }
    std::ostringstream d;
    d << graphs.size() << " graphs (240 random, " << rejected << " random draws redrawn for f > 20), " << cases
      << " graph-rule cases, " << mismatches << " mismatches";
    return Outcome{mismatches == 0, d.str()};
  });

  criterion("AC6", "disjoint and shared-chain closed forms against brute force", 0, [] {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    for (int m = 1; m <= 4; ++m) {
      for (int k0 = 1; k0 <= 4; ++k0) {
        // m disjoint paths of k0 edges between vertices 0 and 1.
        std::vector<Edge> d;
        int next = 2;
        for (int p = 0; p < m; ++p) {
          int prev = 0;
          for (int i = 0; i < k0 - 1; ++i) {
            d.push_back({prev, next});
            prev = next++;
          }
          d.push_back({prev, 1});
        }
        const Graph disjoint(next, d);
        mismatches += nk_to_rk(closed_form_disjoint(m, k0, disjoint.edge_count())) !=
                      brute_force_rk(disjoint, RuleSpec::two_terminal(0, 1));
        // A shared chain of k0 - 1 edges, then m parallel edges.
        std::vector<Edge> c;
        int prev = 0;
        next = 2;
        for (int i = 0; i < k0 - 1; ++i) {
          c.push_back({prev, next});
          prev = next++;
        }
        for (int i = 0; i < m; ++i) c.push_back({prev, 1});
        const Graph chain(next, c);
        mismatches += nk_to_rk(closed_form_chain_overlap(m, k0, chain.edge_count())) !=
                      brute_force_rk(chain, RuleSpec::two_terminal(0, 1));
        cases += 2;
      }
    }
    std::ostringstream d;
    d << cases << " constructions, " << mismatches << " mismatches";
    return Outcome{mismatches == 0, d.str()};
  });

  criterion("AC7", "matrix-tree count against spanning-tree enumeration", 0, [] {
    std::mt19937_64 rng(7);
    std::size_t mismatches = 0;
    for (int i = 0; i < 50; ++i) {
      const Graph g = oracle::random_connected_graph(rng, 2 + i % 6, i % 10);
      if (BigInt(enumerate_spanning_trees(g).count()) != spanning_tree_count(g)) ++mismatches;
    }
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const BigInt k4_count = spanning_tree_count(k4);
    const BigInt grid_count = spanning_tree_count(grid_graph(4, 4));
    std::ostringstream d;
    d << "50 random graphs, " << mismatches << " mismatches; K4=" << k4_count << ", grid=" << grid_count;
    return Outcome{mismatches == 0 && k4_count == 16 && grid_count == 100352, d.str()};
  });

  criterion("AC8", "Monte Carlo within 4 standard errors, 1e5 samples per k", 30, [] {
    const Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    const Graph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph g = toy();
    const std::vector<std::pair<const Graph*, RuleSpec>> cases = {
        {&tri, RuleSpec::all_terminal()},
        {&square, RuleSpec::all_terminal()},
        {&g, RuleSpec::two_terminal(g.vertex("S"), g.vertex("T"))},
    };
    double worst = 0.0;
    bool ok = true;
    for (const auto& [graph, rule] : cases) {
      const PkVector exact = rk_to_pk(brute_force_rk(*graph, rule));
      const McEstimate mc = monte_carlo_pk(*graph, rule, 100000, 12345);
      for (int k = 0; k <= graph->edge_count(); ++k) {
        const double p = to_double(exact[k]);
        const double se = std::sqrt(p * (1 - p) / mc.samples_per_k);
        if (se == 0.0) {
          ok = ok && mc.p_hat[k] == p;
        } else {
          worst = std::max(worst, std::abs(mc.p_hat[k] - p) / se);
          ok = ok && std::abs(mc.p_hat[k] - p) <= 4 * se;
        }
      }
    }
    std::ostringstream d;
    d.precision(3);
    d << "seed 12345, largest deviation " << worst << " standard errors";
    return Outcome{ok, d.str()};
  });

  criterion("AC9", "counting identities on every exact family with f <= 20", 0, [&] {
    std::size_t families = 0;
    std::size_t failed = 0;
    auto check = [&](const NklTable& t) {
      const ConstraintReport rep = check_constraints(t, nk_from_table(t));
      ++families;
      if (!rep.all_passed()) ++failed;
    };
    for (const Graph& g : graphs)
      for (const RuleSpec& rule : oracle::builtin_rules(g.vertex_count())) {
        const MotifFamily f = exact_family(g, rule);
        if (!f.empty()) check(nkl_full(f));
      }
    const Graph g = toy();
    check(nkl_full(enumerate_motifs(g, RuleSpec::two_terminal(g.vertex("S"), g.vertex("T")))));
    NklTable table1;
    table1.edge_count = 7;
    table1.motif_count = 4;
    table1.entries = {{{1, 3}, 3}, {{1, 5}, 1}, {{2, 5}, 2}, {{2, 6}, 3}, {{2, 7}, 1}, {{3, 7}, 4}, {{4, 7}, 1}};
    check(table1);
    const ConstraintReport t1 = check_constraints(table1, nk_from_table(table1));
    std::ostringstream d;
    d << families << " families, " << failed << " with a failed identity; reported: 7-edge toy table sum |N_k| = "
      << t1.abs_coefficient_sum << " vs 2^f - 1 = " << t1.two_pow_f_minus_one;
    return Outcome{failed == 0, d.str()};
  });

  criterion("AC10", "grid: R(S->T2) >= R(S->T1) before removal; drop at 1/2 reported", 120, [] {
    const Graph g = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/grid44.edges");
    const RuleSpec t1 = RuleSpec::two_terminal(g.vertex("0"), g.vertex("15"));
    const RuleSpec t2 = RuleSpec::two_terminal(g.vertex("0"), g.vertex("3"));
    const RemovalExperiment ex = edge_removal_experiment(g, t1, t2, EdgeSet{0, 1}, 201, 1);
    std::ostringstream d;
    d.precision(4);
    d << "min R(T2)-R(T1) = " << ex.min_b_minus_a_before << "; reported: drop at 1/2 S->T1 "
      << to_double(ex.drop_a) << " vs S->T2 " << to_double(ex.drop_b) << " (relative " << to_double(ex.relative_drop_a)
      << " vs " << to_double(ex.relative_drop_b) << "), larger for S->T1: " << (ex.a_drops_more ? "yes" : "no");
    return Outcome{ex.b_dominates_before, d.str()};
  });

  std::printf("%d criterion/criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
