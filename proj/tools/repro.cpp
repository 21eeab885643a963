#include "repro.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "relipoly/constraints.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/importance.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/serialize.hpp"

namespace relipoly::cli {

namespace {

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void expect(bool cond, const std::string& what, const std::string& detail = {}) {
    out_ << (cond ? "  ok        " : "  MISMATCH  ") << what;
    if (!cond && !detail.empty()) out_ << ": " << detail;
    out_ << '\n';
    ok_ = ok_ && cond;
  }

  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream d;
    d << "got " << actual << ", expected " << expected;
    expect(actual == expected, what, d.str());
  }

  void note(const std::string& text) { out_ << "  note      " << text << '\n'; }

  bool ok() const noexcept { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

Json load(const std::string& dir, const std::string& name) {
  const std::string path = dir + "/expected/" + name;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& dir, const Json& spec) {
  return read_edge_list_file(dir + "/" + spec.at("graph").get<std::string>());
}

/// Compares the listed {k: value} entries of a coefficient vector.
template <class V>
void compare_entries(Checker& c, const V& v, const Json& expected, const std::string& label) {
  for (const auto& [key, value] : expected.items()) {
    const int k = std::stoi(key);
    const std::string got = k < static_cast<int>(v.values.size()) ? to_string(v[k]) : "absent";
    c.equal(got, value.template get<std::string>(), label + "_" + key);
  }
}

/// Every coefficient not listed must be zero.
void expect_only_listed(Checker& c, const NkVector& v, const Json& expected, const std::string& label) {
  bool clean = true;
  for (int k = 0; k < static_cast<int>(v.values.size()); ++k)
    if (!expected.contains(std::to_string(k)) && v[k] != 0) clean = false;
  c.expect(clean, label + " has no other nonzero coefficients");
}

bool table1(const std::string& dir, std::ostream& out, int) {
  Checker c(out);
  const Json j = load(dir, "table1.json");
  NklTable table;
  table.edge_count = j.at("edge_count").get<int>();
  table.motif_count = j.at("motif_count").get<std::size_t>();
  for (const auto& e : j.at("N_l"))
    table.entries[{e.at("l").get<int>(), e.at("k").get<int>()}] = BigInt(e.at("count").get<std::string>());

  const NkVector nk = nk_from_table(table);
  compare_entries(c, nk, j.at("N"), "N");
  const RkVector rk = nk_to_rk(nk);
  compare_entries(c, rk, j.at("R"), "R");
  c.expect(rk_to_nk(rk) == nk, "R -> N round trip");

  const ConstraintReport rep = check_constraints(table, nk);
  for (const IdentityCheck& chk : rep.checks) c.expect(chk.passed, "identity " + chk.name, chk.detail);
  c.note("sum |N_k| = " + to_string(rep.abs_coefficient_sum) + ", 2^f - 1 = " + to_string(rep.two_pow_f_minus_one) +
         (rep.abs_sum_matches ? " (equal)" : " (differ; sign cancellation within a fixed k)"));
  return c.ok();
}

bool table2(const std::string& dir, std::ostream& out, int threads) {
  Checker c(out);
  const Json j = load(dir, "table2.json");
  const Graph g = load_graph(dir, j);
  const RuleSpec rule = rule_from_json(j.at("rule"), g);
  const MotifFamily family = enumerate_motifs(g, rule);
  c.equal(family.count(), j.at("motif_count").get<std::size_t>(), "motif count");
  const auto hist = family.size_histogram();
  for (const auto& [size, count] : j.at("histogram").items()) {
    const auto it = hist.find(std::stoi(size));
    c.equal(it == hist.end() ? std::size_t{0} : it->second, count.get<std::size_t>(), "motifs of size " + size);
  }
  c.equal(hist.size(), j.at("histogram").size(), "distinct motif sizes");

  const int k_max = j.at("k_max").get<int>();
  const NklTable table = nkl_truncated(family, k_max, threads);
  for (const auto& [lkey, row] : j.at("signed_N_l").items()) {
    const int l = std::stoi(lkey);
    for (const auto& [kkey, value] : row.items()) {
      const int k = std::stoi(kkey);
      const BigInt signed_count = (l % 2 == 1) ? table.at(l, k) : BigInt(-table.at(l, k));
      c.equal(to_string(signed_count), value.get<std::string>(), "N^(" + lkey + ")_" + kkey);
    }
  }
  for (const auto& [lk, count] : table.entries) {
    if (!j.at("signed_N_l").contains(std::to_string(lk.first)) && count != 0)
      c.note("additional entry N^(" + std::to_string(lk.first) + ")_" + std::to_string(lk.second) + " = " +
             to_string(count));
  }

  const NkVector nk = nk_from_table(table);
  compare_entries(c, nk, j.at("N"), "N");
  compare_entries(c, nk_to_rk(nk), j.at("R"), "R");
  return c.ok();
}

bool fig3poly(const std::string& dir, std::ostream& out, int threads) {
  Checker c(out);
  const Json j = load(dir, "fig3poly.json");
  const Graph g = load_graph(dir, j);
  const RuleSpec rule = rule_from_json(j.at("rule"), g);
  const MotifFamily family = enumerate_motifs(g, rule);
  c.equal(family.count(), j.at("motif_count").get<std::size_t>(), "motif count");
  const NklTable table = nkl_full(family, threads);
  const NkVector nk = nk_from_table(table);
  compare_entries(c, nk, j.at("N"), "N");
  const ConstraintReport rep = check_constraints(table, nk);
  c.equal(to_string(coefficient_sum(nk)), j.at("sum_N").get<std::string>(), "sum N_k");
  c.equal(to_string(rep.abs_coefficient_sum), j.at("sum_abs_N").get<std::string>(), "sum |N_k|");
  c.equal(to_string(rep.two_pow_f_minus_one), j.at("two_pow_f_minus_one").get<std::string>(), "2^f - 1");
  for (const IdentityCheck& chk : rep.checks) c.expect(chk.passed, "identity " + chk.name, chk.detail);

  for (const auto& [ekey, spec] : j.at("remove_edge").items()) {
    const int e = std::stoi(ekey);
    const NkVector reduced = exact_reliability(g.without_edge(e), rule, threads).nk;
    compare_entries(c, reduced, spec.at("N"), "without edge " + ekey + ": N");
    expect_only_listed(c, reduced, spec.at("N"), "without edge " + ekey);
  }
  return c.ok();
}

bool crossing618(const std::string& dir, std::ostream& out, int threads) {
  Checker c(out);
  const Json j = load(dir, "crossing618.json");
  const Graph g = load_graph(dir, j);
  const RuleSpec rule = rule_from_json(j.at("rule"), g);
  const double tol = j.at("tolerance").get<double>();
  const auto roots = find_crossings(g, rule, j.at("edge_a").get<int>(), j.at("edge_b").get<int>(), tol, threads);
  c.equal(roots.size(), j.at("root_count").get<std::size_t>(), "number of crossings");
  if (!roots.empty()) {
    const double want = j.at("x_star").get<double>();
    std::ostringstream d;
    d.precision(17);
    d << "x_star " << roots.front().x_star << ", expected " << want;
    c.expect(std::abs(roots.front().x_star - want) <= tol, "crossing location within " + format_double(tol), d.str());
    c.note("x_star = " + format_double(roots.front().x_star) + ", bracket width " +
           format_double(roots.front().width()));
  }
  return c.ok();
}

bool fig5tradeoff(const std::string& dir, std::ostream& out, int) {
  Checker c(out);
  const Json j = load(dir, "fig5tradeoff.json");
  const TradeoffRecord rec = tradeoff_compare(j.at("r1").get<int>(), j.at("k1").get<int>(), j.at("k2").get<int>(),
                                              j.at("r2").get<int>());
  c.equal(rec.edge_budget, j.at("edge_budget").get<long>(), "edge budget");
  c.equal(to_string(rec.r2_formula), j.at("r2_formula").get<std::string>(), "r2 from budget");

  const double tol = j.at("stated_sign_change_tolerance").get<double>();
  const auto& stated = j.at("stated_sign_changes");
  c.equal(rec.stated_sign_changes.size(), stated.size(), "sign changes, stated pairing");
  for (std::size_t i = 0; i < std::min(stated.size(), rec.stated_sign_changes.size()); ++i) {
    const double got = rec.stated_sign_changes[i].x_star;
    c.expect(std::abs(got - stated[i].get<double>()) <= tol, "stated crossing " + std::to_string(i),
             "got " + format_double(got));
  }
  c.equal(rec.core_variant_sign_changes.size(), j.at("core_variant_sign_changes").size(),
          "sign changes, shared-core pairing");

  const double below = j.at("disjoint_wins_below").get<double>();
  bool stated_ok = true;
  bool core_ok = true;
  for (const auto& [x, d] : rec.stated_difference)
    if (x > 0.0 && x <= below && !(d > 0.0)) stated_ok = false;
  for (const auto& [x, d] : rec.core_variant_difference)
    if (x > 0.0 && x <= below && !(d > 0.0)) core_ok = false;
  c.expect(stated_ok, "disjoint ahead of stated pairing on (0, " + format_double(below) + "]");
  c.expect(core_ok, "disjoint ahead of shared-core pairing on (0, " + format_double(below) + "]");
  c.note("max on [0,1]: stated " + format_double(rec.stated_max) + ", shared-core " +
         format_double(rec.core_variant_max) + ", disjoint " + format_double(rec.disjoint_max));
  if (rec.stated_max > 1.0) c.note("stated pairing exceeds 1 and is not a reliability polynomial");
  return c.ok();
}

bool fig4curves(const std::string& dir, std::ostream& out, int threads) {
  Checker c(out);
  const Json j = load(dir, "fig4curves.json");
  const Graph g = load_graph(dir, j);
  const int s = g.vertex(j.at("source").get<std::string>());
  const RuleSpec rule_a = RuleSpec::two_terminal(s, g.vertex(j.at("target_a").get<std::string>()));
  const RuleSpec rule_b = RuleSpec::two_terminal(s, g.vertex(j.at("target_b").get<std::string>()));
  EdgeSet removed;
  for (const auto& e : j.at("removed_edges")) removed.insert(e.get<int>());

  const RemovalExperiment ex =
      edge_removal_experiment(g, rule_a, rule_b, removed, j.at("grid_points").get<int>(), threads);
  c.equal(ex.b_dominates_before, j.at("b_dominates_before").get<bool>(), "R(S->T2) >= R(S->T1) before removal");
  c.equal(to_string(ex.drop_a), j.at("drop_a_exact").get<std::string>(), "drop at 1/2, S->T1");
  c.equal(to_string(ex.drop_b), j.at("drop_b_exact").get<std::string>(), "drop at 1/2, S->T2");
  const bool claimed = j.at("claimed_a_drops_more").get<bool>();
  c.note(std::string("S->T1 drops more: ") + (ex.a_drops_more ? "yes" : "no") + " (absolute " +
         format_double(to_double(ex.drop_a)) + " vs " + format_double(to_double(ex.drop_b)) + "), relative " +
         format_double(to_double(ex.relative_drop_a)) + " vs " + format_double(to_double(ex.relative_drop_b)));
  c.note(std::string("claimed ordering ") + (ex.a_drops_more == claimed ? "reproduced" : "not reproduced") +
         " (reported only)");
  return c.ok();
}

using Target = bool (*)(const std::string&, std::ostream&, int);

const std::vector<std::pair<std::string, Target>>& registry() {
  static const std::vector<std::pair<std::string, Target>> r = {
      {"table1", table1},   {"table2", table2},           {"fig3poly", fig3poly},
      {"fig4curves", fig4curves}, {"fig5tradeoff", fig5tradeoff}, {"crossing618", crossing618},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& repro_targets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool run_repro(const std::string& target, const std::string& fixture_dir, std::ostream& report, int threads) {
  for (const auto& [name, fn] : registry()) {
    if (name != target) continue;
    report << name << '\n';
    const bool ok = fn(fixture_dir, report, threads);
    report << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    return ok;
  }
  throw ConstraintError("unknown repro target '" + target + "'");
}

}  // namespace relipoly::cli
