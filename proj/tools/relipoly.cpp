// relipoly: command-line front end for the reliability polynomial library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relipoly/constraints.hpp"
#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"
#include "relipoly/importance.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/parallel.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/serialize.hpp"
#include "relipoly/special_cases.hpp"
#include "repro.hpp"

namespace {

using namespace relipoly;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kCapacity = 3,
  kConstraint = 4,
  kIo = 5,
};

struct RuleOptions {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::string> terminals;
  std::string alpha;
  std::string json;
};

struct Common {
  std::string graph_path;
  RuleOptions rule;
  std::string out;
  std::optional<int> threads;
};

void add_graph_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph", c.graph_path, "edge-list file")->required();
  cmd->add_option("--rule", c.rule.name, "two_terminal | k_terminal | all_terminal | ar_alpha | ear_alpha");
  cmd->add_option("--source", c.rule.source, "source vertex label");
  cmd->add_option("--target", c.rule.target, "target vertex label");
  cmd->add_option("--terminals", c.rule.terminals, "terminal labels (k_terminal)")->delimiter(',');
  cmd->add_option("--alpha", c.rule.alpha, "threshold as a fraction or decimal (ar_alpha, ear_alpha)");
  cmd->add_option("--rule-json", c.rule.json, "rule as inline JSON or a path to a JSON file");
}

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--threads", c.threads, "worker threads (default RELIPOLY_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RuleSpec build_rule(const RuleOptions& o, const Graph& g) {
  if (!o.json.empty()) {
    const bool inline_json = o.json.find('{') != std::string::npos;
    const Json j = inline_json ? parse_json_text(o.json, "--rule-json") : parse_json_text(read_file(o.json), o.json);
    RuleSpec r = rule_from_json(j, g);
    r.validate(g);
    return r;
  }
  if (o.name.empty()) throw ConstraintError("a rule is required: --rule or --rule-json");
  RuleSpec r;
  switch (parse_rule_kind(o.name)) {
    case RuleKind::two_terminal:
      if (o.source.empty() || o.target.empty()) throw ConstraintError("two_terminal needs --source and --target");
      r = RuleSpec::two_terminal(g.vertex(o.source), g.vertex(o.target));
      break;
    case RuleKind::k_terminal: {
      std::vector<int> t;
      for (const auto& label : o.terminals) t.push_back(g.vertex(label));
      r = RuleSpec::k_terminal(std::move(t));
      break;
    }
    case RuleKind::all_terminal:
      r = RuleSpec::all_terminal();
      break;
    case RuleKind::ar_alpha:
    case RuleKind::ear_alpha: {
      if (o.alpha.empty()) throw ConstraintError(o.name + " needs --alpha");
      const Rational a = parse_rational(o.alpha);
      r = parse_rule_kind(o.name) == RuleKind::ar_alpha ? RuleSpec::ar_alpha(a) : RuleSpec::ear_alpha(a);
      break;
    }
  }
  r.validate(g);
  return r;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void summary(const std::string& line) { std::cerr << line << '\n'; }

int threads_of(const Common& c) { return resolve_threads(c.threads); }

std::string curve_csv(const std::vector<CurvePoint>& curve) {
  std::ostringstream s;
  write_curve_csv(s, curve);
  return s.str();
}

// ---------------------------------------------------------------------------

struct MotifsCmd {
  Common c;
  std::size_t limit = kNoMotifLimit;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const MotifFamily family = enumerate_motifs(g, rule, limit);
    emit(c.out, dump(motifs_to_json(family, g)));
    std::ostringstream s;
    s << "motifs: " << family.count() << " minimal subgraphs for " << rule.describe();
    if (!family.empty()) {
      const auto [k_min, n] = minimal_size_and_count(family);
      s << ", smallest size " << k_min << " (" << n << ")";
    }
    summary(s.str());
    return kOk;
  }
};

struct NkCmd {
  Common c;
  std::optional<int> k_max;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const MotifFamily family = enumerate_motifs(g, rule);
    const int threads = threads_of(c);
    const NklTable table = k_max ? nkl_truncated(family, *k_max, threads) : nkl_full(family, threads);
    const NkVector nk = nk_from_table(table);
    const RkVector rk = nk_to_rk(nk);
    Json j;
    j["rule"] = rule_to_json(rule, g);
    j.update(nkl_table_to_json(table, nk, rk));
    emit(c.out, dump(j));
    summary("nk: " + std::to_string(family.count()) + " motifs, " +
            (k_max ? "truncated at k=" + std::to_string(*k_max) : std::string("full inclusion-exclusion")) +
            ", E=" + std::to_string(g.edge_count()));
    return kOk;
  }
};

struct RkCmd {
  Common c;
  bool brute_force = false;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const int threads = threads_of(c);
    NkVector nk;
    std::string route = "brute_force";
    if (brute_force) {
      nk = rk_to_nk(brute_force_rk(g, rule, threads));
    } else {
      const ExactReliability ex = exact_reliability(g, rule, threads);
      nk = ex.nk;
      if (ex.route == ExactRoute::motif_inclusion_exclusion) route = "motif_inclusion_exclusion";
    }
    const RkVector rk = nk_to_rk(nk);
    Json j;
    j["rule"] = rule_to_json(rule, g);
    j["route"] = route;
    j["R"] = to_json(rk);
    j["P"] = to_json(rk_to_pk(rk));
    j["N"] = to_json(nk);
    emit(c.out, dump(j));
    summary("rk: E=" + std::to_string(g.edge_count()) + ", route " + route + ", R(1/2)=" +
            format_double(evaluate(nk, 0.5)));
    return kOk;
  }
};

struct McCmd {
  Common c;
  int samples = 0;
  std::uint64_t seed = 1;
  int grid_points = 201;
  std::string curve_out;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const McEstimate mc = monte_carlo_pk(g, rule, samples, seed, threads_of(c));
    std::ostringstream csv;
    write_mc_csv(csv, mc);
    emit(c.out, csv.str());
    if (!curve_out.empty()) emit(curve_out, curve_csv(reliability_curve(mc, grid_points)));
    double max_err = 0.0;
    for (double e : mc.std_err) max_err = std::max(max_err, e);
    summary("mc: E=" + std::to_string(g.edge_count()) + ", " + std::to_string(samples) + " samples per k, seed " +
            std::to_string(seed) + ", max std_err " + format_double(max_err));
    return kOk;
  }
};

struct CurveCmd {
  Common c;
  int grid_points = 201;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const NkVector nk = exact_reliability(g, rule, threads_of(c)).nk;
    const auto curve = reliability_curve(nk, grid_points);
    emit(c.out, curve_csv(curve));
    summary("curve: " + std::to_string(curve.size()) + " points, R(1/2)=" + format_double(evaluate(nk, 0.5)));
    return kOk;
  }
};

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--pair expects a,b but got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const int ia = std::stoi(a, &used_a);
    const int ib = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {ia, ib};
  } catch (const std::logic_error&) {
    throw ParseError("--pair expects two edge indices, got '" + text + "'");
  }
}

struct ImportanceCmd {
  Common c;
  std::vector<int> edges;
  std::vector<std::string> pairs;
  std::vector<double> at;
  bool crossings = false;
  double tol = 1e-9;
  int grid_points = 201;
  std::string curves_dir;
  std::string compare_target;
  std::vector<int> remove;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const int threads = threads_of(c);
    if (!compare_target.empty()) return experiment(g, rule, threads);

    for (int e : edges)
      if (e < 0 || e >= g.edge_count()) throw ConstraintError("edge index " + std::to_string(e) + " out of range");
    std::vector<std::pair<int, int>> pair_list;
    if (crossings) {
      for (const auto& p : pairs) pair_list.push_back(parse_pair(p));
      if (pair_list.empty()) {
        std::vector<int> pool = edges;
        if (pool.empty())
          for (int e = 0; e < g.edge_count(); ++e) pool.push_back(e);
        for (std::size_t i = 0; i < pool.size(); ++i)
          for (std::size_t k = i + 1; k < pool.size(); ++k) pair_list.emplace_back(pool[i], pool[k]);
      }
    }
    const std::vector<double> xs = at.empty() ? std::vector<double>{0.5} : at;
    ImportanceReport rep = importance_report(g, rule, xs, pair_list, tol, threads);
    if (!edges.empty())
      std::erase_if(rep.per_edge, [&](const auto& kv) { return std::find(edges.begin(), edges.end(), kv.first) == edges.end(); });

    Json j = importance_report_to_json(rep, g);
    for (auto& ej : j["edges"]) {
      const EdgeImportance& imp = rep.per_edge.at(ej["edge"].get<int>());
      Json values = Json::array();
      for (double x : xs) values.push_back({{"x", x}, {"importance", imp.at(x)}});
      ej["importance_at"] = values;
    }
    emit(c.out, dump(j));

    if (!curves_dir.empty()) {
      std::filesystem::create_directories(curves_dir);
      for (const auto& [e, imp] : rep.per_edge) {
        std::vector<CurvePoint> curve;
        for (int i = 0; i < grid_points; ++i) {
          const Rational x(i, grid_points - 1);
          curve.push_back({to_double(x), to_double(imp.at_exact(x))});
        }
        emit(curves_dir + "/importance_edge" + std::to_string(e) + ".csv", curve_csv(curve));
      }
    }
    summary("importance: " + std::to_string(rep.per_edge.size()) + " edges, " + std::to_string(rep.crossings.size()) +
            " crossings");
    return kOk;
  }

  int experiment(const Graph& g, const RuleSpec& rule_a, int threads) const {
    if (rule_a.kind != RuleKind::two_terminal)
      throw ConstraintError("--compare-target needs a two_terminal rule");
    const RuleSpec rule_b = RuleSpec::two_terminal(*rule_a.source, g.vertex(compare_target));
    EdgeSet removed;
    for (int e : remove) {
      if (e < 0 || e >= g.edge_count()) throw ConstraintError("edge index " + std::to_string(e) + " out of range");
      removed.insert(e);
    }
    const RemovalExperiment ex = edge_removal_experiment(g, rule_a, rule_b, removed, grid_points, threads);
    Json j = removal_experiment_to_json(ex);
    emit(c.out, dump(j));
    if (!curves_dir.empty()) {
      std::filesystem::create_directories(curves_dir);
      const auto write = [&](const std::string& name, const std::vector<double>& y) {
        std::vector<CurvePoint> curve;
        for (std::size_t i = 0; i < ex.x.size(); ++i) curve.push_back({ex.x[i], y[i]});
        emit(curves_dir + "/" + name + ".csv", curve_csv(curve));
      };
      write("a_before", ex.a_before);
      write("a_after", ex.a_after);
      write("b_before", ex.b_before);
      write("b_after", ex.b_after);
    }
    summary(std::string("importance: removal experiment, b dominates before: ") +
            (ex.b_dominates_before ? "yes" : "no") + ", a drops more at 1/2: " + (ex.a_drops_more ? "yes" : "no"));
    return kOk;
  }
};

struct TradeoffCmd {
  Common c;
  int r1 = 0;
  int k1 = 0;
  int k2 = 0;
  std::optional<int> r2;

  int run() const {
    const TradeoffRecord rec = tradeoff_compare(r1, k1, k2, r2);
    emit(c.out, dump(tradeoff_to_json(rec)));
    summary("tradeoff: r2=" + std::to_string(rec.r2) + (rec.r2_overridden ? " (override)" : "") +
            ", sign changes stated/core " + std::to_string(rec.stated_sign_changes.size()) + "/" +
            std::to_string(rec.core_variant_sign_changes.size()));
    return kOk;
  }
};

struct ConstraintsCmd {
  Common c;
  std::optional<int> k_max;

  int run() const {
    const Graph g = read_edge_list_file(c.graph_path);
    const RuleSpec rule = build_rule(c.rule, g);
    const MotifFamily family = enumerate_motifs(g, rule);
    const int threads = threads_of(c);
    const NklTable table = k_max ? nkl_truncated(family, *k_max, threads) : nkl_full(family, threads);
    const ConstraintReport rep = check_constraints(table, nk_from_table(table));
    Json j;
    j["rule"] = rule_to_json(rule, g);
    j.update(constraint_report_to_json(rep));
    emit(c.out, dump(j));
    std::size_t failed = 0;
    for (const auto& chk : rep.checks) failed += chk.passed ? 0 : 1;
    summary("constraints: " + std::to_string(rep.checks.size() - failed) + "/" + std::to_string(rep.checks.size()) +
            " identities hold, f=" + std::to_string(rep.motif_count));
    return rep.all_passed() ? kOk : kConstraint;
  }
};

struct ClosedFormCmd {
  Common c;
  std::string kind;
  int m = 0;
  int k0 = 0;
  std::optional<int> edges;
  int k1 = 0;
  std::optional<int> k2;

  int run() const {
    NkVector nk;
    if (kind == "sparse") {
      nk = sparse_nk_solutions(m, k0, k1, k2);
    } else {
      if (!edges) throw ConstraintError("--E is required for --kind " + kind);
      nk = kind == "disjoint" ? closed_form_disjoint(m, k0, *edges) : closed_form_chain_overlap(m, k0, *edges);
    }
    Json j;
    j["kind"] = kind;
    j["m"] = m;
    j["k0"] = k0;
    j["N"] = to_json(nk);
    if (kind != "sparse") j["R"] = to_json(nk_to_rk(nk));
    emit(c.out, dump(j));
    summary("closed-form: " + kind + ", m=" + std::to_string(m) + ", k0=" + std::to_string(k0) +
            ", sum N=" + to_string(coefficient_sum(nk)));
    return kOk;
  }
};

struct ReproCmd {
  Common c;
  std::vector<std::string> targets;
  std::string fixtures = RELIPOLY_FIXTURE_DIR;

  int run() const {
    std::vector<std::string> list = targets;
    if (list.empty() || (list.size() == 1 && list[0] == "all")) list = cli::repro_targets();
    std::ostringstream report;
    std::size_t passed = 0;
    for (const auto& t : list) passed += cli::run_repro(t, fixtures, report, threads_of(c)) ? 1 : 0;
    emit(c.out, report.str());
    summary("repro: " + std::to_string(passed) + "/" + std::to_string(list.size()) + " targets pass");
    return passed == list.size() ? kOk : kConstraint;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability polynomials through structural motifs", "relipoly"};
  app.require_subcommand(1);

  MotifsCmd motifs;
  NkCmd nk;
  RkCmd rk;
  McCmd mc;
  CurveCmd curve;
  ImportanceCmd importance;
  TradeoffCmd tradeoff;
  ConstraintsCmd constraints;
  ClosedFormCmd closed_form;
  ReproCmd repro;
  std::function<int()> action;

  auto* m = app.add_subcommand("motifs", "enumerate minimal accepted subgraphs (JSON)");
  add_graph_options(m, motifs.c);
  add_output_options(m, motifs.c);
  m->add_option("--limit", motifs.limit, "fail with a capacity error beyond this many motifs");
  m->callback([&] { action = [&] { return motifs.run(); }; });

  auto* n = app.add_subcommand("nk", "inclusion-exclusion table N_k^(l), N_k and R_k (JSON)");
  add_graph_options(n, nk.c);
  add_output_options(n, nk.c);
  n->add_option("--k-max", nk.k_max, "truncate unions above this many edges");
  n->callback([&] { action = [&] { return nk.run(); }; });

  auto* r = app.add_subcommand("rk", "exact R_k, P_k and N_k (JSON)");
  add_graph_options(r, rk.c);
  add_output_options(r, rk.c);
  r->add_flag("--brute-force", rk.brute_force, "enumerate all edge subsets instead of motifs");
  r->callback([&] { action = [&] { return rk.run(); }; });

  auto* s = app.add_subcommand("mc", "Monte Carlo estimate of P_k (CSV k,p_hat,std_err)");
  add_graph_options(s, mc.c);
  add_output_options(s, mc.c);
  s->add_option("--samples", mc.samples, "samples per k")->required()->check(CLI::PositiveNumber);
  s->add_option("--seed", mc.seed, "random seed")->capture_default_str();
  s->add_option("--grid-points", mc.grid_points, "points on the reliability curve")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  s->add_option("--curve-out", mc.curve_out, "also write the estimated curve (CSV x,R)");
  s->callback([&] { action = [&] { return mc.run(); }; });

  auto* cv = app.add_subcommand("curve", "exact reliability curve (CSV x,R)");
  add_graph_options(cv, curve.c);
  add_output_options(cv, curve.c);
  cv->add_option("--grid-points", curve.grid_points, "number of evenly spaced x values")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  cv->callback([&] { action = [&] { return curve.run(); }; });

  auto* im = app.add_subcommand("importance", "edge importance, rankings and crossings (JSON)");
  add_graph_options(im, importance.c);
  add_output_options(im, importance.c);
  im->add_option("--edge", importance.edges, "restrict the report to these edge indices");
  im->add_option("--pair", importance.pairs, "edge pair a,b for crossing search");
  im->add_option("--at", importance.at, "x values for rankings (default 0.5)");
  im->add_flag("--crossings", importance.crossings, "locate sign changes of R without a minus R without b");
  im->add_option("--tol", importance.tol, "root bracket width")->capture_default_str()->check(CLI::PositiveNumber);
  im->add_option("--grid-points", importance.grid_points, "points per CSV curve")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  im->add_option("--curves-dir", importance.curves_dir, "write CSV curves into this directory");
  im->add_option("--compare-target", importance.compare_target,
                 "run the removal experiment against a second target");
  im->add_option("--remove", importance.remove, "edges removed in the removal experiment")->delimiter(',');
  im->callback([&] { action = [&] { return importance.run(); }; });

  auto* t = app.add_subcommand("tradeoff", "overlapping versus disjoint motif families (JSON)");
  add_output_options(t, tradeoff.c);
  t->add_option("--r1", tradeoff.r1, "number of overlapping motifs")->required()->check(CLI::PositiveNumber);
  t->add_option("--k1", tradeoff.k1, "size of each overlapping motif")->required()->check(CLI::PositiveNumber);
  t->add_option("--k2", tradeoff.k2, "size of each disjoint motif")->required()->check(CLI::PositiveNumber);
  t->add_option("--r2", tradeoff.r2, "override the number of disjoint motifs")->check(CLI::PositiveNumber);
  t->callback([&] { action = [&] { return tradeoff.run(); }; });

  auto* ct = app.add_subcommand("constraints", "check the counting identities of a motif family (JSON)");
  add_graph_options(ct, constraints.c);
  add_output_options(ct, constraints.c);
  ct->add_option("--k-max", constraints.k_max, "truncate unions above this many edges");
  ct->callback([&] { action = [&] { return constraints.run(); }; });

  auto* cf = app.add_subcommand("closed-form", "N_k for disjoint, shared-chain and sparse families (JSON)");
  add_output_options(cf, closed_form.c);
  cf->add_option("--kind", closed_form.kind, "disjoint | chain | sparse")
      ->required()
      ->check(CLI::IsMember({"disjoint", "chain", "sparse"}));
  cf->add_option("--m", closed_form.m, "number of motifs")->required();
  cf->add_option("--k0", closed_form.k0, "motif size")->required();
  cf->add_option("--E", closed_form.edges, "edge count of the graph");
  cf->add_option("--k1", closed_form.k1, "second nonzero exponent (sparse)");
  cf->add_option("--k2", closed_form.k2, "third nonzero exponent (sparse)");
  cf->callback([&] { action = [&] { return closed_form.run(); }; });

  auto* rp = app.add_subcommand("repro", "rerun the bundled regression targets");
  add_output_options(rp, repro.c);
  std::vector<std::string> choices = cli::repro_targets();
  choices.push_back("all");
  rp->add_option("targets", repro.targets, "targets (default all)")->check(CLI::IsMember(choices));
  rp->add_option("--fixtures", repro.fixtures, "fixture directory")->capture_default_str();
  rp->callback([&] { action = [&] { return repro.run(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "relipoly: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    std::cerr << "relipoly: capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const ConstraintError& e) {
    std::cerr << "relipoly: constraint violated: " << e.what() << '\n';
    return kConstraint;
  } catch (const IoError& e) {
    std::cerr << "relipoly: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "relipoly: " << e.what() << '\n';
    return kOther;
  }
}
