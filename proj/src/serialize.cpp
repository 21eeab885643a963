#include "relipoly/serialize.hpp"

#include "relipoly/errors.hpp"

#include <charconv>

namespace relipoly {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Rk: return "Rk";
    case Basis::Pk: return "Pk";
    case Basis::Nk: return "Nk";
  }
  return "?";
}

namespace {

template <class V>
Json vector_json(const V& v) {
  Json j;
  j["basis"] = basis_name(V::basis);
  j["edge_count"] = v.edge_count;
  if (v.complete_through) j["complete_through"] = *v.complete_through;
  Json coeffs = Json::array();
  for (const auto& c : v.values) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  return j;
}

template <class V>
V vector_from_json(const Json& j) {
  try {
    if (j.at("basis").get<std::string>() != basis_name(V::basis))
      throw ParseError("expected basis " + basis_name(V::basis));
    V v(j.at("edge_count").get<int>());
    const auto& coeffs = j.at("coefficients");
    if (coeffs.size() != v.values.size()) throw ParseError("coefficient count must be edge_count + 1");
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const std::string text = coeffs[k].is_string() ? coeffs[k].get<std::string>() : coeffs[k].dump();
      const Rational q = parse_rational(text);
      if (boost::multiprecision::denominator(q) != 1) throw ParseError("coefficient " + text + " is not an integer");
      v.values[k] = boost::multiprecision::numerator(q);
    }
    if (j.contains("complete_through")) v.complete_through = j["complete_through"].get<int>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coefficient JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const RkVector& v) { return vector_json(v); }
Json to_json(const PkVector& v) { return vector_json(v); }
Json to_json(const NkVector& v) { return vector_json(v); }
NkVector nk_from_json(const Json& j) { return vector_from_json<NkVector>(j); }
RkVector rk_from_json(const Json& j) { return vector_from_json<RkVector>(j); }

Json rule_to_json(const RuleSpec& rule, const Graph& g) {
  Json j;
  j["rule"] = to_string(rule.kind);
  if (rule.source) j["source"] = g.label(*rule.source);
  if (rule.target) j["target"] = g.label(*rule.target);
  if (!rule.terminals.empty()) {
    Json t = Json::array();
    for (int v : rule.terminals) t.push_back(g.label(v));
    j["terminals"] = t;
  }
  if (rule.alpha) j["alpha"] = to_string(*rule.alpha);
  return j;
}

RuleSpec rule_from_json(const Json& j, const Graph& g) {
  try {
    RuleSpec rule;
    rule.kind = parse_rule_kind(j.at("rule").get<std::string>());
    auto vertex = [&](const Json& v) { return g.vertex(v.is_string() ? v.get<std::string>() : v.dump()); };
    if (j.contains("source")) rule.source = vertex(j["source"]);
    if (j.contains("target")) rule.target = vertex(j["target"]);
    if (j.contains("terminals"))
      for (const auto& t : j["terminals"]) rule.terminals.push_back(vertex(t));
    if (j.contains("alpha")) {
      const auto& a = j["alpha"];
      rule.alpha = parse_rational(a.is_string() ? a.get<std::string>() : a.dump());
    }
    rule.validate(g);
    return rule;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rule JSON: ") + e.what());
  }
}

Json motifs_to_json(const MotifFamily& family, const Graph& g) {
  Json j;
  j["rule"] = rule_to_json(family.rule, g);
  j["edge_count"] = family.edge_count;
  j["motif_count"] = family.count();
  Json list = Json::array();
  for (const EdgeSet& m : family.motifs) list.push_back(m.indices());
  j["motifs"] = list;
  Json hist = Json::object();
  for (const auto& [size, count] : family.size_histogram()) hist[std::to_string(size)] = count;
  j["histogram"] = hist;
  return j;
}

Json nkl_table_to_json(const NklTable& table, const NkVector& nk, const RkVector& rk) {
  Json j;
  j["edge_count"] = table.edge_count;
  j["motif_count"] = table.motif_count;
  if (table.truncation_bound) j["k_max"] = *table.truncation_bound;
  const int l_max = table.max_l();
  const int k_limit = table.truncation_bound ? std::min(*table.truncation_bound, table.edge_count) : table.edge_count;
  Json rows = Json::array();
  for (int k = 0; k <= k_limit; ++k) {
    Json row;
    row["k"] = k;
    Json counts = Json::object();
    for (int l = 1; l <= l_max; ++l) counts[std::to_string(l)] = to_string(table.at(l, k));
    row["N_l"] = counts;
    row["N"] = to_string(nk[k]);
    row["R"] = to_string(rk[k]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["N"] = to_json(nk);
  j["R"] = to_json(rk);
  return j;
}

Json constraint_report_to_json(const ConstraintReport& rep) {
  Json j;
  j["motif_count"] = rep.motif_count;
  j["empty_family"] = rep.empty_family;
  j["partial"] = rep.partial;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["abs_coefficient_sum"] = to_string(rep.abs_coefficient_sum);
  j["two_pow_f_minus_one"] = to_string(rep.two_pow_f_minus_one);
  j["abs_sum_matches"] = rep.abs_sum_matches;
  j["all_passed"] = rep.all_passed();
  return j;
}

Json mc_to_json(const McEstimate& mc) {
  Json j;
  j["edge_count"] = mc.edge_count;
  j["samples_per_k"] = mc.samples_per_k;
  j["seed"] = mc.seed;
  j["accepted"] = mc.accepted;
  j["p_hat"] = mc.p_hat;
  j["std_err"] = mc.std_err;
  return j;
}

Json sign_change_to_json(const SignChange& c) {
  Json j;
  j["x_star"] = c.x_star;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["bracket_width"] = c.width();
  return j;
}

namespace {

Json power_json(const std::vector<BigInt>& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out[std::to_string(k)] = to_string(c[k]);
  return out;
}

Json samples_json(const std::vector<std::pair<double, double>>& s) {
  Json out = Json::array();
  for (auto [x, y] : s) out.push_back({x, y});
  return out;
}

Json changes_json(const std::vector<SignChange>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(sign_change_to_json(c));
  return out;
}

}  // namespace

Json tradeoff_to_json(const TradeoffRecord& rec) {
  Json j;
  j["r1"] = rec.r1;
  j["k1"] = rec.k1;
  j["k2"] = rec.k2;
  j["edge_budget"] = rec.edge_budget;
  j["r2_formula"] = to_string(rec.r2_formula);
  j["r2"] = rec.r2;
  j["r2_overridden"] = rec.r2_overridden;
  j["overlapping_as_stated"] = {{"power_coefficients", power_json(rec.overlapping_as_stated)},
                                {"max_on_grid", rec.stated_max},
                                {"sign_changes_vs_disjoint", changes_json(rec.stated_sign_changes)}};
  j["overlapping_core_variant"] = {{"power_coefficients", power_json(rec.overlapping_core_variant)},
                                   {"max_on_grid", rec.core_variant_max},
                                   {"sign_changes_vs_disjoint", changes_json(rec.core_variant_sign_changes)}};
  j["disjoint"] = {{"power_coefficients", power_json(rec.disjoint)}, {"max_on_grid", rec.disjoint_max}};
  j["difference_disjoint_minus_stated"] = samples_json(rec.stated_difference);
  j["difference_disjoint_minus_core_variant"] = samples_json(rec.core_variant_difference);
  return j;
}

Json importance_report_to_json(const ImportanceReport& rep, const Graph& g) {
  Json j;
  Json edges = Json::array();
  for (const auto& [e, imp] : rep.per_edge) {
    Json ej;
    ej["edge"] = e;
    ej["endpoints"] = {g.label(g.edge(e).a), g.label(g.edge(e).b)};
    ej["without_edge"] = to_json(imp.without_edge);
    edges.push_back(ej);
  }
  if (!rep.per_edge.empty()) j["reliability"] = to_json(rep.per_edge.begin()->second.with_edge);
  j["edges"] = edges;
  Json rankings = Json::array();
  for (const auto& [x, tiers] : rep.ranking_at) {
    Json rj;
    rj["x"] = x;
    Json tj = Json::array();
    for (const auto& t : tiers)
      tj.push_back({{"importance", to_double(t.importance)}, {"importance_exact", to_string(t.importance)}, {"edges", t.edges}});
    rj["tiers"] = tj;
    rankings.push_back(rj);
  }
  j["rankings"] = rankings;
  Json crossings = Json::array();
  for (const auto& c : rep.crossings) {
    Json cj = sign_change_to_json(c.root);
    cj["edge_a"] = c.edge_a;
    cj["edge_b"] = c.edge_b;
    crossings.push_back(cj);
  }
  j["crossings"] = crossings;
  return j;
}

Json removal_experiment_to_json(const RemovalExperiment& ex) {
  Json j;
  j["drop_a_at_half"] = to_double(ex.drop_a);
  j["drop_b_at_half"] = to_double(ex.drop_b);
  j["drop_a_exact"] = to_string(ex.drop_a);
  j["drop_b_exact"] = to_string(ex.drop_b);
  j["min_b_minus_a_before"] = ex.min_b_minus_a_before;
  j["b_dominates_before"] = ex.b_dominates_before;
  j["a_drops_more"] = ex.a_drops_more;
  j["relative_drop_a_at_half"] = to_double(ex.relative_drop_a);
  j["relative_drop_b_at_half"] = to_double(ex.relative_drop_b);
  j["a_drops_more_relative"] = ex.a_drops_more_relative;
  return j;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << "x,R\n";
  for (const auto& p : curve) out << format_double(p.x) << ',' << format_double(p.r) << '\n';
}

void write_mc_csv(std::ostream& out, const McEstimate& mc) {
  out << "k,p_hat,std_err\n";
  for (int k = 0; k <= mc.edge_count; ++k)
    out << k << ',' << format_double(mc.p_hat[k]) << ',' << format_double(mc.std_err[k]) << '\n';
}

}  // namespace relipoly
