#pragma once

#include "relipoly/constraints.hpp"
#include "relipoly/estimate.hpp"
#include "relipoly/graph.hpp"
#include "relipoly/importance.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/poly.hpp"
#include "relipoly/rules.hpp"
#include "relipoly/special_cases.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace relipoly {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

std::string basis_name(Basis b);

/// {"basis": ..., "edge_count": E, "coefficients": ["...", ...]} with
/// integers (and rationals "p/q") as strings.
Json to_json(const RkVector& v);
Json to_json(const PkVector& v);
Json to_json(const NkVector& v);
NkVector nk_from_json(const Json& j);
RkVector rk_from_json(const Json& j);

/// {"rule": "two_terminal", "source": "S", ...} with vertices as labels.
Json rule_to_json(const RuleSpec& rule, const Graph& g);
/// Accepts alpha as a JSON number or as a decimal/fraction string.
RuleSpec rule_from_json(const Json& j, const Graph& g);

Json motifs_to_json(const MotifFamily& family, const Graph& g);

/// Table rows keyed by k with one column per l, the collapsed N_k and R_k.
Json nkl_table_to_json(const NklTable& table, const NkVector& nk, const RkVector& rk);

Json constraint_report_to_json(const ConstraintReport& rep);
Json mc_to_json(const McEstimate& mc);
Json tradeoff_to_json(const TradeoffRecord& rec);
Json sign_change_to_json(const SignChange& c);
Json importance_report_to_json(const ImportanceReport& rep, const Graph& g);
Json removal_experiment_to_json(const RemovalExperiment& ex);

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);
void write_mc_csv(std::ostream& out, const McEstimate& mc);

}  // namespace relipoly
