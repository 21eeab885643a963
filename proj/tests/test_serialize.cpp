#include <doctest.h>

#include <sstream>

#include "relipoly/errors.hpp"
#include "relipoly/estimate.hpp"
#include "relipoly/incexc.hpp"
#include "relipoly/motifs.hpp"
#include "relipoly/serialize.hpp"

using namespace relipoly;

TEST_CASE("coefficient vectors round trip with integers as strings") {
  NkVector n(9);
  n[3] = 1;
  n[6] = -1;
  n[9] = BigInt("123456789012345678901234567890");
  const Json j = to_json(n);
  CHECK(j["basis"] == "Nk");
  CHECK(j["coefficients"][9] == "123456789012345678901234567890");
  CHECK(j["coefficients"][6] == "-1");
  CHECK(nk_from_json(j) == n);

  RkVector r(4);
  r[2] = 5;
  r.complete_through = 3;
  const Json rj = to_json(r);
  CHECK(rj["complete_through"] == 3);
  CHECK(rk_from_json(rj) == r);

  CHECK(to_json(rk_to_pk(r))["coefficients"][2] == "5/6");
}

TEST_CASE("malformed coefficient JSON") {
  NkVector n(2);
  Json j = to_json(n);
  CHECK_THROWS_AS(rk_from_json(j), ParseError);
  j["coefficients"].push_back("1");
  CHECK_THROWS_AS(nk_from_json(j), ParseError);
  Json k = to_json(n);
  k["coefficients"][1] = "1/2";
  CHECK_THROWS_AS(nk_from_json(k), ParseError);
  CHECK_THROWS_AS(nk_from_json(Json::object()), ParseError);
}

TEST_CASE("rules use vertex labels") {
  const Graph g = parse_edge_list("S a\na T\n");
  const RuleSpec r = RuleSpec::two_terminal(0, 2);
  const Json j = rule_to_json(r, g);
  CHECK(j.dump() == R"({"rule":"two_terminal","source":"S","target":"T"})");
  const RuleSpec back = rule_from_json(j, g);
  CHECK(back.source == 0);
  CHECK(back.target == 2);

  const RuleSpec ear = rule_from_json(Json::parse(R"({"rule":"ear_alpha","alpha":"7/16"})"), g);
  CHECK(ear.alpha == Rational(7, 16));
  const RuleSpec dec = rule_from_json(Json::parse(R"({"rule":"ar_alpha","alpha":0.4375})"), g);
  CHECK(dec.alpha == Rational(7, 16));
  const RuleSpec kt = rule_from_json(Json::parse(R"({"rule":"k_terminal","terminals":["S","T"]})"), g);
  CHECK(kt.terminals == std::vector<int>{0, 2});
  CHECK(rule_to_json(kt, g)["terminals"] == Json::parse(R"(["S","T"])"));

  CHECK_THROWS_AS(rule_from_json(Json::parse(R"({"source":"S"})"), g), ParseError);
  CHECK_THROWS_AS(rule_from_json(Json::parse(R"({"rule":"bogus"})"), g), ParseError);
  CHECK_THROWS_AS(rule_from_json(Json::parse(R"({"rule":"two_terminal","source":"S","target":"Q"})"), g),
                  ConstraintError);
}

TEST_CASE("motif JSON") {
  const Graph g = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/toy.edges");
  const MotifFamily f = enumerate_motifs(g, RuleSpec::two_terminal(0, 3));
  const Json j = motifs_to_json(f, g);
  CHECK(j["motif_count"] == 3);
  CHECK(j["motifs"][0] == Json::parse("[0,1,2]"));
  CHECK(j["histogram"] == Json::parse(R"({"3":1,"4":2})"));
  CHECK(j["rule"]["source"] == "S");
}

TEST_CASE("table JSON") {
  const Graph g = read_edge_list_file(RELIPOLY_FIXTURE_DIR "/toy.edges");
  const MotifFamily f = enumerate_motifs(g, RuleSpec::two_terminal(0, 3));
  const NklTable t = nkl_full(f);
  const NkVector n = nk_from_table(t);
  const Json j = nkl_table_to_json(t, n, nk_to_rk(n));
  REQUIRE(j["rows"].size() == 10);
  CHECK(j["rows"][4]["N_l"]["1"] == "2");
  CHECK(j["rows"][7]["N_l"]["2"] == "2");
  CHECK(j["rows"][7]["N"] == "-2");
  CHECK(j["rows"][9]["R"] == "1");
  CHECK_FALSE(j.contains("k_max"));
}

TEST_CASE("doubles print shortest and locale-free") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(std::stod(format_double(0.6180339887498949)) == 0.6180339887498949);
}

TEST_CASE("CSV writers") {
  std::ostringstream curve;
  write_curve_csv(curve, {{0.0, 0.0}, {0.5, 0.25}, {1.0, 1.0}});
  CHECK(curve.str() == "x,R\n0,0\n0.5,0.25\n1,1\n");

  McEstimate mc;
  mc.edge_count = 1;
  mc.samples_per_k = 4;
  mc.p_hat = {0.0, 0.75};
  mc.std_err = {0.0, 0.21650635094610965};
  std::ostringstream s;
  write_mc_csv(s, mc);
  CHECK(s.str() == "k,p_hat,std_err\n0,0,0\n1,0.75,0.21650635094610965\n");
}
