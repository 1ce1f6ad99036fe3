#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "guesswork/random.hpp"
#include "guesswork/serialize.hpp"

using namespace guesswork;

namespace {

std::string fixture(const char* name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::string write_temp(const char* name, const std::string& text) {
  std::string path = std::string("/tmp/guesswork_serialize_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

TEST_CASE("bundled fixtures load with the documented contents") {
  Ensemble zero_plus = load_ensemble(fixture("zero_plus.json"));
  CHECK(zero_plus.size() == 2);
  CHECK(zero_plus.dim() == 2);
  CHECK(zero_plus.prob(0) == 0.5);
  CHECK(zero_plus.prob(1) == 0.5);
  CHECK(zero_plus.state(0).matrix()(0, 0) == Complex(1.0, 0.0));
  CHECK(zero_plus.state(1).matrix()(0, 1) == Complex(0.5, 0.0));

  Ensemble orthogonal = load_ensemble(fixture("orthogonal.json"));
  CHECK(orthogonal.state(0).matrix()(0, 0) == Complex(1.0, 0.0));
  CHECK(orthogonal.state(1).matrix()(1, 1) == Complex(1.0, 0.0));

  Ensemble identical = load_ensemble(fixture("identical.json"));
  CHECK(matrices_equal(identical.state(0).matrix(), identical.state(1).matrix()));
}

TEST_CASE("matrix json round trip is exact") {
  Rng rng(501);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix m = random_ginibre(1 + rng.uniform_int(4), 1 + rng.uniform_int(4), rng);
    Matrix back = matrix_from_json(json::parse(to_json(m).dump()));
    CHECK(matrices_equal(m, back));
  }
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0]],[[1,0],[0,0]]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0,0]]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,0]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,\"x\"]]]")), ParseError);
}

TEST_CASE("ranking json is one based") {
  Permutation p({2, 0, 1});
  json j = to_json(p);
  CHECK(j == json::parse("[3,1,2]"));
  CHECK(permutation_from_json(j) == p);

  CHECK_THROWS_AS(permutation_from_json(json::parse("[]")), ParseError);
  CHECK_THROWS_AS(permutation_from_json(json::parse("[1,\"b\"]")), ParseError);
  CHECK_THROWS_AS(permutation_from_json(json::parse("[1.5,2]")), ParseError);
  SUBCASE("zero based input fails the bijection check") {
    CHECK_THROWS_AS(permutation_from_json(json::parse("[0,1]")), ValidationError);
  }
}

TEST_CASE("ensemble json round trip") {
  Rng rng(502);
  for (int rep = 0; rep < 10; ++rep) {
    Ensemble e = random_ensemble(2 + rng.uniform_int(3), 2 + rng.uniform_int(3), rng);
    Ensemble back = ensemble_from_json(json::parse(to_json(e).dump()));
    REQUIRE(back.size() == e.size());
    REQUIRE(back.dim() == e.dim());
    for (int x = 0; x < e.size(); ++x) {
      CHECK(back.prob(x) == e.prob(x));
      CHECK((back.state(x).matrix() - e.state(x).matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("ensemble json separates schema errors from invariant errors") {
  json good = json::parse(R"({"dim":2,
    "states":[[[[1,0],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[0,0],[1,0]]]],
    "probs":[0.5,0.5]})");
  CHECK_NOTHROW(ensemble_from_json(good));

  SUBCASE("missing fields") {
    json j = good;
    j.erase("dim");
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
    j = good;
    j.erase("states");
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
    j = good;
    j.erase("probs");
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
  }
  SUBCASE("bad dim") {
    json j = good;
    j["dim"] = 0;
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
    j["dim"] = 2.5;
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
    j["dim"] = 3;
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
  }
  SUBCASE("probs length mismatch") {
    json j = good;
    j["probs"] = json::parse("[1.0]");
    CHECK_THROWS_AS(ensemble_from_json(j), ParseError);
  }
  SUBCASE("well formed but invalid values raise ValidationError") {
    json j = good;
    j["probs"] = json::parse("[0.6,0.6]");
    CHECK_THROWS_AS(ensemble_from_json(j), ValidationError);
    j = good;
    j["states"][0][0][0] = json::parse("[2,0]");
    CHECK_THROWS_AS(ensemble_from_json(j), ValidationError);
  }
}

TEST_CASE("povm json round trip") {
  Povm p = random_povm(3, 4, 77u);
  json j = to_json(p);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("outcomes") == json::parse("[1,2,3,4]"));
  Povm back = povm_from_json(j);
  REQUIRE(back.size() == p.size());
  for (int y = 0; y < p.size(); ++y) {
    CHECK((back.element(y) - p.element(y)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("ranking povm json round trip") {
  Permutation id2 = Permutation::identity(2);
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  RankingPovm e(2, {{id2, p0}, {id2.reversal(), Matrix::Identity(2, 2) - p0}});
  json j = to_json(e);
  CHECK(j.at("n") == 2);
  CHECK(j.at("outcomes")[0] == json::parse("[1,2]"));
  CHECK(j.at("outcomes")[1] == json::parse("[2,1]"));
  RankingPovm back = ranking_povm_from_json(j);
  REQUIRE(back.size() == 2);
  CHECK(back.outcome(0) == id2);
  CHECK(back.outcome(1) == id2.reversal());
  CHECK(matrices_equal(back.element(0), p0));

  SUBCASE("outcome count must match element count") {
    json bad = j;
    bad["outcomes"].erase(1);
    CHECK_THROWS_AS(ranking_povm_from_json(bad), ParseError);
  }
}

TEST_CASE("channel json round trip") {
  KrausChannel ch = random_channel(2, 2, 91u);
  json j = to_json(ch);
  CHECK(j.at("dim_in") == 2);
  CHECK(j.at("dim_out") == 2);
  KrausChannel back = channel_from_json(json::parse(j.dump()));
  REQUIRE(back.size() == ch.size());
  for (int l = 0; l < ch.size(); ++l) {
    CHECK((back.kraus(l) - ch.kraus(l)).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("kraus shape must match the declared dimensions") {
    json bad = j;
    bad["dim_out"] = 3;
    CHECK_THROWS_AS(channel_from_json(bad), ParseError);
  }
}

TEST_CASE("result stats and report json carry every field") {
  GuessworkResult result;
  result.value = 1.25;
  result.sigma_star = Permutation({1, 0});
  result.method = Method::closed_form;
  result.bracket = Bracket{1.0, 1.25, "optimal_ranking"};
  json j = to_json(result);
  CHECK(j.at("value") == 1.25);
  CHECK(j.at("method") == "closed_form");
  CHECK(j.at("sigma_star") == json::parse("[2,1]"));
  CHECK(j.at("bracket") == json::parse("[1.0,1.25]"));
  CHECK(j.at("povm").is_null());

  GuessworkResult open;
  open.method = Method::bracket_only;
  open.bracket = Bracket{1.0, 1.5, "trivial"};
  json jo = to_json(open);
  CHECK(jo.at("value").is_null());
  CHECK(jo.at("sigma_star").is_null());
  CHECK(jo.at("method") == "bracket_only");

  GuessworkResult solved = closed_form_guesswork(load_ensemble(fixture("zero_plus.json")));
  REQUIRE(solved.povm.has_value());
  RankingPovm reloaded = ranking_povm_from_json(to_json(solved).at("povm"));
  CHECK(reloaded.n() == 2);
  CHECK(reloaded.dim() == 2);

  GameStats stats;
  stats.shots = 10;
  stats.mean_guesses = 1.2;
  stats.std_error = 0.05;
  stats.histogram = {8, 2};
  json js = to_json(stats);
  CHECK(js.at("shots") == 10);
  CHECK(js.at("histogram") == json::parse("[8,2]"));

  TrialReport report;
  report.property = "example";
  report.trials = 3;
  report.passes = 2;
  report.skips = 1;
  report.skip_reasons["no_closed_form"] = 1;
  report.seed = 42;
  json jr = to_json(report);
  CHECK(jr.at("property") == "example");
  CHECK(jr.at("failures") == 0);
  CHECK(jr.at("skip_reasons").at("no_closed_form") == 1);
  CHECK(jr.at("seed") == 42);
}

TEST_CASE("file loading distinguishes io and parse failures") {
  CHECK_THROWS_AS(load_json_file("/tmp/guesswork_no_such_file.json"), ParseError);
  std::string garbled = write_temp("garbled.json", "{not json");
  CHECK_THROWS_AS(load_json_file(garbled), ParseError);
  std::string wrong_schema = write_temp("schema.json", "[1,2,3]");
  CHECK_THROWS_AS(load_ensemble(wrong_schema), ParseError);
  std::remove(garbled.c_str());
  std::remove(wrong_schema.c_str());
}
