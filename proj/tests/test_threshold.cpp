#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dsg/errors.hpp"
#include "dsg/game.hpp"
#include "dsg/threshold.hpp"

using dsg::Int;
using dsg::Rational;
using namespace dsg::game;
using namespace dsg::thresh;

namespace {

Game load(const std::string& name) {
  std::ifstream in(std::string(DSG_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str());
}

}  // namespace

TEST_CASE("threshold exponent values") {
  CHECK(lambda_zero_exponent(Int(1), Int(1)) == 13);
  CHECK(lambda_zero_exponent(Int(4), Int(1)) == 20);
  CHECK(lambda_zero_exponent(Int(4), Int(2)) == 23);
  CHECK(lambda_zero_exponent(Int(3), Int(3)) == 22);
  CHECK_THROWS_AS(lambda_zero_exponent(Int(0), Int(1)),
                  dsg::PreconditionViolated);
  CHECK_THROWS_AS(lambda_zero_exponent(Int(1), Int(0)),
                  dsg::PreconditionViolated);
}

TEST_CASE("threshold value and monotonicity") {
  CHECK(lambda_zero(Int(1), Int(1)) == Rational(38263751, 38263752));
  Int den("281507115497975139528");
  CHECK(lambda_zero(Int(3), Int(3)) == Rational(Int(den - 1)) / Rational(den));
  CHECK(lambda_zero(Int(1), Int(1)) < lambda_zero(Int(2), Int(1)));
  CHECK(lambda_zero(Int(2), Int(1)) < lambda_zero(Int(2), Int(2)));
  CHECK(lambda_zero(Int(2), Int(2)) < lambda_zero(Int(3), Int(3)));
  CHECK(lambda_zero(Int(5), Int(4)) < 1);
}

TEST_CASE("game-derived threshold parameters") {
  Game loop3 = load("loop3.game");
  CHECK(game_weight_bound(loop3) == 3);
  CHECK(lambda_zero_for(loop3) == lambda_zero(Int(3), Int(3)));
  Game flat = make_game(2, {1, 2}, {{0, 1, 0}, {1, 0, 0}});
  CHECK(game_weight_bound(flat) == 1);
  CHECK(lambda_zero_for(flat) == lambda_zero(Int(2), Int(1)));
}

TEST_CASE("ordering is stable above the threshold") {
  Game switch9 = load("switch9.game");
  PositionalStrategy s1 = least_index_strategy(switch9, 1);
  PositionalStrategy s2 = greatest_index_strategy(switch9, 1);
  PositionalStrategy tau = least_index_strategy(switch9, 2);
  Rational l0 = lambda_zero_for(switch9);
  Rational mid = (l0 + 1) / 2;
  CHECK(ordering_preserved(switch9, 0, s1, tau, s2, tau, l0));
  CHECK(ordering_preserved(switch9, 0, s1, tau, s2, tau, mid));
  // Identical profiles give the zero difference, trivially preserved.
  CHECK(ordering_preserved(switch9, 0, s1, tau, s1, tau, mid));
  CHECK_THROWS_AS(ordering_preserved(switch9, 0, s1, tau, s2, tau, Rational(1, 2)),
                  dsg::LambdaBelowThreshold);
  CHECK_THROWS_AS(ordering_preserved(switch9, 0, s1, tau, s2, tau, Rational(3, 2)),
                  dsg::LambdaOutOfRange);
}

TEST_CASE("strategy traces coincide above the threshold") {
  for (const char* name : {"loop3.game", "switch9.game"}) {
    Game g = load(name);
    Rational l0 = lambda_zero_for(g);
    Rational mid = (l0 + 1) / 2;
    for (int rule = 0; rule < 3; ++rule) {
      PositionalStrategy s0 = rule == 0   ? least_index_strategy(g, 1)
                              : rule == 1 ? greatest_index_strategy(g, 1)
                                          : middle_index_strategy(g, 1);
      TraceComparison tc = trace_equivalence(g, s0, mid);
      CHECK(tc.equal);
      CHECK(tc.trace_at_threshold.iterations() >= 2);
      CHECK(tc.trace_at_threshold.steps == tc.trace_at_lambda.steps);
    }
    CHECK_THROWS_AS(trace_equivalence(g, least_index_strategy(g, 1),
                                      Rational(1, 2)),
                    dsg::LambdaBelowThreshold);
  }
}

TEST_CASE("iteration sweep rows") {
  Game loop3 = load("loop3.game");
  std::vector<Rational> ls = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  auto rows = iteration_sweep(loop3, ls, least_index_strategy(loop3, 1));
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].lambda == ls[i]);
    CHECK(rows[i].iterations == 2);  // loop3 has a single profile
    CHECK(rows[i].wall_ms >= 0.0);
  }
}

TEST_CASE("report text format") {
  ThresholdReport r;
  r.n = 1;
  r.w = 1;
  r.exponent = 13;
  r.lambda0 = Rational(38263751, 38263752);
  r.rows.push_back({Rational(1, 2), false, 3});
  r.rows.push_back({Rational(9, 10), true, 2});
  CHECK(threshold_report_text(r) ==
        "n: 1\n"
        "W: 1\n"
        "exponent: 13\n"
        "lambda0: 38263751/38263752\n"
        "rows: 2\n"
        "lambda[0]: 1/2\n"
        "traces_equal[0]: false\n"
        "iterations[0]: 3\n"
        "lambda[1]: 9/10\n"
        "traces_equal[1]: true\n"
        "iterations[1]: 2\n");
}
