#pragma once

#include <string>
#include <vector>

#include "dsg/game.hpp"
#include "dsg/rational.hpp"
#include "dsg/solver.hpp"

namespace dsg::thresh {

// Ceiling exponent of the threshold: ceil(7 W^(1/4) sqrt(n)) + 6.
Int lambda_zero_exponent(const Int& n, const Int& w);

// 1 - 1/(24 W (2n+1)^e); rounding the exponent up moves the threshold toward
// 1 and keeps the guarantee for [lambda0, 1).
Rational lambda_zero(const Int& n, const Int& w);

// Effective coefficient bound for a game's threshold: max(1, max |weight|).
Int game_weight_bound(const game::Game& g);
// lambda_zero with the game's own n and weight bound.
Rational lambda_zero_for(const game::Game& g);

// Certifies that the profile-difference polynomial from v has no root in
// [lambda0, 1), then reports whether the ordering of the two profiles at
// lambda0 matches the ordering at lambda. Requires lambda >= lambda0.
bool ordering_preserved(const game::Game& g, int v,
                        const game::PositionalStrategy& sigma1,
                        const game::PositionalStrategy& tau1,
                        const game::PositionalStrategy& sigma2,
                        const game::PositionalStrategy& tau2,
                        const Rational& lambda);

struct TraceComparison {
  bool equal = false;
  solve::SiTrace trace_at_threshold, trace_at_lambda;
};

// Runs strategy iteration at lambda0 and at lambda from the same sigma0 and
// compares the strategy sequences exactly. Requires lambda >= lambda0.
TraceComparison trace_equivalence(const game::Game& g,
                                  const game::PositionalStrategy& sigma0,
                                  const Rational& lambda);

struct SweepRow {
  Rational lambda;
  std::size_t iterations = 0;
  double wall_ms = 0.0;
};

// One row per lambda: SI iteration count and wall time from sigma0.
std::vector<SweepRow> iteration_sweep(const game::Game& g,
                                      const std::vector<Rational>& lambdas,
                                      const game::PositionalStrategy& sigma0);

struct ThresholdReport {
  Int n, w;
  Int exponent;
  Rational lambda0;
  struct Row {
    Rational lambda;
    bool traces_equal = false;
    std::size_t iterations = 0;
  };
  std::vector<Row> rows;
};

// Plain-text key:value block.
std::string threshold_report_text(const ThresholdReport& r);

}  // namespace dsg::thresh
