#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsg/rational.hpp"
#include "dsg/roots.hpp"
#include "dsg/threshold.hpp"

namespace dsg::io {

// Row of the real-root CSV: certified interval bounds as exact rationals.
// A root exactly at 1 is written as the degenerate row 1,1,1,1.
struct RootRow {
  unsigned long long poly_id = 0;
  Rational lo, hi;
};

// Header `poly_id,lo_num,lo_den,hi_num,hi_den`, one row per root.
void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows);

// Header `game_id,lambda_num,lambda_den,iterations,wall_ms`.
void write_sweep_csv(std::ostream& out, long game_id,
                     const std::vector<thresh::SweepRow>& rows);

struct RootplotSummary {
  unsigned long long polys = 0;
  unsigned long long roots = 0;       // degenerate rows included
  bool gap_defined = false;           // a root distinct from 1 exists
  Rational min_distance_lo;           // certified lower bound on min |1-root|
};

// Enumerates every nonzero polynomial with degree <= N and |coefficients|
// <= W: certified real roots to roots_csv (intervals refined below 1/1024 and
// away from 1), a |P| magnitude sample over [-2,2]^2 to grid_csv, and a
// minimal real-axis SVG. W = 0 degenerates to headers only.
RootplotSummary rootplot(unsigned long n, unsigned long w, unsigned grid,
                         std::ostream& roots_csv, std::ostream& grid_csv,
                         std::ostream& svg,
                         unsigned long long guard = 10000000ULL);

}  // namespace dsg::io
