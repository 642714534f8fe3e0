#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "dsg/errors.hpp"
#include "dsg/game.hpp"
#include "dsg/generator.hpp"
#include "dsg/lasso.hpp"
#include "dsg/solver.hpp"

using dsg::Int;
using dsg::Rational;
using namespace dsg::game;
using namespace dsg::solve;

namespace {

// Independent evaluation: solve (I - lambda S) f = r by exact elimination,
// where S selects the chosen successor of every vertex.
ValueVector gauss_oracle(const Game& g, const PositionalStrategy& sigma,
                         const PositionalStrategy& tau, const Rational& lambda) {
  const int n = g.n;
  std::vector<std::vector<Rational>> a(
      n, std::vector<Rational>(n + 1, Rational(0)));
  for (int v = 0; v < n; ++v) {
    const Edge& e = chosen_edge(g, sigma, tau, v);
    a[v][v] += 1;
    a[v][e.to] -= lambda;
    a[v][n] = Rational(static_cast<long>(e.weight));
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    REQUIRE(pivot >= 0);
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (int k = col; k <= n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  ValueVector f(n);
  for (int v = 0; v < n; ++v) f[v] = Rational(a[v][n] / a[v][v]);
  return f;
}

// All strategies of one player, by recursive descent over its vertices.
void enumerate_strategies(const Game& g, int player,
                          const std::function<void(const PositionalStrategy&)>& fn) {
  std::vector<int> verts;
  for (int v = 0; v < g.n; ++v)
    if (g.owner[v] == player) verts.push_back(v);
  PositionalStrategy s;
  s.player = player;
  s.choice.assign(g.n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == verts.size()) {
      fn(s);
      return;
    }
    for (const Edge& e : g.succ[verts[i]]) {
      s.choice[verts[i]] = e.to;
      rec(i + 1);
    }
  };
  rec(0);
}

PositionalStrategy random_strategy(const Game& g, int player,
                                   std::mt19937_64& rng) {
  PositionalStrategy s;
  s.player = player;
  s.choice.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (g.owner[v] != player) continue;
    const auto& list = g.succ[v];
    s.choice[v] = list[rng() % list.size()].to;
  }
  return s;
}

const Rational kLambdas[] = {Rational(0), Rational(1, 2), Rational(9, 10),
                             Rational(99, 100), Rational(1, 7)};

}  // namespace

TEST_CASE("evaluate_profile matches exact linear algebra") {
  std::mt19937_64 rng(401);
  for (int round = 0; round < 150; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    Game g = random_game(n, 400 + rng() % 500, 3, rng());
    PositionalStrategy sigma = random_strategy(g, 1, rng);
    PositionalStrategy tau = random_strategy(g, 2, rng);
    const Rational& lambda = kLambdas[rng() % 5];
    CHECK(evaluate_profile(g, sigma, tau, lambda) ==
          gauss_oracle(g, sigma, tau, lambda));
  }
}

TEST_CASE("evaluate_profile rejects bad input") {
  Game g = make_game(2, {1, 2}, {{0, 1, 3}, {1, 0, -1}});
  PositionalStrategy sigma = least_index_strategy(g, 1);
  PositionalStrategy tau = least_index_strategy(g, 2);
  CHECK_THROWS_AS(evaluate_profile(g, sigma, tau, Rational(1)),
                  dsg::LambdaOutOfRange);
  CHECK_THROWS_AS(evaluate_profile(g, sigma, tau, Rational(-1, 2)),
                  dsg::LambdaOutOfRange);
  CHECK_THROWS_AS(evaluate_profile(g, tau, sigma, Rational(1, 2)),
                  dsg::PreconditionViolated);
}

TEST_CASE("lasso payoff agrees with profile evaluation") {
  std::mt19937_64 rng(402);
  for (int round = 0; round < 150; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    Game g = random_game(n, 500, 3, rng());
    PositionalStrategy sigma = random_strategy(g, 1, rng);
    PositionalStrategy tau = random_strategy(g, 2, rng);
    const Rational& lambda = kLambdas[rng() % 5];
    ValueVector f = evaluate_profile(g, sigma, tau, lambda);
    for (int v = 0; v < n; ++v) {
      Lasso l = extract_lasso(g, sigma, tau, v);
      CHECK(!l.cycle.empty());
      CHECK(l.prefix.size() + l.cycle.size() <= static_cast<std::size_t>(n));
      CHECK(disc_payoff(l, lambda) == f[v]);
      auto [p, q] = payoff_polynomials(l);
      // P(lambda)/Q(lambda) reproduces the payoff.
      CHECK(p.eval(lambda) == f[v] * q.eval(lambda));
    }
  }
}

TEST_CASE("payoff polynomial shape") {
  std::mt19937_64 rng(403);
  for (int round = 0; round < 150; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    long long w = static_cast<long long>(rng() % 4);
    Game g = random_game(n, 500, w, rng());
    Int bound = Int(3 * static_cast<long>(g.max_abs_weight));
    PositionalStrategy sigma = random_strategy(g, 1, rng);
    PositionalStrategy tau = random_strategy(g, 2, rng);
    int v = static_cast<int>(rng() % n);
    Lasso l = extract_lasso(g, sigma, tau, v);
    auto [p, q] = payoff_polynomials(l);
    CHECK(p.degree() <= n);
    CHECK(p.max_abs_coeff() <= bound);
    CHECK(q.degree() == static_cast<long>(l.cycle.size()));
    CHECK(q.coeff(0) == 1);
  }
}

TEST_CASE("profile difference orders payoffs by sign") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    Game g = random_game(n, 600, 3, rng());
    PositionalStrategy s1 = random_strategy(g, 1, rng);
    PositionalStrategy t1 = random_strategy(g, 2, rng);
    PositionalStrategy s2 = random_strategy(g, 1, rng);
    PositionalStrategy t2 = random_strategy(g, 2, rng);
    int v = static_cast<int>(rng() % n);
    Lasso l1 = extract_lasso(g, s1, t1, v);
    Lasso l2 = extract_lasso(g, s2, t2, v);
    dsg::poly::Polynomial diff = profile_difference(l1, l2);
    const Rational& lambda = kLambdas[rng() % 5];
    Rational p1 = disc_payoff(l1, lambda);
    Rational p2 = disc_payoff(l2, lambda);
    CHECK(diff.sign_at(lambda) == dsg::sgn(Rational(p1 - p2)));
    CHECK(diff.degree() <= 2 * n);
    CHECK(diff.max_abs_coeff() <= Int(12 * static_cast<long>(g.max_abs_weight)));
  }
}

TEST_CASE("best response minimizes against every pure response") {
  std::mt19937_64 rng(405);
  for (int round = 0; round < 80; ++round) {
    int n = 2 + static_cast<int>(rng() % 4);
    Game g = random_game(n, 700, 3, rng());
    PositionalStrategy sigma = random_strategy(g, 1, rng);
    const Rational& lambda = kLambdas[rng() % 5];
    PositionalStrategy br = best_response(g, sigma, lambda);
    ValueVector f = evaluate_profile(g, sigma, br, lambda);
    ValueVector lower = f;
    enumerate_strategies(g, 2, [&](const PositionalStrategy& tau) {
      ValueVector cand = evaluate_profile(g, sigma, tau, lambda);
      for (int v = 0; v < g.n; ++v)
        if (cand[v] < lower[v]) lower[v] = cand[v];
    });
    CHECK(f == lower);
    // Least-index canonical choice with respect to the optimal values.
    for (int v = 0; v < g.n; ++v) {
      if (g.owner[v] != 2) continue;
      Rational best(0);
      int pick = -1;
      for (const Edge& e : g.succ[v]) {
        Rational cand = Rational(static_cast<long>(e.weight)) + lambda * f[e.to];
        if (pick < 0 || cand < best) {
          best = cand;
          pick = e.to;
        }
      }
      CHECK(br.choice[v] == pick);
    }
  }
}

TEST_CASE("bellman_extract breaks ties toward the least successor") {
  // Both successors of vertex 0 give the same value.
  Game g = make_game(3, {1, 1, 1},
                     {{0, 1, 1}, {0, 2, 1}, {1, 1, 0}, {2, 2, 0}});
  ValueVector f = {Rational(0), Rational(0), Rational(0)};
  auto [sigma, tau] = bellman_extract(g, Rational(1, 2), f);
  CHECK(sigma.choice[0] == 1);
  CHECK(tau.choice == std::vector<int>{-1, -1, -1});
  CHECK_THROWS_AS(bellman_extract(g, Rational(1, 2), ValueVector(2)),
                  dsg::PreconditionViolated);
}

TEST_CASE("strategy iteration fixed points and trace shape") {
  std::mt19937_64 rng(406);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    Game g = random_game(n, 600, 3, rng());
    const Rational& lambda = kLambdas[rng() % 5];
    SiResult r = strategy_iteration(g, lambda, random_strategy(g, 1, rng));
    REQUIRE(r.trace.steps.size() >= 2);
    const auto& last = r.trace.steps[r.trace.steps.size() - 1];
    const auto& prev = r.trace.steps[r.trace.steps.size() - 2];
    CHECK(last.first == prev.first);
    CHECK(last.first == r.sigma_star);
    CHECK(r.values == evaluate_profile(g, r.sigma_star, last.second, lambda));
  }
}

TEST_CASE("single-profile games stop after two recorded rounds") {
  Game g = make_game(2, {1, 2}, {{0, 1, 3}, {1, 0, -1}});
  SiResult r = strategy_iteration(g, Rational(1, 2),
                                  least_index_strategy(g, 1));
  CHECK(r.trace.iterations() == 2);
  CHECK(r.values[0] == Rational(10, 3));
  CHECK(r.values[1] == Rational(2, 3));
}

TEST_CASE("strategy iteration equals the brute-force oracle") {
  std::mt19937_64 rng(407);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    Game g = random_game(n, 600, 3, rng());
    const Rational& lambda = kLambdas[rng() % 5];
    OracleValues ov = brute_force_values(g, lambda);
    for (const char* rule : {"least", "greatest", "middle"}) {
      PositionalStrategy s0 = rule[0] == 'l'   ? least_index_strategy(g, 1)
                              : rule[0] == 'g' ? greatest_index_strategy(g, 1)
                                               : middle_index_strategy(g, 1);
      SiResult r = strategy_iteration(g, lambda, s0);
      CHECK(r.values == ov.maxmin);
    }
  }
}

TEST_CASE("value iteration approaches the exact values geometrically") {
  std::mt19937_64 rng(408);
  for (int round = 0; round < 25; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    Game g = random_game(n, 600, 3, rng());
    Rational lambda = round % 2 ? Rational(1, 2) : Rational(9, 10);
    ValueVector exact =
        strategy_iteration(g, lambda, least_index_strategy(g, 1)).values;
    Rational w(static_cast<long>(g.max_abs_weight));
    for (std::size_t t : {0UL, 1UL, 3UL, 10UL}) {
      ValueVector f = value_iteration(g, lambda, t);
      Rational bound =
          dsg::pow_rational(lambda, static_cast<unsigned long>(t)) * w /
          (Rational(1) - lambda);
      for (int v = 0; v < g.n; ++v) {
        Rational err = f[v] - exact[v];
        if (err < 0) err = -err;
        CHECK(err <= bound);
      }
    }
  }
  Game g = make_game(2, {1, 2}, {{0, 1, 3}, {1, 0, -1}});
  ValueVector f1 = value_iteration(g, Rational(1, 2), 1);
  CHECK(f1[0] == Rational(3));
  CHECK(f1[1] == Rational(-1));
  CHECK(value_iteration(g, Rational(1, 2), 0) ==
        ValueVector{Rational(0), Rational(0)});
}

TEST_CASE("determinacy on a random corpus") {
  std::mt19937_64 rng(409);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    Game g = random_game(n, 500 + rng() % 400, 3, rng());
    for (const Rational& lambda :
         {Rational(1, 2), Rational(9, 10), Rational(99, 100)}) {
      OracleValues ov = brute_force_values(g, lambda);
      CHECK(ov.maxmin == ov.minmax);
    }
  }
}

TEST_CASE("profile_count saturates and guards the oracle") {
  std::vector<std::tuple<int, int, long long>> edges;
  for (int v = 0; v < 64; ++v) {
    edges.emplace_back(v, (v + 1) % 64, 0);
    edges.emplace_back(v, (v + 2) % 64, 1);
  }
  Game g = make_game(64, std::vector<int>(64, 1), edges);
  CHECK(profile_count(g) == 9223372036854775807ULL);
  CHECK_THROWS_AS(brute_force_values(g, Rational(1, 2)), dsg::TooManyProfiles);
  Game small = make_game(2, {1, 2}, {{0, 1, 3}, {1, 0, -1}});
  CHECK(profile_count(small) == 1);
}
