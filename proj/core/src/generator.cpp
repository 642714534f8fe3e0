#include "dsg/generator.hpp"

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "dsg/errors.hpp"

namespace dsg::game {

namespace {

// Rejection sampling keeps the draw uniform and identical across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

Game random_game(int n, int density_permille, long long w, std::uint64_t seed) {
  if (n < 1) throw PreconditionViolated("random game needs at least one vertex");
  if (density_permille < 0 || density_permille > 1000)
    throw PreconditionViolated("edge density is given in permille (0..1000)");
  if (w < 0) throw PreconditionViolated("weight bound must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    owner[static_cast<std::size_t>(v)] = uniform_below(rng, 2) == 0 ? 1 : 2;
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(w) + 1;
  auto draw_weight = [&]() -> long long {
    if (w == 0) return 0;
    return -w + static_cast<long long>(uniform_below(rng, span));
  };
  std::vector<std::tuple<int, int, long long>> edges;
  std::vector<bool> has_succ(static_cast<std::size_t>(n), false);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (uniform_below(rng, 1000) <
          static_cast<std::uint64_t>(density_permille)) {
        edges.emplace_back(u, v, draw_weight());
        has_succ[static_cast<std::size_t>(u)] = true;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (has_succ[static_cast<std::size_t>(u)]) continue;
    int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    edges.emplace_back(u, v, draw_weight());
  }
  return make_game(n, owner, edges);
}

}  // namespace dsg::game
