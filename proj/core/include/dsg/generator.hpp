#pragma once

#include <cstdint>

#include "dsg/game.hpp"

namespace dsg::game {

// Random game: owners by fair coin, each edge kept with probability
// density/1000, weights uniform in [-W, W]; a repair pass forces one
// successor at any empty vertex. Deterministic per seed across platforms.
Game random_game(int n, int density_permille, long long w, std::uint64_t seed);

}  // namespace dsg::game
