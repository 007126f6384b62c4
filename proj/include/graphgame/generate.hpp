#pragma once

#include <cstddef>
#include <cstdint>

#include "graphgame/game.hpp"

namespace gg {

struct GameGenOptions {
  // Payoffs p/q with 1 <= q <= max_denominator.
  long max_denominator = 12;
  // Draw payoffs from {0, 1} only (and set the win-lose flag).
  bool win_lose = false;
  // Every player gets in-degree min(d, n-1) instead of a random one.
  bool full_degree = false;
};

// Dense random game with in-degrees in [0, min(d, n-1)]; player 0 always gets
// the full min(d, n-1). Deterministic under seed.
GraphicalGame generate_random_game(std::size_t n, std::size_t d, std::uint64_t seed,
                                   const GameGenOptions& options = {});

}  // namespace gg
