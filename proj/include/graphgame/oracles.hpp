#pragma once

#include <cstddef>
#include <vector>

#include "graphgame/game.hpp"

namespace gg {

struct SearchBudget {
  std::size_t max_pure_players = 20;
  std::vector<Rational> grid_levels{Rational(0), Rational(1, 4), Rational(1, 2),
                                    Rational(3, 4), Rational(1)};
  std::size_t max_grid_players = 8;
  std::size_t max_arity = kDefaultDensifyLimit;
};

// Every pure profile that is an eps-NE, in lexicographic order (player 0
// most significant, zero before one).
std::vector<StrategyProfile> enumerate_pure_eps_ne(const GraphicalGame& game,
                                                   const Rational& eps,
                                                   const SearchBudget& budget = {});

// Every grid profile that is an eps-WSNE, in lexicographic grid order.
std::vector<StrategyProfile> grid_search_wsne(const GraphicalGame& game, const Rational& eps,
                                              const SearchBudget& budget = {});

struct DynamicsResult {
  StrategyProfile profile;
  bool converged = false;
  bool cycle = false;
  std::size_t iterations = 0;  // updates that changed the profile
};

// Synchronous pure best-response updates (ties to zero) from a pure start.
DynamicsResult best_response_dynamics(const GraphicalGame& game,
                                      const std::vector<Action>& start,
                                      std::size_t max_iters);

}  // namespace gg
