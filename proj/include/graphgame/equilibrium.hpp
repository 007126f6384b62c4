#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphgame/game.hpp"

namespace gg {

// 1 - 2/(2^d + 1): the WSNE quality the elimination algorithm guarantees at
// maximum in-degree d.
Rational wsne_bound(unsigned d);

std::optional<Action> find_eps_dominant(const GraphicalGame& game, PlayerId i,
                                        const Rational& eps);

struct EliminationTrace {
  std::vector<std::pair<PlayerId, Action>> fixed;  // in elimination order
  std::vector<PlayerId> residual;                  // ascending
};

struct WsneOptions {
  // Order in which players are scanned for an eps-dominant action. Empty
  // means ascending PlayerId. Must be a permutation when given.
  std::vector<PlayerId> scan_order;
};

struct WsneSolution {
  StrategyProfile profile;
  Rational eps;
  EliminationTrace trace;
  // The game after elimination: residual players keep their restricted
  // tensors over residual in-neighbours only. Entries of fixed players are
  // left as they were when the player was fixed.
  GraphicalGame residual_game;
};

// Iteratively fixes players holding an eps-dominant action (eps from the
// input's maximum in-degree, held fixed), restricting their out-neighbours'
// tensors, then lets every remaining player mix uniformly.
WsneSolution solve_wsne(const GraphicalGame& game, const WsneOptions& options = {});

// Everyone mixes uniformly.
StrategyProfile solve_half_ne(const GraphicalGame& game);

// f(a) = R(zero;a) - R(one;a) over every input profile of a tensor.
std::vector<Rational> action_differences(const PayoffTensor& tensor,
                                         std::size_t max_arity = kDefaultDensifyLimit);

}  // namespace gg
