#pragma once

#include <string>
#include <vector>

#include "graphgame/circuit.hpp"
#include "graphgame/game.hpp"

namespace gg {

// Where the circuit lives inside a compiled WSNE game.
struct WsneLayout {
  std::vector<std::string> node_names;
  std::vector<PlayerId> node_player;             // node -> player
  std::vector<std::vector<PlayerId>> aux_players;  // per PURIFY gate, d copies of its input
  unsigned d = 2;
  Rational lambda;
  bool win_lose = false;

  friend bool operator==(const WsneLayout&, const WsneLayout&) = default;
};

struct WsneCompilation {
  GraphicalGame game;
  WsneLayout layout;
};

// Node players come first in node order, then the aux copies of each PURIFY
// gate in gate order. Every tensor is emitted in threshold form.
WsneCompilation compile_wsne(const PureCircuitInstance& inst, unsigned d, bool win_lose);

// prob_one 0 -> 0, 1 -> 1, anything else -> bot.
Assignment decode_wsne(const WsneLayout& layout, const StrategyProfile& profile);

// Strict upper bound on eps for which every eps-WSNE decodes to a solution:
// 1 - 2/(2^d+1), or 1 - 1/2^(d-1) for the win-lose variant.
Rational wsne_hardness_threshold(unsigned d, bool win_lose);

}  // namespace gg
