#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphgame/circuit.hpp"
#include "graphgame/game.hpp"

namespace gg {

// Certified enclosure of ln(12/eps) * 18/eps^2.
struct KBound {
  Rational lower;
  Rational upper;
};
KBound replication_bound(const Rational& eps);

// Smallest odd integer >= the certified upper end of replication_bound.
// Requires 0 < eps <= 1/2.
std::uint64_t choose_k(const Rational& eps);

struct NeLayout {
  std::vector<std::string> node_names;
  std::vector<std::vector<PlayerId>> node_block;  // node -> its k players
  std::uint64_t k = 1;
  Rational eps;
  // True when k came from an override instead of choose_k; no equilibrium
  // guarantee is claimed for such builds.
  bool k_overridden = false;

  friend bool operator==(const NeLayout&, const NeLayout&) = default;
};

struct NeCompilation {
  GraphicalGame game;
  NeLayout layout;
};

// Node v's block is players v*k .. v*k+k-1. All tensors are threshold tensors
// with 0/1 payoffs.
NeCompilation compile_ne(const PureCircuitInstance& inst, const Rational& eps,
                         std::optional<std::uint64_t> k_override = std::nullopt);

// Value 0 iff every block member plays zero with probability >= 1/2 + eps/3,
// 1 iff every member plays one that often, bot otherwise.
Assignment decode_ne(const NeLayout& layout, const StrategyProfile& profile);

struct OutputPayoffs {
  PlayerId player = 0;
  Rational zero;
  Rational one;
};

// Exact payoffs of every output player of `gate` when the gate's input block
// players play `input_prob_one` (first input's block, then the second's).
std::vector<OutputPayoffs> gadget_forcing_check(const NeCompilation& comp,
                                                const PureCircuitInstance& inst,
                                                std::size_t gate,
                                                const std::vector<Rational>& input_prob_one);

// 1/2 + eps/3: the probability an approximate-NE player must put on an action
// paying >= 1 - eps/3 when the other pays <= eps/3.
Rational payoff_to_probability_bound(const Rational& eps);

}  // namespace gg
