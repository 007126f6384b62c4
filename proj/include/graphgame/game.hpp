#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphgame/rational.hpp"
#include "graphgame/tensor.hpp"

namespace gg {

using PlayerId = std::size_t;

// Two-action graphical game. Player i's tensor reads the actions of
// in_neighbours(i) positionally. Construction only checks that the per-player
// vectors line up; everything else is reported by validate_game.
class GraphicalGame {
 public:
  GraphicalGame() = default;
  GraphicalGame(std::vector<std::vector<PlayerId>> in_neighbours,
                std::vector<PayoffTensor> tensors, bool win_lose = false);

  std::size_t num_players() const { return tensors_.size(); }
  std::span<const PlayerId> in_neighbours(PlayerId i) const { return in_neighbours_.at(i); }
  const PayoffTensor& tensor(PlayerId i) const { return tensors_.at(i); }
  bool win_lose() const { return win_lose_; }

  std::size_t max_in_degree() const;
  std::vector<std::vector<PlayerId>> out_neighbours() const;

  friend bool operator==(const GraphicalGame&, const GraphicalGame&) = default;

 private:
  std::vector<std::vector<PlayerId>> in_neighbours_;
  std::vector<PayoffTensor> tensors_;
  bool win_lose_ = false;
};

// Per-player probability of action one. Entries may be left unset; reading
// an unset entry is an error.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::size_t num_players) : prob_one_(num_players) {}
  explicit StrategyProfile(std::vector<Rational> prob_one);

  static StrategyProfile uniform(std::size_t num_players);
  static StrategyProfile pure(std::size_t num_players, std::span<const Action> actions);

  std::size_t size() const { return prob_one_.size(); }
  bool has(PlayerId i) const { return i < prob_one_.size() && prob_one_[i].has_value(); }
  const Rational& prob_one(PlayerId i) const;
  Rational prob(PlayerId i, Action a) const;
  void set(PlayerId i, Rational prob_one);

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<std::optional<Rational>> prob_one_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_game(const GraphicalGame& game);

// Probabilities of action one for i's in-neighbours, in tensor input order.
std::vector<Rational> in_strategies(const GraphicalGame& game, PlayerId i,
                                    const StrategyProfile& profile);

Rational action_payoff(const GraphicalGame& game, PlayerId i, Action k,
                       const StrategyProfile& profile);
Rational expected_payoff(const GraphicalGame& game, PlayerId i,
                         const StrategyProfile& profile);

struct BestResponse {
  Rational payoff;
  Action action = Action::kZero;  // ties go to zero
};
BestResponse best_response(const GraphicalGame& game, PlayerId i,
                           const StrategyProfile& profile);

Rational regret(const GraphicalGame& game, PlayerId i, const StrategyProfile& profile);

struct NeReport {
  bool passed = true;
  std::vector<Rational> regrets;
  PlayerId worst_player = 0;
};
NeReport verify_eps_ne(const GraphicalGame& game, const StrategyProfile& profile,
                       const Rational& eps);

struct SupportViolation {
  PlayerId player = 0;
  Action action = Action::kZero;
  Rational deficit;  // best-response payoff minus the action's payoff
};
struct WsneReport {
  bool passed = true;
  std::vector<SupportViolation> violations;
};
WsneReport verify_eps_wsne(const GraphicalGame& game, const StrategyProfile& profile,
                           const Rational& eps);

}  // namespace gg
