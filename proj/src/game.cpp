#include "graphgame/game.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "graphgame/error.hpp"

namespace gg {
namespace {

struct ActionPayoffs {
  Rational zero;
  Rational one;
  const Rational& of(Action a) const { return a == Action::kZero ? zero : one; }
  const Rational& best() const { return one > zero ? one : zero; }
};

ActionPayoffs both_payoffs(const GraphicalGame& game, PlayerId i,
                           const StrategyProfile& profile) {
  const auto inputs = in_strategies(game, i, profile);
  return {evaluate(game.tensor(i), Action::kZero, inputs),
          evaluate(game.tensor(i), Action::kOne, inputs)};
}

}  // namespace

GraphicalGame::GraphicalGame(std::vector<std::vector<PlayerId>> in_neighbours,
                             std::vector<PayoffTensor> tensors, bool win_lose)
    : in_neighbours_(std::move(in_neighbours)),
      tensors_(std::move(tensors)),
      win_lose_(win_lose) {
  if (in_neighbours_.size() != tensors_.size()) {
    fail(ErrorKind::kInvalidArgument,
         "game has " + std::to_string(in_neighbours_.size()) + " neighbour lists but " +
             std::to_string(tensors_.size()) + " tensors");
  }
}

std::size_t GraphicalGame::max_in_degree() const {
  std::size_t d = 0;
  for (const auto& in : in_neighbours_) d = std::max(d, in.size());
  return d;
}

std::vector<std::vector<PlayerId>> GraphicalGame::out_neighbours() const {
  std::vector<std::vector<PlayerId>> out(num_players());
  for (PlayerId i = 0; i < num_players(); ++i) {
    for (PlayerId j : in_neighbours_[i]) {
      if (j < out.size()) out[j].push_back(i);
    }
  }
  return out;
}

StrategyProfile::StrategyProfile(std::vector<Rational> prob_one) {
  prob_one_.reserve(prob_one.size());
  for (auto& p : prob_one) prob_one_.emplace_back(std::move(p));
}

StrategyProfile StrategyProfile::uniform(std::size_t num_players) {
  return StrategyProfile(std::vector<Rational>(num_players, Rational(1, 2)));
}

StrategyProfile StrategyProfile::pure(std::size_t num_players,
                                      std::span<const Action> actions) {
  if (actions.size() != num_players) {
    fail(ErrorKind::kInvalidArgument, "pure profile size mismatch");
  }
  StrategyProfile s(num_players);
  for (PlayerId i = 0; i < num_players; ++i) {
    s.set(i, actions[i] == Action::kOne ? Rational(1) : Rational(0));
  }
  return s;
}

const Rational& StrategyProfile::prob_one(PlayerId i) const {
  if (!has(i)) fail(ErrorKind::kInvalidArgument, "no strategy for player " + std::to_string(i));
  return *prob_one_[i];
}

Rational StrategyProfile::prob(PlayerId i, Action a) const {
  return a == Action::kOne ? prob_one(i) : Rational(1) - prob_one(i);
}

void StrategyProfile::set(PlayerId i, Rational prob_one) {
  if (prob_one.sign() < 0 || prob_one > Rational(1)) {
    fail(ErrorKind::kInvalidArgument,
         "probability " + prob_one.str() + " for player " + std::to_string(i) +
             " outside [0,1]");
  }
  if (i >= prob_one_.size()) prob_one_.resize(i + 1);
  prob_one_[i] = std::move(prob_one);
}

ValidationReport validate_game(const GraphicalGame& game) {
  ValidationReport report;
  auto& v = report.violations;
  const std::size_t n = game.num_players();
  for (PlayerId i = 0; i < n; ++i) {
    const std::string who = "player " + std::to_string(i) + ": ";
    std::set<PlayerId> seen;
    for (PlayerId j : game.in_neighbours(i)) {
      if (j >= n) {
        v.push_back(who + "dangling in-neighbour " + std::to_string(j));
      } else if (j == i) {
        v.push_back(who + "lists itself as an in-neighbour");
      } else if (!seen.insert(j).second) {
        v.push_back(who + "repeats in-neighbour " + std::to_string(j));
      }
    }
    const auto& tensor = game.tensor(i);
    if (arity(tensor) != game.in_neighbours(i).size()) {
      v.push_back(who + "arity mismatch: tensor arity " + std::to_string(arity(tensor)) +
                  ", in-degree " + std::to_string(game.in_neighbours(i).size()));
    }
    for (const auto& problem : structural_problems(tensor)) v.push_back(who + problem);
    for (const auto& value : payoff_values(tensor)) {
      if (value.sign() < 0 || value > Rational(1)) {
        v.push_back(who + "payoff outside [0,1]: " + value.str());
        break;
      }
    }
    if (game.win_lose()) {
      for (const auto& value : payoff_values(tensor)) {
        if (value != Rational(0) && value != Rational(1)) {
          v.push_back(who + "win-lose flag violated by payoff " + value.str());
          break;
        }
      }
    }
  }
  return report;
}

std::vector<Rational> in_strategies(const GraphicalGame& game, PlayerId i,
                                    const StrategyProfile& profile) {
  std::vector<Rational> inputs;
  inputs.reserve(game.in_neighbours(i).size());
  for (PlayerId j : game.in_neighbours(i)) {
    if (!profile.has(j)) {
      fail(ErrorKind::kInvalidArgument, "missing strategy for in-neighbour " +
                                            std::to_string(j) + " of player " +
                                            std::to_string(i));
    }
    inputs.push_back(profile.prob_one(j));
  }
  return inputs;
}

Rational action_payoff(const GraphicalGame& game, PlayerId i, Action k,
                       const StrategyProfile& profile) {
  return evaluate(game.tensor(i), k, in_strategies(game, i, profile));
}

Rational expected_payoff(const GraphicalGame& game, PlayerId i,
                         const StrategyProfile& profile) {
  const auto p = both_payoffs(game, i, profile);
  const Rational& s = profile.prob_one(i);
  return p.zero * (Rational(1) - s) + p.one * s;
}

BestResponse best_response(const GraphicalGame& game, PlayerId i,
                           const StrategyProfile& profile) {
  const auto p = both_payoffs(game, i, profile);
  if (p.one > p.zero) return {p.one, Action::kOne};
  return {p.zero, Action::kZero};
}

Rational regret(const GraphicalGame& game, PlayerId i, const StrategyProfile& profile) {
  const auto p = both_payoffs(game, i, profile);
  const Rational& s = profile.prob_one(i);
  return p.best() - (p.zero * (Rational(1) - s) + p.one * s);
}

NeReport verify_eps_ne(const GraphicalGame& game, const StrategyProfile& profile,
                       const Rational& eps) {
  NeReport report;
  report.regrets.reserve(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    report.regrets.push_back(regret(game, i, profile));
    if (report.regrets[i] > report.regrets[report.worst_player]) report.worst_player = i;
    if (report.regrets[i] > eps) report.passed = false;
  }
  return report;
}

WsneReport verify_eps_wsne(const GraphicalGame& game, const StrategyProfile& profile,
                           const Rational& eps) {
  WsneReport report;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const auto p = both_payoffs(game, i, profile);
    for (Action a : {Action::kZero, Action::kOne}) {
      if (profile.prob(i, a).is_zero()) continue;
      const Rational deficit = p.best() - p.of(a);
      if (deficit > eps) report.violations.push_back({i, a, deficit});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace gg
