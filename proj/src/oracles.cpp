#include "graphgame/oracles.hpp"

#include <set>

#include "graphgame/error.hpp"

namespace gg {
namespace {

// Dense copies of every tensor; the oracles never touch the threshold DP.
std::vector<DenseTensor> dense_tensors(const GraphicalGame& game, std::size_t max_arity) {
  std::vector<DenseTensor> out;
  out.reserve(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    out.push_back(densify(game.tensor(i), max_arity));
  }
  return out;
}

std::uint64_t input_bits(const GraphicalGame& game, PlayerId i,
                         const std::vector<Action>& actions) {
  std::uint64_t bits = 0;
  const auto in = game.in_neighbours(i);
  for (std::size_t j = 0; j < in.size(); ++j) {
    if (actions[in[j]] == Action::kOne) bits |= std::uint64_t{1} << j;
  }
  return bits;
}

}  // namespace

std::vector<StrategyProfile> enumerate_pure_eps_ne(const GraphicalGame& game,
                                                   const Rational& eps,
                                                   const SearchBudget& budget) {
  const std::size_t n = game.num_players();
  if (n > budget.max_pure_players) {
    fail(ErrorKind::kLimitExceeded, "pure enumeration over " + std::to_string(n) +
                                        " players exceeds the budget of " +
                                        std::to_string(budget.max_pure_players));
  }
  const auto tensors = dense_tensors(game, budget.max_arity);
  std::vector<StrategyProfile> found;
  std::vector<Action> actions(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (PlayerId i = 0; i < n; ++i) {
      actions[i] = ((code >> (n - 1 - i)) & 1U) ? Action::kOne : Action::kZero;
    }
    bool ok = true;
    for (PlayerId i = 0; i < n && ok; ++i) {
      const std::uint64_t bits = input_bits(game, i, actions);
      const Rational& mine = tensors[i].at(actions[i], bits);
      const Rational& alt = tensors[i].at(other(actions[i]), bits);
      if (alt - mine > eps) ok = false;
    }
    if (ok) found.push_back(StrategyProfile::pure(n, actions));
  }
  return found;
}

std::vector<StrategyProfile> grid_search_wsne(const GraphicalGame& game, const Rational& eps,
                                              const SearchBudget& budget) {
  const std::size_t n = game.num_players();
  if (n > budget.max_grid_players) {
    fail(ErrorKind::kLimitExceeded, "grid search over " + std::to_string(n) +
                                        " players exceeds the budget of " +
                                        std::to_string(budget.max_grid_players));
  }
  const auto& levels = budget.grid_levels;
  if (levels.empty()) fail(ErrorKind::kInvalidArgument, "empty grid");
  const auto tensors = dense_tensors(game, budget.max_arity);
  std::vector<StrategyProfile> found;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Rational> prob(n, levels[0]);
  while (true) {
    bool ok = true;
    for (PlayerId i = 0; i < n && ok; ++i) {
      std::vector<Rational> inputs;
      for (PlayerId j : game.in_neighbours(i)) inputs.push_back(prob[j]);
      const Rational zero = eval_dense(tensors[i], Action::kZero, inputs);
      const Rational one = eval_dense(tensors[i], Action::kOne, inputs);
      const Rational& best = one > zero ? one : zero;
      if (prob[i] < Rational(1) && best - zero > eps) ok = false;
      if (prob[i].sign() > 0 && best - one > eps) ok = false;
    }
    if (ok) found.emplace_back(prob);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < levels.size()) {
        prob[pos] = levels[digit[pos]];
        break;
      }
      digit[pos] = 0;
      prob[pos] = levels[0];
      if (pos == 0) return found;
    }
    if (n == 0) return found;
  }
}

DynamicsResult best_response_dynamics(const GraphicalGame& game,
                                      const std::vector<Action>& start,
                                      std::size_t max_iters) {
  const std::size_t n = game.num_players();
  if (start.size() != n) fail(ErrorKind::kInvalidArgument, "start profile size mismatch");
  const auto tensors = dense_tensors(game, kDefaultDensifyLimit);
  std::vector<Action> current = start;
  std::set<std::vector<Action>> seen{current};
  DynamicsResult result;
  for (std::size_t step = 0; step < max_iters; ++step) {
    std::vector<Action> next(n);
    for (PlayerId i = 0; i < n; ++i) {
      const std::uint64_t bits = input_bits(game, i, current);
      next[i] = tensors[i].at(Action::kOne, bits) > tensors[i].at(Action::kZero, bits)
                    ? Action::kOne
                    : Action::kZero;
    }
    if (next == current) {
      result.converged = true;
      break;
    }
    current = std::move(next);
    ++result.iterations;
    if (!seen.insert(current).second) {
      result.cycle = true;
      break;
    }
  }
  result.profile = StrategyProfile::pure(n, current);
  return result;
}

}  // namespace gg
