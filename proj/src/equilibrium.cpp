#include "graphgame/equilibrium.hpp"

#include <algorithm>
#include <numeric>

#include "graphgame/error.hpp"

namespace gg {

Rational wsne_bound(unsigned d) {
  return Rational(1) - Rational(2) / (pow2(d) + Rational(1));
}

std::optional<Action> find_eps_dominant(const GraphicalGame& game, PlayerId i,
                                        const Rational& eps) {
  return find_eps_dominant(game.tensor(i), eps);
}

WsneSolution solve_wsne(const GraphicalGame& game, const WsneOptions& options) {
  if (const auto report = validate_game(game); !report.ok()) {
    fail(ErrorKind::kInvalidArgument, "invalid game: " + report.violations.front());
  }
  const std::size_t n = game.num_players();
  std::vector<PlayerId> order = options.scan_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), PlayerId{0});
  } else {
    std::vector<PlayerId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == n;
    for (PlayerId i = 0; permutation && i < n; ++i) permutation = sorted[i] == i;
    if (!permutation) {
      fail(ErrorKind::kInvalidArgument, "scan order is not a permutation of the players");
    }
  }

  WsneSolution solution;
  solution.eps = wsne_bound(static_cast<unsigned>(game.max_in_degree()));
  const auto outs = game.out_neighbours();

  std::vector<std::vector<PlayerId>> in(n);
  std::vector<PayoffTensor> tensors;
  tensors.reserve(n);
  for (PlayerId i = 0; i < n; ++i) {
    const auto span = game.in_neighbours(i);
    in[i].assign(span.begin(), span.end());
    tensors.push_back(game.tensor(i));
  }

  std::vector<std::optional<Action>> fixed(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (PlayerId i : order) {
      if (fixed[i]) continue;
      const auto action = find_eps_dominant(tensors[i], solution.eps);
      if (!action) continue;
      fixed[i] = action;
      solution.trace.fixed.emplace_back(i, *action);
      for (PlayerId j : outs[i]) {
        if (fixed[j]) continue;
        const auto it = std::find(in[j].begin(), in[j].end(), i);
        const auto position = static_cast<std::size_t>(it - in[j].begin());
        tensors[j] = restrict_input(tensors[j], position, *action);
        in[j].erase(it);
      }
      progress = true;
      break;
    }
  }

  solution.profile = StrategyProfile(n);
  for (PlayerId i = 0; i < n; ++i) {
    if (fixed[i]) {
      solution.profile.set(i, *fixed[i] == Action::kOne ? Rational(1) : Rational(0));
    } else {
      solution.profile.set(i, Rational(1, 2));
      solution.trace.residual.push_back(i);
    }
  }
  solution.residual_game = GraphicalGame(std::move(in), std::move(tensors), game.win_lose());
  return solution;
}

StrategyProfile solve_half_ne(const GraphicalGame& game) {
  return StrategyProfile::uniform(game.num_players());
}

std::vector<Rational> action_differences(const PayoffTensor& tensor, std::size_t max_arity) {
  const DenseTensor dense = densify(tensor, max_arity);
  std::vector<Rational> f;
  f.reserve(dense.profile_count());
  for (std::uint64_t p = 0; p < dense.profile_count(); ++p) {
    f.push_back(dense.at(Action::kZero, p) - dense.at(Action::kOne, p));
  }
  return f;
}

}  // namespace gg
