#include "graphgame/equilibrium.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "graphgame/error.hpp"
#include "graphgame/generate.hpp"

using namespace gg;

namespace {

const Rational kZ(0), kO(1), kHalf(1, 2);

DenseTensor not_tensor() { return DenseTensor::from_rows(1, {kZ, kO}, {kO, kZ}); }

}  // namespace

TEST_CASE("wsne_bound examples") {
  CHECK(wsne_bound(2) == Rational(3, 5));
  CHECK(wsne_bound(0) == kZ);
  CHECK(wsne_bound(1) == Rational(1, 3));
  CHECK(wsne_bound(4) == Rational(15, 17));
}

TEST_CASE("find_eps_dominant examples") {
  const GraphicalGame g({{}, {0}}, {DenseTensor::constant(kO, kZ), not_tensor()});
  CHECK(find_eps_dominant(g, 0, kZ) == Action::kZero);
  CHECK_FALSE(find_eps_dominant(g, 1, kHalf).has_value());
  CHECK(find_eps_dominant(g, 1, kO) == Action::kZero);
}

TEST_CASE("solve_wsne on small games") {
  SUBCASE("every player has a dominant action") {
    const GraphicalGame g({{}, {0}, {0, 1}},
                          {DenseTensor::constant(kZ, kO), DenseTensor::from_rows(1, {kZ, kZ}, {kO, kO}),
                           DenseTensor::from_rows(2, {kO, kO, kO, kO}, {kZ, kZ, kZ, kZ})});
    const auto sol = solve_wsne(g);
    CHECK(sol.eps == wsne_bound(2));
    CHECK(sol.trace.residual.empty());
    CHECK(sol.profile.prob_one(0) == kO);
    CHECK(sol.profile.prob_one(1) == kO);
    CHECK(sol.profile.prob_one(2) == kZ);
  }
  SUBCASE("single player") {
    const GraphicalGame g({{}}, {DenseTensor::constant(Rational(1, 4), Rational(3, 4))});
    const auto sol = solve_wsne(g);
    CHECK(sol.profile.prob_one(0) == kO);
    CHECK(verify_eps_wsne(g, sol.profile, kZ).passed);
  }
  SUBCASE("mutual NOT stays uniform") {
    const GraphicalGame g({{1}, {0}}, {not_tensor(), not_tensor()});
    const auto sol = solve_wsne(g);
    CHECK(sol.eps == Rational(1, 3));
    CHECK(sol.profile == StrategyProfile::uniform(2));
    CHECK(sol.trace.residual == std::vector<PlayerId>{0, 1});
  }
  SUBCASE("elimination cascades through restricted tensors") {
    // 0 is dominant, which makes NOT player 1 dominant, which fixes 2.
    const GraphicalGame g({{}, {0}, {1}},
                          {DenseTensor::constant(kO, kZ), not_tensor(), not_tensor()});
    const auto sol = solve_wsne(g);
    CHECK(sol.trace.fixed.size() == 3);
    CHECK(sol.profile.prob_one(1) == kO);
    CHECK(sol.profile.prob_one(2) == kZ);
  }
  SUBCASE("invalid input and scan orders") {
    CHECK_THROWS_AS(solve_wsne(GraphicalGame({{1}}, {not_tensor()})), gg::Error);
    const GraphicalGame g({{1}, {0}}, {not_tensor(), not_tensor()});
    CHECK_THROWS_AS(solve_wsne(g, WsneOptions{{0, 0}}), gg::Error);
    CHECK_THROWS_AS(solve_wsne(g, WsneOptions{{0}}), gg::Error);
  }
  SUBCASE("empty game") {
    const auto sol = solve_wsne(GraphicalGame());
    CHECK(sol.profile.size() == 0);
  }
}

TEST_CASE("solve_half_ne") {
  const GraphicalGame g({{}, {0}}, {DenseTensor::constant(kO, kZ), not_tensor()});
  const auto s = solve_half_ne(g);
  CHECK(s == StrategyProfile::uniform(2));
  // v reads a pure-zero opponent through NOT, so its uniform mix costs 1/2.
  CHECK(regret(g, 1, StrategyProfile({kZ, kHalf})) == kHalf);
  CHECK(verify_eps_ne(g, s, kHalf).passed);
  CHECK(solve_half_ne(GraphicalGame()).size() == 0);
}

TEST_CASE("random games: guarantees and residual properties") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const std::size_t d = 2 + seed % 3;
    const auto g = generate_random_game(n, d, seed, {.max_denominator = 6, .win_lose = seed % 5 == 0});
    const auto sol = solve_wsne(g);
    const Rational eps = wsne_bound(static_cast<unsigned>(g.max_in_degree()));
    CHECK(sol.eps == eps);
    CHECK(verify_eps_wsne(g, sol.profile, eps).passed);
    CHECK(verify_eps_ne(g, solve_half_ne(g), kHalf).passed);
    CHECK(sol.trace.fixed.size() + sol.trace.residual.size() == n);

    for (PlayerId i : sol.trace.residual) {
      const auto f = action_differences(sol.residual_game.tensor(i));
      const std::size_t k = sol.residual_game.in_neighbours(i).size();
      CHECK(std::any_of(f.begin(), f.end(), [&](const Rational& x) { return x > eps; }));
      CHECK(std::any_of(f.begin(), f.end(), [&](const Rational& x) { return x < -eps; }));
      const Rational m = std::accumulate(f.begin(), f.end(), Rational(0));
      CHECK(gg::abs(m) <= gg::pow2(static_cast<unsigned>(k)) - Rational(1) - eps);
      const StrategyProfile uniform = StrategyProfile::uniform(n);
      const Rational gap = action_payoff(sol.residual_game, i, Action::kZero, uniform) -
                           action_payoff(sol.residual_game, i, Action::kOne, uniform);
      CHECK(gg::abs(gap) == gg::abs(m) / gg::pow2(static_cast<unsigned>(k)));
      CHECK(gg::abs(gap) <= eps);
    }

    std::vector<PlayerId> order(n);
    std::iota(order.begin(), order.end(), PlayerId{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto shuffled = solve_wsne(g, WsneOptions{order});
    CHECK(verify_eps_wsne(g, shuffled.profile, eps).passed);
  }
}
