#include "graphgame/game.hpp"

#include <random>

#include "doctest.h"
#include "graphgame/error.hpp"
#include "graphgame/generate.hpp"
#include "test_support.hpp"

using namespace gg;

namespace {

const Rational kZ(0), kO(1), kHalf(1, 2);

DenseTensor not_tensor() { return DenseTensor::from_rows(1, {kZ, kO}, {kO, kZ}); }

DenseTensor and_tensor() {
  return DenseTensor::from_rows(2, {kO, kO, kO, kZ}, {kZ, kZ, kZ, kO});
}

GraphicalGame mutual_not() { return GraphicalGame({{1}, {0}}, {not_tensor(), not_tensor()}); }

// Player 0 has constant payoffs (a, b); player 1 reads player 0 through NOT.
GraphicalGame fixed_then_not(Rational a, Rational b) {
  return GraphicalGame({{}, {0}}, {DenseTensor::constant(a, b), not_tensor()});
}

}  // namespace

TEST_CASE("validate_game examples") {
  CHECK(validate_game(GraphicalGame()).ok());
  CHECK(validate_game(GraphicalGame({{}}, {DenseTensor::constant(kO, kZ)})).ok());
  const auto out_of_range = validate_game(GraphicalGame({{}}, {DenseTensor::constant(Rational(3, 2), kZ)}));
  REQUIRE_FALSE(out_of_range.ok());
  CHECK(out_of_range.violations[0].find("outside [0,1]") != std::string::npos);

  CHECK_FALSE(validate_game(GraphicalGame({{1}}, {not_tensor()})).ok());       // dangling
  CHECK_FALSE(validate_game(GraphicalGame({{0}}, {not_tensor()})).ok());       // self loop
  CHECK_FALSE(validate_game(GraphicalGame({{}, {0, 0}}, {DenseTensor::constant(kO, kZ), and_tensor()})).ok());
  CHECK_FALSE(validate_game(GraphicalGame({{}, {}}, {DenseTensor::constant(kO, kZ), not_tensor()})).ok());
  CHECK_FALSE(validate_game(GraphicalGame({{}}, {DenseTensor::constant(kHalf, kZ)}, true)).ok());
  CHECK(validate_game(mutual_not()).ok());
  CHECK_THROWS_AS(GraphicalGame({{}, {}}, {not_tensor()}), gg::Error);
}

TEST_CASE("action_payoff examples") {
  const GraphicalGame lone({{}}, {DenseTensor::constant(Rational(1, 3), kZ)});
  CHECK(action_payoff(lone, 0, Action::kZero, StrategyProfile(std::vector<Rational>{kZ})) ==
        Rational(1, 3));

  const auto g = fixed_then_not(kO, kZ);
  CHECK(action_payoff(g, 1, Action::kZero, StrategyProfile({kO, kZ})) == kO);
  CHECK(action_payoff(g, 1, Action::kZero, StrategyProfile({kHalf, kZ})) == kHalf);
  CHECK(action_payoff(g, 1, Action::kOne, StrategyProfile({kHalf, kZ})) == kHalf);

  StrategyProfile missing(2);
  missing.set(1, kHalf);
  CHECK_THROWS_AS(action_payoff(g, 1, Action::kZero, missing), gg::Error);
}

TEST_CASE("expected_payoff, best_response and regret examples") {
  const auto g = fixed_then_not(kZ, kO);
  CHECK(expected_payoff(g, 0, StrategyProfile({kZ, kZ})) ==
        action_payoff(g, 0, Action::kZero, StrategyProfile({kZ, kZ})));
  CHECK(expected_payoff(g, 0, StrategyProfile({kHalf, kZ})) == kHalf);
  CHECK(expected_payoff(mutual_not(), 1, StrategyProfile::uniform(2)) == kHalf);

  const auto br = best_response(g, 0, StrategyProfile({kZ, kZ}));
  CHECK(br.payoff == kO);
  CHECK(br.action == Action::kOne);
  const auto tie = best_response(mutual_not(), 0, StrategyProfile::uniform(2));
  CHECK(tie.payoff == kHalf);
  CHECK(tie.action == Action::kZero);

  const GraphicalGame and_game({{}, {}, {0, 1}}, {DenseTensor::constant(kZ, kO),
                                                  DenseTensor::constant(kZ, kO), and_tensor()});
  const auto and_br = best_response(and_game, 2, StrategyProfile({kO, kO, kZ}));
  CHECK(and_br.payoff == kO);
  CHECK(and_br.action == Action::kOne);

  CHECK(regret(g, 0, StrategyProfile({kO, kZ})) == kZ);
  CHECK(regret(g, 0, StrategyProfile({kHalf, kZ})) == kHalf);
  const GraphicalGame thirds({{}}, {DenseTensor::constant(Rational(1, 3), Rational(2, 3))});
  CHECK(regret(thirds, 0, StrategyProfile::uniform(1)) == Rational(1, 6));
}

TEST_CASE("verify_eps_ne examples") {
  const auto g = mutual_not();
  CHECK(verify_eps_ne(g, StrategyProfile::uniform(2), kHalf).passed);
  const std::vector<Action> pure_ne{Action::kZero, Action::kOne};
  CHECK(verify_eps_ne(g, StrategyProfile::pure(2, pure_ne), kZ).passed);
  const std::vector<Action> both_zero{Action::kZero, Action::kZero};
  const auto report = verify_eps_ne(g, StrategyProfile::pure(2, both_zero), Rational(1, 4));
  CHECK_FALSE(report.passed);
  CHECK(report.regrets[report.worst_player] == kO);
}

TEST_CASE("verify_eps_wsne examples") {
  const std::vector<Action> pure_ne{Action::kOne, Action::kZero};
  CHECK(verify_eps_wsne(mutual_not(), StrategyProfile::pure(2, pure_ne), kZ).passed);
  const GraphicalGame lone({{}}, {DenseTensor::constant(kZ, kO)});
  const auto report = verify_eps_wsne(lone, StrategyProfile::uniform(1), kHalf);
  CHECK_FALSE(report.passed);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].action == Action::kZero);
  CHECK(report.violations[0].deficit == kO);
}

TEST_CASE("verifier properties on random games") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = generate_random_game(1 + seed % 7, 1 + seed % 4, seed);
    REQUIRE(validate_game(g).ok());
    StrategyProfile s(gg::testing::random_probabilities(rng, g.num_players(), 4));
    const Rational eps = gg::testing::random_probability(rng, 6);
    const bool wsne = verify_eps_wsne(g, s, eps).passed;
    const auto ne = verify_eps_ne(g, s, eps);
    if (wsne) CHECK(ne.passed);
    if (ne.passed) CHECK(verify_eps_ne(g, s, eps + Rational(1, 7)).passed);
    for (PlayerId i = 0; i < g.num_players(); ++i) {
      const Rational z = action_payoff(g, i, Action::kZero, s);
      const Rational o = action_payoff(g, i, Action::kOne, s);
      const Rational u = expected_payoff(g, i, s);
      const auto br = best_response(g, i, s);
      CHECK(z >= kZ);
      CHECK(o <= kO);
      CHECK(u >= kZ);
      CHECK(u <= br.payoff);
      CHECK(br.payoff <= kO);
      const bool support_optimal = (s.prob_one(i) == kO || z == br.payoff) &&
                                   (s.prob_one(i) == kZ || o == br.payoff);
      CHECK((regret(g, i, s) == kZ) == support_optimal);

      // Dense evaluation against the definition.
      const auto& dense = std::get<DenseTensor>(g.tensor(i));
      const auto in = in_strategies(g, i, s);
      CHECK(z == gg::testing::enumerate_expected(
                     dense.arity, [&](std::uint64_t a) { return dense.at(Action::kZero, a); }, in));
    }
  }
}

TEST_CASE("profile accessors") {
  StrategyProfile s(2);
  CHECK_FALSE(s.has(0));
  CHECK_THROWS_AS(s.prob_one(0), gg::Error);
  s.set(0, Rational(1, 3));
  CHECK(s.prob(0, Action::kZero) == Rational(2, 3));
  CHECK_THROWS_AS(s.set(1, Rational(4, 3)), gg::Error);
}
