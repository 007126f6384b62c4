#include "graphgame/reduction_ne.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "graphgame/error.hpp"
#include "test_support.hpp"

using namespace gg;

namespace {

const Rational kZ(0), kO(1), kHalf(1, 2);

PureCircuitInstance not_cycle() {
  return PureCircuitInstance({"u", "v"}, {Gate::make_not(0, 1), Gate::make_not(1, 0)});
}

// x2 = AND x0 x1 with x0, x1 fed back through NOTs of x2.
PureCircuitInstance and_loop() {
  return PureCircuitInstance(3, {Gate::make_not(2, 0), Gate::make_not(2, 1), Gate::make_and(0, 1, 2)});
}

PureCircuitInstance purify_chain() {
  return PureCircuitInstance({"u", "v", "w"}, {Gate::make_not(1, 0), Gate::make_purify(0, 1, 2)});
}

const ThresholdTensor& threshold_of(const NeCompilation& comp, PlayerId p) {
  return std::get<ThresholdTensor>(comp.game.tensor(p));
}

}  // namespace

TEST_CASE("choose_k goldens") {
  CHECK(choose_k(kHalf) == 229);  // 72 ln 24 = 228.8198...
  CHECK(choose_k(Rational(1, 10)) == 8619);    // 1800 ln 120 = 8617.485...
  CHECK(choose_k(Rational(2, 5)) == 383);
  CHECK(choose_k(Rational(3, 10)) == 739);
  CHECK(choose_k(Rational(1, 10)) > choose_k(kHalf));
  const auto b = replication_bound(kHalf);
  CHECK(b.lower < b.upper);
  CHECK(b.upper - b.lower < Rational(1, 1000000));
  CHECK(b.lower > Rational(2288198, 10000));
  CHECK(b.upper < Rational(2288199, 10000));
  CHECK_THROWS_AS(choose_k(kZ), gg::Error);
  CHECK_THROWS_AS(choose_k(Rational(6, 10)), gg::Error);
}

TEST_CASE("choose_k is odd and decreasing on a sweep") {
  std::uint64_t previous = 0;
  for (long den = 50; den >= 3; --den) {
    const Rational eps(1, den);
    const auto k = choose_k(eps);
    CHECK(k % 2 == 1);
    if (previous != 0) CHECK(k <= previous);
    previous = k;
  }
}

TEST_CASE("NOT-cycle structure") {
  const auto comp = compile_ne(not_cycle(), Rational(3, 10), 5);
  CHECK(comp.game.num_players() == 10);
  CHECK(comp.layout.k_overridden);
  CHECK(comp.game.win_lose());
  CHECK(validate_game(comp.game).ok());
  for (PlayerId p = 0; p < 10; ++p) {
    const auto& t = threshold_of(comp, p);
    REQUIRE(t.blocks.size() == 1);
    CHECK(t.blocks[0].members.size() == 5);
    CHECK(t.blocks[0].monitored == Action::kZero);
    CHECK(t.blocks[0].threshold == Rational(5, 2));
    const PlayerId first_opponent = p < 5 ? 5 : 0;
    const auto in = comp.game.in_neighbours(p);
    CHECK(std::vector<PlayerId>(in.begin(), in.end()) ==
          std::vector<PlayerId>{first_opponent, first_opponent + 1, first_opponent + 2,
                                first_opponent + 3, first_opponent + 4});
  }
  CHECK_THROWS_AS(compile_ne(not_cycle(), Rational(3, 10), 4), gg::Error);
  CHECK_THROWS_AS(compile_ne(not_cycle(), Rational(3, 5), 5), gg::Error);
}

TEST_CASE("AND and PURIFY structure") {
  const auto comp = compile_ne(and_loop(), Rational(1, 5), 3);
  const auto& t = threshold_of(comp, 6);
  REQUIRE(t.blocks.size() == 2);
  CHECK(comp.game.in_neighbours(6).size() == 6);
  for (const auto& block : t.blocks) {
    CHECK(block.members.size() == 3);
    CHECK(block.threshold == Rational(3, 2));
    CHECK(block.monitored == Action::kOne);
  }

  const auto pur = compile_ne(purify_chain(), Rational(3, 10), 5);
  CHECK(threshold_of(pur, 5).blocks[0].threshold == Rational(9, 4));
  CHECK(threshold_of(pur, 10).blocks[0].threshold == Rational(11, 4));
  for (PlayerId p = 0; p < pur.game.num_players(); ++p) {
    for (const auto& value : payoff_values(pur.game.tensor(p))) {
      CHECK((value == kZ || value == kO));
    }
  }
}

TEST_CASE("unanimous pure blocks reproduce the gate logic") {
  const auto comp = compile_ne(and_loop(), Rational(1, 5), 3);
  for (int bits = 0; bits < 4; ++bits) {
    const Action a = (bits & 1) ? Action::kOne : Action::kZero;
    const Action b = (bits & 2) ? Action::kOne : Action::kZero;
    std::uint64_t profile = 0;
    for (int j = 0; j < 3; ++j) {
      if (a == Action::kOne) profile |= std::uint64_t{1} << j;
      if (b == Action::kOne) profile |= std::uint64_t{1} << (3 + j);
    }
    const auto dense = densify(comp.game.tensor(6));
    const bool both = a == Action::kOne && b == Action::kOne;
    CHECK(dense.at(Action::kOne, profile) == (both ? kO : kZ));
    CHECK(dense.at(Action::kZero, profile) == (both ? kZ : kO));
  }
  const auto nots = compile_ne(not_cycle(), Rational(1, 5), 3);
  const auto dense = densify(nots.game.tensor(0));
  CHECK(dense.at(Action::kOne, 0) == kO);  // inputs all zero
  CHECK(dense.at(Action::kZero, 7) == kO);  // inputs all one
}

TEST_CASE("decode_ne") {
  const Rational eps(3, 10);
  const auto comp = compile_ne(not_cycle(), eps, 5);
  CHECK(decode_ne(comp.layout, StrategyProfile(std::vector<Rational>(10, kO)))[0] == Value::kOne);
  CHECK(decode_ne(comp.layout, StrategyProfile::uniform(10))[0] == Value::kBot);
  std::vector<Rational> probs(10, kZ);
  probs[3] = kHalf;
  CHECK(decode_ne(comp.layout, StrategyProfile(probs))[0] == Value::kBot);
  CHECK(decode_ne(comp.layout, StrategyProfile(probs))[1] == Value::kZero);
  probs[3] = kO - payoff_to_probability_bound(eps);
  CHECK(decode_ne(comp.layout, StrategyProfile(probs))[0] == Value::kZero);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = gg::testing::random_probabilities(rng, 10, 3);
    const auto before = decode_ne(comp.layout, StrategyProfile(p));
    std::shuffle(p.begin(), p.begin() + 5, rng);
    std::shuffle(p.begin() + 5, p.end(), rng);
    CHECK(decode_ne(comp.layout, StrategyProfile(p)) == before);
  }
}

TEST_CASE("payoff_to_probability_bound") {
  CHECK(payoff_to_probability_bound(Rational(3, 10)) == Rational(3, 5));
  CHECK(payoff_to_probability_bound(Rational(1, 1000000)) - kHalf < Rational(1, 1000000));
  // Any (1/2 - eps)-NE facing payoffs (<= eps/3, >= 1 - eps/3) puts at least
  // the floor on the better action.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational eps = Rational(1 + static_cast<long>(gg::testing::draw(rng, 15)), 30);
    const Rational third = eps / Rational(3);
    const Rational bad = third * gg::testing::random_probability(rng);
    const Rational good = kO - third * gg::testing::random_probability(rng);
    const Rational s_good = gg::testing::random_probability(rng, 40);
    const Rational u = s_good * good + (kO - s_good) * bad;
    CHECK(u <= s_good + third);
    if (good - u <= kHalf - eps) CHECK(s_good >= payoff_to_probability_bound(eps));
  }
}

TEST_CASE("gadget_forcing_check matches direct evaluation at small k") {
  std::mt19937_64 rng(8);
  const auto comp = compile_ne(and_loop(), Rational(1, 5), 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = gg::testing::random_probabilities(rng, 6, 4);
    const auto out = gadget_forcing_check(comp, and_loop(), 2, p);
    REQUIRE(out.size() == 3);
    const auto dense = densify(comp.game.tensor(out[0].player));
    const auto expect_zero = gg::testing::enumerate_expected(
        6, [&](std::uint64_t a) { return dense.at(Action::kZero, a); }, p);
    for (const auto& o : out) {
      CHECK(o.zero == expect_zero);
      CHECK(o.zero + o.one == kO);
    }
  }
  CHECK_THROWS_AS(gadget_forcing_check(comp, and_loop(), 2, {kHalf}), gg::Error);
  CHECK_THROWS_AS(gadget_forcing_check(comp, and_loop(), 7, {}), gg::Error);
}
