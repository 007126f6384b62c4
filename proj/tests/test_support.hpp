#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "graphgame/circuit.hpp"
#include "graphgame/game.hpp"
#include "graphgame/rational.hpp"
#include "graphgame/tensor.hpp"

namespace gg::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// p/q with 1 <= q <= max_den and 0 <= p <= q.
inline Rational random_probability(std::mt19937_64& rng, long max_den = 8) {
  const long den = 1 + static_cast<long>(draw(rng, max_den));
  return Rational(static_cast<long>(draw(rng, den + 1)), den);
}

inline std::vector<Rational> random_probabilities(std::mt19937_64& rng, std::size_t n,
                                                  long max_den = 8) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_probability(rng, max_den));
  return out;
}

// Distribution of successes by summing over all 2^n outcomes.
inline std::vector<Rational> enumerate_success_counts(const std::vector<Rational>& probs) {
  std::vector<Rational> dist(probs.size() + 1);
  for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << probs.size()); ++outcome) {
    Rational weight(1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if ((outcome >> i) & 1U) {
        weight *= probs[i];
        ++hits;
      } else {
        weight *= Rational(1) - probs[i];
      }
    }
    dist[hits] += weight;
  }
  return dist;
}

// sum_a R(own; a) * prod_j s_j(a_j), straight from the definition, reading
// the table through a caller-supplied pure-profile lookup.
template <typename Lookup>
Rational enumerate_expected(std::size_t arity, Lookup lookup,
                            const std::vector<Rational>& prob_one) {
  Rational total;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << arity); ++a) {
    Rational weight(1);
    for (std::size_t j = 0; j < arity; ++j) {
      weight *= ((a >> j) & 1U) ? prob_one[j] : Rational(1) - prob_one[j];
    }
    total += lookup(a) * weight;
  }
  return total;
}

// Random threshold tensor: disjoint blocks drawn from a shuffled input list,
// thresholds in [0, size) with halves allowed.
inline ThresholdTensor random_threshold_tensor(std::mt19937_64& rng, std::size_t arity) {
  ThresholdTensor t;
  t.arity = arity;
  std::vector<std::size_t> inputs(arity);
  for (std::size_t i = 0; i < arity; ++i) inputs[i] = i;
  for (std::size_t i = arity; i > 1; --i) std::swap(inputs[i - 1], inputs[draw(rng, i)]);
  std::size_t next = 0;
  const std::size_t block_count = arity == 0 ? 0 : 1 + draw(rng, 3);
  for (std::size_t b = 0; b < block_count && next < arity; ++b) {
    const std::size_t remaining = arity - next;
    const std::size_t size = 1 + draw(rng, remaining);
    ThresholdBlock block;
    for (std::size_t m = 0; m < size; ++m) block.members.push_back(inputs[next++]);
    block.monitored = draw(rng, 2) ? Action::kOne : Action::kZero;
    block.threshold = Rational(static_cast<long>(draw(rng, 2 * size)), 2);
    t.blocks.push_back(std::move(block));
  }
  for (auto& v : t.row_true) v = random_probability(rng, 6);
  for (auto& v : t.row_false) v = random_probability(rng, 6);
  return t;
}

// Gate truth tables written out as explicit allowed-output sets, indexed by
// input values. Independent of check_gate.
inline bool table_allows(GateKind kind, Value u, Value v, Value w) {
  auto in = [](Value x, std::initializer_list<Value> set) {
    for (Value s : set) {
      if (s == x) return true;
    }
    return false;
  };
  constexpr Value Z = Value::kZero, O = Value::kOne, B = Value::kBot;
  switch (kind) {
    case GateKind::kNot:  // input u, output v
      if (u == Z) return v == O;
      if (u == O) return v == Z;
      return in(v, {Z, O, B});
    case GateKind::kAnd:  // inputs u, v, output w
      if (u == O && v == O) return w == O;
      if (u == Z || v == Z) return w == Z;
      return in(w, {Z, O, B});
    case GateKind::kPurify:  // input u, outputs v, w
      if (u == Z) return v == Z && w == Z;
      if (u == O) return v == O && w == O;
      return in(v, {Z, O}) || in(w, {Z, O});
  }
  return false;
}

}  // namespace gg::testing
