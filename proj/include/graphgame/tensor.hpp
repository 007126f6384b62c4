#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphgame/rational.hpp"

namespace gg {

enum class Action : std::uint8_t { kZero = 0, kOne = 1 };

inline Action other(Action a) {
  return a == Action::kZero ? Action::kOne : Action::kZero;
}
inline std::size_t index(Action a) { return static_cast<std::size_t>(a); }
const char* action_name(Action a);

// Tensor inputs are positional: input j is the j-th in-neighbour of the
// owning player, and every evaluation takes one prob_one per input.

// Full payoff table. Entry (own, profile) lives at (own << arity) | profile,
// where bit j of profile is set iff input j plays one.
struct DenseTensor {
  std::size_t arity = 0;
  std::vector<Rational> table;

  static DenseTensor constant(const Rational& zero_payoff,
                              const Rational& one_payoff);
  static DenseTensor from_rows(std::size_t arity, std::vector<Rational> zero_row,
                               std::vector<Rational> one_row);

  const Rational& at(Action own, std::uint64_t profile) const {
    return table[(static_cast<std::uint64_t>(index(own)) << arity) | profile];
  }
  std::uint64_t profile_count() const { return std::uint64_t{1} << arity; }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;
};

// Predicate "strictly more than `threshold` of `members` play `monitored`".
struct ThresholdBlock {
  std::vector<std::size_t> members;
  Action monitored = Action::kOne;
  Rational threshold;

  friend bool operator==(const ThresholdBlock&, const ThresholdBlock&) = default;
};

// Payoff row_true[own] when every block predicate holds, row_false[own]
// otherwise. No blocks means the condition is constantly true.
struct ThresholdTensor {
  std::size_t arity = 0;
  std::vector<ThresholdBlock> blocks;
  std::array<Rational, 2> row_true;
  std::array<Rational, 2> row_false;

  friend bool operator==(const ThresholdTensor&, const ThresholdTensor&) = default;
};

using PayoffTensor = std::variant<DenseTensor, ThresholdTensor>;

inline constexpr std::size_t kDefaultDensifyLimit = 16;

std::size_t arity(const PayoffTensor& tensor);

// Structural problems (block overlap, bad threshold, missing entries...).
// Empty when the tensor is well formed. Payoff ranges are not checked here.
std::vector<std::string> structural_problems(const PayoffTensor& tensor);

// Every payoff value the tensor can produce (rows of a threshold tensor,
// the whole table of a dense one).
std::vector<Rational> payoff_values(const PayoffTensor& tensor);

Rational eval_dense(const DenseTensor& tensor, Action own,
                    std::span<const Rational> in_prob_one);

// Exact Poisson-binomial distribution of the number of successes.
std::vector<Rational> poisson_binomial(std::span<const Rational> success_probs);

// Distribution of how many block members play the monitored action.
std::vector<Rational> block_count_distribution(
    const ThresholdBlock& block, std::span<const Rational> in_prob_one);

// Pr[count > threshold] for the given block.
Rational block_probability(const ThresholdBlock& block,
                           std::span<const Rational> in_prob_one);

Rational condition_probability(const ThresholdTensor& tensor,
                               std::span<const Rational> in_prob_one);

Rational eval_threshold(const ThresholdTensor& tensor, Action own,
                        std::span<const Rational> in_prob_one);

Rational evaluate(const PayoffTensor& tensor, Action own,
                  std::span<const Rational> in_prob_one);

// Payoff under a pure input profile (bit j of profile = input j plays one).
Rational evaluate_pure(const PayoffTensor& tensor, Action own,
                       std::uint64_t profile);

DenseTensor densify(const ThresholdTensor& tensor,
                    std::size_t max_arity = kDefaultDensifyLimit);
DenseTensor densify(const PayoffTensor& tensor,
                    std::size_t max_arity = kDefaultDensifyLimit);

// Fixes input `position` to a pure action and drops it. Threshold tensors
// stay in threshold form; blocks whose predicate becomes constant are folded
// away.
PayoffTensor restrict_input(const PayoffTensor& tensor, std::size_t position,
                            Action fixed);

// The action k with R(k;a) >= R(other;a) - eps for every achievable input
// profile a, preferring zero. Dense tensors are enumerated; threshold tensors
// only need their achievable rows.
std::optional<Action> find_eps_dominant(const PayoffTensor& tensor,
                                        const Rational& eps);

}  // namespace gg
