#include "graphgame/tensor.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "graphgame/error.hpp"

namespace gg {
namespace {

void check_inputs(std::size_t arity, std::span<const Rational> in_prob_one) {
  if (in_prob_one.size() != arity) {
    fail(ErrorKind::kInvalidArgument,
         "tensor of arity " + std::to_string(arity) + " evaluated on " +
             std::to_string(in_prob_one.size()) + " inputs");
  }
}

Rational monitored_probability(Action monitored, const Rational& prob_one) {
  return monitored == Action::kOne ? prob_one : Rational(1) - prob_one;
}

std::vector<Rational> member_probabilities(const ThresholdBlock& block,
                                           std::span<const Rational> in_prob_one) {
  std::vector<Rational> probs;
  probs.reserve(block.members.size());
  for (std::size_t m : block.members) {
    if (m >= in_prob_one.size()) {
      fail(ErrorKind::kInvalidArgument,
           "block member " + std::to_string(m) + " has no strategy");
    }
    probs.push_back(monitored_probability(block.monitored, in_prob_one[m]));
  }
  return probs;
}

// Integer form of the convolution DP: count j has probability
// coeffs[j] / denom where denom is the product of member denominators.
struct CountPolynomial {
  std::vector<mpz_class> coeffs;
  mpz_class denom;
};

CountPolynomial count_polynomial(std::span<const Rational> success_probs) {
  CountPolynomial poly{{mpz_class(1)}, mpz_class(1)};
  poly.coeffs.reserve(success_probs.size() + 1);
  for (const Rational& p : success_probs) {
    if (p.sign() < 0 || p > Rational(1)) {
      fail(ErrorKind::kInvalidArgument, "probability outside [0,1]: " + p.str());
    }
    const mpz_class hit = p.numerator();
    const mpz_class total = p.denominator();
    const mpz_class miss = total - hit;
    auto& c = poly.coeffs;
    c.emplace_back(0);
    for (std::size_t j = c.size() - 1; j > 0; --j) {
      c[j] *= miss;
      c[j] += c[j - 1] * hit;
    }
    c[0] *= miss;
    poly.denom *= total;
  }
  return poly;
}

// Smallest integer count that strictly exceeds `threshold` (may be <= 0).
long first_count_above(const Rational& threshold) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), threshold.mpq().get_num_mpz_t(),
             threshold.mpq().get_den_mpz_t());
  return fl.get_si() + 1;
}

bool pure_condition(const ThresholdTensor& tensor, std::uint64_t profile) {
  for (const auto& block : tensor.blocks) {
    long count = 0;
    for (std::size_t m : block.members) {
      const bool plays_one = (profile >> m) & 1U;
      if (plays_one == (block.monitored == Action::kOne)) ++count;
    }
    if (!(Rational(count) > block.threshold)) return false;
  }
  return true;
}

std::uint64_t insert_bit(std::uint64_t profile, std::size_t position, Action fixed) {
  const std::uint64_t low = profile & ((std::uint64_t{1} << position) - 1);
  const std::uint64_t high = profile >> position;
  return low | (static_cast<std::uint64_t>(index(fixed)) << position) |
         (high << (position + 1));
}

// Canonical form after a restriction: drops constant-true blocks and folds a
// constant-false block into row_true := row_false.
void fold_constant_blocks(ThresholdTensor& t) {
  bool constant_false = false;
  std::erase_if(t.blocks, [&](const ThresholdBlock& b) {
    if (b.threshold.sign() < 0) return true;
    if (b.threshold >= Rational(static_cast<long>(b.members.size()))) {
      constant_false = true;
    }
    return false;
  });
  if (constant_false) {
    t.blocks.clear();
    t.row_true = t.row_false;
  }
}

PayoffTensor restrict_dense(const DenseTensor& t, std::size_t position, Action fixed) {
  DenseTensor out;
  out.arity = t.arity - 1;
  out.table.reserve(t.table.size() / 2);
  for (Action own : {Action::kZero, Action::kOne}) {
    for (std::uint64_t p = 0; p < out.profile_count(); ++p) {
      out.table.push_back(t.at(own, insert_bit(p, position, fixed)));
    }
  }
  return out;
}

PayoffTensor restrict_threshold(const ThresholdTensor& t, std::size_t position,
                                Action fixed) {
  ThresholdTensor out = t;
  out.arity = t.arity - 1;
  for (auto& block : out.blocks) {
    const auto it = std::find(block.members.begin(), block.members.end(), position);
    if (it != block.members.end()) {
      block.members.erase(it);
      if (fixed == block.monitored) block.threshold -= Rational(1);
    }
    for (auto& m : block.members) {
      if (m > position) --m;
    }
  }
  fold_constant_blocks(out);
  return out;
}

}  // namespace

const char* action_name(Action a) { return a == Action::kZero ? "zero" : "one"; }

DenseTensor DenseTensor::constant(const Rational& zero_payoff,
                                  const Rational& one_payoff) {
  return DenseTensor{0, {zero_payoff, one_payoff}};
}

DenseTensor DenseTensor::from_rows(std::size_t arity, std::vector<Rational> zero_row,
                                   std::vector<Rational> one_row) {
  DenseTensor t{arity, std::move(zero_row)};
  t.table.insert(t.table.end(), one_row.begin(), one_row.end());
  return t;
}

std::size_t arity(const PayoffTensor& tensor) {
  return std::visit([](const auto& t) { return t.arity; }, tensor);
}

std::vector<std::string> structural_problems(const PayoffTensor& tensor) {
  std::vector<std::string> problems;
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    if (dense->arity > 62) {
      problems.push_back("dense tensor arity " + std::to_string(dense->arity) +
                         " is not representable");
    } else if (dense->table.size() != (std::size_t{2} << dense->arity)) {
      problems.push_back("dense table has " + std::to_string(dense->table.size()) +
                         " entries, expected " +
                         std::to_string(std::size_t{2} << dense->arity));
    }
    return problems;
  }
  const auto& t = std::get<ThresholdTensor>(tensor);
  std::vector<bool> used(t.arity, false);
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    const auto& block = t.blocks[b];
    const std::string where = "block " + std::to_string(b);
    for (std::size_t m : block.members) {
      if (m >= t.arity) {
        problems.push_back(where + " references input " + std::to_string(m) +
                           " outside arity " + std::to_string(t.arity));
      } else if (used[m]) {
        problems.push_back(where + " reuses input " + std::to_string(m));
      } else {
        used[m] = true;
      }
    }
    if (block.threshold.sign() < 0 ||
        block.threshold >= Rational(static_cast<long>(block.members.size()))) {
      problems.push_back(where + " threshold " + block.threshold.str() +
                         " outside [0, " + std::to_string(block.members.size()) + ")");
    }
  }
  return problems;
}

std::vector<Rational> payoff_values(const PayoffTensor& tensor) {
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) return dense->table;
  const auto& t = std::get<ThresholdTensor>(tensor);
  return {t.row_true[0], t.row_true[1], t.row_false[0], t.row_false[1]};
}

Rational eval_dense(const DenseTensor& tensor, Action own,
                    std::span<const Rational> in_prob_one) {
  check_inputs(tensor.arity, in_prob_one);
  // Product weights of all 2^arity input profiles, built one input at a time.
  std::vector<Rational> weights{Rational(1)};
  weights.reserve(tensor.profile_count());
  for (std::size_t j = 0; j < tensor.arity; ++j) {
    const Rational& q = in_prob_one[j];
    const Rational miss = Rational(1) - q;
    const std::size_t half = weights.size();
    weights.resize(2 * half);
    for (std::size_t p = 0; p < half; ++p) {
      weights[p + half] = weights[p] * q;
      weights[p] *= miss;
    }
  }
  Rational total;
  for (std::uint64_t p = 0; p < tensor.profile_count(); ++p) {
    const Rational& value = tensor.at(own, p);
    if (!value.is_zero() && !weights[p].is_zero()) total += value * weights[p];
  }
  return total;
}

std::vector<Rational> poisson_binomial(std::span<const Rational> success_probs) {
  const CountPolynomial poly = count_polynomial(success_probs);
  std::vector<Rational> dist;
  dist.reserve(poly.coeffs.size());
  for (const auto& c : poly.coeffs) dist.emplace_back(mpq_class(c, poly.denom));
  return dist;
}

std::vector<Rational> block_count_distribution(const ThresholdBlock& block,
                                               std::span<const Rational> in_prob_one) {
  return poisson_binomial(member_probabilities(block, in_prob_one));
}

Rational block_probability(const ThresholdBlock& block,
                           std::span<const Rational> in_prob_one) {
  // Pure members: count directly.
  long count = 0;
  bool pure = true;
  for (std::size_t m : block.members) {
    const Rational& p = in_prob_one[m];
    if (p.is_zero()) continue;
    if (!p.is_one()) {
      pure = false;
      break;
    }
    ++count;
  }
  if (pure) {
    if (block.monitored == Action::kZero) count = static_cast<long>(block.members.size()) - count;
    return Rational(count >= first_count_above(block.threshold) ? 1 : 0);
  }
  const CountPolynomial poly =
      count_polynomial(member_probabilities(block, in_prob_one));
  const long first = std::max(0L, first_count_above(block.threshold));
  mpz_class hits = 0;
  for (std::size_t j = static_cast<std::size_t>(first); j < poly.coeffs.size(); ++j) {
    hits += poly.coeffs[j];
  }
  return Rational(mpq_class(hits, poly.denom));
}

Rational condition_probability(const ThresholdTensor& tensor,
                               std::span<const Rational> in_prob_one) {
  check_inputs(tensor.arity, in_prob_one);
  Rational q(1);
  for (const auto& block : tensor.blocks) {
    q *= block_probability(block, in_prob_one);
    if (q.is_zero()) break;
  }
  return q;
}

Rational eval_threshold(const ThresholdTensor& tensor, Action own,
                        std::span<const Rational> in_prob_one) {
  const Rational& if_true = tensor.row_true[index(own)];
  const Rational& if_false = tensor.row_false[index(own)];
  check_inputs(tensor.arity, in_prob_one);
  if (if_true == if_false) return if_true;
  const Rational q = condition_probability(tensor, in_prob_one);
  return if_true * q + if_false * (Rational(1) - q);
}

Rational evaluate(const PayoffTensor& tensor, Action own,
                  std::span<const Rational> in_prob_one) {
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    return eval_dense(*dense, own, in_prob_one);
  }
  return eval_threshold(std::get<ThresholdTensor>(tensor), own, in_prob_one);
}

Rational evaluate_pure(const PayoffTensor& tensor, Action own, std::uint64_t profile) {
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    return dense->at(own, profile);
  }
  const auto& t = std::get<ThresholdTensor>(tensor);
  return pure_condition(t, profile) ? t.row_true[index(own)] : t.row_false[index(own)];
}

DenseTensor densify(const ThresholdTensor& tensor, std::size_t max_arity) {
  if (tensor.arity > max_arity) {
    fail(ErrorKind::kLimitExceeded,
         "cannot densify arity " + std::to_string(tensor.arity) + " (limit " +
             std::to_string(max_arity) + ")");
  }
  DenseTensor out;
  out.arity = tensor.arity;
  out.table.resize(std::size_t{2} << tensor.arity);
  for (std::uint64_t p = 0; p < out.profile_count(); ++p) {
    const auto& row = pure_condition(tensor, p) ? tensor.row_true : tensor.row_false;
    out.table[p] = row[0];
    out.table[out.profile_count() | p] = row[1];
  }
  return out;
}

DenseTensor densify(const PayoffTensor& tensor, std::size_t max_arity) {
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    if (dense->arity > max_arity) {
      fail(ErrorKind::kLimitExceeded,
           "dense arity " + std::to_string(dense->arity) + " exceeds limit " +
               std::to_string(max_arity));
    }
    return *dense;
  }
  return densify(std::get<ThresholdTensor>(tensor), max_arity);
}

PayoffTensor restrict_input(const PayoffTensor& tensor, std::size_t position,
                            Action fixed) {
  if (position >= arity(tensor)) {
    fail(ErrorKind::kInvalidArgument,
         "cannot restrict input " + std::to_string(position) + " of a tensor with arity " +
             std::to_string(arity(tensor)));
  }
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    return restrict_dense(*dense, position, fixed);
  }
  return restrict_threshold(std::get<ThresholdTensor>(tensor), position, fixed);
}

std::optional<Action> find_eps_dominant(const PayoffTensor& tensor, const Rational& eps) {
  // f(a) = R(zero;a) - R(one;a). zero qualifies iff f >= -eps everywhere,
  // one iff f <= eps everywhere.
  bool zero_ok = true;
  bool one_ok = true;
  auto consider = [&](const Rational& zero_payoff, const Rational& one_payoff) {
    const Rational f = zero_payoff - one_payoff;
    if (f < -eps) zero_ok = false;
    if (f > eps) one_ok = false;
  };
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    for (std::uint64_t p = 0; p < dense->profile_count() && (zero_ok || one_ok); ++p) {
      consider(dense->at(Action::kZero, p), dense->at(Action::kOne, p));
    }
  } else {
    const auto& t = std::get<ThresholdTensor>(tensor);
    bool true_reachable = true;
    bool false_reachable = false;
    for (const auto& block : t.blocks) {
      const Rational size(static_cast<long>(block.members.size()));
      if (!(size > block.threshold)) true_reachable = false;
      if (!(Rational(0) > block.threshold)) false_reachable = true;
    }
    if (true_reachable) consider(t.row_true[0], t.row_true[1]);
    if (false_reachable) consider(t.row_false[0], t.row_false[1]);
  }
  if (zero_ok) return Action::kZero;
  if (one_ok) return Action::kOne;
  return std::nullopt;
}

}  // namespace gg
