#include "graphgame/reduction_ne.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>

#include "graphgame/error.hpp"

namespace gg {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(value_, kPrecision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }

  Rational to_rational() {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return Rational(q);
  }

 private:
  mpfr_t value_;
};

Rational bound_rounded(const Rational& eps, mpfr_rnd_t rnd) {
  const Rational ratio = Rational(12) / eps;
  const Rational scale = Rational(18) / (eps * eps);
  Mpfr log_term, factor;
  // log is increasing, so rounding its argument and result the same way
  // keeps the enclosure valid.
  mpfr_set_q(log_term.get(), ratio.mpq().get_mpq_t(), rnd);
  mpfr_log(log_term.get(), log_term.get(), rnd);
  mpfr_set_q(factor.get(), scale.mpq().get_mpq_t(), rnd);
  mpfr_mul(log_term.get(), log_term.get(), factor.get(), rnd);
  return log_term.to_rational();
}

void check_eps(const Rational& eps) {
  if (eps.sign() <= 0 || eps > Rational(1, 2)) {
    fail(ErrorKind::kInvalidArgument, "eps must lie in (0, 1/2], got " + eps.str());
  }
}

using Row = std::array<Rational, 2>;
const Row kPreferZero{Rational(1), Rational(0)};
const Row kPreferOne{Rational(0), Rational(1)};

ThresholdBlock whole_block(std::size_t offset, std::uint64_t k, Action monitored,
                           Rational threshold) {
  ThresholdBlock block{{}, monitored, std::move(threshold)};
  for (std::uint64_t m = 0; m < k; ++m) block.members.push_back(offset + m);
  return block;
}

}  // namespace

KBound replication_bound(const Rational& eps) {
  check_eps(eps);
  return {bound_rounded(eps, MPFR_RNDD), bound_rounded(eps, MPFR_RNDU)};
}

std::uint64_t choose_k(const Rational& eps) {
  const Rational upper = replication_bound(eps).upper;
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), upper.mpq().get_num_mpz_t(), upper.mpq().get_den_mpz_t());
  if (mpz_even_p(k.get_mpz_t())) k += 1;
  return k.get_ui();
}

NeCompilation compile_ne(const PureCircuitInstance& inst, const Rational& eps,
                         std::optional<std::uint64_t> k_override) {
  check_eps(eps);
  if (const auto report = validate_instance(inst); !report.ok()) {
    fail(ErrorKind::kInvalidArgument, "invalid instance: " + report.violations.front());
  }
  if (k_override && (*k_override % 2 == 0)) {
    fail(ErrorKind::kInvalidArgument,
         "k override must be odd, got " + std::to_string(*k_override));
  }
  NeCompilation comp;
  auto& layout = comp.layout;
  layout.node_names = inst.names;
  layout.eps = eps;
  layout.k_overridden = k_override.has_value();
  layout.k = k_override ? *k_override : choose_k(eps);
  const std::uint64_t k = layout.k;
  const std::size_t n = inst.node_count();

  for (NodeId v = 0; v < n; ++v) {
    std::vector<PlayerId> block;
    for (std::uint64_t i = 0; i < k; ++i) block.push_back(v * k + i);
    layout.node_block.push_back(std::move(block));
  }

  const Rational k_rational(static_cast<long>(k));
  const Rational half_k = k_rational / Rational(2);
  std::vector<std::vector<PlayerId>> in(n * k);
  std::vector<PayoffTensor> tensors(n * k);
  for (const auto& gate : inst.gates) {
    const auto ins = gate.inputs();
    const auto outs = gate.outputs();
    std::vector<PlayerId> inputs;
    for (NodeId u : ins) {
      inputs.insert(inputs.end(), layout.node_block[u].begin(), layout.node_block[u].end());
    }
    auto emit = [&](NodeId node, const ThresholdTensor& tensor) {
      for (PlayerId p : layout.node_block[node]) {
        in[p] = inputs;
        tensors[p] = tensor;
      }
    };
    switch (gate.kind()) {
      case GateKind::kNot:
        // Majority of the input block plays zero -> prefer one.
        emit(outs[0], ThresholdTensor{k, {whole_block(0, k, Action::kZero, half_k)},
                                      kPreferOne, kPreferZero});
        break;
      case GateKind::kAnd:
        emit(outs[0], ThresholdTensor{2 * k,
                                      {whole_block(0, k, Action::kOne, half_k),
                                       whole_block(k, k, Action::kOne, half_k)},
                                      kPreferOne, kPreferZero});
        break;
      case GateKind::kPurify: {
        const Rational low = (Rational(1, 2) - eps / Rational(6)) * k_rational;
        const Rational high = (Rational(1, 2) + eps / Rational(6)) * k_rational;
        emit(outs[0], ThresholdTensor{k, {whole_block(0, k, Action::kOne, low)},
                                      kPreferOne, kPreferZero});
        emit(outs[1], ThresholdTensor{k, {whole_block(0, k, Action::kOne, high)},
                                      kPreferOne, kPreferZero});
        break;
      }
    }
  }
  comp.game = GraphicalGame(std::move(in), std::move(tensors), true);
  return comp;
}

Assignment decode_ne(const NeLayout& layout, const StrategyProfile& profile) {
  const Rational floor = payoff_to_probability_bound(layout.eps);
  Assignment x;
  x.reserve(layout.node_block.size());
  for (const auto& block : layout.node_block) {
    bool zero = true;
    bool one = true;
    for (PlayerId p : block) {
      const Rational& s = profile.prob_one(p);
      if (Rational(1) - s < floor) zero = false;
      if (s < floor) one = false;
    }
    x.push_back(zero ? Value::kZero : one ? Value::kOne : Value::kBot);
  }
  return x;
}

std::vector<OutputPayoffs> gadget_forcing_check(const NeCompilation& comp,
                                                const PureCircuitInstance& inst,
                                                std::size_t gate,
                                                const std::vector<Rational>& input_prob_one) {
  if (gate >= inst.gates.size()) {
    fail(ErrorKind::kInvalidArgument, "no gate " + std::to_string(gate));
  }
  const auto& g = inst.gates[gate];
  const auto& layout = comp.layout;
  StrategyProfile profile(comp.game.num_players());
  std::size_t next = 0;
  for (NodeId u : g.inputs()) {
    for (PlayerId p : layout.node_block[u]) {
      if (next >= input_prob_one.size()) {
        fail(ErrorKind::kInvalidArgument, "too few input strategies for the gadget");
      }
      profile.set(p, input_prob_one[next++]);
    }
  }
  if (next != input_prob_one.size()) {
    fail(ErrorKind::kInvalidArgument, "too many input strategies for the gadget");
  }
  // Output players of one block share inputs and tensor; evaluate each
  // distinct (inputs, tensor) pair once.
  std::vector<OutputPayoffs> result;
  std::vector<std::pair<PlayerId, OutputPayoffs>> cache;
  for (NodeId v : g.outputs()) {
    for (PlayerId p : layout.node_block[v]) {
      const OutputPayoffs* hit = nullptr;
      for (const auto& [q, payoffs] : cache) {
        const auto a = comp.game.in_neighbours(p);
        const auto b = comp.game.in_neighbours(q);
        if (std::equal(a.begin(), a.end(), b.begin(), b.end()) &&
            comp.game.tensor(p) == comp.game.tensor(q)) {
          hit = &payoffs;
          break;
        }
      }
      OutputPayoffs out{p, {}, {}};
      if (hit) {
        out.zero = hit->zero;
        out.one = hit->one;
      } else {
        out.zero = action_payoff(comp.game, p, Action::kZero, profile);
        out.one = action_payoff(comp.game, p, Action::kOne, profile);
        cache.emplace_back(p, out);
      }
      result.push_back(std::move(out));
    }
  }
  return result;
}

Rational payoff_to_probability_bound(const Rational& eps) {
  return Rational(1, 2) + eps / Rational(3);
}

}  // namespace gg
