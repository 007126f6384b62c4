#include "graphgame/reduction_wsne.hpp"

#include "graphgame/equilibrium.hpp"
#include "graphgame/error.hpp"

namespace gg {
namespace {

using Row = std::array<Rational, 2>;

const Row kPreferZero{Rational(1), Rational(0)};
const Row kPreferOne{Rational(0), Rational(1)};

ThresholdBlock single(std::size_t input, Action monitored) {
  return ThresholdBlock{{input}, monitored, Rational(0)};
}

ThresholdBlock all_of(std::size_t count, Action monitored) {
  ThresholdBlock block{{}, monitored, Rational(static_cast<long>(count) - 1)};
  for (std::size_t m = 0; m < count; ++m) block.members.push_back(m);
  return block;
}

}  // namespace

WsneCompilation compile_wsne(const PureCircuitInstance& inst, unsigned d, bool win_lose) {
  if (d < 2) fail(ErrorKind::kInvalidArgument, "compile_wsne needs d >= 2");
  if (const auto report = validate_instance(inst); !report.ok()) {
    fail(ErrorKind::kInvalidArgument, "invalid instance: " + report.violations.front());
  }
  const std::size_t n = inst.node_count();
  WsneCompilation comp;
  auto& layout = comp.layout;
  layout.node_names = inst.names;
  layout.d = d;
  layout.win_lose = win_lose;
  layout.lambda = win_lose ? Rational(1) : wsne_bound(d);

  std::size_t total = n;
  for (const auto& gate : inst.gates) {
    if (gate.kind() == GateKind::kPurify) total += d;
  }
  std::vector<std::vector<PlayerId>> in(total);
  std::vector<PayoffTensor> tensors(total);
  for (NodeId v = 0; v < n; ++v) layout.node_player.push_back(v);

  PlayerId next_aux = n;
  for (const auto& gate : inst.gates) {
    const auto ins = gate.inputs();
    const auto outs = gate.outputs();
    switch (gate.kind()) {
      case GateKind::kNot: {
        // u plays zero -> prefer one, otherwise prefer zero.
        in[outs[0]] = {ins[0]};
        tensors[outs[0]] =
            ThresholdTensor{1, {single(0, Action::kZero)}, kPreferOne, kPreferZero};
        break;
      }
      case GateKind::kAnd: {
        in[outs[0]] = {ins[0], ins[1]};
        tensors[outs[0]] = ThresholdTensor{
            2, {single(0, Action::kOne), single(1, Action::kOne)}, kPreferOne, kPreferZero};
        break;
      }
      case GateKind::kPurify: {
        std::vector<PlayerId> aux;
        for (unsigned c = 0; c < d; ++c) {
          const PlayerId copy = next_aux++;
          aux.push_back(copy);
          in[copy] = {ins[0]};
          tensors[copy] = ThresholdTensor{1, {single(0, Action::kOne)}, kPreferOne, kPreferZero};
        }
        const Rational& lambda = layout.lambda;
        // v: zero pays 1 unless every copy plays one; one pays lambda iff they all do.
        in[outs[0]] = aux;
        tensors[outs[0]] = ThresholdTensor{
            d, {all_of(d, Action::kOne)}, Row{Rational(0), lambda}, kPreferZero};
        // w: zero pays lambda iff every copy plays zero; one pays 1 otherwise.
        in[outs[1]] = aux;
        tensors[outs[1]] = ThresholdTensor{
            d, {all_of(d, Action::kZero)}, Row{lambda, Rational(0)}, kPreferOne};
        layout.aux_players.push_back(std::move(aux));
        break;
      }
    }
  }
  comp.game = GraphicalGame(std::move(in), std::move(tensors), win_lose);
  return comp;
}

Assignment decode_wsne(const WsneLayout& layout, const StrategyProfile& profile) {
  Assignment x;
  x.reserve(layout.node_player.size());
  for (PlayerId p : layout.node_player) {
    const Rational& s = profile.prob_one(p);
    if (s.is_zero()) {
      x.push_back(Value::kZero);
    } else if (s == Rational(1)) {
      x.push_back(Value::kOne);
    } else {
      x.push_back(Value::kBot);
    }
  }
  return x;
}

Rational wsne_hardness_threshold(unsigned d, bool win_lose) {
  if (d < 2) fail(ErrorKind::kInvalidArgument, "hardness threshold needs d >= 2");
  if (win_lose) return Rational(1) - Rational(1) / pow2(d - 1);
  return wsne_bound(d);
}

}  // namespace gg
