#include "graphgame/circuit.hpp"

#include <algorithm>
#include <random>

#include "graphgame/error.hpp"

namespace gg {
namespace {

bool pure(Value v) { return v != Value::kBot; }

// Unbiased enough for instance generation and identical across standard
// libraries, unlike std::uniform_int_distribution.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw(rng, i)]);
  }
}

std::size_t input_count(GateKind kind) { return kind == GateKind::kAnd ? 2 : 1; }
std::size_t output_count(GateKind kind) { return kind == GateKind::kPurify ? 2 : 1; }

struct GateShape {
  GateKind kind;
  std::vector<NodeId> outputs;
};

std::vector<GateShape> draw_shapes(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<GateShape> shapes;
  std::size_t next = 0;
  while (next < n) {
    std::vector<GateKind> kinds{GateKind::kNot};
    if (n >= 3) kinds.push_back(GateKind::kAnd);
    if (n >= 3 && n - next >= 2) kinds.push_back(GateKind::kPurify);
    const GateKind kind = kinds[draw(rng, kinds.size())];
    GateShape shape{kind, {}};
    for (std::size_t o = 0; o < output_count(kind); ++o) shape.outputs.push_back(order[next++]);
    shapes.push_back(std::move(shape));
  }
  return shapes;
}

bool assign_inputs(std::size_t n, const std::vector<GateShape>& shapes, bool capped,
                   std::mt19937_64& rng, std::vector<Gate>& gates) {
  std::vector<std::size_t> capacity(n, 3);
  if (capped) {
    for (const auto& s : shapes) {
      for (NodeId o : s.outputs) capacity[o] -= input_count(s.kind);
    }
  }
  gates.clear();
  for (const auto& s : shapes) {
    const std::size_t cost = output_count(s.kind);
    std::vector<NodeId> inputs;
    for (std::size_t k = 0; k < input_count(s.kind); ++k) {
      std::vector<NodeId> eligible;
      for (NodeId c = 0; c < n; ++c) {
        if (std::find(s.outputs.begin(), s.outputs.end(), c) != s.outputs.end()) continue;
        if (std::find(inputs.begin(), inputs.end(), c) != inputs.end()) continue;
        if (capped && capacity[c] < cost) continue;
        eligible.push_back(c);
      }
      if (eligible.empty()) return false;
      const NodeId pick = eligible[draw(rng, eligible.size())];
      if (capped) capacity[pick] -= cost;
      inputs.push_back(pick);
    }
    switch (s.kind) {
      case GateKind::kNot:
        gates.push_back(Gate::make_not(inputs[0], s.outputs[0]));
        break;
      case GateKind::kAnd:
        gates.push_back(Gate::make_and(inputs[0], inputs[1], s.outputs[0]));
        break;
      case GateKind::kPurify:
        gates.push_back(Gate::make_purify(inputs[0], s.outputs[0], s.outputs[1]));
        break;
    }
  }
  return true;
}

}  // namespace

const char* value_name(Value v) {
  switch (v) {
    case Value::kZero: return "0";
    case Value::kOne: return "1";
    case Value::kBot: return "bot";
  }
  return "?";
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kNot: return "NOT";
    case GateKind::kAnd: return "AND";
    case GateKind::kPurify: return "PURIFY";
  }
  return "?";
}

std::span<const NodeId> Gate::inputs() const {
  return std::span<const NodeId>(nodes_).first(input_count(kind_));
}

std::span<const NodeId> Gate::outputs() const {
  return std::span<const NodeId>(nodes_).subspan(input_count(kind_), output_count(kind_));
}

std::span<const NodeId> Gate::nodes() const {
  return std::span<const NodeId>(nodes_).first(input_count(kind_) + output_count(kind_));
}

PureCircuitInstance::PureCircuitInstance(std::size_t node_count, std::vector<Gate> gate_list)
    : gates(std::move(gate_list)) {
  names.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) names.push_back("x" + std::to_string(i));
}

CircuitReport validate_instance(const PureCircuitInstance& inst) {
  const std::size_t n = inst.node_count();
  CircuitReport report;
  report.in_degree.assign(n, 0);
  report.out_degree.assign(n, 0);
  std::vector<std::size_t> producers(n, 0);
  for (std::size_t g = 0; g < inst.gates.size(); ++g) {
    const Gate& gate = inst.gates[g];
    const std::string where =
        "gate " + std::to_string(g) + " (" + gate_kind_name(gate.kind()) + ")";
    const auto nodes = gate.nodes();
    bool in_range = true;
    for (NodeId id : nodes) {
      if (id >= n) {
        report.violations.push_back(where + " references node " + std::to_string(id) +
                                    " outside [0, " + std::to_string(n) + ")");
        in_range = false;
      }
    }
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        if (nodes[a] == nodes[b]) {
          report.violations.push_back(where + " uses node " + std::to_string(nodes[a]) +
                                      " twice");
        }
      }
    }
    if (!in_range) continue;
    for (NodeId out : gate.outputs()) {
      ++producers[out];
      for (NodeId in : gate.inputs()) {
        ++report.in_degree[out];
        ++report.out_degree[in];
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (producers[v] == 0) {
      report.violations.push_back("node " + inst.names[v] + " has no producing gate");
    } else if (producers[v] > 1) {
      report.violations.push_back("node " + inst.names[v] + " is the output of " +
                                  std::to_string(producers[v]) + " gates");
    }
    report.max_in_degree = std::max(report.max_in_degree, report.in_degree[v]);
    report.max_out_degree = std::max(report.max_out_degree, report.out_degree[v]);
    report.max_total_degree =
        std::max(report.max_total_degree, report.in_degree[v] + report.out_degree[v]);
  }
  return report;
}

bool check_gate(const Gate& gate, const Assignment& x) {
  const auto nodes = gate.nodes();
  for (NodeId id : nodes) {
    if (id >= x.size()) fail(ErrorKind::kInvalidArgument, "assignment does not cover gate");
  }
  switch (gate.kind()) {
    case GateKind::kNot: {
      const Value u = x[nodes[0]], v = x[nodes[1]];
      if (u == Value::kZero && v != Value::kOne) return false;
      if (u == Value::kOne && v != Value::kZero) return false;
      return true;
    }
    case GateKind::kAnd: {
      const Value u = x[nodes[0]], v = x[nodes[1]], w = x[nodes[2]];
      if (u == Value::kOne && v == Value::kOne && w != Value::kOne) return false;
      if ((u == Value::kZero || v == Value::kZero) && w != Value::kZero) return false;
      return true;
    }
    case GateKind::kPurify: {
      const Value u = x[nodes[0]], v = x[nodes[1]], w = x[nodes[2]];
      if (!pure(v) && !pure(w)) return false;
      if (pure(u) && (v != u || w != u)) return false;
      return true;
    }
  }
  return false;
}

SolutionCheck verify_solution(const PureCircuitInstance& inst, const Assignment& x) {
  if (x.size() != inst.node_count()) {
    fail(ErrorKind::kInvalidArgument, "assignment has " + std::to_string(x.size()) +
                                          " values for " +
                                          std::to_string(inst.node_count()) + " nodes");
  }
  SolutionCheck check;
  for (std::size_t g = 0; g < inst.gates.size(); ++g) {
    if (!check_gate(inst.gates[g], x)) check.violated_gates.push_back(g);
  }
  check.passed = check.violated_gates.empty();
  return check;
}

Assignment brute_force_solve(const PureCircuitInstance& inst, std::size_t max_nodes) {
  const std::size_t n = inst.node_count();
  if (n > max_nodes) {
    fail(ErrorKind::kLimitExceeded, "brute force over " + std::to_string(n) +
                                        " nodes exceeds the limit of " +
                                        std::to_string(max_nodes));
  }
  if (const auto report = validate_instance(inst); !report.ok()) {
    fail(ErrorKind::kInvalidArgument, "invalid instance: " + report.violations.front());
  }
  // Odometer over base-3 digits, last node least significant.
  Assignment x(n, Value::kZero);
  while (true) {
    if (verify_solution(inst, x).passed) return x;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (x[pos] != Value::kBot) {
        x[pos] = static_cast<Value>(static_cast<int>(x[pos]) + 1);
        break;
      }
      x[pos] = Value::kZero;
      if (pos == 0) {
        fail(ErrorKind::kInternal, "no Pure-Circuit solution found for a valid instance");
      }
    }
    if (n == 0) fail(ErrorKind::kInternal, "no Pure-Circuit solution found");
  }
}

PureCircuitInstance generate_random(std::size_t n, std::uint64_t seed,
                                    const CircuitGenOptions& options) {
  if (n == 1) fail(ErrorKind::kInvalidArgument, "no valid instance has exactly one node");
  std::mt19937_64 rng(seed);
  std::vector<Gate> gates;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto shapes = draw_shapes(n, rng);
    if (assign_inputs(n, shapes, options.degree_capped, rng, gates)) {
      return PureCircuitInstance(n, std::move(gates));
    }
  }
  fail(ErrorKind::kInternal, "could not generate a degree-capped instance");
}

}  // namespace gg
