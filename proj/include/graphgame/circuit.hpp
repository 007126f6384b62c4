#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gg {

using NodeId = std::size_t;

enum class Value : std::uint8_t { kZero = 0, kOne = 1, kBot = 2 };
const char* value_name(Value v);  // "0", "1", "bot"

using Assignment = std::vector<Value>;

enum class GateKind : std::uint8_t { kNot, kAnd, kPurify };
const char* gate_kind_name(GateKind kind);

// NOT(u -> v), AND(u, v -> w), PURIFY(u -> v, w). The NOT gate uses only
// the first two node slots.
class Gate {
 public:
  static Gate make_not(NodeId u, NodeId v) { return Gate(GateKind::kNot, {u, v, 0}); }
  static Gate make_and(NodeId u, NodeId v, NodeId w) { return Gate(GateKind::kAnd, {u, v, w}); }
  static Gate make_purify(NodeId u, NodeId v, NodeId w) {
    return Gate(GateKind::kPurify, {u, v, w});
  }

  GateKind kind() const { return kind_; }
  std::span<const NodeId> inputs() const;
  std::span<const NodeId> outputs() const;
  std::span<const NodeId> nodes() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::array<NodeId, 3> nodes) : kind_(kind), nodes_(nodes) {}

  GateKind kind_;
  std::array<NodeId, 3> nodes_;
};

struct PureCircuitInstance {
  std::vector<std::string> names;  // one per node
  std::vector<Gate> gates;

  PureCircuitInstance() = default;
  PureCircuitInstance(std::vector<std::string> node_names, std::vector<Gate> gate_list)
      : names(std::move(node_names)), gates(std::move(gate_list)) {}
  // Nodes named x0, x1, ...
  PureCircuitInstance(std::size_t node_count, std::vector<Gate> gate_list);

  std::size_t node_count() const { return names.size(); }

  friend bool operator==(const PureCircuitInstance&, const PureCircuitInstance&) = default;
};

struct CircuitReport {
  std::vector<std::string> violations;
  // Interaction-graph degrees (edge from each gate input to each output).
  std::vector<std::size_t> in_degree;
  std::vector<std::size_t> out_degree;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t max_total_degree = 0;

  bool ok() const { return violations.empty(); }
};

CircuitReport validate_instance(const PureCircuitInstance& inst);

bool check_gate(const Gate& gate, const Assignment& x);

struct SolutionCheck {
  bool passed = true;
  std::vector<std::size_t> violated_gates;
};
SolutionCheck verify_solution(const PureCircuitInstance& inst, const Assignment& x);

inline constexpr std::size_t kDefaultBruteForceLimit = 12;

// First satisfying assignment in lexicographic order over (0, 1, bot), node 0
// most significant.
Assignment brute_force_solve(const PureCircuitInstance& inst,
                             std::size_t max_nodes = kDefaultBruteForceLimit);

struct CircuitGenOptions {
  // In-degree <= 2 and total degree <= 3 in the interaction graph.
  bool degree_capped = false;
};

// Deterministic under seed. n == 1 has no valid instance.
PureCircuitInstance generate_random(std::size_t n, std::uint64_t seed,
                                    const CircuitGenOptions& options = {});

}  // namespace gg
