#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "graphgame/circuit.hpp"
#include "graphgame/game.hpp"
#include "graphgame/reduction_ne.hpp"
#include "graphgame/reduction_wsne.hpp"

namespace gg {

// Game files are JSON. Rationals are strings ("p/q", integers, or exact
// decimals on input); output always uses the canonical "p/q" form.
std::string serialize_game(const GraphicalGame& game);
GraphicalGame parse_game(std::string_view json_text);

// JSON object mapping player id (as a string key) to prob_one.
std::string serialize_profile(const StrategyProfile& profile);
StrategyProfile parse_profile(std::string_view json_text);

// Line format: "v = NOT u", "w = AND u v", "v w = PURIFY u", plus an optional
// "nodes a b c" line fixing node order. '#' starts a comment.
std::string serialize_circuit(const PureCircuitInstance& inst);
PureCircuitInstance parse_circuit(std::string_view text);

// "name=0|1|bot" lines in node order.
std::string serialize_assignment(const PureCircuitInstance& inst, const Assignment& x);
std::string serialize_assignment(const std::vector<std::string>& names, const Assignment& x);
Assignment parse_assignment(const PureCircuitInstance& inst, std::string_view text);

// Compilation manifests: everything decode needs, without the game.
using Manifest = std::variant<WsneLayout, NeLayout>;
std::string serialize_manifest(const Manifest& manifest);
Manifest parse_manifest(std::string_view json_text);
Assignment decode(const Manifest& manifest, const StrategyProfile& profile);
const std::vector<std::string>& node_names(const Manifest& manifest);

std::string read_text_file(const std::string& path);
// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace gg
