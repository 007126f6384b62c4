#include "graphgame/io.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "graphgame/error.hpp"
#include "json.hpp"

namespace gg {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::kParse, where + ": " + what);
}

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_fail(what, e.what());
  }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail(where, "expected a rational string such as \"3/5\"");
}

std::uint64_t index_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    parse_fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

bool bool_from(const Json& j, const std::string& where) {
  if (!j.is_boolean()) parse_fail(where, "expected true or false");
  return j.get<bool>();
}

Action action_from(const Json& j, const std::string& where) {
  if (j == "zero") return Action::kZero;
  if (j == "one") return Action::kOne;
  parse_fail(where, "expected \"zero\" or \"one\"");
}

Json row_json(const std::array<Rational, 2>& row) {
  return Json{{"zero", row[0].str()}, {"one", row[1].str()}};
}

std::array<Rational, 2> row_from(const Json& j, const std::string& where) {
  return {rational_from(field(j, "zero", where), where + ".zero"),
          rational_from(field(j, "one", where), where + ".one")};
}

Json tensor_json(const PayoffTensor& tensor, std::span<const PlayerId> in) {
  if (const auto* dense = std::get_if<DenseTensor>(&tensor)) {
    Json zero = Json::array(), one = Json::array();
    for (std::uint64_t p = 0; p < dense->profile_count(); ++p) {
      zero.push_back(dense->at(Action::kZero, p).str());
      one.push_back(dense->at(Action::kOne, p).str());
    }
    return Json{{"kind", "dense"}, {"table", Json{{"zero", zero}, {"one", one}}}};
  }
  const auto& t = std::get<ThresholdTensor>(tensor);
  Json blocks = Json::array();
  for (const auto& b : t.blocks) {
    Json members = Json::array();
    for (std::size_t m : b.members) members.push_back(m < in.size() ? in[m] : m);
    blocks.push_back(Json{{"members", members},
                          {"monitored", action_name(b.monitored)},
                          {"threshold", b.threshold.str()}});
  }
  return Json{{"kind", "threshold"},
              {"blocks", blocks},
              {"row_true", row_json(t.row_true)},
              {"row_false", row_json(t.row_false)}};
}

PayoffTensor tensor_from(const Json& j, const std::vector<PlayerId>& in,
                         const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (kind == "dense") {
    const Json& table = field(j, "table", where);
    DenseTensor t;
    t.arity = in.size();
    if (t.arity > 24) parse_fail(where, "dense tensor arity too large");
    for (const char* row : {"zero", "one"}) {
      const Json& values = field(table, row, where + ".table");
      const std::string at = where + ".table." + row;
      if (!values.is_array() || values.size() != t.profile_count()) {
        parse_fail(at, "expected " + std::to_string(t.profile_count()) + " entries");
      }
      for (std::size_t p = 0; p < values.size(); ++p) {
        t.table.push_back(rational_from(values[p], at + "[" + std::to_string(p) + "]"));
      }
    }
    return t;
  }
  if (kind == "threshold") {
    std::map<PlayerId, std::size_t> position;
    for (std::size_t q = 0; q < in.size(); ++q) position.emplace(in[q], q);
    ThresholdTensor t;
    t.arity = in.size();
    const Json& blocks = field(j, "blocks", where);
    if (!blocks.is_array()) parse_fail(where + ".blocks", "expected an array");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string at = where + ".blocks[" + std::to_string(b) + "]";
      ThresholdBlock block;
      const Json& members = field(blocks[b], "members", at);
      if (!members.is_array()) parse_fail(at + ".members", "expected an array");
      for (const auto& m : members) {
        const auto id = index_from(m, at + ".members");
        const auto it = position.find(id);
        if (it == position.end()) {
          parse_fail(at + ".members", "player " + std::to_string(id) + " is not an in-neighbour");
        }
        block.members.push_back(it->second);
      }
      block.monitored = action_from(field(blocks[b], "monitored", at), at + ".monitored");
      block.threshold = rational_from(field(blocks[b], "threshold", at), at + ".threshold");
      t.blocks.push_back(std::move(block));
    }
    t.row_true = row_from(field(j, "row_true", where), where + ".row_true");
    t.row_false = row_from(field(j, "row_false", where), where + ".row_false");
    return t;
  }
  parse_fail(where + ".kind", "expected \"dense\" or \"threshold\"");
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) {
      return false;
    }
  }
  return s != "NOT" && s != "AND" && s != "PURIFY" && s != "nodes";
}

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

Json manifest_json(const WsneLayout& l) {
  Json nodes = Json::array();
  for (std::size_t v = 0; v < l.node_names.size(); ++v) {
    nodes.push_back(Json{{"name", l.node_names[v]}, {"player", l.node_player[v]}});
  }
  return Json{{"target", l.win_lose ? "wsne-winlose" : "wsne"},
              {"d", l.d},
              {"lambda", l.lambda.str()},
              {"nodes", nodes},
              {"aux_players", l.aux_players}};
}

Json manifest_json(const NeLayout& l) {
  Json nodes = Json::array();
  for (std::size_t v = 0; v < l.node_names.size(); ++v) {
    nodes.push_back(Json{{"name", l.node_names[v]}, {"block", l.node_block[v]}});
  }
  return Json{{"target", "ne"},
              {"eps", l.eps.str()},
              {"k", l.k},
              {"k_override", l.k_overridden},
              {"nodes", nodes}};
}

std::vector<PlayerId> id_list(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<PlayerId> ids;
  for (const auto& x : j) ids.push_back(index_from(x, where));
  return ids;
}

}  // namespace

std::string serialize_game(const GraphicalGame& game) {
  Json in = Json::array(), tensors = Json::array();
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const auto span = game.in_neighbours(i);
    in.push_back(std::vector<PlayerId>(span.begin(), span.end()));
    tensors.push_back(tensor_json(game.tensor(i), span));
  }
  Json doc{{"players", game.num_players()},
           {"win_lose", game.win_lose()},
           {"in_neighbours", in},
           {"tensors", tensors}};
  return doc.dump(1) + "\n";
}

GraphicalGame parse_game(std::string_view json_text) {
  const Json doc = parse_json(json_text, "game");
  const auto n = index_from(field(doc, "players", "game"), "game.players");
  const bool win_lose =
      doc.contains("win_lose") ? bool_from(doc["win_lose"], "game.win_lose") : false;
  const Json& in_json = field(doc, "in_neighbours", "game");
  const Json& tensor_json_list = field(doc, "tensors", "game");
  if (!in_json.is_array() || in_json.size() != n) {
    parse_fail("game.in_neighbours", "expected " + std::to_string(n) + " lists");
  }
  if (!tensor_json_list.is_array() || tensor_json_list.size() != n) {
    parse_fail("game.tensors", "expected " + std::to_string(n) + " tensors");
  }
  std::vector<std::vector<PlayerId>> in;
  std::vector<PayoffTensor> tensors;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = "[" + std::to_string(i) + "]";
    in.push_back(id_list(in_json[i], "game.in_neighbours" + at));
    tensors.push_back(tensor_from(tensor_json_list[i], in.back(), "game.tensors" + at));
  }
  return GraphicalGame(std::move(in), std::move(tensors), win_lose);
}

std::string serialize_profile(const StrategyProfile& profile) {
  Json doc = Json::object();
  for (PlayerId i = 0; i < profile.size(); ++i) {
    if (profile.has(i)) doc[std::to_string(i)] = profile.prob_one(i).str();
  }
  return doc.dump(1) + "\n";
}

StrategyProfile parse_profile(std::string_view json_text) {
  const Json doc = parse_json(json_text, "profile");
  if (!doc.is_object()) parse_fail("profile", "expected an object of player -> prob_one");
  StrategyProfile profile;
  for (const auto& [key, value] : doc.items()) {
    const std::string at = "profile[\"" + key + "\"]";
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
      parse_fail(at, "key is not a player id");
    }
    if (key.size() > 9) parse_fail(at, "player id out of range");
    const Rational p = rational_from(value, at);
    if (p.sign() < 0 || p > Rational(1)) parse_fail(at, "probability outside [0,1]");
    profile.set(std::stoul(key), p);
  }
  return profile;
}

std::string serialize_circuit(const PureCircuitInstance& inst) {
  std::ostringstream out;
  out << "nodes";
  for (const auto& name : inst.names) out << ' ' << name;
  out << '\n';
  for (const auto& gate : inst.gates) {
    const auto n = gate.nodes();
    const auto& N = inst.names;
    switch (gate.kind()) {
      case GateKind::kNot:
        out << N[n[1]] << " = NOT " << N[n[0]] << '\n';
        break;
      case GateKind::kAnd:
        out << N[n[2]] << " = AND " << N[n[0]] << ' ' << N[n[1]] << '\n';
        break;
      case GateKind::kPurify:
        out << N[n[1]] << ' ' << N[n[2]] << " = PURIFY " << N[n[0]] << '\n';
        break;
    }
  }
  return out.str();
}

PureCircuitInstance parse_circuit(std::string_view text) {
  PureCircuitInstance inst;
  std::map<std::string, NodeId, std::less<>> ids;
  auto node = [&](const std::string& name, const std::string& where) {
    if (!is_identifier(name)) parse_fail(where, "bad node name \"" + name + "\"");
    const auto [it, fresh] = ids.emplace(name, inst.names.size());
    if (fresh) inst.names.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = tokens_of(line);
    if (t.empty()) continue;
    if (t[0] == "nodes") {
      for (std::size_t i = 1; i < t.size(); ++i) node(t[i], where);
      continue;
    }
    if (t.size() == 4 && t[1] == "=" && t[2] == "NOT") {
      const NodeId v = node(t[0], where);
      inst.gates.push_back(Gate::make_not(node(t[3], where), v));
    } else if (t.size() == 5 && t[1] == "=" && t[2] == "AND") {
      const NodeId w = node(t[0], where);
      const NodeId u = node(t[3], where);
      inst.gates.push_back(Gate::make_and(u, node(t[4], where), w));
    } else if (t.size() == 5 && t[2] == "=" && t[3] == "PURIFY") {
      const NodeId v = node(t[0], where);
      const NodeId w = node(t[1], where);
      inst.gates.push_back(Gate::make_purify(node(t[4], where), v, w));
    } else {
      parse_fail(where, "expected \"v = NOT u\", \"w = AND u v\" or \"v w = PURIFY u\"");
    }
  }
  return inst;
}

std::string serialize_assignment(const std::vector<std::string>& names, const Assignment& x) {
  if (names.size() != x.size()) {
    fail(ErrorKind::kInvalidArgument, "assignment and node list differ in length");
  }
  std::string out;
  for (std::size_t v = 0; v < x.size(); ++v) {
    out += names[v] + "=" + value_name(x[v]) + "\n";
  }
  return out;
}

std::string serialize_assignment(const PureCircuitInstance& inst, const Assignment& x) {
  return serialize_assignment(inst.names, x);
}

Assignment parse_assignment(const PureCircuitInstance& inst, std::string_view text) {
  std::map<std::string, NodeId, std::less<>> ids;
  for (NodeId v = 0; v < inst.node_count(); ++v) ids.emplace(inst.names[v], v);
  std::vector<std::optional<Value>> values(inst.node_count());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = tokens_of(line);
    if (t.empty()) continue;
    const std::string joined = [&] {
      std::string s;
      for (const auto& part : t) s += part;
      return s;
    }();
    const auto eq = joined.find('=');
    if (eq == std::string::npos) parse_fail(where, "expected name=value");
    const std::string name = joined.substr(0, eq);
    const std::string value = joined.substr(eq + 1);
    const auto it = ids.find(name);
    if (it == ids.end()) parse_fail(where, "unknown node \"" + name + "\"");
    Value parsed;
    if (value == "0") {
      parsed = Value::kZero;
    } else if (value == "1") {
      parsed = Value::kOne;
    } else if (value == "bot" || value == "⊥") {
      parsed = Value::kBot;
    } else {
      parse_fail(where, "value must be 0, 1 or bot");
    }
    if (values[it->second]) parse_fail(where, "node \"" + name + "\" assigned twice");
    values[it->second] = parsed;
  }
  Assignment x;
  for (NodeId v = 0; v < values.size(); ++v) {
    if (!values[v]) parse_fail("assignment", "node \"" + inst.names[v] + "\" has no value");
    x.push_back(*values[v]);
  }
  return x;
}

std::string serialize_manifest(const Manifest& manifest) {
  return std::visit([](const auto& l) { return manifest_json(l).dump(1) + "\n"; }, manifest);
}

Manifest parse_manifest(std::string_view json_text) {
  const Json doc = parse_json(json_text, "manifest");
  const Json& target = field(doc, "target", "manifest");
  const Json& nodes = field(doc, "nodes", "manifest");
  if (!nodes.is_array()) parse_fail("manifest.nodes", "expected an array");
  if (target == "wsne" || target == "wsne-winlose") {
    WsneLayout l;
    l.win_lose = target == "wsne-winlose";
    l.d = static_cast<unsigned>(index_from(field(doc, "d", "manifest"), "manifest.d"));
    l.lambda = rational_from(field(doc, "lambda", "manifest"), "manifest.lambda");
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      const std::string at = "manifest.nodes[" + std::to_string(v) + "]";
      const Json& name = field(nodes[v], "name", at);
      if (!name.is_string()) parse_fail(at + ".name", "expected a string");
      l.node_names.push_back(name.get<std::string>());
      l.node_player.push_back(index_from(field(nodes[v], "player", at), at + ".player"));
    }
    const Json& aux = field(doc, "aux_players", "manifest");
    if (!aux.is_array()) parse_fail("manifest.aux_players", "expected an array");
    for (const auto& list : aux) l.aux_players.push_back(id_list(list, "manifest.aux_players"));
    return l;
  }
  if (target == "ne") {
    NeLayout l;
    l.eps = rational_from(field(doc, "eps", "manifest"), "manifest.eps");
    l.k = index_from(field(doc, "k", "manifest"), "manifest.k");
    l.k_overridden = bool_from(field(doc, "k_override", "manifest"), "manifest.k_override");
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      const std::string at = "manifest.nodes[" + std::to_string(v) + "]";
      const Json& name = field(nodes[v], "name", at);
      if (!name.is_string()) parse_fail(at + ".name", "expected a string");
      l.node_names.push_back(name.get<std::string>());
      l.node_block.push_back(id_list(field(nodes[v], "block", at), at + ".block"));
    }
    return l;
  }
  parse_fail("manifest.target", "expected \"wsne\", \"wsne-winlose\" or \"ne\"");
}

Assignment decode(const Manifest& manifest, const StrategyProfile& profile) {
  if (const auto* w = std::get_if<WsneLayout>(&manifest)) return decode_wsne(*w, profile);
  return decode_ne(std::get<NeLayout>(manifest), profile);
}

const std::vector<std::string>& node_names(const Manifest& manifest) {
  return std::visit([](const auto& l) -> const std::vector<std::string>& { return l.node_names; },
                    manifest);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorKind::kIo, "error reading " + path);
  return buffer.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::kIo, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail(ErrorKind::kIo, "error writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::kIo, "cannot replace " + path);
  }
}

}  // namespace gg
