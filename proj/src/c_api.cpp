#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "graphgame/equilibrium.hpp"
#include "graphgame/error.hpp"
#include "graphgame/generate.hpp"
#include "graphgame/graphgame.h"
#include "graphgame/io.hpp"
#include "graphgame/oracles.hpp"

struct gg_game {
  gg::GraphicalGame value;
};
struct gg_profile {
  gg::StrategyProfile value;
};
struct gg_circuit {
  gg::PureCircuitInstance value;
};
struct gg_manifest {
  gg::Manifest value;
};

namespace {

thread_local std::string last_error;

gg_status status_of(gg::ErrorKind kind) {
  switch (kind) {
    case gg::ErrorKind::kParse: return GG_ERR_PARSE;
    case gg::ErrorKind::kInvalidArgument: return GG_ERR_INVALID_ARGUMENT;
    case gg::ErrorKind::kLimitExceeded: return GG_ERR_LIMIT;
    case gg::ErrorKind::kIo: return GG_ERR_IO;
    case gg::ErrorKind::kInternal: return GG_ERR_INTERNAL;
  }
  return GG_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
gg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gg::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) gg::fail(gg::ErrorKind::kInvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void maybe_out(char** slot, const std::string& s) {
  if (slot != nullptr) *slot = copy_out(s);
}

gg::Rational eps_of(const char* text) {
  require(text, "eps");
  return gg::Rational::parse(text);
}

std::string lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* gg_version(void) { return "1.0.0"; }

const char* gg_last_error(void) { return last_error.c_str(); }

void gg_string_free(char* s) { std::free(s); }

gg_status gg_game_parse(const char* json, gg_game** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gg_game{gg::parse_game(json)};
    return GG_OK;
  });
}

gg_status gg_game_load(const char* path, gg_game** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gg_game{gg::parse_game(gg::read_text_file(path))};
    return GG_OK;
  });
}

gg_status gg_game_save(const gg_game* game, const char* path) {
  return guarded([&] {
    require(game, "game");
    require(path, "path");
    gg::write_file_atomic(path, gg::serialize_game(game->value));
    return GG_OK;
  });
}

gg_status gg_game_serialize(const gg_game* game, char** out) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    *out = copy_out(gg::serialize_game(game->value));
    return GG_OK;
  });
}

void gg_game_free(gg_game* game) { delete game; }

size_t gg_game_player_count(const gg_game* game) {
  return game == nullptr ? 0 : game->value.num_players();
}

size_t gg_game_max_in_degree(const gg_game* game) {
  return game == nullptr ? 0 : game->value.max_in_degree();
}

gg_status gg_game_validate(const gg_game* game, char** report) {
  return guarded([&] {
    require(game, "game");
    const auto r = gg::validate_game(game->value);
    maybe_out(report, r.ok() ? std::string("ok\n") : lines(r.violations));
    return r.ok() ? GG_OK : GG_REJECTED;
  });
}

gg_status gg_game_generate(size_t n, size_t d, uint64_t seed, gg_game** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gg_game{gg::generate_random_game(n, d, seed)};
    return GG_OK;
  });
}

gg_status gg_profile_parse(const char* json, gg_profile** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gg_profile{gg::parse_profile(json)};
    return GG_OK;
  });
}

gg_status gg_profile_load(const char* path, gg_profile** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gg_profile{gg::parse_profile(gg::read_text_file(path))};
    return GG_OK;
  });
}

gg_status gg_profile_save(const gg_profile* profile, const char* path) {
  return guarded([&] {
    require(profile, "profile");
    require(path, "path");
    gg::write_file_atomic(path, gg::serialize_profile(profile->value));
    return GG_OK;
  });
}

gg_status gg_profile_serialize(const gg_profile* profile, char** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = copy_out(gg::serialize_profile(profile->value));
    return GG_OK;
  });
}

void gg_profile_free(gg_profile* profile) { delete profile; }

size_t gg_profile_size(const gg_profile* profile) {
  return profile == nullptr ? 0 : profile->value.size();
}

gg_status gg_profile_get(const gg_profile* profile, size_t player, char** prob_one) {
  return guarded([&] {
    require(profile, "profile");
    require(prob_one, "prob_one");
    *prob_one = copy_out(profile->value.prob_one(player).str());
    return GG_OK;
  });
}

gg_status gg_verify(const gg_game* game, const gg_profile* profile, gg_eq_kind kind,
                    const char* eps, char** report) {
  return guarded([&] {
    require(game, "game");
    require(profile, "profile");
    const gg::Rational e = eps_of(eps);
    std::ostringstream out;
    bool passed = false;
    if (kind == GG_EQ_NE) {
      const auto r = gg::verify_eps_ne(game->value, profile->value, e);
      passed = r.passed;
      for (gg::PlayerId i = 0; i < r.regrets.size(); ++i) {
        if (r.regrets[i] > e) out << "player " << i << " regret " << r.regrets[i].str() << "\n";
      }
      if (!r.regrets.empty()) {
        out << "worst regret " << r.regrets[r.worst_player].str() << " at player "
            << r.worst_player << "\n";
      }
    } else if (kind == GG_EQ_WSNE) {
      const auto r = gg::verify_eps_wsne(game->value, profile->value, e);
      passed = r.passed;
      for (const auto& v : r.violations) {
        out << "player " << v.player << " supports " << gg::action_name(v.action)
            << " with deficit " << v.deficit.str() << "\n";
      }
    } else {
      gg::fail(gg::ErrorKind::kInvalidArgument, "unknown equilibrium kind");
    }
    out << (passed ? "pass" : "fail") << "\n";
    maybe_out(report, out.str());
    return passed ? GG_OK : GG_REJECTED;
  });
}

gg_status gg_solve_wsne(const gg_game* game, gg_profile** out, char** achieved_eps,
                        char** trace) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    auto solution = gg::solve_wsne(game->value);
    std::ostringstream t;
    for (const auto& [player, action] : solution.trace.fixed) {
      t << "fixed " << player << " " << gg::action_name(action) << "\n";
    }
    t << "residual";
    for (gg::PlayerId i : solution.trace.residual) t << " " << i;
    t << "\n";
    maybe_out(achieved_eps, solution.eps.str());
    maybe_out(trace, t.str());
    *out = new gg_profile{std::move(solution.profile)};
    return GG_OK;
  });
}

gg_status gg_solve_half_ne(const gg_game* game, gg_profile** out) {
  return guarded([&] {
    require(game, "game");
    require(out, "out");
    *out = new gg_profile{gg::solve_half_ne(game->value)};
    return GG_OK;
  });
}

gg_status gg_oracle_pure_ne(const gg_game* game, const char* eps, gg_profile** first,
                            size_t* count) {
  return guarded([&] {
    require(game, "game");
    const auto found = gg::enumerate_pure_eps_ne(game->value, eps_of(eps));
    if (count != nullptr) *count = found.size();
    if (first != nullptr) *first = found.empty() ? nullptr : new gg_profile{found.front()};
    return found.empty() ? GG_REJECTED : GG_OK;
  });
}

gg_status gg_circuit_parse(const char* text, gg_circuit** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gg_circuit{gg::parse_circuit(text)};
    return GG_OK;
  });
}

gg_status gg_circuit_load(const char* path, gg_circuit** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gg_circuit{gg::parse_circuit(gg::read_text_file(path))};
    return GG_OK;
  });
}

gg_status gg_circuit_save(const gg_circuit* circuit, const char* path) {
  return guarded([&] {
    require(circuit, "circuit");
    require(path, "path");
    gg::write_file_atomic(path, gg::serialize_circuit(circuit->value));
    return GG_OK;
  });
}

gg_status gg_circuit_serialize(const gg_circuit* circuit, char** out) {
  return guarded([&] {
    require(circuit, "circuit");
    require(out, "out");
    *out = copy_out(gg::serialize_circuit(circuit->value));
    return GG_OK;
  });
}

void gg_circuit_free(gg_circuit* circuit) { delete circuit; }

size_t gg_circuit_node_count(const gg_circuit* circuit) {
  return circuit == nullptr ? 0 : circuit->value.node_count();
}

gg_status gg_circuit_validate(const gg_circuit* circuit, char** report) {
  return guarded([&] {
    require(circuit, "circuit");
    const auto r = gg::validate_instance(circuit->value);
    std::ostringstream out;
    for (const auto& v : r.violations) out << v << "\n";
    out << (r.ok() ? "ok" : "invalid") << " nodes=" << circuit->value.node_count()
        << " gates=" << circuit->value.gates.size() << " max_in_degree=" << r.max_in_degree
        << " max_out_degree=" << r.max_out_degree
        << " max_total_degree=" << r.max_total_degree << "\n";
    maybe_out(report, out.str());
    return r.ok() ? GG_OK : GG_REJECTED;
  });
}

gg_status gg_circuit_verify(const gg_circuit* circuit, const char* assignment, char** report) {
  return guarded([&] {
    require(circuit, "circuit");
    require(assignment, "assignment");
    const auto& inst = circuit->value;
    const auto x = gg::parse_assignment(inst, assignment);
    const auto check = gg::verify_solution(inst, x);
    std::ostringstream out;
    for (std::size_t g : check.violated_gates) {
      out << "gate " << g << " (" << gg::gate_kind_name(inst.gates[g].kind())
          << ") violated\n";
    }
    out << (check.passed ? "pass" : "fail") << "\n";
    maybe_out(report, out.str());
    return check.passed ? GG_OK : GG_REJECTED;
  });
}

gg_status gg_circuit_solve_brute(const gg_circuit* circuit, size_t max_nodes,
                                 char** assignment) {
  return guarded([&] {
    require(circuit, "circuit");
    require(assignment, "assignment");
    const auto x = gg::brute_force_solve(circuit->value, max_nodes);
    *assignment = copy_out(gg::serialize_assignment(circuit->value, x));
    return GG_OK;
  });
}

gg_status gg_circuit_generate(size_t n, uint64_t seed, int degree_capped, gg_circuit** out) {
  return guarded([&] {
    require(out, "out");
    gg::CircuitGenOptions options;
    options.degree_capped = degree_capped != 0;
    *out = new gg_circuit{gg::generate_random(n, seed, options)};
    return GG_OK;
  });
}

gg_status gg_compile_wsne(const gg_circuit* circuit, unsigned d, int win_lose, gg_game** game,
                          gg_manifest** manifest) {
  return guarded([&] {
    require(circuit, "circuit");
    require(game, "game");
    require(manifest, "manifest");
    auto comp = gg::compile_wsne(circuit->value, d, win_lose != 0);
    *game = new gg_game{std::move(comp.game)};
    *manifest = new gg_manifest{std::move(comp.layout)};
    return GG_OK;
  });
}

gg_status gg_compile_ne(const gg_circuit* circuit, const char* eps, uint64_t k_override,
                        gg_game** game, gg_manifest** manifest) {
  return guarded([&] {
    require(circuit, "circuit");
    require(game, "game");
    require(manifest, "manifest");
    std::optional<std::uint64_t> k;
    if (k_override != 0) k = k_override;
    auto comp = gg::compile_ne(circuit->value, eps_of(eps), k);
    *game = new gg_game{std::move(comp.game)};
    *manifest = new gg_manifest{std::move(comp.layout)};
    return GG_OK;
  });
}

gg_status gg_choose_k(const char* eps, uint64_t* k) {
  return guarded([&] {
    require(k, "k");
    *k = gg::choose_k(eps_of(eps));
    return GG_OK;
  });
}

gg_status gg_manifest_parse(const char* json, gg_manifest** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gg_manifest{gg::parse_manifest(json)};
    return GG_OK;
  });
}

gg_status gg_manifest_load(const char* path, gg_manifest** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gg_manifest{gg::parse_manifest(gg::read_text_file(path))};
    return GG_OK;
  });
}

gg_status gg_manifest_save(const gg_manifest* manifest, const char* path) {
  return guarded([&] {
    require(manifest, "manifest");
    require(path, "path");
    gg::write_file_atomic(path, gg::serialize_manifest(manifest->value));
    return GG_OK;
  });
}

gg_status gg_manifest_serialize(const gg_manifest* manifest, char** out) {
  return guarded([&] {
    require(manifest, "manifest");
    require(out, "out");
    *out = copy_out(gg::serialize_manifest(manifest->value));
    return GG_OK;
  });
}

void gg_manifest_free(gg_manifest* manifest) { delete manifest; }

gg_status gg_decode(const gg_manifest* manifest, const gg_profile* profile, char** assignment) {
  return guarded([&] {
    require(manifest, "manifest");
    require(profile, "profile");
    require(assignment, "assignment");
    const auto x = gg::decode(manifest->value, profile->value);
    *assignment = copy_out(gg::serialize_assignment(gg::node_names(manifest->value), x));
    return GG_OK;
  });
}

}  // extern "C"
