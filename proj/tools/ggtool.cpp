// Command-line front end. Talks to the library only through graphgame.h.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "graphgame/graphgame.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct StringDeleter {
  void operator()(char* s) const { gg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GameDeleter {
  void operator()(gg_game* g) const { gg_game_free(g); }
};
struct ProfileDeleter {
  void operator()(gg_profile* p) const { gg_profile_free(p); }
};
struct CircuitDeleter {
  void operator()(gg_circuit* c) const { gg_circuit_free(c); }
};
struct ManifestDeleter {
  void operator()(gg_manifest* m) const { gg_manifest_free(m); }
};
using Game = std::unique_ptr<gg_game, GameDeleter>;
using Profile = std::unique_ptr<gg_profile, ProfileDeleter>;
using Circuit = std::unique_ptr<gg_circuit, CircuitDeleter>;
using Manifest = std::unique_ptr<gg_manifest, ManifestDeleter>;

// Thrown to unwind with an exit code after printing a diagnostic.
struct Exit {
  int code;
};

int exit_code(gg_status status) {
  if (status == GG_OK) return kExitPass;
  if (status == GG_REJECTED) return kExitFail;
  return kExitInput;
}

// Fails loudly on any status outside {GG_OK, GG_REJECTED}.
gg_status check(gg_status status, const std::string& context) {
  if (status != GG_OK && status != GG_REJECTED) {
    std::cerr << "error: " << context << ": " << gg_last_error() << "\n";
    throw Exit{kExitInput};
  }
  return status;
}

void print(const OwnedString& s, std::ostream& out = std::cout) {
  if (s) out << s.get();
}

template <typename Handle, typename Loader>
Handle load(Loader loader, const std::string& path) {
  typename Handle::pointer raw = nullptr;
  check(loader(path.c_str(), &raw), path);
  return Handle(raw);
}

// Writes to `path`, or stdout when path is empty or "-".
template <typename Saver, typename Serializer, typename T>
void emit(Saver saver, Serializer serializer, const T* handle, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    check(serializer(handle, &text), "serialize");
    std::cout << OwnedString(text).get();
  } else {
    check(saver(handle, path.c_str()), path);
  }
}

bool looks_like_json(const std::string& path) {
  std::ifstream in(path);
  char c = 0;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Exit{kExitInput};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      throw Exit{kExitInput};
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::cerr << "error: cannot replace " << path << "\n";
    throw Exit{kExitInput};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate equilibria and Pure-Circuit reductions for two-action graphical games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gg_version());
  int result = kExitPass;

  // validate
  auto* validate = app.add_subcommand("validate", "Validate a game (JSON) or circuit file");
  std::string validate_path;
  validate->add_option("file", validate_path)->required()->check(CLI::ExistingFile);
  validate->callback([&] {
    char* report = nullptr;
    gg_status status;
    if (looks_like_json(validate_path)) {
      auto game = load<Game>(gg_game_load, validate_path);
      status = check(gg_game_validate(game.get(), &report), "validate");
    } else {
      auto circuit = load<Circuit>(gg_circuit_load, validate_path);
      status = check(gg_circuit_validate(circuit.get(), &report), "validate");
    }
    print(OwnedString(report));
    result = exit_code(status);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a profile for eps-NE or eps-WSNE");
  std::string verify_kind, verify_eps, verify_game, verify_profile;
  verify->add_option("--kind", verify_kind)->required()->check(CLI::IsMember({"ne", "wsne"}));
  verify->add_option("--eps", verify_eps, "Rational or exact decimal")->required();
  verify->add_option("game", verify_game)->required();
  verify->add_option("profile", verify_profile)->required();
  verify->callback([&] {
    auto game = load<Game>(gg_game_load, verify_game);
    auto profile = load<Profile>(gg_profile_load, verify_profile);
    char* report = nullptr;
    const auto status =
        check(gg_verify(game.get(), profile.get(), verify_kind == "ne" ? GG_EQ_NE : GG_EQ_WSNE,
                        verify_eps.c_str(), &report),
              "verify");
    print(OwnedString(report));
    result = exit_code(status);
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Compute an approximate equilibrium");
  std::string solve_alg, solve_game, solve_out;
  solve->add_option("--alg", solve_alg)->required()->check(CLI::IsMember({"wsne", "half-ne"}));
  solve->add_option("game", solve_game)->required();
  solve->add_option("-o,--output", solve_out, "Profile file (stdout if omitted)");
  solve->callback([&] {
    auto game = load<Game>(gg_game_load, solve_game);
    gg_profile* raw = nullptr;
    if (solve_alg == "wsne") {
      char* eps = nullptr;
      char* trace = nullptr;
      check(gg_solve_wsne(game.get(), &raw, &eps, &trace), "solve");
      OwnedString eps_text(eps), trace_text(trace);
      std::ostream& log = (solve_out.empty() || solve_out == "-") ? std::cerr : std::cout;
      log << "achieved_eps " << eps_text.get() << "\n" << trace_text.get();
    } else {
      check(gg_solve_half_ne(game.get(), &raw), "solve");
      std::ostream& log = (solve_out.empty() || solve_out == "-") ? std::cerr : std::cout;
      log << "achieved_eps 1/2\n";
    }
    Profile profile(raw);
    emit(gg_profile_save, gg_profile_serialize, profile.get(), solve_out);
  });

  // compile
  auto* compile = app.add_subcommand("compile", "Compile a Pure-Circuit instance into a game");
  std::string compile_target, compile_eps, compile_circuit, compile_out, compile_manifest;
  unsigned compile_d = 2;
  std::uint64_t compile_k = 0;
  compile->add_option("--target", compile_target)
      ->required()
      ->check(CLI::IsMember({"wsne", "wsne-winlose", "ne"}));
  compile->add_option("--d", compile_d, "In-degree parameter for WSNE targets (>= 2)");
  compile->add_option("--eps", compile_eps, "Gap eps in (0, 1/2] for the ne target");
  compile->add_option("--k-override", compile_k, "Odd block size replacing the automatic k");
  compile->add_option("circuit", compile_circuit)->required();
  compile->add_option("-o,--output", compile_out)->required();
  compile->add_option("--manifest", compile_manifest)->required();
  compile->callback([&] {
    auto circuit = load<Circuit>(gg_circuit_load, compile_circuit);
    gg_game* game_raw = nullptr;
    gg_manifest* manifest_raw = nullptr;
    if (compile_target == "ne") {
      if (compile_eps.empty()) {
        std::cerr << "error: --eps is required for --target ne\n";
        throw Exit{kExitInput};
      }
      check(gg_compile_ne(circuit.get(), compile_eps.c_str(), compile_k, &game_raw,
                          &manifest_raw),
            "compile");
    } else {
      check(gg_compile_wsne(circuit.get(), compile_d, compile_target == "wsne-winlose",
                            &game_raw, &manifest_raw),
            "compile");
    }
    Game game(game_raw);
    Manifest manifest(manifest_raw);
    check(gg_game_save(game.get(), compile_out.c_str()), compile_out);
    check(gg_manifest_save(manifest.get(), compile_manifest.c_str()), compile_manifest);
    std::cout << "players " << gg_game_player_count(game.get()) << " max_in_degree "
              << gg_game_max_in_degree(game.get()) << "\n";
  });

  // decode
  auto* decode = app.add_subcommand("decode", "Decode a profile of a compiled game");
  std::string decode_manifest, decode_profile;
  decode->add_option("--manifest", decode_manifest)->required();
  decode->add_option("profile", decode_profile)->required();
  decode->callback([&] {
    auto manifest = load<Manifest>(gg_manifest_load, decode_manifest);
    auto profile = load<Profile>(gg_profile_load, decode_profile);
    char* text = nullptr;
    check(gg_decode(manifest.get(), profile.get(), &text), "decode");
    print(OwnedString(text));
  });

  // circuit solve / verify
  auto* circuit_cmd = app.add_subcommand("circuit", "Pure-Circuit utilities");
  circuit_cmd->require_subcommand(1);
  auto* circuit_solve = circuit_cmd->add_subcommand("solve", "Solve an instance");
  std::string circuit_solve_path, circuit_solve_out;
  bool brute = false;
  std::size_t brute_limit = 12;
  circuit_solve->add_flag("--brute", brute, "Exhaustive search")->required();
  circuit_solve->add_option("--limit", brute_limit, "Maximum node count for --brute");
  circuit_solve->add_option("circuit", circuit_solve_path)->required();
  circuit_solve->add_option("-o,--output", circuit_solve_out);
  circuit_solve->callback([&] {
    auto circuit = load<Circuit>(gg_circuit_load, circuit_solve_path);
    char* text = nullptr;
    check(gg_circuit_solve_brute(circuit.get(), brute_limit, &text), "circuit solve");
    OwnedString owned(text);
    write_text(circuit_solve_out, owned.get());
  });
  auto* circuit_verify = circuit_cmd->add_subcommand("verify", "Check an assignment");
  std::string circuit_verify_path, circuit_verify_assignment;
  circuit_verify->add_option("circuit", circuit_verify_path)->required();
  circuit_verify->add_option("assignment", circuit_verify_assignment)->required();
  circuit_verify->callback([&] {
    auto circuit = load<Circuit>(gg_circuit_load, circuit_verify_path);
    const std::string assignment = read_all(circuit_verify_assignment);
    char* report = nullptr;
    const auto status =
        check(gg_circuit_verify(circuit.get(), assignment.c_str(), &report), "circuit verify");
    print(OwnedString(report));
    result = exit_code(status);
  });

  // gen circuit / gen game
  auto* gen = app.add_subcommand("gen", "Generate random artifacts");
  gen->require_subcommand(1);
  auto* gen_circuit = gen->add_subcommand("circuit", "Random Pure-Circuit instance");
  std::size_t gen_n = 0, gen_d = 2;
  std::uint64_t gen_seed = 0;
  bool gen_capped = false;
  std::string gen_out;
  gen_circuit->add_option("--n", gen_n)->required();
  gen_circuit->add_option("--seed", gen_seed)->required();
  gen_circuit->add_flag("--degree-capped", gen_capped,
                        "In-degree <= 2 and total degree <= 3");
  gen_circuit->add_option("-o,--output", gen_out);
  gen_circuit->callback([&] {
    gg_circuit* raw = nullptr;
    check(gg_circuit_generate(gen_n, gen_seed, gen_capped ? 1 : 0, &raw), "gen circuit");
    Circuit circuit(raw);
    emit(gg_circuit_save, gg_circuit_serialize, circuit.get(), gen_out);
  });
  auto* gen_game = gen->add_subcommand("game", "Random dense game");
  gen_game->add_option("--n", gen_n)->required();
  gen_game->add_option("--d", gen_d)->required();
  gen_game->add_option("--seed", gen_seed)->required();
  gen_game->add_option("-o,--output", gen_out);
  gen_game->callback([&] {
    gg_game* raw = nullptr;
    check(gg_game_generate(gen_n, gen_d, gen_seed, &raw), "gen game");
    Game game(raw);
    emit(gg_game_save, gg_game_serialize, game.get(), gen_out);
  });

  // oracle pure-ne
  auto* oracle = app.add_subcommand("oracle", "Brute-force equilibrium oracles");
  oracle->require_subcommand(1);
  auto* pure_ne = oracle->add_subcommand("pure-ne", "First pure eps-NE in lexicographic order");
  std::string oracle_eps, oracle_game, oracle_out;
  pure_ne->add_option("--eps", oracle_eps)->required();
  pure_ne->add_option("game", oracle_game)->required();
  pure_ne->add_option("-o,--output", oracle_out);
  pure_ne->callback([&] {
    auto game = load<Game>(gg_game_load, oracle_game);
    gg_profile* raw = nullptr;
    std::size_t count = 0;
    const auto status =
        check(gg_oracle_pure_ne(game.get(), oracle_eps.c_str(), &raw, &count), "oracle");
    Profile profile(raw);
    std::cerr << "pure_eps_ne_count " << count << "\n";
    if (status == GG_OK) emit(gg_profile_save, gg_profile_serialize, profile.get(), oracle_out);
    result = exit_code(status);
  });

  // choose-k
  auto* choose = app.add_subcommand("choose-k", "Block size used by the ne target");
  std::string choose_eps;
  choose->add_option("--eps", choose_eps)->required();
  choose->callback([&] {
    std::uint64_t k = 0;
    check(gg_choose_k(choose_eps.c_str(), &k), "choose-k");
    std::cout << k << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  } catch (const Exit& e) {
    return e.code;
  }
  return result;
}
