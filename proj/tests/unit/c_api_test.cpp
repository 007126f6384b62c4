#include "graphgame/graphgame.h"

#include <memory>
#include <string>

#include "doctest.h"

namespace {

struct StrDeleter {
  void operator()(char* s) const { gg_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

std::string take(char* s) { return Str(s).get() ? std::string(s) : std::string(); }

const char* kNotCycle = "nodes u v\nv = NOT u\nu = NOT v\n";

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(gg_version()).size() > 0);
  gg_game* game = nullptr;
  CHECK(gg_game_parse("{", &game) == GG_ERR_PARSE);
  CHECK(game == nullptr);
  CHECK(std::string(gg_last_error()).size() > 0);
  CHECK(gg_game_parse(nullptr, &game) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_game_load("/nonexistent/file.json", &game) == GG_ERR_IO);
  uint64_t k = 0;
  CHECK(gg_choose_k("0.7", &k) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_choose_k("1/2", &k) == GG_OK);
  CHECK(k == 229);
}

TEST_CASE("solve and verify through handles") {
  gg_game* game = nullptr;
  REQUIRE(gg_game_generate(12, 3, 5, &game) == GG_OK);
  CHECK(gg_game_player_count(game) == 12);
  CHECK(gg_game_max_in_degree(game) == 3);
  char* report = nullptr;
  CHECK(gg_game_validate(game, &report) == GG_OK);
  take(report);

  gg_profile* wsne = nullptr;
  char* eps = nullptr;
  char* trace = nullptr;
  REQUIRE(gg_solve_wsne(game, &wsne, &eps, &trace) == GG_OK);
  const std::string achieved = take(eps);
  CHECK(achieved == "7/9");
  take(trace);
  CHECK(gg_verify(game, wsne, GG_EQ_WSNE, achieved.c_str(), &report) == GG_OK);
  take(report);

  gg_profile* half = nullptr;
  REQUIRE(gg_solve_half_ne(game, &half) == GG_OK);
  CHECK(gg_verify(game, half, GG_EQ_NE, "0.5", &report) == GG_OK);
  take(report);
  char* p = nullptr;
  REQUIRE(gg_profile_get(half, 3, &p) == GG_OK);
  CHECK(take(p) == "1/2");
  CHECK(gg_profile_get(half, 99, &p) != GG_OK);

  char* text = nullptr;
  REQUIRE(gg_game_serialize(game, &text) == GG_OK);
  gg_game* again = nullptr;
  CHECK(gg_game_parse(Str(text).get(), &again) == GG_OK);
  CHECK(gg_game_player_count(again) == 12);

  gg_profile_free(wsne);
  gg_profile_free(half);
  gg_game_free(again);
  gg_game_free(game);
}

TEST_CASE("verify rejects") {
  gg_game* game = nullptr;
  REQUIRE(gg_game_parse(R"({"players": 1, "win_lose": false, "in_neighbours": [[]],
      "tensors": [{"kind": "dense", "table": {"zero": ["0"], "one": ["1"]}}]})",
                        &game) == GG_OK);
  gg_profile* s = nullptr;
  REQUIRE(gg_profile_parse(R"({"0": "1/2"})", &s) == GG_OK);
  char* report = nullptr;
  CHECK(gg_verify(game, s, GG_EQ_NE, "1/2", &report) == GG_OK);
  take(report);
  CHECK(gg_verify(game, s, GG_EQ_NE, "49/100", &report) == GG_REJECTED);
  CHECK(take(report).find("player 0") != std::string::npos);
  CHECK(gg_verify(game, s, GG_EQ_WSNE, "1/2", &report) == GG_REJECTED);
  take(report);
  CHECK(gg_verify(game, s, GG_EQ_NE, "abc", &report) == GG_ERR_PARSE);
  gg_profile_free(s);
  gg_game_free(game);
}

TEST_CASE("circuit pipeline") {
  gg_circuit* circuit = nullptr;
  REQUIRE(gg_circuit_parse(kNotCycle, &circuit) == GG_OK);
  CHECK(gg_circuit_node_count(circuit) == 2);
  char* solved = nullptr;
  REQUIRE(gg_circuit_solve_brute(circuit, 12, &solved) == GG_OK);
  CHECK(take(solved) == "u=0\nv=1\n");
  char* report = nullptr;
  CHECK(gg_circuit_verify(circuit, "u=1\nv=1\n", &report) == GG_REJECTED);
  take(report);

  gg_game* game = nullptr;
  gg_manifest* manifest = nullptr;
  REQUIRE(gg_compile_wsne(circuit, 2, 0, &game, &manifest) == GG_OK);
  gg_profile* first = nullptr;
  size_t count = 0;
  REQUIRE(gg_oracle_pure_ne(game, "1/2", &first, &count) == GG_OK);
  CHECK(count == 2);
  char* assignment = nullptr;
  REQUIRE(gg_decode(manifest, first, &assignment) == GG_OK);
  const std::string decoded = take(assignment);
  CHECK(gg_circuit_verify(circuit, decoded.c_str(), &report) == GG_OK);
  take(report);

  gg_game* ne_game = nullptr;
  gg_manifest* ne_manifest = nullptr;
  REQUIRE(gg_compile_ne(circuit, "3/10", 5, &ne_game, &ne_manifest) == GG_OK);
  CHECK(gg_game_player_count(ne_game) == 10);
  CHECK(gg_compile_ne(circuit, "3/10", 4, &ne_game, &ne_manifest) == GG_ERR_INVALID_ARGUMENT);

  gg_circuit* generated = nullptr;
  CHECK(gg_circuit_generate(8, 1, 1, &generated) == GG_OK);
  CHECK(gg_circuit_validate(generated, &report) == GG_OK);
  take(report);

  gg_profile_free(first);
  gg_game_free(game);
  gg_game_free(ne_game);
  gg_manifest_free(manifest);
  gg_manifest_free(ne_manifest);
  gg_circuit_free(circuit);
  gg_circuit_free(generated);
}
