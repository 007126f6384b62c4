/* C interface to the graphgame library.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions return a gg_status; on anything other than GG_OK or
 * GG_REJECTED, gg_last_error() describes the failure for the calling thread.
 * Strings handed out through char** parameters are heap allocated and must be
 * released with gg_string_free.
 */
#ifndef GRAPHGAME_H_
#define GRAPHGAME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GG_API __declspec(dllexport)
#else
#define GG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  /* The operation ran but the answer is negative (verification failed,
   * validation found violations, no equilibrium found). */
  GG_REJECTED = 1,
  GG_ERR_PARSE = 2,
  GG_ERR_INVALID_ARGUMENT = 3,
  GG_ERR_LIMIT = 4,
  GG_ERR_IO = 5,
  GG_ERR_INTERNAL = 6
} gg_status;

typedef enum gg_eq_kind { GG_EQ_NE = 0, GG_EQ_WSNE = 1 } gg_eq_kind;

typedef struct gg_game gg_game;
typedef struct gg_profile gg_profile;
typedef struct gg_circuit gg_circuit;
typedef struct gg_manifest gg_manifest;

GG_API const char* gg_version(void);
GG_API const char* gg_last_error(void);
GG_API void gg_string_free(char* s);

/* Games */
GG_API gg_status gg_game_parse(const char* json, gg_game** out);
GG_API gg_status gg_game_load(const char* path, gg_game** out);
GG_API gg_status gg_game_save(const gg_game* game, const char* path);
GG_API gg_status gg_game_serialize(const gg_game* game, char** out);
GG_API void gg_game_free(gg_game* game);
GG_API size_t gg_game_player_count(const gg_game* game);
GG_API size_t gg_game_max_in_degree(const gg_game* game);
/* GG_OK when valid, GG_REJECTED with one violation per report line otherwise. */
GG_API gg_status gg_game_validate(const gg_game* game, char** report);
/* Random dense game: n players, in-degrees up to d (some player hits d when
 * n > d), random rational payoffs. */
GG_API gg_status gg_game_generate(size_t n, size_t d, uint64_t seed, gg_game** out);

/* Strategy profiles */
GG_API gg_status gg_profile_parse(const char* json, gg_profile** out);
GG_API gg_status gg_profile_load(const char* path, gg_profile** out);
GG_API gg_status gg_profile_save(const gg_profile* profile, const char* path);
GG_API gg_status gg_profile_serialize(const gg_profile* profile, char** out);
GG_API void gg_profile_free(gg_profile* profile);
GG_API size_t gg_profile_size(const gg_profile* profile);
/* prob_one of a player as a "p/q" string. */
GG_API gg_status gg_profile_get(const gg_profile* profile, size_t player, char** prob_one);

/* Verification and solving. eps is a rational or exact decimal string. */
GG_API gg_status gg_verify(const gg_game* game, const gg_profile* profile, gg_eq_kind kind,
                           const char* eps, char** report);
GG_API gg_status gg_solve_wsne(const gg_game* game, gg_profile** out, char** achieved_eps,
                               char** trace);
GG_API gg_status gg_solve_half_ne(const gg_game* game, gg_profile** out);
/* First pure eps-NE in lexicographic order (GG_REJECTED if none); count
 * receives the number of pure eps-NE. */
GG_API gg_status gg_oracle_pure_ne(const gg_game* game, const char* eps, gg_profile** first,
                                   size_t* count);

/* Pure-Circuit instances */
GG_API gg_status gg_circuit_parse(const char* text, gg_circuit** out);
GG_API gg_status gg_circuit_load(const char* path, gg_circuit** out);
GG_API gg_status gg_circuit_save(const gg_circuit* circuit, const char* path);
GG_API gg_status gg_circuit_serialize(const gg_circuit* circuit, char** out);
GG_API void gg_circuit_free(gg_circuit* circuit);
GG_API size_t gg_circuit_node_count(const gg_circuit* circuit);
GG_API gg_status gg_circuit_validate(const gg_circuit* circuit, char** report);
/* Assignments use "name=0|1|bot" lines. */
GG_API gg_status gg_circuit_verify(const gg_circuit* circuit, const char* assignment,
                                   char** report);
GG_API gg_status gg_circuit_solve_brute(const gg_circuit* circuit, size_t max_nodes,
                                        char** assignment);
GG_API gg_status gg_circuit_generate(size_t n, uint64_t seed, int degree_capped,
                                     gg_circuit** out);

/* Reductions */
GG_API gg_status gg_compile_wsne(const gg_circuit* circuit, unsigned d, int win_lose,
                                 gg_game** game, gg_manifest** manifest);
/* k_override == 0 selects k automatically. */
GG_API gg_status gg_compile_ne(const gg_circuit* circuit, const char* eps,
                               uint64_t k_override, gg_game** game, gg_manifest** manifest);
GG_API gg_status gg_choose_k(const char* eps, uint64_t* k);

GG_API gg_status gg_manifest_parse(const char* json, gg_manifest** out);
GG_API gg_status gg_manifest_load(const char* path, gg_manifest** out);
GG_API gg_status gg_manifest_save(const gg_manifest* manifest, const char* path);
GG_API gg_status gg_manifest_serialize(const gg_manifest* manifest, char** out);
GG_API void gg_manifest_free(gg_manifest* manifest);
GG_API gg_status gg_decode(const gg_manifest* manifest, const gg_profile* profile,
                           char** assignment);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // GRAPHGAME_H_
