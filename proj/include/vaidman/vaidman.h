#ifndef VAIDMAN_H
#define VAIDMAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the entangled-game toolkit: multi-qubit GHZ/W states,
 * entanglement measures, parity-game win probabilities (quantum and
 * classical), noisy rule-maker games, and seeded secret-sharing sessions.
 *
 * Every function returns a vg_status; outputs are written through pointers.
 * Strings returned through char** are heap-allocated and must be released
 * with vg_string_free. Output pointers may be NULL when the caller does not
 * want that piece of the result (handles and required scalars excepted).
 */

typedef enum vg_status {
  VG_OK = 0,
  VG_INVALID_ARGUMENT = 1,
  VG_DIMENSION_MISMATCH = 2,
  VG_NOT_NORMALIZED = 3,
  VG_ZERO_PROBABILITY = 4,
  VG_UNKNOWN_NAME = 5,
  VG_SESSION_REJECTED = 6,
  VG_INTERNAL = 7
} vg_status;

const char* vg_version(void);
void vg_string_free(char* s);

/* ------------------------------------------------------------------ states */

typedef struct vg_state vg_state;

/* sin(theta)|0..0> + phase_sign * cos(theta)|1..1>, 2..6 qubits */
vg_status vg_state_ghz(double theta, int n_qubits, int phase_sign, vg_state** out);
/* a|100> + b|010> + c|001> (amplitudes must be normalized within 1e-9) */
vg_status vg_state_w(double a, double b, double c, vg_state** out);
/* (|100> + sqrt(n) e^{i gamma}|010> + sqrt(n+1) e^{i delta}|001>) / sqrt(2(n+1)) */
vg_status vg_state_wn(long n, double gamma, double delta, vg_state** out);
void vg_state_free(vg_state* state);

int vg_state_num_qubits(const vg_state* state);
vg_status vg_state_amplitude(const vg_state* state, size_t index, double* re, double* im);

/* ------------------------------------------------------------ entanglement */

/* out = {tau, c_a_bc, c_ab, c_ac} for a 3-qubit pure state */
vg_status vg_three_tangle(const vg_state* state, double out[4]);
/* C_AB + C_BC + C_CA over the pair reductions of a 3-qubit pure state */
vg_status vg_residual_concurrence_sum(const vg_state* state, double* out);
/* n-tangle of the GHZ family, sin^2(2 theta); theta in [0, pi/2] */
vg_status vg_n_tangle_ghz_family(double theta, double* out);

/* ------------------------------------------------------------------- games */

typedef struct vg_game vg_game;

/* names: vaidman_ghz, vaidman_w, G4_1, G5_1, G5_2, G6_1, G6_2, G6_3 */
vg_status vg_game_create(const char* name, vg_game** out);
void vg_game_free(vg_game* game);

/* one line per question tuple: "<basis-letters> <required product> <weight>" */
vg_status vg_game_serialize(const vg_game* game, char** out);
vg_status vg_game_quantum_win(const vg_game* game, const vg_state* state, double* out);
/* Exhaustive maximum over deterministic local strategies. num/den is the
 * reduced exact fraction when the question weights are uniform, 0/0
 * otherwise; strategy receives a human-readable answer table. */
vg_status vg_game_classical_max(const vg_game* game, double* probability, long long* num,
                                long long* den, char** strategy);

vg_status vg_closed_form_ghz_win(double theta, double* out);
vg_status vg_closed_form_w_win(double a, double b, double c, double* out);
vg_status vg_closed_form_wn_win(long n, double* out);
vg_status vg_closed_form_rulemaker_w(double lambda, double* out);
vg_status vg_closed_form_rulemaker_ghz(double lambda, double* out);

/* simulated rule-maker games (ruler measured in Param(lambda)) */
vg_status vg_rulemaker_w_win(double lambda, double* out);
vg_status vg_rulemaker_ghz_win(double lambda, double* out);
vg_status vg_rulemaker_4q_win(double lambda, double* out);

/* ------------------------------------------------------------------- noise */

typedef enum vg_resource_state { VG_STATE_W = 0, VG_STATE_GHZ = 1 } vg_resource_state;

typedef enum vg_channel {
  VG_CHANNEL_PHASE_FLIP = 0,
  VG_CHANNEL_DEPOLARIZING = 1,
  VG_CHANNEL_AMPLITUDE_DAMPING = 2
} vg_channel;

/* rule-maker game at the state's optimal ruler angle with channel(d1) on
 * qubit A and channel(d2) on qubit B */
vg_status vg_noisy_rulemaker_win(vg_resource_state state, vg_channel channel, double d1,
                                 double d2, double* out);
vg_status vg_closed_form_noisy(vg_resource_state state, vg_channel channel, double d1,
                               double d2, double* out);
/* CSV lattice: state,channel,D1,D2,simulated,closed_form,abs_dev */
vg_status vg_noise_report_csv(int grid_points, char** out);

/* ----------------------------------------------------------------- reports */

/* targets: ghz_game, w_game, wn_game, rulemaker_w, rulemaker_ghz,
 * rulemaker_4q, noise; n_max applies to wn_game only */
vg_status vg_sweep_csv(const char* target, int grid_points, int n_max, char** out);
vg_status vg_sweep_list(char** out);
/* all_passed receives 1 when no check failed (waived/info rows never fail) */
vg_status vg_verify_report(double tolerance, int grid_points, char** report,
                           int* all_passed);
vg_status vg_classical_report(const char* game_id, char** out);

/* ---------------------------------------------------------- secret sharing */

typedef struct vg_qss_summary {
  uint64_t rounds;
  uint64_t sifted_rounds;
  uint64_t message_rounds;
  uint64_t control_rounds; /* control rounds that were checked */
  double sifted_fraction;
  double compliance_rate;
  double inference_agreement;
  int cheating_suspected;
  uint64_t key_length;
} vg_qss_summary;

typedef enum vg_cheat_model {
  VG_CHEAT_HONEST = 0,
  VG_CHEAT_RANDOM_ANNOUNCER = 1,
  VG_CHEAT_FLIP_ANNOUNCER = 2
} vg_cheat_model;

typedef enum vg_party { VG_PARTY_ALICE = 0, VG_PARTY_BOB = 1 } vg_party;

/* Three-party protocol on the maximally entangled GHZ state with X/Y basis
 * sifting. Outputs are optional: pass NULL to skip. */
vg_status vg_qss_basic(uint64_t rounds, uint64_t seed, vg_qss_summary* summary,
                       char** summary_text, char** key, char** transcript_csv);

/* Facilitated protocol with Charlie routing rounds into message/control mode.
 * key is empty when cheating is suspected. */
vg_status vg_qss_facilitated(vg_resource_state state, uint64_t rounds, vg_cheat_model cheat,
                             vg_party cheater, double control_check_rate, uint64_t seed,
                             vg_qss_summary* summary, char** summary_text, char** key,
                             char** transcript_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VAIDMAN_H */
