#include "vaidman/vaidman.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/entanglement.hpp"
#include "core/games.hpp"
#include "core/noise.hpp"
#include "core/qss.hpp"
#include "core/qstate.hpp"
#include "core/reports.hpp"

struct vg_state {
  vaidman::PureState impl;
};

struct vg_game {
  vaidman::GameSpec impl;
};

namespace {

vg_status map_status(vaidman::Errc code) {
  switch (code) {
    case vaidman::Errc::invalid_argument: return VG_INVALID_ARGUMENT;
    case vaidman::Errc::dimension_mismatch: return VG_DIMENSION_MISMATCH;
    case vaidman::Errc::not_normalized: return VG_NOT_NORMALIZED;
    case vaidman::Errc::zero_probability: return VG_ZERO_PROBABILITY;
    case vaidman::Errc::unknown_name: return VG_UNKNOWN_NAME;
    case vaidman::Errc::session_rejected: return VG_SESSION_REJECTED;
  }
  return VG_INTERNAL;
}

template <typename F>
vg_status guarded(F&& f) {
  try {
    f();
    return VG_OK;
  } catch (const vaidman::Error& e) {
    return map_status(e.code());
  } catch (const std::exception&) {
    return VG_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_string(char** slot, const std::string& value) {
  if (slot != nullptr) *slot = dup_string(value);
}

vaidman::ResourceState to_resource(vg_resource_state state) {
  if (state != VG_STATE_W && state != VG_STATE_GHZ) {
    throw vaidman::Error(vaidman::Errc::invalid_argument, "invalid resource state");
  }
  return state == VG_STATE_W ? vaidman::ResourceState::W : vaidman::ResourceState::GHZ;
}

vaidman::ChannelKind to_channel(vg_channel channel) {
  switch (channel) {
    case VG_CHANNEL_PHASE_FLIP: return vaidman::ChannelKind::PhaseFlip;
    case VG_CHANNEL_DEPOLARIZING: return vaidman::ChannelKind::Depolarizing;
    case VG_CHANNEL_AMPLITUDE_DAMPING: return vaidman::ChannelKind::AmplitudeDamping;
  }
  throw vaidman::Error(vaidman::Errc::invalid_argument, "invalid channel kind");
}

void fill_summary(vg_qss_summary* summary, const vaidman::SessionResult& result) {
  if (summary == nullptr) return;
  summary->rounds = result.rounds;
  summary->sifted_rounds = result.sifted_rounds;
  summary->message_rounds = result.message_rounds;
  summary->control_rounds = result.control_rounds;
  summary->sifted_fraction = result.sifted_fraction;
  summary->compliance_rate = result.compliance_rate;
  summary->inference_agreement = result.inference_agreement;
  summary->cheating_suspected = result.cheating_suspected ? 1 : 0;
  summary->key_length = result.key_bits.size();
}

}  // namespace

extern "C" {

const char* vg_version(void) { return "1.0.0"; }

void vg_string_free(char* s) { std::free(s); }

vg_status vg_state_ghz(double theta, int n_qubits, int phase_sign, vg_state** out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(
      [&] { *out = new vg_state{vaidman::make_ghz_general(theta, n_qubits, phase_sign)}; });
}

vg_status vg_state_w(double a, double b, double c, vg_state** out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new vg_state{vaidman::make_w_general(a, b, c)}; });
}

vg_status vg_state_wn(long n, double gamma, double delta, vg_state** out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new vg_state{vaidman::make_wn(n, gamma, delta)}; });
}

void vg_state_free(vg_state* state) { delete state; }

int vg_state_num_qubits(const vg_state* state) {
  return state == nullptr ? 0 : state->impl.num_qubits();
}

vg_status vg_state_amplitude(const vg_state* state, size_t index, double* re, double* im) {
  if (state == nullptr || re == nullptr || im == nullptr) return VG_INVALID_ARGUMENT;
  if (index >= static_cast<size_t>(state->impl.dim())) return VG_INVALID_ARGUMENT;
  const vaidman::cplx amp = state->impl.amp(static_cast<Eigen::Index>(index));
  *re = amp.real();
  *im = amp.imag();
  return VG_OK;
}

vg_status vg_three_tangle(const vg_state* state, double out[4]) {
  if (state == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    const vaidman::TangleReport report = vaidman::three_tangle(state->impl);
    out[0] = report.tau;
    out[1] = report.c_a_bc;
    out[2] = report.c_ab;
    out[3] = report.c_ac;
  });
}

vg_status vg_residual_concurrence_sum(const vg_state* state, double* out) {
  if (state == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::residual_concurrence_sum(state->impl); });
}

vg_status vg_n_tangle_ghz_family(double theta, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::n_tangle_ghz_family(theta); });
}

vg_status vg_game_create(const char* name, vg_game** out) {
  if (name == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const std::string id(name);
    if (id == "vaidman_ghz") {
      *out = new vg_game{vaidman::vaidman_ghz_game()};
    } else if (id == "vaidman_w") {
      *out = new vg_game{vaidman::vaidman_w_game()};
    } else {
      *out = new vg_game{vaidman::multiplayer_game(id)};
    }
  });
}

void vg_game_free(vg_game* game) { delete game; }

vg_status vg_game_serialize(const vg_game* game, char** out) {
  if (game == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(vaidman::serialize(game->impl)); });
}

vg_status vg_game_quantum_win(const vg_game* game, const vg_state* state, double* out) {
  if (game == nullptr || state == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = vaidman::quantum_win_probability(state->impl, game->impl); });
}

vg_status vg_game_classical_max(const vg_game* game, double* probability, long long* num,
                                long long* den, char** strategy) {
  if (game == nullptr || probability == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    const vaidman::ClassicalResult result = vaidman::classical_max_win(game->impl);
    *probability = result.probability;
    if (num != nullptr) *num = result.exact ? result.num : 0;
    if (den != nullptr) *den = result.exact ? result.den : 0;
    set_string(strategy, vaidman::describe(result.strategy));
  });
}

vg_status vg_closed_form_ghz_win(double theta, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::closed_form_ghz_win(theta); });
}

vg_status vg_closed_form_w_win(double a, double b, double c, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::closed_form_w_win(a, b, c); });
}

vg_status vg_closed_form_wn_win(long n, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::closed_form_wn_win(n); });
}

vg_status vg_closed_form_rulemaker_w(double lambda, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::closed_form_rulemaker_w(lambda); });
}

vg_status vg_closed_form_rulemaker_ghz(double lambda, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::closed_form_rulemaker_ghz(lambda); });
}

vg_status vg_rulemaker_w_win(double lambda, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = vaidman::rulemaker_win_probability(vaidman::rulemaker_w_spec(lambda));
  });
}

vg_status vg_rulemaker_ghz_win(double lambda, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = vaidman::rulemaker_win_probability(vaidman::rulemaker_ghz_spec(lambda));
  });
}

vg_status vg_rulemaker_4q_win(double lambda, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = vaidman::rulemaker_4qubit_game(lambda); });
}

vg_status vg_noisy_rulemaker_win(vg_resource_state state, vg_channel channel, double d1,
                                 double d2, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = vaidman::noisy_rulemaker_win(to_resource(state), to_channel(channel), d1, d2);
  });
}

vg_status vg_closed_form_noisy(vg_resource_state state, vg_channel channel, double d1,
                               double d2, double* out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = vaidman::closed_form_noisy(to_resource(state), to_channel(channel), d1, d2);
  });
}

vg_status vg_noise_report_csv(int grid_points, char** out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(vaidman::noise_report_csv(grid_points)); });
}

vg_status vg_sweep_csv(const char* target, int grid_points, int n_max, char** out) {
  if (target == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = dup_string(vaidman::sweep_csv(target, grid_points, n_max)); });
}

vg_status vg_sweep_list(char** out) {
  if (out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(vaidman::sweep_list()); });
}

vg_status vg_verify_report(double tolerance, int grid_points, char** report,
                           int* all_passed) {
  if (report == nullptr && all_passed == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<vaidman::VerifyCheck> checks =
        vaidman::run_verify(tolerance, grid_points);
    set_string(report, vaidman::verify_report_text(checks));
    if (all_passed != nullptr) *all_passed = vaidman::verify_all_passed(checks) ? 1 : 0;
  });
}

vg_status vg_classical_report(const char* game_id, char** out) {
  if (game_id == nullptr || out == nullptr) return VG_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(vaidman::classical_report(game_id)); });
}

vg_status vg_qss_basic(uint64_t rounds, uint64_t seed, vg_qss_summary* summary,
                       char** summary_text, char** key, char** transcript_csv) {
  return guarded([&] {
    std::vector<vaidman::RoundRecord> records;
    const vaidman::SessionResult result =
        vaidman::run_basic_qss(rounds, seed, transcript_csv != nullptr ? &records : nullptr);
    fill_summary(summary, result);
    set_string(summary_text, vaidman::qss_summary_text("basic", result));
    set_string(key, result.key_bits);
    if (transcript_csv != nullptr) {
      *transcript_csv = dup_string(vaidman::transcript_csv(records, true));
    }
  });
}

vg_status vg_qss_facilitated(vg_resource_state state, uint64_t rounds, vg_cheat_model cheat,
                             vg_party cheater, double control_check_rate, uint64_t seed,
                             vg_qss_summary* summary, char** summary_text, char** key,
                             char** transcript_csv) {
  return guarded([&] {
    vaidman::SessionConfig config;
    config.rounds = rounds;
    config.state_kind = to_resource(state);
    switch (cheat) {
      case VG_CHEAT_HONEST: config.cheat = vaidman::CheatModel::Honest; break;
      case VG_CHEAT_RANDOM_ANNOUNCER:
        config.cheat = vaidman::CheatModel::RandomAnnouncer;
        break;
      case VG_CHEAT_FLIP_ANNOUNCER: config.cheat = vaidman::CheatModel::FlipAnnouncer; break;
      default:
        throw vaidman::Error(vaidman::Errc::invalid_argument, "invalid cheat model");
    }
    switch (cheater) {
      case VG_PARTY_ALICE: config.cheater = vaidman::Party::Alice; break;
      case VG_PARTY_BOB: config.cheater = vaidman::Party::Bob; break;
      default: throw vaidman::Error(vaidman::Errc::invalid_argument, "invalid party");
    }
    config.control_check_rate = control_check_rate;
    config.seed = seed;
    std::vector<vaidman::RoundRecord> records;
    const vaidman::SessionResult result =
        vaidman::run_facilitated(config, transcript_csv != nullptr ? &records : nullptr);
    fill_summary(summary, result);
    set_string(summary_text, vaidman::qss_summary_text(
                                 "facilitated_" + vaidman::to_string(config.state_kind),
                                 result));
    set_string(key, result.key_bits);
    if (transcript_csv != nullptr) {
      *transcript_csv = dup_string(vaidman::transcript_csv(records, false));
    }
  });
}

}  // extern "C"
