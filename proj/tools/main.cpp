#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "vaidman/vaidman.h"

namespace {

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { vg_string_free(value); }
  StringGuard() = default;
  StringGuard(const StringGuard&) = delete;
  StringGuard& operator=(const StringGuard&) = delete;
};

const char* status_name(vg_status status) {
  switch (status) {
    case VG_OK: return "ok";
    case VG_INVALID_ARGUMENT: return "invalid argument";
    case VG_DIMENSION_MISMATCH: return "dimension mismatch";
    case VG_NOT_NORMALIZED: return "not normalized";
    case VG_ZERO_PROBABILITY: return "zero probability";
    case VG_UNKNOWN_NAME: return "unknown name";
    case VG_SESSION_REJECTED: return "session rejected";
    case VG_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int fail_status(const char* what, vg_status status) {
  std::fprintf(stderr, "error: %s failed: %s\n", what, status_name(status));
  const bool usage = status == VG_INVALID_ARGUMENT || status == VG_UNKNOWN_NAME ||
                     status == VG_DIMENSION_MISMATCH || status == VG_NOT_NORMALIZED;
  return usage ? 2 : 1;
}

int write_output(const std::string& path, const char* content) {
  if (path.empty()) {
    std::fputs(content, stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
    return 2;
  }
  out << content;
  out.flush();
  if (!out.good()) {
    std::fprintf(stderr, "error: failed writing '%s'\n", path.c_str());
    return 2;
  }
  return 0;
}

int parse_cheat(const std::string& spec, vg_cheat_model* cheat, vg_party* cheater) {
  *cheat = VG_CHEAT_HONEST;
  *cheater = VG_PARTY_BOB;
  if (spec == "honest") return 0;
  const auto colon = spec.find(':');
  const std::string model = spec.substr(0, colon);
  const std::string who = colon == std::string::npos ? std::string("bob")
                                                     : spec.substr(colon + 1);
  if (model == "random") {
    *cheat = VG_CHEAT_RANDOM_ANNOUNCER;
  } else if (model == "flip") {
    *cheat = VG_CHEAT_FLIP_ANNOUNCER;
  } else {
    std::fprintf(stderr, "error: unknown cheat model '%s' (use honest, random:<party>, "
                         "or flip:<party>)\n",
                 spec.c_str());
    return 2;
  }
  if (who == "alice") {
    *cheater = VG_PARTY_ALICE;
  } else if (who == "bob") {
    *cheater = VG_PARTY_BOB;
  } else {
    std::fprintf(stderr, "error: unknown party '%s' (use alice or bob)\n", who.c_str());
    return 2;
  }
  return 0;
}

int run_sweep(bool list, const std::string& target, int grid, int n_max,
              const std::string& out_path) {
  StringGuard text;
  if (list) {
    const vg_status status = vg_sweep_list(&text.value);
    if (status != VG_OK) return fail_status("sweep --list", status);
    return write_output(out_path, text.value);
  }
  const vg_status status = vg_sweep_csv(target.c_str(), grid, n_max, &text.value);
  if (status != VG_OK) return fail_status("sweep", status);
  return write_output(out_path, text.value);
}

int run_classical(const std::string& game_id, const std::string& out_path) {
  StringGuard text;
  const vg_status status = vg_classical_report(game_id.c_str(), &text.value);
  if (status != VG_OK) return fail_status("classical", status);
  return write_output(out_path, text.value);
}

int run_verify(double tolerance, int grid, const std::string& out_path) {
  StringGuard report;
  int all_passed = 0;
  const vg_status status = vg_verify_report(tolerance, grid, &report.value, &all_passed);
  if (status != VG_OK) return fail_status("verify", status);
  const int rc = write_output(out_path, report.value);
  if (rc != 0) return rc;
  return all_passed == 1 ? 0 : 1;
}

int run_qss_basic(std::uint64_t rounds, std::uint64_t seed, const std::string& out_path,
                  const std::string& transcript_path) {
  StringGuard summary_text;
  StringGuard transcript;
  const bool want_transcript = !transcript_path.empty();
  const vg_status status =
      vg_qss_basic(rounds, seed, nullptr, &summary_text.value, nullptr,
                   want_transcript ? &transcript.value : nullptr);
  if (status != VG_OK) return fail_status("qss basic", status);
  if (want_transcript) {
    const int rc = write_output(transcript_path, transcript.value);
    if (rc != 0) return rc;
  }
  return write_output(out_path, summary_text.value);
}

int run_qss_facilitated(const std::string& state_name, std::uint64_t rounds,
                        std::uint64_t seed, const std::string& cheat_spec, double check_rate,
                        const std::string& out_path, const std::string& transcript_path) {
  vg_resource_state state;
  if (state_name == "W" || state_name == "w") {
    state = VG_STATE_W;
  } else if (state_name == "GHZ" || state_name == "ghz") {
    state = VG_STATE_GHZ;
  } else {
    std::fprintf(stderr, "error: unknown state '%s' (use W or GHZ)\n", state_name.c_str());
    return 2;
  }
  vg_cheat_model cheat;
  vg_party cheater;
  const int cheat_rc = parse_cheat(cheat_spec, &cheat, &cheater);
  if (cheat_rc != 0) return cheat_rc;

  StringGuard summary_text;
  StringGuard transcript;
  const bool want_transcript = !transcript_path.empty();
  const vg_status status = vg_qss_facilitated(
      state, rounds, cheat, cheater, check_rate, seed, nullptr, &summary_text.value,
      nullptr, want_transcript ? &transcript.value : nullptr);
  if (status != VG_OK) return fail_status("qss facilitated", status);
  if (want_transcript) {
    const int rc = write_output(transcript_path, transcript.value);
    if (rc != 0) return rc;
  }
  return write_output(out_path, summary_text.value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled parity games, rule-maker games with noise, and "
               "secret-sharing protocol simulations"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "emit a parameter-sweep CSV");
  std::string sweep_target;
  bool sweep_show_list = false;
  int sweep_grid = 101;
  int sweep_n_max = 20;
  std::string sweep_out;
  sweep->add_option("--target", sweep_target, "series name (see --list)");
  sweep->add_flag("--list", sweep_show_list, "list available series and their columns");
  sweep->add_option("--grid", sweep_grid, "grid points per swept parameter");
  sweep->add_option("--n-max", sweep_n_max, "largest n for the wn_game series");
  sweep->add_option("--out", sweep_out, "output path (default standard output)");

  // classical
  auto* classical = app.add_subcommand("classical", "exhaustive classical-strategy search");
  std::string classical_id;
  std::string classical_out;
  classical->add_option("game", classical_id, "game id (vaidman_ghz, vaidman_w, G4_1..G6_3)")
      ->required();
  classical->add_option("--out", classical_out, "output path (default standard output)");

  // verify
  auto* verify = app.add_subcommand("verify", "check every closed form against simulation");
  double verify_tolerance = 1e-9;
  int verify_grid = 33;
  std::string verify_out;
  verify->add_option("--tolerance", verify_tolerance, "maximum allowed deviation");
  verify->add_option("--grid", verify_grid, "grid points per swept parameter");
  verify->add_option("--out", verify_out, "output path (default standard output)");

  // qss
  auto* qss = app.add_subcommand("qss", "simulate a secret-sharing session");
  qss->require_subcommand(1);

  auto* basic = qss->add_subcommand("basic", "three-party protocol with X/Y sifting");
  std::uint64_t basic_rounds = 0;
  std::uint64_t basic_seed = 0;
  std::string basic_out, basic_transcript;
  basic->add_option("--rounds", basic_rounds, "number of rounds")->required();
  basic->add_option("--seed", basic_seed, "RNG seed")->required();
  basic->add_option("--out", basic_out, "summary path (default standard output)");
  basic->add_option("--transcript", basic_transcript, "write the per-round CSV here");

  auto* facilitated =
      qss->add_subcommand("facilitated", "Charlie routes rounds to message/control mode");
  std::string fac_state;
  std::uint64_t fac_rounds = 0;
  std::uint64_t fac_seed = 0;
  std::string fac_cheat = "honest";
  double fac_check_rate = 1.0;
  std::string fac_out, fac_transcript;
  facilitated->add_option("--state", fac_state, "resource state: W or GHZ")->required();
  facilitated->add_option("--rounds", fac_rounds, "number of rounds")->required();
  facilitated->add_option("--seed", fac_seed, "RNG seed")->required();
  facilitated->add_option("--cheat", fac_cheat,
                          "honest, random:alice, random:bob, flip:alice, or flip:bob");
  facilitated->add_option("--check-rate", fac_check_rate,
                          "fraction of control rounds Charlie verifies");
  facilitated->add_option("--out", fac_out, "summary path (default standard output)");
  facilitated->add_option("--transcript", fac_transcript, "write the per-round CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*sweep) {
    if (!sweep_show_list && sweep_target.empty()) {
      std::fprintf(stderr, "error: sweep needs --target or --list\n");
      return 2;
    }
    return run_sweep(sweep_show_list, sweep_target, sweep_grid, sweep_n_max, sweep_out);
  }
  if (*classical) return run_classical(classical_id, classical_out);
  if (*verify) return run_verify(verify_tolerance, verify_grid, verify_out);
  if (*qss) {
    if (*basic) return run_qss_basic(basic_rounds, basic_seed, basic_out, basic_transcript);
    return run_qss_facilitated(fac_state, fac_rounds, fac_seed, fac_cheat, fac_check_rate,
                               fac_out, fac_transcript);
  }
  return 2;
}
