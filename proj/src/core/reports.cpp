#include "core/reports.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "core/entanglement.hpp"
#include "core/format.hpp"
#include "core/games.hpp"
#include "core/noise.hpp"

namespace vaidman {

namespace {

constexpr double kPi = std::numbers::pi;

double grid_point(double lo, double hi, int i, int n) {
  if (n <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void check_grid(int grid_points) {
  if (grid_points < 2) {
    throw Error(Errc::invalid_argument, "grid must have at least 2 points");
  }
}

std::string sweep_ghz_game(int grid) {
  std::string out = "theta,tau,quantum_win,classical_bound\n";
  const GameSpec game = vaidman_ghz_game();
  for (int i = 0; i < grid; ++i) {
    const double theta = grid_point(0.0, kPi / 4.0, i, grid);
    const PureState state = make_ghz_general(theta, 3, +1);
    out += g12(theta) + ',' + g12(three_tangle(state).tau) + ',' +
           g12(quantum_win_probability(state, game)) + ",0.75\n";
  }
  return out;
}

// real amplitude simplex a^2 + b^2 + c^2 = 1 swept by two polar angles
struct SimplexPoint {
  double a, b, c;
};

SimplexPoint simplex_point(double phi1, double phi2) {
  return {std::cos(phi1), std::sin(phi1) * std::cos(phi2), std::sin(phi1) * std::sin(phi2)};
}

std::string sweep_w_game(int grid) {
  std::string out = "a,b,c,concurrence_sum,win\n";
  const GameSpec game = vaidman_w_game();
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const SimplexPoint p = simplex_point(grid_point(0.0, kPi / 2.0, i, grid),
                                           grid_point(0.0, kPi / 2.0, j, grid));
      const PureState state = make_w_general(p.a, p.b, p.c);
      out += g12(p.a) + ',' + g12(p.b) + ',' + g12(p.c) + ',' +
             g12(residual_concurrence_sum(state)) + ',' +
             g12(quantum_win_probability(state, game)) + '\n';
    }
  }
  return out;
}

std::string sweep_wn_game(int n_max) {
  if (n_max < 1) {
    throw Error(Errc::invalid_argument, "n-max must be at least 1");
  }
  std::string out = "n,concurrence_sum,win\n";
  const GameSpec game = vaidman_w_game();
  for (long n = 1; n <= n_max; ++n) {
    const PureState state = make_wn(n);
    out += std::to_string(n) + ',' + g12(residual_concurrence_sum(state)) + ',' +
           g12(quantum_win_probability(state, game)) + '\n';
  }
  return out;
}

std::string sweep_rulemaker(int grid, const std::string& target) {
  std::string out = "lambda,win\n";
  for (int i = 0; i < grid; ++i) {
    const double lambda = grid_point(0.0, kPi / 2.0, i, grid);
    double win = 0.0;
    if (target == "rulemaker_w") {
      win = rulemaker_win_probability(rulemaker_w_spec(lambda));
    } else if (target == "rulemaker_ghz") {
      win = rulemaker_win_probability(rulemaker_ghz_spec(lambda));
    } else {
      win = rulemaker_4qubit_game(lambda);
    }
    out += g12(lambda) + ',' + g12(win) + '\n';
  }
  return out;
}

struct ReferenceRow {
  double classical;  // tabulated classical bound, rounded decimals
  double threshold;  // tabulated entanglement threshold, -1 when not tabulated
};

const std::map<std::string, ReferenceRow>& reference_table() {
  static const std::map<std::string, ReferenceRow> table = {
      {"vaidman_ghz", {0.75, -1.0}}, {"vaidman_w", {0.75, -1.0}},
      {"G4_1", {0.8517, 0.51}},      {"G5_1", {0.909, 0.67}},
      {"G5_2", {0.6667, 0.11}},      {"G6_1", {0.9375, 0.765}},
      {"G6_2", {0.5, 0.0}},          {"G6_3", {0.9375, 0.765}}};
  return table;
}

// what exhaustive search provably returns, as reduced fractions
struct ExactFraction {
  long long num, den;
};

const std::map<std::string, ExactFraction>& search_fractions() {
  static const std::map<std::string, ExactFraction> table = {
      {"vaidman_ghz", {3, 4}}, {"vaidman_w", {3, 4}}, {"G4_1", {6, 7}},
      {"G5_1", {10, 11}},      {"G5_2", {2, 3}},      {"G6_1", {15, 16}},
      {"G6_2", {2, 3}},        {"G6_3", {15, 16}}};
  return table;
}

GameSpec game_by_id(const std::string& game_id) {
  if (game_id == "vaidman_ghz") return vaidman_ghz_game();
  if (game_id == "vaidman_w") return vaidman_w_game();
  return multiplayer_game(game_id);
}

struct CheckList {
  std::vector<VerifyCheck> checks;

  void strict(const std::string& name, double max_dev, double tol, std::string note = "") {
    checks.push_back({name, max_dev <= tol ? "PASS" : "FAIL", max_dev, tol, std::move(note)});
  }
  void waived(const std::string& name, double max_dev, std::string note) {
    checks.push_back({name, "WAIVED", max_dev, 0.0, std::move(note)});
  }
  void info(const std::string& name, double max_dev, std::string note) {
    checks.push_back({name, "INFO", max_dev, 0.0, std::move(note)});
  }
};

}  // namespace

const std::vector<std::string>& sweep_targets() {
  static const std::vector<std::string> targets = {
      "ghz_game", "w_game", "wn_game", "rulemaker_w", "rulemaker_ghz", "rulemaker_4q",
      "noise"};
  return targets;
}

std::string sweep_csv(const std::string& target, int grid_points, int n_max) {
  if (target == "wn_game") return sweep_wn_game(n_max);
  check_grid(grid_points);
  if (target == "ghz_game") return sweep_ghz_game(grid_points);
  if (target == "w_game") return sweep_w_game(grid_points);
  if (target == "rulemaker_w" || target == "rulemaker_ghz" || target == "rulemaker_4q") {
    return sweep_rulemaker(grid_points, target);
  }
  if (target == "noise") return noise_report_csv(grid_points);
  throw Error(Errc::unknown_name, "unknown sweep target '" + target + "'");
}

std::string sweep_list() {
  return
      "ghz_game       theta,tau,quantum_win,classical_bound              "
      "three-player X/Y parity game on generalized GHZ states\n"
      "w_game         a,b,c,concurrence_sum,win                          "
      "three-player Z/Y parity game across the real W amplitude simplex\n"
      "wn_game        n,concurrence_sum,win                              "
      "single-parameter W subfamily, n = 1..N\n"
      "rulemaker_w    lambda,win                                         "
      "rule-maker game on the standard W state\n"
      "rulemaker_ghz  lambda,win                                         "
      "rule-maker game on the maximally entangled GHZ state\n"
      "rulemaker_4q   lambda,win                                         "
      "four-qubit rule-maker game\n"
      "noise          state,channel,D1,D2,simulated,closed_form,abs_dev  "
      "noisy rule-maker games against their closed forms\n";
}

std::vector<VerifyCheck> run_verify(double tolerance, int grid_points) {
  if (!(tolerance > 0.0)) {
    throw Error(Errc::invalid_argument, "tolerance must be positive");
  }
  check_grid(grid_points);
  CheckList list;

  {
    const GameSpec game = vaidman_ghz_game();
    double dev_win = 0.0, dev_tau = 0.0, dev_ntangle = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double theta = grid_point(0.0, kPi / 4.0, i, grid_points);
      const PureState state = make_ghz_general(theta, 3, +1);
      const double closed = closed_form_ghz_win(theta);
      const double sin2 = std::sin(2.0 * theta);
      const TangleReport tangle = three_tangle(state);
      dev_win = std::max(dev_win, std::abs(quantum_win_probability(state, game) - closed));
      dev_tau = std::max(dev_tau, std::abs(tangle.tau - sin2 * sin2));
      dev_ntangle = std::max(dev_ntangle, std::abs(n_tangle_ghz_family(theta) - tangle.tau));
    }
    list.strict("ghz_game_closed_form", dev_win, tolerance);
    list.strict("ghz_tangle_identity", dev_tau, tolerance);
    list.strict("n_tangle_matches_three_tangle", dev_ntangle, tolerance);
  }

  {
    const GameSpec game = vaidman_w_game();
    double dev_win = 0.0, dev_sum = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      for (int j = 0; j < grid_points; ++j) {
        const SimplexPoint p = simplex_point(grid_point(0.0, kPi / 2.0, i, grid_points),
                                             grid_point(0.0, kPi / 2.0, j, grid_points));
        const PureState state = make_w_general(p.a, p.b, p.c);
        dev_win = std::max(dev_win, std::abs(quantum_win_probability(state, game) -
                                             closed_form_w_win(p.a, p.b, p.c)));
        dev_sum = std::max(dev_sum, std::abs(residual_concurrence_sum(state) -
                                             2.0 * (p.a * p.b + p.b * p.c + p.c * p.a)));
      }
    }
    list.strict("w_game_closed_form", dev_win, tolerance);
    list.strict("w_residual_concurrence_identity", dev_sum, tolerance);
  }

  {
    const GameSpec game = vaidman_w_game();
    double dev = 0.0;
    for (long n = 1; n <= 20; ++n) {
      dev = std::max(dev, std::abs(quantum_win_probability(make_wn(n), game) -
                                   closed_form_wn_win(n)));
    }
    list.strict("wn_closed_form", dev, tolerance);

    double phase_dev = 0.0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double gamma = grid_point(0.0, 2.0 * kPi, i, 5);
        const double delta = grid_point(0.0, 2.0 * kPi, j, 5);
        phase_dev = std::max(phase_dev, std::abs(quantum_win_probability(
                                            make_wn(1, gamma, delta), game) -
                                        closed_form_wn_win(1)));
      }
    }
    list.info("wn_phase_dependence", phase_dev,
              "win probability depends on the phases; the closed form holds at "
              "gamma = delta = 0");
  }

  {
    double dev_w = 0.0, dev_ghz = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double lambda = grid_point(0.0, kPi / 2.0, i, grid_points);
      dev_w = std::max(dev_w, std::abs(rulemaker_win_probability(rulemaker_w_spec(lambda)) -
                                       closed_form_rulemaker_w(lambda)));
      dev_ghz =
          std::max(dev_ghz, std::abs(rulemaker_win_probability(rulemaker_ghz_spec(lambda)) -
                                     closed_form_rulemaker_ghz(lambda)));
    }
    list.strict("rulemaker_w_closed_form", dev_w, tolerance);
    list.strict("rulemaker_ghz_closed_form", dev_ghz, tolerance);

    list.strict("rulemaker_4q_peak", std::abs(rulemaker_4qubit_game(kPi / 4.0) - 1.0),
                tolerance);
    double dev_sym = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double lambda = grid_point(0.0, kPi / 4.0, i, grid_points);
      dev_sym = std::max(dev_sym, std::abs(rulemaker_4qubit_game(lambda) -
                                           rulemaker_4qubit_game(kPi / 2.0 - lambda)));
    }
    list.strict("rulemaker_4q_symmetry", dev_sym, tolerance);
  }

  for (const NoiseCheck& check : verify_noise_formulas(grid_points)) {
    std::string name = "noise_" + to_string(check.state) + "_" + to_string(check.kind);
    if (check.kind == ChannelKind::Depolarizing) {
      if (check.alternative_convention) name += "_twirl";
      const std::string convention =
          check.alternative_convention
              ? "Pauli-twirl convention (1-D)rho + (D/3)(XrX+YrY+ZrZ)"
              : "affine convention D*I/2 + (1-D)rho";
      list.waived(name, check.max_dev,
                  convention + " does not reproduce the tabulated depolarizing row; "
                               "reported, not gated");
    } else {
      list.strict(name, check.max_dev, tolerance);
    }
  }

  {
    int mismatches = 0;
    for (const auto& [game_id, expected] : search_fractions()) {
      const ClassicalResult result = classical_max_win(game_by_id(game_id));
      if (!result.exact || result.num != expected.num || result.den != expected.den) {
        ++mismatches;
      }
    }
    list.strict("classical_bounds_exact", static_cast<double>(mismatches), 0.0,
                "exhaustive-search fractions for all eight games");
    list.waived("classical_reference_G4_1", std::abs(6.0 / 7.0 - 0.8517),
                "search gives 6/7 = 0.857143, tabulated reference says 0.8517");
    list.waived("classical_reference_G6_2", std::abs(2.0 / 3.0 - 0.5),
                "search gives 2/3, tabulated reference says 0.5");
    list.waived("threshold_reference_G6_2", 1.0 / 9.0,
                "derived threshold (2c-1)^2 = 1/9 for c = 2/3, tabulated reference says 0");
  }

  {
    double dev = 0.0;
    for (const std::string& game_id : multiplayer_game_ids()) {
      if (game_id == "G6_2") continue;  // its tabulated threshold is the waived row above
      const ClassicalResult result = classical_max_win(game_by_id(game_id));
      const double derived = (2.0 * result.probability - 1.0) * (2.0 * result.probability - 1.0);
      dev = std::max(dev, std::abs(derived - reference_table().at(game_id).threshold));
    }
    list.strict("multiplayer_thresholds", dev, 0.01,
                "derived (2c-1)^2 against the 2-3 digit tabulated thresholds");
  }

  {
    double dev = 0.0;
    for (const std::string& game_id : multiplayer_game_ids()) {
      const GameSpec game = game_by_id(game_id);
      for (int i = 0; i < grid_points; ++i) {
        const double theta = grid_point(0.0, kPi / 4.0, i, grid_points);
        const PureState state =
            make_ghz_general(theta, game.n_players, kMultiplayerPhaseSign);
        dev = std::max(dev,
                       std::abs(quantum_win_probability(state, game) - closed_form_ghz_win(theta)));
      }
    }
    list.strict("multiplayer_quantum_win", dev, tolerance);
  }

  return list.checks;
}

std::string verify_report_text(const std::vector<VerifyCheck>& checks) {
  std::ostringstream out;
  int passed = 0, failed = 0, waived = 0, informational = 0;
  for (const auto& check : checks) {
    out << check.status << ' ' << check.name << " max_dev=" << g12(check.max_dev);
    if (check.status == "PASS" || check.status == "FAIL") {
      out << " tol=" << g12(check.tol);
    }
    if (!check.note.empty()) out << "  # " << check.note;
    out << '\n';
    if (check.status == "PASS") ++passed;
    else if (check.status == "FAIL") ++failed;
    else if (check.status == "WAIVED") ++waived;
    else ++informational;
  }
  out << "verify: " << passed << " passed, " << failed << " failed, " << waived
      << " waived, " << informational << " info\n";
  return out.str();
}

bool verify_all_passed(const std::vector<VerifyCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const VerifyCheck& c) { return c.status == "FAIL"; });
}

const std::vector<std::string>& classical_game_ids() {
  static const std::vector<std::string> ids = {"vaidman_ghz", "vaidman_w", "G4_1", "G5_1",
                                               "G5_2",        "G6_1",      "G6_2", "G6_3"};
  return ids;
}

std::string classical_report(const std::string& game_id) {
  if (reference_table().find(game_id) == reference_table().end()) {
    throw Error(Errc::unknown_name, "unknown game id '" + game_id + "'");
  }
  const GameSpec game = game_by_id(game_id);
  const ClassicalResult result = classical_max_win(game);
  std::ostringstream out;
  out << "game " << game_id << " (" << game.n_players << " players, " << game.rounds.size()
      << " question tuples)\n";
  out << serialize(game);
  out << "classical_max = ";
  if (result.exact) out << result.num << '/' << result.den << " = ";
  out << g12(result.probability) << '\n';
  out << "strategy: " << describe(result.strategy) << '\n';
  const double reference = reference_table().at(game_id).classical;
  const bool match = std::abs(result.probability - reference) <= 5e-4;
  out << "reference " << g12(reference) << " -> " << (match ? "MATCH" : "DISCREPANCY")
      << '\n';
  return out.str();
}

std::string qss_summary_text(const std::string& protocol, const SessionResult& result) {
  std::ostringstream out;
  out << "protocol: " << protocol << '\n';
  out << "rounds: " << result.rounds << '\n';
  out << "sifted_rounds: " << result.sifted_rounds << " (fraction "
      << g12(result.sifted_fraction) << ")\n";
  out << "message_rounds: " << result.message_rounds << '\n';
  out << "control_rounds_checked: " << result.control_rounds << '\n';
  out << "compliance_rate: " << g12(result.compliance_rate) << '\n';
  out << "inference_agreement: " << g12(result.inference_agreement) << '\n';
  out << "verdict: " << (result.cheating_suspected ? "CheatingSuspected" : "Accepted")
      << '\n';
  out << "key_length: " << result.key_bits.size() << '\n';
  return out.str();
}

std::string transcript_csv(const std::vector<RoundRecord>& records, bool basic_protocol) {
  std::string out =
      basic_protocol
          ? "round,mode,aliceBasis,bobBasis,charlieBasis,aliceOut,bobOut,charlieOut,keyBit\n"
          : "round,mode,aliceBasis,bobBasis,charlieOutcome,aliceOut,bobOut,keyBit\n";
  const auto mode_name = [](RoundMode mode) {
    switch (mode) {
      case RoundMode::Message: return "message";
      case RoundMode::Control: return "control";
      case RoundMode::Discarded: return "discarded";
    }
    return "";
  };
  const auto sign_cell = [](int value) {
    if (value == 0) return std::string();
    return std::string(value > 0 ? "+1" : "-1");
  };
  for (const auto& rec : records) {
    out += std::to_string(rec.round);
    out += ',';
    out += mode_name(rec.mode);
    out += ',';
    out += rec.alice_basis;
    out += ',';
    out += rec.bob_basis;
    out += ',';
    if (basic_protocol) {
      out += rec.charlie_basis;
      out += ',';
      out += sign_cell(rec.alice_out);
      out += ',';
      out += sign_cell(rec.bob_out);
      out += ',';
      out += sign_cell(rec.charlie_out);
    } else {
      if (rec.ruler_outcome >= 0) out += rec.ruler_outcome == 0 ? "b0" : "b1";
      out += ',';
      out += sign_cell(rec.alice_out);
      out += ',';
      out += sign_cell(rec.bob_out);
    }
    out += ',';
    if (rec.key_bit >= 0) out += static_cast<char>('0' + rec.key_bit);
    out += '\n';
  }
  return out;
}

}  // namespace vaidman
