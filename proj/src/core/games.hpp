#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/qstate.hpp"

namespace vaidman {

// One question tuple: per-player basis letters, the answer product the team
// must produce, and the probability of this tuple being asked.
struct GameRound {
  std::string questions;  // letters from {X, Y, Z}, one per player
  int required_product;   // +1 or -1
  double weight;
};

struct GameSpec {
  int n_players = 0;
  std::vector<GameRound> rounds;
};

// throws unless weights sum to 1, tuples are distinct, letters are valid
void validate(const GameSpec& game);

// one line per tuple: "<basis-letters> <required product> <weight>"
std::string serialize(const GameSpec& game);

// 3 players; XXX -> +1, XYY/YXY/YYX -> -1, weight 1/4 each
GameSpec vaidman_ghz_game();

// 3 players; ZZZ -> -1, ZYY/YZY/YYZ -> +1, weight 1/4 each
GameSpec vaidman_w_game();

// Multi-player games by id: G4_1, G5_1, G5_2, G6_1, G6_2, G6_3.
// Question tuples are the X/Y patterns with the stated required products,
// uniformly weighted.
GameSpec multiplayer_game(const std::string& game_id);
const std::vector<std::string>& multiplayer_game_ids();

// The generalized-GHZ phase that wins every shipped multiplayer game with
// probability 1 at theta = pi/4: sin(theta)|0..0> - cos(theta)|1..1>.
inline constexpr int kMultiplayerPhaseSign = -1;

// Exact win probability: sum over rounds of weight times the Born-rule
// probability that the outcome product matches. Enumerates all 2^n outcome
// tuples; this is the brute-force oracle the closed forms are checked against.
double quantum_win_probability(const PureState& psi, const GameSpec& game);
double quantum_win_probability(const DensityMatrix& rho, const GameSpec& game);

// Deterministic local strategy: per player, an answer for each question letter.
struct ClassicalStrategy {
  std::vector<std::map<char, int>> answers;  // answers[player][letter] = +1/-1
};

struct ClassicalResult {
  double probability;
  // exact value as a reduced fraction when all tuple weights are equal
  bool exact;
  long long num, den;
  ClassicalStrategy strategy;
};

double win_probability(const GameSpec& game, const ClassicalStrategy& s);
std::string describe(const ClassicalStrategy& s);

// Exhaustive maximum over all deterministic local strategies (mixed strategies
// cannot beat deterministic ones for a linear objective). Ties broken by the
// lexicographically first strategy encoding: player-major, letters in
// alphabetical order, answer +1 before -1.
ClassicalResult classical_max_win(const GameSpec& game);

// closed forms from the three-player analysis
double closed_form_ghz_win(double theta);           // (1 + sin 2theta) / 2
double closed_form_w_win(double a, double b, double c);  // (5/2 + ab + bc + ca) / 4
double closed_form_wn_win(long n);

// ---------------------------------------------------------------------------
// rule-maker games: one ruler qubit is measured in Param(lambda) and the
// outcome selects which two-question rule set the remaining players must win.

struct RuleMakerSpec {
  PureState shared_state;
  int ruler_qubit;
  MeasurementBasis ruler_basis;
  GameSpec rule_b0;
  GameSpec rule_b1;
};

// rule sets selected by the ruler's outcome
GameSpec rules_w_b0();    // XX = +1, ZZ = -1
GameSpec rules_w_b1();    // XX = -1, ZZ = +1
GameSpec rules_ghz_b0();  // XX = -1, YY = +1
GameSpec rules_ghz_b1();  // XX = +1, YY = -1
GameSpec rules_4q_b0();   // XXX = +1, XYY = YXY = YYX = -1
GameSpec rules_4q_b1();   // products negated

double rulemaker_win_probability(const RuleMakerSpec& spec);
double rulemaker_win_probability(const DensityMatrix& rho, int ruler_qubit,
                                 const MeasurementBasis& ruler_basis,
                                 const GameSpec& rule_b0, const GameSpec& rule_b1);

// presets: W state with ruler C, and GHZ with ruler C
RuleMakerSpec rulemaker_w_spec(double lambda);
RuleMakerSpec rulemaker_ghz_spec(double lambda);

double closed_form_rulemaker_w(double lambda);    // 11/12 - (5/6) cos^2 lambda
double closed_form_rulemaker_ghz(double lambda);  // (1 + sin 2lambda) / 2

// four-qubit variant: (|0000> - |1111>)/sqrt(2), ruler D, three-player rules
double rulemaker_4qubit_game(double lambda);

}  // namespace vaidman
