#include "core/games.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "core/format.hpp"

namespace vaidman {

namespace {

constexpr double kWeightTol = 1e-12;

// +1 when the outcome tuple has an even number of -1 answers
int outcome_tuple_product(unsigned mask) {
  return (std::popcount(mask) % 2 == 0) ? +1 : -1;
}

std::vector<MeasurementBasis> bases_for(const std::string& questions) {
  std::vector<MeasurementBasis> bases;
  bases.reserve(questions.size());
  for (char c : questions) bases.push_back(MeasurementBasis::from_letter(c));
  return bases;
}

template <typename State>
double round_win_probability(const State& state, const GameRound& round) {
  const int n = static_cast<int>(round.questions.size());
  const auto bases = bases_for(round.questions);
  std::vector<int> outcomes(n);
  double p = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (outcome_tuple_product(mask) != round.required_product) continue;
    for (int q = 0; q < n; ++q) outcomes[q] = static_cast<int>((mask >> (n - 1 - q)) & 1u);
    p += outcome_probability(state, bases, outcomes);
  }
  return p;
}

template <typename State>
double quantum_win_impl(const State& state, const GameSpec& game) {
  validate(game);
  if (state.num_qubits() != game.n_players) {
    throw Error(Errc::dimension_mismatch, "state qubit count must equal the player count");
  }
  double total = 0.0;
  for (const auto& round : game.rounds) {
    total += round.weight * round_win_probability(state, round);
  }
  return total;
}

// all length-n X/Y strings with exactly k Ys, Ys packed rightmost first
std::vector<std::string> y_patterns(int n, int k) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::string s(static_cast<size_t>(n), 'X');
    for (int i = 0; i < n; ++i) {
      if ((mask >> (n - 1 - i)) & 1u) s[static_cast<size_t>(i)] = 'Y';
    }
    out.push_back(std::move(s));
  }
  return out;
}

GameSpec two_question_rules(const std::string& q0, int p0, const std::string& q1, int p1) {
  GameSpec g;
  g.n_players = static_cast<int>(q0.size());
  g.rounds = {{q0, p0, 0.5}, {q1, p1, 0.5}};
  return g;
}

GameSpec negate_products(GameSpec g) {
  for (auto& r : g.rounds) r.required_product = -r.required_product;
  return g;
}

}  // namespace

void validate(const GameSpec& game) {
  if (game.n_players < 2 || game.n_players > kMaxQubits) {
    throw Error(Errc::invalid_argument, "games support 2 to 6 players");
  }
  if (game.rounds.empty()) {
    throw Error(Errc::invalid_argument, "game has no question tuples");
  }
  double total_weight = 0.0;
  std::set<std::string> seen;
  for (const auto& r : game.rounds) {
    if (static_cast<int>(r.questions.size()) != game.n_players) {
      throw Error(Errc::dimension_mismatch, "question tuple '" + r.questions +
                                                "' does not match the player count");
    }
    for (char c : r.questions) {
      if (c != 'X' && c != 'Y' && c != 'Z') {
        throw Error(Errc::invalid_argument, std::string("invalid basis letter '") + c + "'");
      }
    }
    if (r.required_product != 1 && r.required_product != -1) {
      throw Error(Errc::invalid_argument, "required product must be +1 or -1");
    }
    if (!(r.weight >= 0.0)) {
      throw Error(Errc::invalid_argument, "question weights must be nonnegative");
    }
    if (!seen.insert(r.questions).second) {
      throw Error(Errc::invalid_argument, "duplicate question tuple '" + r.questions + "'");
    }
    total_weight += r.weight;
  }
  if (std::abs(total_weight - 1.0) > kWeightTol) {
    throw Error(Errc::not_normalized, "question weights must sum to 1");
  }
}

std::string serialize(const GameSpec& game) {
  std::string out;
  for (const auto& r : game.rounds) {
    out += r.questions;
    out += r.required_product > 0 ? " +1 " : " -1 ";
    out += g12(r.weight);
    out += '\n';
  }
  return out;
}

GameSpec vaidman_ghz_game() {
  GameSpec g;
  g.n_players = 3;
  g.rounds = {{"XXX", +1, 0.25}, {"XYY", -1, 0.25}, {"YXY", -1, 0.25}, {"YYX", -1, 0.25}};
  return g;
}

GameSpec vaidman_w_game() {
  GameSpec g;
  g.n_players = 3;
  g.rounds = {{"ZZZ", -1, 0.25}, {"ZYY", +1, 0.25}, {"YZY", +1, 0.25}, {"YYZ", +1, 0.25}};
  return g;
}

const std::vector<std::string>& multiplayer_game_ids() {
  static const std::vector<std::string> ids = {"G4_1", "G5_1", "G5_2",
                                               "G6_1", "G6_2", "G6_3"};
  return ids;
}

GameSpec multiplayer_game(const std::string& game_id) {
  struct Group {
    int y_count;
    int product;
  };
  int n = 0;
  std::vector<Group> groups;
  if (game_id == "G4_1") {
    n = 4;
    groups = {{0, -1}, {2, +1}};
  } else if (game_id == "G5_1") {
    n = 5;
    groups = {{0, -1}, {2, +1}};
  } else if (game_id == "G5_2") {
    n = 5;
    groups = {{2, +1}, {4, -1}};
  } else if (game_id == "G6_1") {
    n = 6;
    groups = {{0, -1}, {2, +1}};
  } else if (game_id == "G6_2") {
    n = 6;
    groups = {{2, +1}, {4, -1}};
  } else if (game_id == "G6_3") {
    n = 6;
    groups = {{4, -1}, {6, +1}};
  } else {
    throw Error(Errc::unknown_name, "unknown game id '" + game_id + "'");
  }
  GameSpec g;
  g.n_players = n;
  for (const auto& group : groups) {
    for (auto& tuple : y_patterns(n, group.y_count)) {
      g.rounds.push_back({std::move(tuple), group.product, 0.0});
    }
  }
  const double w = 1.0 / static_cast<double>(g.rounds.size());
  for (auto& r : g.rounds) r.weight = w;
  return g;
}

double quantum_win_probability(const PureState& psi, const GameSpec& game) {
  return quantum_win_impl(psi, game);
}

double quantum_win_probability(const DensityMatrix& rho, const GameSpec& game) {
  return quantum_win_impl(rho, game);
}

double win_probability(const GameSpec& game, const ClassicalStrategy& s) {
  validate(game);
  if (static_cast<int>(s.answers.size()) != game.n_players) {
    throw Error(Errc::dimension_mismatch, "strategy must cover every player");
  }
  double total = 0.0;
  for (const auto& r : game.rounds) {
    int product = 1;
    for (int p = 0; p < game.n_players; ++p) {
      const auto it = s.answers[static_cast<size_t>(p)].find(r.questions[static_cast<size_t>(p)]);
      if (it == s.answers[static_cast<size_t>(p)].end()) {
        throw Error(Errc::invalid_argument, "strategy has no answer for a question it is asked");
      }
      product *= it->second;
    }
    if (product == r.required_product) total += r.weight;
  }
  return total;
}

std::string describe(const ClassicalStrategy& s) {
  std::ostringstream out;
  for (size_t p = 0; p < s.answers.size(); ++p) {
    if (p > 0) out << ' ';
    out << static_cast<char>('A' + p) << '{';
    bool first = true;
    for (const auto& [letter, answer] : s.answers[p]) {
      if (!first) out << ',';
      first = false;
      out << letter << ':' << (answer > 0 ? "+1" : "-1");
    }
    out << '}';
  }
  return out.str();
}

ClassicalResult classical_max_win(const GameSpec& game) {
  validate(game);

  std::set<char> label_set;
  for (const auto& r : game.rounds) {
    for (char c : r.questions) label_set.insert(c);
  }
  const std::vector<char> labels(label_set.begin(), label_set.end());
  const int n_labels = static_cast<int>(labels.size());
  const int bits = game.n_players * n_labels;
  if (bits > 24) {
    throw Error(Errc::invalid_argument, "classical search capped at 2^24 strategies");
  }
  std::array<int, 256> label_index{};
  label_index.fill(-1);
  for (int i = 0; i < n_labels; ++i) {
    label_index[static_cast<unsigned char>(labels[static_cast<size_t>(i)])] = i;
  }

  // Strategy s is read player-major with alphabetical labels; the leading bit
  // belongs to player A's first label and a set bit means answering -1, so
  // ascending s enumerates strategies in lexicographic order.
  struct RoundBits {
    std::vector<int> shift;  // per player, bit position inside s
    int required;
    double weight;
  };
  std::vector<RoundBits> rounds;
  rounds.reserve(game.rounds.size());
  for (const auto& r : game.rounds) {
    RoundBits rb;
    rb.required = r.required_product;
    rb.weight = r.weight;
    for (int p = 0; p < game.n_players; ++p) {
      const int flat = p * n_labels + label_index[static_cast<unsigned char>(
                                          r.questions[static_cast<size_t>(p)])];
      rb.shift.push_back(bits - 1 - flat);
    }
    rounds.push_back(std::move(rb));
  }

  const double uniform_weight = 1.0 / static_cast<double>(game.rounds.size());
  bool uniform = true;
  for (const auto& r : game.rounds) {
    if (std::abs(r.weight - uniform_weight) > kWeightTol) uniform = false;
  }

  std::uint64_t best_s = 0;
  long long best_count = -1;
  double best_value = -1.0;
  const std::uint64_t n_strategies = std::uint64_t{1} << bits;
  for (std::uint64_t s = 0; s < n_strategies; ++s) {
    long long count = 0;
    double value = 0.0;
    for (const auto& rb : rounds) {
      int product = 1;
      for (const int shift : rb.shift) {
        if ((s >> shift) & 1u) product = -product;
      }
      if (product != rb.required) continue;
      ++count;
      value += rb.weight;
    }
    const bool better = uniform ? (count > best_count) : (value > best_value);
    if (better) {
      best_count = count;
      best_value = value;
      best_s = s;
    }
  }

  ClassicalResult result;
  result.exact = uniform;
  if (uniform) {
    const long long den = static_cast<long long>(game.rounds.size());
    const long long g = std::gcd(best_count, den);
    result.num = best_count / g;
    result.den = den / g;
    result.probability = static_cast<double>(result.num) / static_cast<double>(result.den);
  } else {
    result.num = 0;
    result.den = 0;
    result.probability = best_value;
  }
  result.strategy.answers.resize(static_cast<size_t>(game.n_players));
  for (int p = 0; p < game.n_players; ++p) {
    for (int i = 0; i < n_labels; ++i) {
      const int shift = bits - 1 - (p * n_labels + i);
      const int answer = ((best_s >> shift) & 1u) ? -1 : +1;
      result.strategy.answers[static_cast<size_t>(p)][labels[static_cast<size_t>(i)]] = answer;
    }
  }
  return result;
}

double closed_form_ghz_win(double theta) { return 0.5 * (1.0 + std::sin(2.0 * theta)); }

double closed_form_w_win(double a, double b, double c) {
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw Error(Errc::invalid_argument, "amplitudes must be real and nonnegative");
  }
  if (std::abs(a * a + b * b + c * c - 1.0) > 1e-9) {
    throw Error(Errc::not_normalized, "amplitudes must satisfy a^2+b^2+c^2 = 1");
  }
  return 0.25 * (2.5 + a * b + b * c + c * a);
}

double closed_form_wn_win(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  const double dn = static_cast<double>(n);
  const double root_n = std::sqrt(dn);
  const double root_n1 = std::sqrt(dn + 1.0);
  return (5.0 + 5.0 * dn + root_n1 + root_n * (root_n1 + 1.0)) / (8.0 * (dn + 1.0));
}

GameSpec rules_w_b0() { return two_question_rules("XX", +1, "ZZ", -1); }
GameSpec rules_w_b1() { return two_question_rules("XX", -1, "ZZ", +1); }
GameSpec rules_ghz_b0() { return two_question_rules("XX", -1, "YY", +1); }
GameSpec rules_ghz_b1() { return two_question_rules("XX", +1, "YY", -1); }

GameSpec rules_4q_b0() {
  GameSpec g;
  g.n_players = 3;
  g.rounds = {{"XXX", +1, 0.25}, {"XYY", -1, 0.25}, {"YXY", -1, 0.25}, {"YYX", -1, 0.25}};
  return g;
}

GameSpec rules_4q_b1() { return negate_products(rules_4q_b0()); }

double rulemaker_win_probability(const DensityMatrix& rho, int ruler_qubit,
                                 const MeasurementBasis& ruler_basis,
                                 const GameSpec& rule_b0, const GameSpec& rule_b1) {
  const int n = rho.num_qubits();
  if (ruler_qubit < 0 || ruler_qubit >= n) {
    throw Error(Errc::invalid_argument, "ruler qubit out of range");
  }
  std::vector<int> keep;
  for (int q = 0; q < n; ++q) {
    if (q != ruler_qubit) keep.push_back(q);
  }
  double total = 0.0;
  for (int o = 0; o < 2; ++o) {
    std::optional<Projection> projection;
    try {
      projection = project_qubit(rho, ruler_qubit, ruler_basis, o);
    } catch (const Error& e) {
      if (e.code() == Errc::zero_probability) continue;
      throw;
    }
    const DensityMatrix residual = partial_trace(projection->post, keep);
    const GameSpec& rule = (o == 0) ? rule_b0 : rule_b1;
    total += projection->probability * quantum_win_probability(residual, rule);
  }
  return total;
}

double rulemaker_win_probability(const RuleMakerSpec& spec) {
  return rulemaker_win_probability(spec.shared_state.to_density(), spec.ruler_qubit,
                                   spec.ruler_basis, spec.rule_b0, spec.rule_b1);
}

RuleMakerSpec rulemaker_w_spec(double lambda) {
  const double r = 1.0 / std::sqrt(3.0);
  return {make_w_general(r, r, r), 2, MeasurementBasis::param(lambda), rules_w_b0(),
          rules_w_b1()};
}

RuleMakerSpec rulemaker_ghz_spec(double lambda) {
  return {make_ghz_general(std::numbers::pi / 4.0, 3, +1), 2, MeasurementBasis::param(lambda),
          rules_ghz_b0(), rules_ghz_b1()};
}

double closed_form_rulemaker_w(double lambda) {
  const double c = std::cos(lambda);
  return 11.0 / 12.0 - (5.0 / 6.0) * c * c;
}

double closed_form_rulemaker_ghz(double lambda) { return 0.5 * (1.0 + std::sin(2.0 * lambda)); }

double rulemaker_4qubit_game(double lambda) {
  const RuleMakerSpec spec{make_ghz_general(std::numbers::pi / 4.0, 4, -1), 3,
                           MeasurementBasis::param(lambda), rules_4q_b0(), rules_4q_b1()};
  return rulemaker_win_probability(spec);
}

}  // namespace vaidman
