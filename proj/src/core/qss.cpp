#include "core/qss.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "core/rng.hpp"

namespace vaidman {

namespace {

// Joint outcomes with probability below this are fp slivers of exact zeros
// (e.g. cos(pi/2)^2 ~ 4e-33); dropping them keeps the protocol's deterministic
// correlations exact. Real atoms in these tables are never below 1/12.
constexpr double kAtomCut = 1e-30;

struct Atom {
  double cum;
  int a, b, c;  // per-party outcome indices
};

std::vector<Atom> outcome_table(const PureState& psi,
                                const std::vector<MeasurementBasis>& bases) {
  std::vector<Atom> atoms;
  double total = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const double p = outcome_probability(psi, bases, {a, b, c});
        if (p < kAtomCut) continue;
        total += p;
        atoms.push_back({total, a, b, c});
      }
    }
  }
  for (auto& atom : atoms) atom.cum /= total;
  atoms.back().cum = 1.0;
  return atoms;
}

const Atom& draw(const std::vector<Atom>& table, double u) {
  for (const auto& atom : table) {
    if (u < atom.cum) return atom;
  }
  return table.back();
}

bool basic_accepted(int a, int b, int c) {
  const int y_count = a + b + c;
  return y_count == 0 || y_count == 2;
}

// the X question demands product -1 in control mode and +1 in message mode,
// the companion question (Z for W, Y for GHZ) the opposite
int control_required_product(char basis) { return basis == 'X' ? -1 : +1; }

struct Protocol {
  PureState state;
  MeasurementBasis ruler;
  std::array<char, 2> letters;
  int message_ruler;  // ruler outcome index that routes to message mode
};

Protocol facilitated_protocol(ResourceState kind) {
  if (kind == ResourceState::W) {
    const double r = 1.0 / std::sqrt(3.0);
    // ruler b0 = |0>, the message outcome
    return {make_w_general(r, r, r), MeasurementBasis::param(std::numbers::pi / 2.0),
            {'X', 'Z'}, 0};
  }
  // ruler b0 = |->, the control outcome; b1 = |+> carries the message
  return {make_ghz_general(std::numbers::pi / 4.0, 3, +1),
          MeasurementBasis::param(std::numbers::pi / 4.0),
          {'X', 'Y'},
          1};
}

bool verdict_suspected(ResourceState kind, double compliance, std::uint64_t checked) {
  if (checked == 0) return false;
  if (kind == ResourceState::GHZ) {
    return compliance < SessionConfig::kComplianceThresholdGHZ;
  }
  // Honest W compliance is Binomial(n, 3/4)/n, so a strict cut at 3/4 would
  // flag about half of all honest sessions; allow a three-sigma margin.
  const double allowance = 3.0 * std::sqrt(0.75 * 0.25 / static_cast<double>(checked));
  return compliance < SessionConfig::kComplianceThresholdW - allowance;
}

int outcome_bit(int outcome_sign_value) { return outcome_sign_value > 0 ? 0 : 1; }

// Bob's key derivation: questions demanding product -1 anti-correlate the
// outcomes, so he flips his bit there
int bob_key_bit(char basis, int bob_out) {
  const int bit = outcome_bit(bob_out);
  return basis == 'X' ? bit : 1 - bit;
}

}  // namespace

int infer_alice_outcome(const std::string& bases, int bob_outcome, int charlie_outcome) {
  static const std::array<std::string, 4> accepted = {"XXX", "XYY", "YXY", "YYX"};
  if (std::find(accepted.begin(), accepted.end(), bases) == accepted.end()) {
    throw Error(Errc::invalid_argument, "basis triple '" + bases + "' is not accepted");
  }
  if ((bob_outcome != 1 && bob_outcome != -1) ||
      (charlie_outcome != 1 && charlie_outcome != -1)) {
    throw Error(Errc::invalid_argument, "outcomes must be +1 or -1");
  }
  const int target = bases == "XXX" ? +1 : -1;
  return target * bob_outcome * charlie_outcome;
}

SessionResult run_basic_qss(std::uint64_t rounds, std::uint64_t seed,
                            std::vector<RoundRecord>* transcript) {
  if (rounds < 1) {
    throw Error(Errc::invalid_argument, "session needs at least one round");
  }
  const PureState ghz = make_ghz_general(std::numbers::pi / 4.0, 3, +1);
  const char letters[2] = {'X', 'Y'};
  std::array<std::vector<Atom>, 8> tables;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        if (!basic_accepted(a, b, c)) continue;
        const std::vector<MeasurementBasis> bases = {
            MeasurementBasis::from_letter(letters[a]),
            MeasurementBasis::from_letter(letters[b]),
            MeasurementBasis::from_letter(letters[c])};
        tables[(a << 2) | (b << 1) | c] = outcome_table(ghz, bases);
      }
    }
  }

  SessionResult result;
  result.rounds = rounds;
  std::uint64_t agree = 0;
  for (std::uint64_t round = 0; round < rounds; ++round) {
    SplitMix64 rng = round_stream(seed, round);
    const int ab = rng.pick(2);
    const int bb = rng.pick(2);
    const int cb = rng.pick(2);
    RoundRecord rec;
    rec.round = round;
    rec.alice_basis = letters[ab];
    rec.bob_basis = letters[bb];
    rec.charlie_basis = letters[cb];
    if (!basic_accepted(ab, bb, cb)) {
      rec.mode = RoundMode::Discarded;
      if (transcript) transcript->push_back(rec);
      continue;
    }
    const Atom& atom = draw(tables[(ab << 2) | (bb << 1) | cb], rng.uniform());
    rec.mode = RoundMode::Message;
    rec.alice_out = outcome_sign(atom.a);
    rec.bob_out = outcome_sign(atom.b);
    rec.charlie_out = outcome_sign(atom.c);
    const std::string bases{rec.alice_basis, rec.bob_basis, rec.charlie_basis};
    if (infer_alice_outcome(bases, rec.bob_out, rec.charlie_out) == rec.alice_out) ++agree;
    rec.key_bit = outcome_bit(rec.alice_out);
    result.key_bits.push_back(static_cast<char>('0' + rec.key_bit));
    ++result.sifted_rounds;
    if (transcript) transcript->push_back(rec);
  }
  result.message_rounds = result.sifted_rounds;
  result.control_rounds = 0;
  result.sifted_fraction =
      static_cast<double>(result.sifted_rounds) / static_cast<double>(rounds);
  result.inference_agreement =
      result.sifted_rounds > 0
          ? static_cast<double>(agree) / static_cast<double>(result.sifted_rounds)
          : 1.0;
  return result;
}

SessionResult run_facilitated(const SessionConfig& config,
                              std::vector<RoundRecord>* transcript) {
  if (config.rounds < 1) {
    throw Error(Errc::invalid_argument, "session needs at least one round");
  }
  if (!(config.control_check_rate >= 0.0 && config.control_check_rate <= 1.0)) {
    throw Error(Errc::invalid_argument, "control check rate must lie in [0, 1]");
  }
  const Protocol proto = facilitated_protocol(config.state_kind);
  std::array<std::vector<Atom>, 2> tables;
  for (int b = 0; b < 2; ++b) {
    const MeasurementBasis basis = MeasurementBasis::from_letter(proto.letters[b]);
    tables[b] = outcome_table(proto.state, {basis, basis, proto.ruler});
  }

  std::vector<RoundRecord> records;
  records.reserve(config.rounds);
  for (std::uint64_t round = 0; round < config.rounds; ++round) {
    SplitMix64 rng = round_stream(config.seed, round);
    const int ab = rng.pick(2);
    const int bb = rng.pick(2);
    RoundRecord rec;
    rec.round = round;
    rec.alice_basis = proto.letters[ab];
    rec.bob_basis = proto.letters[bb];
    if (ab != bb) {
      rec.mode = RoundMode::Discarded;
      records.push_back(rec);
      continue;
    }
    const Atom& atom = draw(tables[ab], rng.uniform());
    rec.ruler_outcome = atom.c;
    if (atom.c == proto.message_ruler) {
      rec.mode = RoundMode::Message;
      rec.alice_out = outcome_sign(atom.a);
      rec.bob_out = outcome_sign(atom.b);
      rec.key_bit = outcome_bit(rec.alice_out);
    } else {
      rec.mode = RoundMode::Control;
      const bool checked = config.control_check_rate >= 1.0
                               ? true
                               : rng.uniform() < config.control_check_rate;
      if (checked) {
        int announce_alice = outcome_sign(atom.a);
        int announce_bob = outcome_sign(atom.b);
        int& corrupted = config.cheater == Party::Alice ? announce_alice : announce_bob;
        switch (config.cheat) {
          case CheatModel::Honest: break;
          case CheatModel::RandomAnnouncer: corrupted = rng.sign(); break;
          case CheatModel::FlipAnnouncer: corrupted = -corrupted; break;
        }
        rec.alice_out = announce_alice;
        rec.bob_out = announce_bob;
      }
    }
    records.push_back(rec);
  }

  SessionResult result;
  result.rounds = config.rounds;
  std::uint64_t checked = 0, compliant = 0, key_agree = 0;
  for (const auto& rec : records) {
    if (rec.mode == RoundMode::Discarded) continue;
    ++result.sifted_rounds;
    if (rec.mode == RoundMode::Message) {
      ++result.message_rounds;
      if (bob_key_bit(rec.alice_basis, rec.bob_out) == rec.key_bit) ++key_agree;
    } else if (rec.alice_out != 0) {
      ++checked;
      if (rec.alice_out * rec.bob_out == control_required_product(rec.alice_basis)) {
        ++compliant;
      }
    }
  }
  result.control_rounds = checked;
  result.sifted_fraction =
      static_cast<double>(result.sifted_rounds) / static_cast<double>(config.rounds);
  result.compliance_rate =
      checked > 0 ? static_cast<double>(compliant) / static_cast<double>(checked) : 1.0;
  result.cheating_suspected =
      verdict_suspected(config.state_kind, result.compliance_rate, checked);
  result.inference_agreement =
      result.message_rounds > 0
          ? static_cast<double>(key_agree) / static_cast<double>(result.message_rounds)
          : 1.0;
  if (!result.cheating_suspected) {
    result.key_bits = extract_key(records, config.state_kind);
  }
  if (transcript) *transcript = std::move(records);
  return result;
}

std::string extract_key(const std::vector<RoundRecord>& records, ResourceState state_kind) {
  std::uint64_t checked = 0, compliant = 0;
  for (const auto& rec : records) {
    if (rec.mode != RoundMode::Control || rec.alice_out == 0 || rec.bob_out == 0) continue;
    ++checked;
    if (rec.alice_out * rec.bob_out == control_required_product(rec.alice_basis)) {
      ++compliant;
    }
  }
  const double compliance =
      checked > 0 ? static_cast<double>(compliant) / static_cast<double>(checked) : 1.0;
  if (verdict_suspected(state_kind, compliance, checked)) {
    throw Error(Errc::session_rejected,
                "control-round compliance is below the acceptance threshold");
  }
  std::string alice_key, bob_key;
  for (const auto& rec : records) {
    if (rec.mode != RoundMode::Message || rec.alice_out == 0 || rec.bob_out == 0) continue;
    alice_key.push_back(static_cast<char>('0' + outcome_bit(rec.alice_out)));
    bob_key.push_back(static_cast<char>('0' + bob_key_bit(rec.alice_basis, rec.bob_out)));
  }
  if (alice_key != bob_key) {
    throw Error(Errc::invalid_argument, "Alice- and Bob-derived keys disagree");
  }
  return alice_key;
}

}  // namespace vaidman
