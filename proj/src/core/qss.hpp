#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/noise.hpp"
#include "core/qstate.hpp"

namespace vaidman {

enum class Party { Alice, Bob };

enum class CheatModel { Honest, RandomAnnouncer, FlipAnnouncer };

struct SessionConfig {
  std::uint64_t rounds = 0;
  ResourceState state_kind = ResourceState::W;
  CheatModel cheat = CheatModel::Honest;
  Party cheater = Party::Bob;
  std::uint64_t seed = 0;
  // fraction of control-mode rounds Charlie actually asks to verify
  double control_check_rate = 1.0;

  static constexpr double kComplianceThresholdW = 0.75;
  static constexpr double kComplianceThresholdGHZ = 1.0;
};

enum class RoundMode { Message, Control, Discarded };

// One protocol round. Control rounds store the ANNOUNCED outcomes (which a
// cheater may have corrupted); message rounds store the true local outcomes,
// which are never announced. Absent fields: outcomes 0, ruler/key -1,
// charlie_basis '\0' outside the basic protocol.
struct RoundRecord {
  std::uint64_t round = 0;
  RoundMode mode = RoundMode::Discarded;
  char alice_basis = '\0';
  char bob_basis = '\0';
  char charlie_basis = '\0';
  int alice_out = 0;
  int bob_out = 0;
  int charlie_out = 0;
  int ruler_outcome = -1;  // 0 = b0, 1 = b1
  int key_bit = -1;
};

struct SessionResult {
  std::string key_bits;
  double compliance_rate = 1.0;
  bool cheating_suspected = false;
  double sifted_fraction = 0.0;
  std::uint64_t rounds = 0;
  std::uint64_t sifted_rounds = 0;
  std::uint64_t message_rounds = 0;
  std::uint64_t control_rounds = 0;  // control rounds that were checked
  // basic: fraction of sifted rounds where the inferred Alice bit matches her
  // actual outcome; facilitated: fraction of message rounds where the
  // Alice-derived and Bob-derived key bits agree
  double inference_agreement = 1.0;
};

// Three-party protocol on the maximally entangled GHZ state: everyone
// measures X or Y at random, basis triples outside {XXX, XYY, YXY, YYX} are
// discarded, and Bob and Charlie jointly infer Alice's outcome.
SessionResult run_basic_qss(std::uint64_t rounds, std::uint64_t seed,
                            std::vector<RoundRecord>* transcript = nullptr);

// Alice's outcome from Bob's and Charlie's on an accepted basis triple: the
// three-outcome product is +1 for XXX and -1 for the two-Y triples.
int infer_alice_outcome(const std::string& bases, int bob_outcome, int charlie_outcome);

// Facilitated protocol: Charlie keeps the last qubit and measures it in
// Param(pi/2) for W or Param(pi/4) for GHZ; his outcome routes each round to
// message or control mode. Alice and Bob choose from {X, Z} (W) or {X, Y}
// (GHZ); mismatched choices are discarded.
SessionResult run_facilitated(const SessionConfig& config,
                              std::vector<RoundRecord>* transcript = nullptr);

// Rebuilds the shared key from message-mode records, verifying compliance
// first. Rejects sessions whose checked control rounds fall below the
// acceptance threshold, and requires the Alice- and Bob-derived strings to
// agree.
std::string extract_key(const std::vector<RoundRecord>& records, ResourceState state_kind);

}  // namespace vaidman
