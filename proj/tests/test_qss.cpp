#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/qss.hpp"
#include "core/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

using namespace vaidman;

namespace {

bool throws_with(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

int control_product(char basis) { return basis == 'X' ? -1 : +1; }

SessionConfig facilitated_config(ResourceState state, std::uint64_t rounds,
                                 std::uint64_t seed) {
  SessionConfig config;
  config.state_kind = state;
  config.rounds = rounds;
  config.seed = seed;
  return config;
}

}  // namespace

TEST_CASE("basic sessions sift half the rounds and infer every Alice bit") {
  std::vector<RoundRecord> records;
  const SessionResult result = run_basic_qss(20000, 7, &records);

  CHECK(result.rounds == 20000);
  CHECK(records.size() == 20000);
  CHECK(result.sifted_fraction > 0.46);
  CHECK(result.sifted_fraction < 0.54);
  CHECK(result.message_rounds == result.sifted_rounds);
  CHECK(result.control_rounds == 0);
  CHECK(result.compliance_rate == 1.0);
  CHECK_FALSE(result.cheating_suspected);
  CHECK(result.inference_agreement == 1.0);
  CHECK(result.key_bits.size() == result.sifted_rounds);

  SUBCASE("key bits are roughly balanced") {
    const auto zeros = static_cast<double>(
        std::count(result.key_bits.begin(), result.key_bits.end(), '0'));
    const double fraction = zeros / static_cast<double>(result.key_bits.size());
    CHECK(fraction > 0.45);
    CHECK(fraction < 0.55);
  }

  SUBCASE("records carry the deterministic three-party correlation") {
    std::uint64_t accepted = 0;
    for (const RoundRecord& rec : records) {
      if (rec.mode == RoundMode::Discarded) {
        CHECK(rec.alice_out == 0);
        continue;
      }
      ++accepted;
      const std::string bases = {rec.alice_basis, rec.bob_basis, rec.charlie_basis};
      const int y_count = static_cast<int>(std::count(bases.begin(), bases.end(), 'Y'));
      CHECK((y_count == 0 || y_count == 2));
      const int target = y_count == 0 ? +1 : -1;
      CHECK(rec.alice_out * rec.bob_out * rec.charlie_out == target);
      CHECK(infer_alice_outcome(bases, rec.bob_out, rec.charlie_out) == rec.alice_out);
      CHECK(rec.key_bit == (rec.alice_out > 0 ? 0 : 1));
    }
    CHECK(accepted == result.sifted_rounds);
  }
}

TEST_CASE("basic sessions are reproducible and seed-sensitive") {
  std::vector<RoundRecord> first, second, other;
  const SessionResult a = run_basic_qss(500, 99, &first);
  const SessionResult b = run_basic_qss(500, 99, &second);
  const SessionResult c = run_basic_qss(500, 100, &other);

  CHECK(a.key_bits == b.key_bits);
  CHECK(transcript_csv(first, true) == transcript_csv(second, true));
  CHECK(a.key_bits != c.key_bits);

  SUBCASE("per-round seeding makes prefixes agree across session lengths") {
    std::vector<RoundRecord> longer;
    run_basic_qss(800, 99, &longer);
    for (size_t i = 0; i < first.size(); ++i) {
      CHECK(longer[i].alice_basis == first[i].alice_basis);
      CHECK(longer[i].alice_out == first[i].alice_out);
    }
  }
}

TEST_CASE("alice-bit inference validates its inputs") {
  CHECK(infer_alice_outcome("XXX", +1, -1) == -1);
  CHECK(infer_alice_outcome("XYY", +1, -1) == +1);
  CHECK(infer_alice_outcome("YXY", -1, -1) == -1);
  CHECK(infer_alice_outcome("YYX", +1, +1) == -1);
  CHECK(throws_with(Errc::invalid_argument, [] { infer_alice_outcome("XXY", 1, 1); }));
  CHECK(throws_with(Errc::invalid_argument, [] { infer_alice_outcome("XZZ", 1, 1); }));
  CHECK(throws_with(Errc::invalid_argument, [] { infer_alice_outcome("XXX", 0, 1); }));
}

TEST_CASE("sessions need at least one round") {
  CHECK(throws_with(Errc::invalid_argument, [] { run_basic_qss(0, 1); }));
  CHECK(throws_with(Errc::invalid_argument,
                    [] { run_facilitated(facilitated_config(ResourceState::W, 0, 1)); }));
}

TEST_CASE("honest facilitated W sessions pass the compliance test") {
  std::vector<RoundRecord> records;
  const SessionResult result =
      run_facilitated(facilitated_config(ResourceState::W, 30000, 11), &records);

  CHECK(result.rounds == 30000);
  CHECK(result.sifted_fraction > 0.46);
  CHECK(result.sifted_fraction < 0.54);
  CHECK_FALSE(result.cheating_suspected);
  CHECK(result.compliance_rate > 0.70);
  CHECK(result.compliance_rate < 0.80);
  CHECK(result.inference_agreement == 1.0);
  CHECK(result.key_bits.size() == result.message_rounds);

  SUBCASE("message mode is chosen about two thirds of the time") {
    const double message_fraction = static_cast<double>(result.message_rounds) /
                                    static_cast<double>(result.sifted_rounds);
    CHECK(message_fraction > 0.64);
    CHECK(message_fraction < 0.69);
  }

  SUBCASE("message rounds obey the exact parity rule") {
    std::uint64_t seen = 0;
    for (const RoundRecord& rec : records) {
      if (rec.mode != RoundMode::Message) continue;
      ++seen;
      CHECK(rec.alice_basis == rec.bob_basis);
      CHECK(rec.alice_out * rec.bob_out == -control_product(rec.alice_basis));
      CHECK(rec.key_bit == (rec.alice_out > 0 ? 0 : 1));
    }
    CHECK(seen == result.message_rounds);
  }

  SUBCASE("extracting the key from the transcript matches the session result") {
    CHECK(extract_key(records, ResourceState::W) == result.key_bits);
  }
}

TEST_CASE("honest facilitated GHZ sessions comply exactly") {
  std::vector<RoundRecord> records;
  const SessionResult result =
      run_facilitated(facilitated_config(ResourceState::GHZ, 5000, 3), &records);

  CHECK(result.compliance_rate == 1.0);
  CHECK_FALSE(result.cheating_suspected);
  CHECK(result.key_bits.size() == result.message_rounds);
  for (const RoundRecord& rec : records) {
    if (rec.mode == RoundMode::Control && rec.alice_out != 0) {
      CHECK(rec.alice_out * rec.bob_out == control_product(rec.alice_basis));
    }
  }
}

TEST_CASE("facilitated sessions are reproducible") {
  std::vector<RoundRecord> first, second;
  const SessionResult a =
      run_facilitated(facilitated_config(ResourceState::W, 2000, 17), &first);
  const SessionResult b =
      run_facilitated(facilitated_config(ResourceState::W, 2000, 17), &second);
  CHECK(a.key_bits == b.key_bits);
  CHECK(transcript_csv(first, false) == transcript_csv(second, false));
}

TEST_CASE("cheating announcers are caught") {
  SUBCASE("flipping every announced outcome tanks W compliance") {
    SessionConfig config = facilitated_config(ResourceState::W, 20000, 23);
    config.cheat = CheatModel::FlipAnnouncer;
    const SessionResult result = run_facilitated(config);
    CHECK(result.compliance_rate > 0.20);
    CHECK(result.compliance_rate < 0.30);
    CHECK(result.cheating_suspected);
    CHECK(result.key_bits.empty());
  }

  SUBCASE("random announcements sit near one half") {
    SessionConfig config = facilitated_config(ResourceState::W, 20000, 29);
    config.cheat = CheatModel::RandomAnnouncer;
    config.cheater = Party::Alice;
    const SessionResult result = run_facilitated(config);
    CHECK(result.compliance_rate > 0.45);
    CHECK(result.compliance_rate < 0.55);
    CHECK(result.cheating_suspected);
  }

  SUBCASE("any corrupted control round breaks exact GHZ compliance") {
    for (CheatModel cheat : {CheatModel::FlipAnnouncer, CheatModel::RandomAnnouncer}) {
      SessionConfig config = facilitated_config(ResourceState::GHZ, 2000, 31);
      config.cheat = cheat;
      const SessionResult result = run_facilitated(config);
      CHECK(result.compliance_rate < 1.0);
      CHECK(result.cheating_suspected);
      CHECK(result.key_bits.empty());
    }
  }
}

TEST_CASE("charlie can spot-check only part of the control rounds") {
  SessionConfig full = facilitated_config(ResourceState::W, 20000, 41);
  SessionConfig half = full;
  half.control_check_rate = 0.5;

  const SessionResult all_checked = run_facilitated(full);
  const SessionResult spot_checked = run_facilitated(half);

  CHECK(spot_checked.control_rounds < all_checked.control_rounds);
  CHECK(static_cast<double>(spot_checked.control_rounds) >
        0.4 * static_cast<double>(all_checked.control_rounds));
  CHECK(static_cast<double>(spot_checked.control_rounds) <
        0.6 * static_cast<double>(all_checked.control_rounds));
  CHECK_FALSE(spot_checked.cheating_suspected);
  CHECK(spot_checked.compliance_rate > 0.70);
  CHECK(spot_checked.compliance_rate < 0.80);

  SUBCASE("check rate outside [0, 1] is rejected") {
    SessionConfig bad = full;
    bad.control_check_rate = 1.5;
    CHECK(throws_with(Errc::invalid_argument, [&] { run_facilitated(bad); }));
  }
}

TEST_CASE("key extraction rejects tampered transcripts") {
  std::vector<RoundRecord> records;
  run_facilitated(facilitated_config(ResourceState::W, 4000, 53), &records);

  SUBCASE("a flipped message outcome breaks key agreement") {
    std::vector<RoundRecord> tampered = records;
    for (RoundRecord& rec : tampered) {
      if (rec.mode == RoundMode::Message) {
        rec.bob_out = -rec.bob_out;
        break;
      }
    }
    CHECK(throws_with(Errc::invalid_argument,
                      [&] { extract_key(tampered, ResourceState::W); }));
  }

  SUBCASE("a cheated session is rejected outright") {
    SessionConfig config = facilitated_config(ResourceState::W, 4000, 59);
    config.cheat = CheatModel::FlipAnnouncer;
    std::vector<RoundRecord> cheated;
    run_facilitated(config, &cheated);
    CHECK(throws_with(Errc::session_rejected,
                      [&] { extract_key(cheated, ResourceState::W); }));
  }

  SUBCASE("an empty transcript yields an empty key") {
    CHECK(extract_key({}, ResourceState::W).empty());
  }
}

TEST_CASE("transcripts serialize with stable headers and sign cells") {
  std::vector<RoundRecord> basic;
  run_basic_qss(50, 5, &basic);
  const std::string basic_csv = transcript_csv(basic, true);
  CHECK(basic_csv.rfind(
            "round,mode,aliceBasis,bobBasis,charlieBasis,aliceOut,bobOut,charlieOut,keyBit\n",
            0) == 0);
  CHECK(static_cast<size_t>(std::count(basic_csv.begin(), basic_csv.end(), '\n')) ==
        basic.size() + 1);

  std::vector<RoundRecord> fac;
  run_facilitated(facilitated_config(ResourceState::GHZ, 50, 5), &fac);
  const std::string fac_csv = transcript_csv(fac, false);
  CHECK(fac_csv.rfind("round,mode,aliceBasis,bobBasis,charlieOutcome,aliceOut,bobOut,keyBit\n",
                      0) == 0);
  CHECK(fac_csv.find("message") != std::string::npos);
  CHECK(fac_csv.find("b0") != std::string::npos);
  CHECK(fac_csv.find("+1") != std::string::npos);
  CHECK(fac_csv.find("-1") != std::string::npos);
}

TEST_CASE("session summaries render every statistic") {
  const SessionResult result = run_basic_qss(400, 13);
  const std::string text = qss_summary_text("basic", result);
  CHECK(text.find("protocol: basic\n") != std::string::npos);
  CHECK(text.find("rounds: 400\n") != std::string::npos);
  CHECK(text.find("verdict: Accepted\n") != std::string::npos);
  CHECK(text.find("key_length: " + std::to_string(result.key_bits.size()) + "\n") !=
        std::string::npos);
  CHECK(text.find("inference_agreement: 1\n") != std::string::npos);
}
