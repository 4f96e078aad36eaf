#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/noise.hpp"
#include "core/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

using namespace vaidman;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool kraus_complete(const std::vector<Mat2>& kraus) {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& e : kraus) sum += e.adjoint() * e;
  return (sum - Mat2::Identity()).norm() < 1e-12;
}

DensityMatrix plus_state() {
  Vec v(2);
  const double s = 1.0 / std::sqrt(2.0);
  v << s, s;
  return PureState(1, v).to_density();
}

DensityMatrix one_state() {
  Vec v(2);
  v << 0, 1;
  return PureState(1, v).to_density();
}

bool throws_with(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("channel and state names round-trip") {
  for (ChannelKind kind :
       {ChannelKind::PhaseFlip, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
    CHECK(channel_from_string(to_string(kind)) == kind);
  }
  for (ResourceState state : {ResourceState::W, ResourceState::GHZ}) {
    CHECK(resource_from_string(to_string(state)) == state);
  }
  CHECK(to_string(ChannelKind::PhaseFlip) == "phase_flip");
  CHECK(to_string(ResourceState::GHZ) == "GHZ");
  CHECK(resource_from_string("ghz") == ResourceState::GHZ);
  CHECK(throws_with(Errc::unknown_name, [] { channel_from_string("thermal"); }));
  CHECK(throws_with(Errc::unknown_name, [] { resource_from_string("cluster"); }));
}

TEST_CASE("Kraus sets are trace preserving across the strength range") {
  for (double d : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::Depolarizing,
                             ChannelKind::AmplitudeDamping}) {
      CHECK(kraus_complete(channel_kraus(kind, d).kraus));
    }
    CHECK(kraus_complete(pauli_twirl_channel(d).kraus));
  }
  CHECK(throws_with(Errc::invalid_argument,
                    [] { channel_kraus(ChannelKind::PhaseFlip, -0.1); }));
  CHECK(throws_with(Errc::invalid_argument,
                    [] { channel_kraus(ChannelKind::Depolarizing, 1.1); }));
}

TEST_CASE("channels act as advertised on single qubits") {
  SUBCASE("zero strength is the identity") {
    for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::Depolarizing,
                             ChannelKind::AmplitudeDamping}) {
      const DensityMatrix out = apply_channel(plus_state(), 0, channel_kraus(kind, 0.0));
      CHECK((out.mat() - plus_state().mat()).norm() < 1e-12);
    }
  }

  SUBCASE("full phase flip conjugates by Z") {
    const DensityMatrix out =
        apply_channel(plus_state(), 0, channel_kraus(ChannelKind::PhaseFlip, 1.0));
    CHECK(out.mat()(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-12));
  }

  SUBCASE("half-strength phase flip kills the coherence term") {
    const DensityMatrix out =
        apply_channel(plus_state(), 0, channel_kraus(ChannelKind::PhaseFlip, 0.5));
    CHECK(std::abs(out.mat()(0, 1)) < 1e-12);
    CHECK(out.mat()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("full amplitude damping decays |1> to |0>") {
    const DensityMatrix out =
        apply_channel(one_state(), 0, channel_kraus(ChannelKind::AmplitudeDamping, 1.0));
    CHECK(out.mat()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("full depolarizing mixes to the identity") {
    const DensityMatrix out =
        apply_channel(plus_state(), 0, channel_kraus(ChannelKind::Depolarizing, 1.0));
    CHECK(out.mat()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(out.mat()(0, 1)) < 1e-12);
  }
}

TEST_CASE("channels preserve trace and positivity on entangled states") {
  const DensityMatrix rho = make_ghz_general(0.6, 3, +1).to_density();
  for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::Depolarizing,
                           ChannelKind::AmplitudeDamping}) {
    for (int qubit : {0, 1, 2}) {
      const DensityMatrix out = apply_channel(rho, qubit, channel_kraus(kind, 0.4));
      CHECK(std::abs(out.mat().trace() - 1.0) < 1e-12);
      CHECK((out.mat() - out.mat().adjoint()).norm() < 1e-12);
    }
  }
}

TEST_CASE("tabulated noisy-game formulas evaluate exactly") {
  const double s03 = 0.3 + 0.7, q03 = 0.3 * 0.7;
  CHECK(closed_form_noisy(ResourceState::GHZ, ChannelKind::PhaseFlip, 0.3, 0.7) ==
        doctest::Approx(1.0 - s03 + 2.0 * q03).epsilon(1e-15));
  CHECK(closed_form_noisy(ResourceState::GHZ, ChannelKind::PhaseFlip, 0.3, 0.7) ==
        doctest::Approx(0.42).epsilon(1e-15));
  CHECK(closed_form_noisy(ResourceState::W, ChannelKind::PhaseFlip, 0.0, 0.0) ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-15));
  CHECK(closed_form_noisy(ResourceState::W, ChannelKind::Depolarizing, 0.2, 0.5) ==
        doctest::Approx(0.61875).epsilon(1e-12));
  CHECK(closed_form_noisy(ResourceState::GHZ, ChannelKind::Depolarizing, 0.2, 0.5) ==
        doctest::Approx(0.55).epsilon(1e-12));
  CHECK(closed_form_noisy(ResourceState::W, ChannelKind::AmplitudeDamping, 1.0, 1.0) ==
        doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK(closed_form_noisy(ResourceState::GHZ, ChannelKind::AmplitudeDamping, 0.0, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("simulation reproduces the phase-flip and amplitude-damping formulas") {
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const double d1 = static_cast<double>(i) / 4.0;
      const double d2 = static_cast<double>(j) / 4.0;
      CAPTURE(d1);
      CAPTURE(d2);
      for (ResourceState state : {ResourceState::W, ResourceState::GHZ}) {
        CHECK(noisy_rulemaker_win(state, ChannelKind::PhaseFlip, d1, d2) ==
              doctest::Approx(closed_form_noisy(state, ChannelKind::PhaseFlip, d1, d2))
                  .epsilon(1e-9));
        CHECK(noisy_rulemaker_win(state, ChannelKind::AmplitudeDamping, d1, d2) ==
              doctest::Approx(closed_form_noisy(state, ChannelKind::AmplitudeDamping, d1, d2))
                  .epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("neither depolarizing convention reproduces the tabulated row") {
  double dev_affine = 0.0, dev_twirl = 0.0;
  for (ResourceState state : {ResourceState::W, ResourceState::GHZ}) {
    for (double d1 : {0.25, 0.5, 1.0}) {
      for (double d2 : {0.25, 0.5, 1.0}) {
        const double tabulated = closed_form_noisy(state, ChannelKind::Depolarizing, d1, d2);
        dev_affine = std::max(
            dev_affine,
            std::abs(noisy_rulemaker_win(state, ChannelKind::Depolarizing, d1, d2) -
                     tabulated));
        dev_twirl = std::max(
            dev_twirl, std::abs(noisy_rulemaker_win_twirl(state, d1, d2) - tabulated));
      }
    }
  }
  CHECK(dev_affine > 1e-3);
  CHECK(dev_twirl > 1e-3);
}

TEST_CASE("formula verification flags exactly the depolarizing rows") {
  const std::vector<NoiseCheck> checks = verify_noise_formulas(5);
  CHECK(checks.size() == 8);
  int flagged = 0;
  for (const NoiseCheck& c : checks) {
    CAPTURE(to_string(c.state));
    CAPTURE(to_string(c.kind));
    if (c.kind == ChannelKind::Depolarizing) {
      CHECK(c.flagged);
      ++flagged;
    } else {
      CHECK_FALSE(c.flagged);
      CHECK(c.max_dev < 1e-9);
      CHECK_FALSE(c.alternative_convention);
    }
  }
  CHECK(flagged == 4);
}

TEST_CASE("noise comparison table has one row per lattice point") {
  const std::string csv = noise_report_csv(3);
  CHECK(csv.rfind("state,channel,D1,D2,simulated,closed_form,abs_dev\n", 0) == 0);

  const size_t rows = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(rows == 1 + 2 * 3 * 9);

  CHECK(csv.find("W,phase_flip,0,0,0.916666666667,0.916666666667,") != std::string::npos);
  CHECK(csv.find("GHZ,amplitude_damping,1,1,0.5,0.5,") != std::string::npos);
}
