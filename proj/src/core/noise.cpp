#include "core/noise.hpp"

#include <cmath>
#include <numbers>

#include "core/format.hpp"
#include "core/games.hpp"

namespace vaidman {

namespace {

void check_strength(double strength) {
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw Error(Errc::invalid_argument, "channel strength must lie in [0, 1]");
  }
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

RuleMakerSpec noisy_game_spec(ResourceState state) {
  return state == ResourceState::W ? rulemaker_w_spec(std::numbers::pi / 2.0)
                                   : rulemaker_ghz_spec(std::numbers::pi / 4.0);
}

double rulemaker_win_with_noise(ResourceState state, const NoiseChannel& ch1,
                                const NoiseChannel& ch2) {
  const RuleMakerSpec spec = noisy_game_spec(state);
  DensityMatrix rho = spec.shared_state.to_density();
  rho = apply_channel(rho, 0, ch1);
  rho = apply_channel(rho, 1, ch2);
  return rulemaker_win_probability(rho, spec.ruler_qubit, spec.ruler_basis, spec.rule_b0,
                                   spec.rule_b1);
}

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseFlip: return "phase_flip";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude_damping";
  }
  throw Error(Errc::invalid_argument, "invalid channel kind");
}

std::string to_string(ResourceState state) {
  return state == ResourceState::W ? "W" : "GHZ";
}

ChannelKind channel_from_string(const std::string& name) {
  if (name == "phase_flip") return ChannelKind::PhaseFlip;
  if (name == "depolarizing") return ChannelKind::Depolarizing;
  if (name == "amplitude_damping") return ChannelKind::AmplitudeDamping;
  throw Error(Errc::unknown_name, "unknown channel '" + name + "'");
}

ResourceState resource_from_string(const std::string& name) {
  if (name == "W" || name == "w") return ResourceState::W;
  if (name == "GHZ" || name == "ghz") return ResourceState::GHZ;
  throw Error(Errc::unknown_name, "unknown resource state '" + name + "'");
}

NoiseChannel channel_kraus(ChannelKind kind, double strength) {
  check_strength(strength);
  NoiseChannel ch{kind, strength, {}};
  const Mat2 id = Mat2::Identity();
  switch (kind) {
    case ChannelKind::PhaseFlip:
      ch.kraus = {std::sqrt(1.0 - strength) * id, std::sqrt(strength) * pauli_z()};
      break;
    case ChannelKind::Depolarizing:
      // Kraus form of the affine rule rho -> D*I/2 + (1-D)*rho
      ch.kraus = {std::sqrt(1.0 - 0.75 * strength) * id,
                  std::sqrt(strength / 4.0) * pauli_x(),
                  std::sqrt(strength / 4.0) * pauli_y(),
                  std::sqrt(strength / 4.0) * pauli_z()};
      break;
    case ChannelKind::AmplitudeDamping: {
      Mat2 e0, e1;
      e0 << 1, 0, 0, std::sqrt(1.0 - strength);
      e1 << 0, std::sqrt(strength), 0, 0;
      ch.kraus = {e0, e1};
      break;
    }
  }
  return ch;
}

NoiseChannel pauli_twirl_channel(double strength) {
  check_strength(strength);
  NoiseChannel ch{ChannelKind::Depolarizing, strength, {}};
  ch.kraus = {std::sqrt(1.0 - strength) * Mat2::Identity(),
              std::sqrt(strength / 3.0) * pauli_x(), std::sqrt(strength / 3.0) * pauli_y(),
              std::sqrt(strength / 3.0) * pauli_z()};
  return ch;
}

DensityMatrix apply_channel(const DensityMatrix& rho, int qubit, const NoiseChannel& ch) {
  const int n = rho.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw Error(Errc::invalid_argument, "qubit index out of range");
  }
  Mat out = Mat::Zero(rho.mat().rows(), rho.mat().cols());
  for (const Mat2& e : ch.kraus) {
    const Mat full = embed_on_qubit(e, n, qubit);
    out += full * rho.mat() * full.adjoint();
  }
  out = ((out + out.adjoint()) / 2.0).eval();
  return DensityMatrix(n, out);
}

double noisy_rulemaker_win(ResourceState state, ChannelKind kind, double d1, double d2) {
  return rulemaker_win_with_noise(state, channel_kraus(kind, d1), channel_kraus(kind, d2));
}

double noisy_rulemaker_win_twirl(ResourceState state, double d1, double d2) {
  return rulemaker_win_with_noise(state, pauli_twirl_channel(d1), pauli_twirl_channel(d2));
}

double closed_form_noisy(ResourceState state, ChannelKind kind, double d1, double d2) {
  check_strength(d1);
  check_strength(d2);
  const double s = d1 + d2;
  const double q = d1 * d2;
  const double root = std::sqrt((1.0 - d1) * (1.0 - d2));
  if (state == ResourceState::W) {
    switch (kind) {
      case ChannelKind::PhaseFlip: return 11.0 / 12.0 - s / 3.0 + (2.0 / 3.0) * q;
      case ChannelKind::Depolarizing: return 11.0 / 12.0 - (11.0 / 24.0) * s + (11.0 / 48.0) * q;
      case ChannelKind::AmplitudeDamping: return 0.75 - s / 6.0 + root / 6.0;
    }
  } else {
    switch (kind) {
      case ChannelKind::PhaseFlip: return 1.0 - s + 2.0 * q;
      case ChannelKind::Depolarizing: return 1.0 - 0.75 * s + 0.75 * q;
      case ChannelKind::AmplitudeDamping: return 0.5 + 0.5 * root;
    }
  }
  throw Error(Errc::invalid_argument, "invalid channel kind");
}

std::vector<NoiseCheck> verify_noise_formulas(int grid_size) {
  if (grid_size < 2) {
    throw Error(Errc::invalid_argument, "grid size must be at least 2");
  }
  const auto lattice_value = [grid_size](int i) {
    return static_cast<double>(i) / static_cast<double>(grid_size - 1);
  };
  std::vector<NoiseCheck> checks;
  for (const ResourceState state : {ResourceState::W, ResourceState::GHZ}) {
    for (const ChannelKind kind :
         {ChannelKind::PhaseFlip, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
      const int n_variants = (kind == ChannelKind::Depolarizing) ? 2 : 1;
      for (int variant = 0; variant < n_variants; ++variant) {
        const bool twirl = variant == 1;
        NoiseCheck check{state, kind, twirl, 0.0, 0.0, 0.0, false};
        for (int i = 0; i < grid_size; ++i) {
          for (int j = 0; j < grid_size; ++j) {
            const double d1 = lattice_value(i);
            const double d2 = lattice_value(j);
            const double simulated = twirl ? noisy_rulemaker_win_twirl(state, d1, d2)
                                           : noisy_rulemaker_win(state, kind, d1, d2);
            const double dev = std::abs(simulated - closed_form_noisy(state, kind, d1, d2));
            if (dev > check.max_dev) {
              check.max_dev = dev;
              check.arg_d1 = d1;
              check.arg_d2 = d2;
            }
          }
        }
        check.flagged = check.max_dev > 1e-6;
        checks.push_back(check);
      }
    }
  }
  return checks;
}

std::string noise_report_csv(int grid_size) {
  if (grid_size < 2) {
    throw Error(Errc::invalid_argument, "grid size must be at least 2");
  }
  std::string out = "state,channel,D1,D2,simulated,closed_form,abs_dev\n";
  for (const ResourceState state : {ResourceState::W, ResourceState::GHZ}) {
    for (const ChannelKind kind :
         {ChannelKind::PhaseFlip, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
      for (int i = 0; i < grid_size; ++i) {
        for (int j = 0; j < grid_size; ++j) {
          const double d1 = static_cast<double>(i) / static_cast<double>(grid_size - 1);
          const double d2 = static_cast<double>(j) / static_cast<double>(grid_size - 1);
          const double simulated = noisy_rulemaker_win(state, kind, d1, d2);
          const double closed = closed_form_noisy(state, kind, d1, d2);
          out += to_string(state) + ',' + to_string(kind) + ',' + g12(d1) + ',' + g12(d2) +
                 ',' + g12(simulated) + ',' + g12(closed) + ',' +
                 g12(std::abs(simulated - closed)) + '\n';
        }
      }
    }
  }
  return out;
}

}  // namespace vaidman
