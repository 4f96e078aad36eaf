#pragma once

#include <string>
#include <vector>

#include "core/qstate.hpp"

namespace vaidman {

enum class ChannelKind { PhaseFlip, Depolarizing, AmplitudeDamping };
enum class ResourceState { W, GHZ };

std::string to_string(ChannelKind kind);
std::string to_string(ResourceState state);
ChannelKind channel_from_string(const std::string& name);
ResourceState resource_from_string(const std::string& name);

struct NoiseChannel {
  ChannelKind kind;
  double strength;
  std::vector<Mat2> kraus;
};

// strength is the flip probability (PhaseFlip), the mixing probability of the
// affine rule rho -> D*I/2 + (1-D)*rho (Depolarizing), or gamma (AmplitudeDamping)
NoiseChannel channel_kraus(ChannelKind kind, double strength);

// alternative depolarizing convention rho -> (1-D)rho + (D/3)(XrX+YrY+ZrZ),
// probed by the verification harness only
NoiseChannel pauli_twirl_channel(double strength);

DensityMatrix apply_channel(const DensityMatrix& rho, int qubit, const NoiseChannel& ch);

// Rule-maker game with the ruler at the state's optimal basis angle and noise
// on the two player qubits: channel(d1) on qubit A, channel(d2) on qubit B.
double noisy_rulemaker_win(ResourceState state, ChannelKind kind, double d1, double d2);

// same game under the Pauli-twirl depolarizing convention
double noisy_rulemaker_win_twirl(ResourceState state, double d1, double d2);

// published closed forms for each state/channel pair, exact coefficients
double closed_form_noisy(ResourceState state, ChannelKind kind, double d1, double d2);

struct NoiseCheck {
  ResourceState state;
  ChannelKind kind;
  bool alternative_convention;  // Pauli-twirl depolarizing probe
  double max_dev;
  double arg_d1, arg_d2;  // lattice point attaining max_dev
  bool flagged;           // max_dev > 1e-6
};

// Compares simulation against every closed form on a grid x grid (D1, D2)
// lattice. Depolarizing is checked under both conventions.
std::vector<NoiseCheck> verify_noise_formulas(int grid_size);

// full comparison lattice, one row per (state, channel, D1, D2)
std::string noise_report_csv(int grid_size);

}  // namespace vaidman
