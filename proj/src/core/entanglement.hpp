#pragma once

#include "core/qstate.hpp"

namespace vaidman {

// Three-tangle of a 3-qubit pure state with focus qubit A, plus the three
// concurrences it is built from (reported unsquared):
//   tau = c_a_bc^2 - c_ab^2 - c_ac^2
struct TangleReport {
  double tau;
  double c_a_bc;
  double c_ab;
  double c_ac;
};

// |<psi| sigma_y x sigma_y |psi*>| for a 2-qubit pure state
double concurrence_pure_pair(const PureState& psi);

// Wootters concurrence max(0, l1-l2-l3-l4), li the descending square roots of
// the eigenvalues of rho (sy x sy) rho* (sy x sy)
double concurrence_mixed_pair(const DensityMatrix& rho);

// sqrt(2 (1 - Tr rho_p^2)) for one qubit of a 3-qubit pure state
double one_vs_rest_concurrence(const PureState& psi, int p);

TangleReport three_tangle(const PureState& psi);

// C_AB + C_BC + C_CA over the three pair reductions
double residual_concurrence_sum(const PureState& psi);

// n-tangle of the generalized GHZ family sin(theta)|0..0> +- cos(theta)|1..1>,
// equal to sin^2(2 theta). Only defined on that family; for 3 qubits it
// coincides with the three-tangle.
double n_tangle_ghz_family(double theta);

}  // namespace vaidman
