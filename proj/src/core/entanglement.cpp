#include "core/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace vaidman {

namespace {

Mat spin_flip_matrix() {
  // sigma_y x sigma_y
  Mat2 sy;
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  Mat yy(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) yy(r, c) = sy(r >> 1, c >> 1) * sy(r & 1, c & 1);
  return yy;
}

void require_qubits(int have, int want, const char* what) {
  if (have != want)
    throw Error(Errc::dimension_mismatch,
                std::string(what) + " needs a " + std::to_string(want) + "-qubit state");
}

}  // namespace

double concurrence_pure_pair(const PureState& psi) {
  require_qubits(psi.num_qubits(), 2, "pair concurrence");
  const Mat yy = spin_flip_matrix();
  // <psi|sy x sy|psi*> = conj(psi^T (sy x sy) psi) since sy x sy is real
  const cplx v = (psi.amps().transpose() * yy * psi.amps())(0, 0);
  return std::abs(v);
}

double concurrence_mixed_pair(const DensityMatrix& rho) {
  require_qubits(rho.num_qubits(), 2, "pair concurrence");
  const Mat yy = spin_flip_matrix();
  const Mat rho_tilde = yy * rho.mat().conjugate() * yy;
  // rho * rho_tilde is not Hermitian but has real nonnegative spectrum;
  // rounding can leave tiny negative or complex residue, clamped below.
  Eigen::ComplexEigenSolver<Mat> es(rho.mat() * rho_tilde, /*computeEigenvectors=*/false);
  std::array<double, 4> l{};
  double largest = 0.0;
  for (int i = 0; i < 4; ++i) largest = std::max(largest, es.eigenvalues()(i).real());
  // exact zeros of the spectrum come back as rounding residue of order
  // 1e-16 * largest, and sqrt would amplify that to ~1e-8; zero them first
  const double floor = 1e-12 * largest;
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()(i).real();
    if (ev < 0) {
      if (ev < kPsdTol) throw Error(Errc::invalid_argument, "concurrence spectrum is negative");
      ev = 0;
    }
    if (ev < floor) ev = 0;
    l[i] = std::sqrt(ev);
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double one_vs_rest_concurrence(const PureState& psi, int p) {
  require_qubits(psi.num_qubits(), 3, "one-vs-rest concurrence");
  if (p < 0 || p > 2) throw Error(Errc::invalid_argument, "qubit index out of range");
  const DensityMatrix rp = partial_trace(psi.to_density(), {p});
  const double purity = (rp.mat() * rp.mat()).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

TangleReport three_tangle(const PureState& psi) {
  require_qubits(psi.num_qubits(), 3, "three-tangle");
  const DensityMatrix rho = psi.to_density();
  TangleReport r{};
  r.c_a_bc = one_vs_rest_concurrence(psi, 0);
  r.c_ab = concurrence_mixed_pair(partial_trace(rho, {0, 1}));
  r.c_ac = concurrence_mixed_pair(partial_trace(rho, {0, 2}));
  r.tau = r.c_a_bc * r.c_a_bc - r.c_ab * r.c_ab - r.c_ac * r.c_ac;
  if (r.tau < 0 && r.tau > -1e-9) r.tau = 0;
  if (r.tau > 1 && r.tau < 1 + 1e-9) r.tau = 1;
  return r;
}

double residual_concurrence_sum(const PureState& psi) {
  require_qubits(psi.num_qubits(), 3, "residual concurrence sum");
  const DensityMatrix rho = psi.to_density();
  return concurrence_mixed_pair(partial_trace(rho, {0, 1})) +
         concurrence_mixed_pair(partial_trace(rho, {1, 2})) +
         concurrence_mixed_pair(partial_trace(rho, {0, 2}));
}

double n_tangle_ghz_family(double theta) {
  if (theta < 0 || theta > M_PI / 2 + 1e-12)
    throw Error(Errc::invalid_argument, "theta must lie in [0, pi/2]");
  const double s = std::sin(2.0 * theta);
  return s * s;
}

}  // namespace vaidman
