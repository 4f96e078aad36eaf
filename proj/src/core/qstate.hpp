#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vaidman {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

// Dense representation only; six qubits = 64 amplitudes is the largest state
// any shipped game needs.
inline constexpr int kMaxQubits = 6;

// state invariants (normalization, hermiticity, trace)
inline constexpr double kStateTol = 1e-12;
// probability sums and projector completeness
inline constexpr double kProbTol = 1e-10;
// density-matrix eigenvalue floor
inline constexpr double kPsdTol = -1e-10;

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  not_normalized,
  zero_probability,
  unknown_name,
  session_rejected,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// ---------------------------------------------------------------------------
// measurement bases

// Param(lambda) is the one-parameter family
//   |b0> = sin(lambda)|0> - cos(lambda)|1>,   |b1> = cos(lambda)|0> + sin(lambda)|1>,
// so lambda = pi/2 gives the computational basis (b0=|0>, b1=|1>) and
// lambda = pi/4 the diagonal basis (b0=|->, b1=|+>).
enum class BasisKind { X, Y, Z, Param };

struct MeasurementBasis {
  BasisKind kind = BasisKind::Z;
  double lambda = 0.0;

  static MeasurementBasis x() { return {BasisKind::X, 0.0}; }
  static MeasurementBasis y() { return {BasisKind::Y, 0.0}; }
  static MeasurementBasis z() { return {BasisKind::Z, 0.0}; }
  static MeasurementBasis param(double lambda) { return {BasisKind::Param, lambda}; }
  static MeasurementBasis from_letter(char c);
  char letter() const;  // 'X', 'Y', 'Z', or 'P'
};

// Outcome index o in {0,1}. For X/Y/Z, o=0 is the +1 outcome (|+x>, |+y>, |0>)
// and o=1 the -1 outcome; for Param, o=0 means b0 and o=1 means b1.
inline int outcome_sign(int o) { return o == 0 ? +1 : -1; }
inline int outcome_index(int sign) { return sign > 0 ? 0 : 1; }

// Ordered pair of eigenvectors, index = outcome index above. Orthonormal for
// every basis and every lambda.
std::array<Vec2, 2> basis_eigenvectors(const MeasurementBasis& b);

// ---------------------------------------------------------------------------
// states

class DensityMatrix;

class PureState {
 public:
  // Validates the dimension and the norm (1e-9 input tolerance), then stores
  // the exactly renormalized vector so downstream checks can use 1e-12.
  PureState(int n_qubits, Vec amps);

  int num_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vec& amps() const { return amps_; }
  cplx amp(Eigen::Index basis_index) const { return amps_(basis_index); }

  DensityMatrix to_density() const;

 private:
  int n_qubits_;
  Vec amps_;
};

// sin(theta)|0...0> + phase_sign * cos(theta)|1...1> on n_qubits qubits
PureState make_ghz_general(double theta, int n_qubits = 3, int phase_sign = +1);

// a|100> + b|010> + c|001>
PureState make_w_general(cplx a, cplx b, cplx c);

// (1/sqrt(2(1+n))) (|100> + sqrt(n) e^{i gamma}|010> + sqrt(n+1) e^{i delta}|001>)
PureState make_wn(long n, double gamma = 0.0, double delta = 0.0);

class DensityMatrix {
 public:
  // Validates hermiticity, unit trace, and positive semidefiniteness.
  DensityMatrix(int n_qubits, Mat rho);

  int num_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return rho_.rows(); }
  const Mat& mat() const { return rho_; }

 private:
  int n_qubits_;
  Mat rho_;
};

// ---------------------------------------------------------------------------
// measurement

// bit of `qubit` inside basis index z; qubit 0 is the leftmost/most-significant bit
inline int qubit_bit(Eigen::Index z, int n_qubits, int qubit) {
  return static_cast<int>((z >> (n_qubits - 1 - qubit)) & 1);
}

// Born probability of one joint outcome, Tr(rho |v><v|) with |v> the tensor
// product of per-qubit eigenvectors.
double outcome_probability(const DensityMatrix& rho,
                           const std::vector<MeasurementBasis>& bases,
                           const std::vector<int>& outcomes);
double outcome_probability(const PureState& psi,
                           const std::vector<MeasurementBasis>& bases,
                           const std::vector<int>& outcomes);

struct Projection {
  double probability;
  DensityMatrix post;  // renormalized, still on all n qubits
};

// Measures one qubit and keeps the given outcome. Zero-probability outcomes
// raise Errc::zero_probability instead of producing a NaN state.
Projection project_qubit(const DensityMatrix& rho, int qubit,
                         const MeasurementBasis& basis, int outcome);

// Reduced state on `keep` (ascending original qubit order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// M acting on `qubit`, identity elsewhere; shared by channels, projections,
// and the local-unitary invariance tests.
Mat embed_on_qubit(const Mat2& m, int n_qubits, int qubit);

}  // namespace vaidman
