#include "core/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace vaidman {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw Error(Errc::invalid_argument,
                "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                    std::to_string(n_qubits));
}

}  // namespace

MeasurementBasis MeasurementBasis::from_letter(char c) {
  switch (c) {
    case 'X': return x();
    case 'Y': return y();
    case 'Z': return z();
    default:
      throw Error(Errc::invalid_argument, std::string("unknown basis letter '") + c + "'");
  }
}

char MeasurementBasis::letter() const {
  switch (kind) {
    case BasisKind::X: return 'X';
    case BasisKind::Y: return 'Y';
    case BasisKind::Z: return 'Z';
    case BasisKind::Param: return 'P';
  }
  return '?';
}

std::array<Vec2, 2> basis_eigenvectors(const MeasurementBasis& b) {
  const double s = 1.0 / std::sqrt(2.0);
  Vec2 v0, v1;
  switch (b.kind) {
    case BasisKind::X:
      v0 << s, s;
      v1 << s, -s;
      break;
    case BasisKind::Y:
      v0 << s, cplx(0, s);
      v1 << s, cplx(0, -s);
      break;
    case BasisKind::Z:
      v0 << 1, 0;
      v1 << 0, 1;
      break;
    case BasisKind::Param: {
      const double sl = std::sin(b.lambda), cl = std::cos(b.lambda);
      v0 << sl, -cl;
      v1 << cl, sl;
      break;
    }
  }
  return {v0, v1};
}

PureState::PureState(int n_qubits, Vec amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_qubit_count(n_qubits_);
  if (amps_.size() != (Eigen::Index{1} << n_qubits_))
    throw Error(Errc::dimension_mismatch,
                "amplitude vector has length " + std::to_string(amps_.size()) + ", expected 2^" +
                    std::to_string(n_qubits_));
  if (!amps_.allFinite())
    throw Error(Errc::invalid_argument, "amplitudes must be finite");
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw Error(Errc::not_normalized,
                "state norm^2 = " + std::to_string(norm2) + ", expected 1");
  amps_ /= std::sqrt(norm2);
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(n_qubits_, amps_ * amps_.adjoint());
}

PureState make_ghz_general(double theta, int n_qubits, int phase_sign) {
  if (n_qubits < 2)
    throw Error(Errc::invalid_argument, "GHZ family needs at least 2 qubits");
  check_qubit_count(n_qubits);
  if (phase_sign != 1 && phase_sign != -1)
    throw Error(Errc::invalid_argument, "phase sign must be +1 or -1");
  Vec amps = Vec::Zero(Eigen::Index{1} << n_qubits);
  amps(0) = std::sin(theta);
  amps(amps.size() - 1) = phase_sign * std::cos(theta);
  return PureState(n_qubits, std::move(amps));
}

PureState make_w_general(cplx a, cplx b, cplx c) {
  Vec amps = Vec::Zero(8);
  amps(0b100) = a;
  amps(0b010) = b;
  amps(0b001) = c;
  return PureState(3, std::move(amps));  // ctor enforces the 1e-9 norm precondition
}

PureState make_wn(long n, double gamma, double delta) {
  if (n < 1) throw Error(Errc::invalid_argument, "Wn family needs n >= 1");
  const double k = 1.0 / std::sqrt(2.0 * (1.0 + static_cast<double>(n)));
  const cplx a = k;
  const cplx b = std::sqrt(static_cast<double>(n)) * std::polar(k, gamma);
  const cplx c = std::sqrt(static_cast<double>(n) + 1.0) * std::polar(k, delta);
  return make_w_general(a, b, c);
}

DensityMatrix::DensityMatrix(int n_qubits, Mat rho) : n_qubits_(n_qubits), rho_(std::move(rho)) {
  check_qubit_count(n_qubits_);
  const Eigen::Index d = Eigen::Index{1} << n_qubits_;
  if (rho_.rows() != d || rho_.cols() != d)
    throw Error(Errc::dimension_mismatch, "density matrix must be 2^n x 2^n");
  if (!rho_.allFinite())
    throw Error(Errc::invalid_argument, "density matrix entries must be finite");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw Error(Errc::invalid_argument, "density matrix is not Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > kStateTol || std::abs(rho_.trace().imag()) > kStateTol)
    throw Error(Errc::invalid_argument, "density matrix trace must be 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdTol)
    throw Error(Errc::invalid_argument, "density matrix has a negative eigenvalue");
}

namespace {

// tensor product of per-qubit eigenvectors, evaluated entrywise
Vec joint_eigenvector(int n_qubits, const std::vector<MeasurementBasis>& bases,
                      const std::vector<int>& outcomes) {
  std::vector<Vec2> vs(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    if (outcomes[q] != 0 && outcomes[q] != 1)
      throw Error(Errc::invalid_argument, "outcome index must be 0 or 1");
    vs[q] = basis_eigenvectors(bases[q])[outcomes[q]];
  }
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  Vec v(d);
  for (Eigen::Index z = 0; z < d; ++z) {
    cplx p = 1.0;
    for (int q = 0; q < n_qubits; ++q) p *= vs[q](qubit_bit(z, n_qubits, q));
    v(z) = p;
  }
  return v;
}

void check_lengths(int n_qubits, const std::vector<MeasurementBasis>& bases,
                   const std::vector<int>& outcomes) {
  if (static_cast<int>(bases.size()) != n_qubits || static_cast<int>(outcomes.size()) != n_qubits)
    throw Error(Errc::dimension_mismatch, "need one basis and one outcome per qubit");
}

}  // namespace

double outcome_probability(const DensityMatrix& rho,
                           const std::vector<MeasurementBasis>& bases,
                           const std::vector<int>& outcomes) {
  check_lengths(rho.num_qubits(), bases, outcomes);
  const Vec v = joint_eigenvector(rho.num_qubits(), bases, outcomes);
  return std::max(0.0, (v.adjoint() * rho.mat() * v)(0).real());
}

double outcome_probability(const PureState& psi,
                           const std::vector<MeasurementBasis>& bases,
                           const std::vector<int>& outcomes) {
  check_lengths(psi.num_qubits(), bases, outcomes);
  const Vec v = joint_eigenvector(psi.num_qubits(), bases, outcomes);
  return std::norm(v.dot(psi.amps()));
}

Mat embed_on_qubit(const Mat2& m, int n_qubits, int qubit) {
  check_qubit_count(n_qubits);
  if (qubit < 0 || qubit >= n_qubits)
    throw Error(Errc::invalid_argument, "qubit index out of range");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  Mat out = Mat::Zero(d, d);
  const Eigen::Index mask = Eigen::Index{1} << (n_qubits - 1 - qubit);
  for (Eigen::Index col = 0; col < d; ++col) {
    const int cb = (col & mask) ? 1 : 0;
    for (int rb = 0; rb < 2; ++rb) {
      const Eigen::Index row = rb ? (col | mask) : (col & ~mask);
      out(row, col) += m(rb, cb);
    }
  }
  return out;
}

Projection project_qubit(const DensityMatrix& rho, int qubit,
                         const MeasurementBasis& basis, int outcome) {
  if (qubit < 0 || qubit >= rho.num_qubits())
    throw Error(Errc::invalid_argument, "qubit index out of range");
  if (outcome != 0 && outcome != 1)
    throw Error(Errc::invalid_argument, "outcome index must be 0 or 1");
  const Vec2 v = basis_eigenvectors(basis)[outcome];
  const Mat proj = embed_on_qubit(v * v.adjoint(), rho.num_qubits(), qubit);
  Mat sub = proj * rho.mat() * proj;
  const double p = sub.trace().real();
  if (p <= kStateTol)
    throw Error(Errc::zero_probability, "measurement outcome has zero probability");
  sub /= p;
  // Clean the rounding skew so the constructor's Hermiticity gate stays honest.
  sub = ((sub + sub.adjoint()) / 2.0).eval();
  return {p, DensityMatrix(rho.num_qubits(), std::move(sub))};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw Error(Errc::invalid_argument, "keep set must be nonempty");
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  if (std::unique(ks.begin(), ks.end()) != ks.end())
    throw Error(Errc::invalid_argument, "keep set has duplicate indices");
  if (ks.front() < 0 || ks.back() >= n)
    throw Error(Errc::invalid_argument, "keep index out of range");

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(ks.begin(), ks.end(), q)) traced.push_back(q);

  const int k = static_cast<int>(ks.size());
  const int t = n - k;
  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index dt = Eigen::Index{1} << t;

  // scatter reduced-index bits / traced-index bits back into a full index
  auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index z = 0;
    for (int i = 0; i < k; ++i)
      if (kept_bits >> (k - 1 - i) & 1) z |= Eigen::Index{1} << (n - 1 - ks[i]);
    for (int i = 0; i < t; ++i)
      if (traced_bits >> (t - 1 - i) & 1) z |= Eigen::Index{1} << (n - 1 - traced[i]);
    return z;
  };

  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      cplx sum = 0.0;
      for (Eigen::Index tb = 0; tb < dt; ++tb)
        sum += rho.mat()(full_index(r, tb), full_index(c, tb));
      out(r, c) = sum;
    }
  return DensityMatrix(k, std::move(out));
}

}  // namespace vaidman
