#include "specwalk/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace specwalk {

DenseHermitian::DenseHermitian(CMat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("DenseHermitian: not square");
  for (Index i = 0; i < entries_.rows(); ++i)
    for (Index j = 0; j <= i; ++j)
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > tol::hermitian)
        throw std::invalid_argument("DenseHermitian: entries not Hermitian at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
}

DenseHermitian::DenseHermitian(const RMat& real_symmetric)
    : DenseHermitian(CMat(real_symmetric.cast<Complex>())) {}

bool DenseHermitian::is_real() const {
  return entries_.imag().cwiseAbs().maxCoeff() <= tol::hermitian;
}

bool DenseHermitian::integer_entries() const {
  if (!is_real()) return false;
  RMat r = entries_.real();
  return ((r - r.array().round().matrix()).cwiseAbs().maxCoeff()) <= tol::integer_entry;
}

IMat DenseHermitian::rounded_int() const {
  if (!integer_entries())
    throw std::invalid_argument("DenseHermitian: entries are not integers");
  RMat r = entries_.real();
  IMat out(r.rows(), r.cols());
  for (Index i = 0; i < r.rows(); ++i)
    for (Index j = 0; j < r.cols(); ++j)
      out(i, j) = static_cast<std::int64_t>(std::llround(r(i, j)));
  return out;
}

double SpectralMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double SpectralMeasure::moment(Index m) const {
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    s += std::pow(values[k], static_cast<double>(m)) * weights[k];
  return s;
}

SpectralMeasure SpectralMeasure::pruned(double weight_tol) const {
  SpectralMeasure out;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (weights[k] > weight_tol) {
      out.values.push_back(values[k]);
      out.weights.push_back(weights[k]);
    }
  return out;
}

SpectralMeasure SpectralMeasure::scaled(double factor) const {
  SpectralMeasure out = *this;
  for (double& v : out.values) v *= factor;
  if (factor < 0) {
    std::reverse(out.values.begin(), out.values.end());
    std::reverse(out.weights.begin(), out.weights.end());
  }
  return out;
}

double measure_distance(const SpectralMeasure& a, const SpectralMeasure& b,
                        double weight_tol) {
  SpectralMeasure pa = a.pruned(weight_tol);
  SpectralMeasure pb = b.pruned(weight_tol);
  if (pa.values.size() != pb.values.size())
    throw std::runtime_error("measure_distance: supports differ in size (" +
                             std::to_string(pa.values.size()) + " vs " +
                             std::to_string(pb.values.size()) + ")");
  double d = 0.0;
  for (std::size_t k = 0; k < pa.values.size(); ++k) {
    d = std::max(d, std::abs(pa.values[k] - pb.values[k]));
    d = std::max(d, std::abs(pa.weights[k] - pb.weights[k]));
  }
  return d;
}

DenseHermitian materialize(const SparseSymmetricMatrix& m) {
  if (m.dim() > dense_cap())
    throw std::runtime_error("materialize: dimension " + std::to_string(m.dim()) +
                             " exceeds dense cap " + std::to_string(dense_cap()));
  RMat a = RMat::Zero(m.dim(), m.dim());
  for (Index i = 0; i < m.dim(); ++i) {
    Index last_col = -1;
    SparseRow row = m.row(i);
    if (static_cast<Index>(row.size()) > m.max_row_nonzeros())
      throw std::runtime_error("materialize: row " + std::to_string(i) +
                               " exceeds max_row_nonzeros");
    for (const auto& e : row) {
      if (e.col < 0 || e.col >= m.dim())
        throw std::runtime_error("materialize: column out of range in row " +
                                 std::to_string(i));
      if (e.col == last_col)
        throw std::runtime_error("materialize: duplicate column in row " +
                                 std::to_string(i));
      last_col = e.col;
      a(i, e.col) = e.value;
    }
  }
  for (Index i = 0; i < m.dim(); ++i)
    for (Index j = 0; j < i; ++j)
      if (a(i, j) != a(j, i))
        throw std::runtime_error("materialize: symmetry violation at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
  return DenseHermitian(a);
}

bool verify_norm_bound(const SparseSymmetricMatrix& m, double slack) {
  DenseHermitian h = materialize(m);
  return operator_norm(h) <= m.norm_bound() + slack;
}

namespace {

void check_eigen_residuals(const DenseHermitian& h, const EigenSystem& es) {
  // ||A - Q L Q*||_F equals ||A Q - Q L||_F for orthonormal Q, so the
  // one-product form is checked (in real arithmetic when possible).
  const Index n = h.dim();
  double recon, ortho;
  if (h.is_real()) {
    const RMat q = es.eigenvectors.real();
    recon = (h.real_part() * q - q * es.eigenvalues.asDiagonal()).norm();
    ortho = (q.transpose() * q - RMat::Identity(n, n)).norm();
  } else {
    CMat lambda = es.eigenvalues.cast<Complex>().asDiagonal();
    recon = (h.entries() * es.eigenvectors - es.eigenvectors * lambda).norm();
    ortho =
        (es.eigenvectors.adjoint() * es.eigenvectors - CMat::Identity(n, n)).norm();
  }
  if (recon > tol::eig_reconstruct * static_cast<double>(n))
    throw std::runtime_error("eig: reconstruction residual " + std::to_string(recon) +
                             " exceeds bound (numerically pathological input?)");
  if (ortho > tol::eig_orthonormal)
    throw std::runtime_error("eig: eigenvector orthonormality residual too large");
}

}  // namespace

EigenSystem eig(const DenseHermitian& h) {
  EigenSystem es;
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<RMat> solver(h.real_part());
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eig: real self-adjoint solver did not converge");
    es.eigenvalues = solver.eigenvalues();
    es.eigenvectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMat> solver(h.entries());
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eig: complex self-adjoint solver did not converge");
    es.eigenvalues = solver.eigenvalues();
    es.eigenvectors = solver.eigenvectors();
  }
  check_eigen_residuals(h, es);
  return es;
}

IMat matrix_power_int(const IMat& a, Index m) {
  const Index n = a.rows();
  auto checked_mul = [n](const IMat& x, const IMat& y) {
    IMat out(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (Index k = 0; k < n; ++k) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(x(i, k), y(k, j), &prod) ||
              __builtin_add_overflow(acc, prod, &acc))
            throw std::overflow_error(
                "matrix_power: exact integer overflow (m too large for exact path "
                "counting)");
        }
        out(i, j) = acc;
      }
    return out;
  };
  IMat result = IMat::Identity(n, n);
  IMat base = a;
  Index e = m;
  while (e > 0) {
    if (e & 1) result = checked_mul(result, base);
    e >>= 1;
    if (e > 0) base = checked_mul(base, base);
  }
  return result;
}

DenseHermitian matrix_power(const DenseHermitian& h, Index m) {
  if (m < 0) throw std::invalid_argument("matrix_power: negative exponent");
  if (h.integer_entries()) {
    IMat p = matrix_power_int(h.rounded_int(), m);
    return DenseHermitian(RMat(p.cast<double>()));
  }
  CMat result = CMat::Identity(h.dim(), h.dim());
  CMat base = h.entries();
  Index e = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  // Symmetrize away the accumulation noise so the result stays Hermitian.
  result = Complex(0.5, 0.0) * (result + CMat(result.adjoint()));
  return DenseHermitian(std::move(result));
}

DenseHermitian matrix_exp(const EigenSystem& es, double scale) {
  RVec phases = (scale * es.eigenvalues.array()).exp();
  CMat out = es.eigenvectors * phases.cast<Complex>().asDiagonal() *
             es.eigenvectors.adjoint();
  out = Complex(0.5, 0.0) * (out + CMat(out.adjoint()));
  return DenseHermitian(std::move(out));
}

DenseHermitian matrix_exp(const DenseHermitian& h, double scale) {
  if (!std::isfinite(scale)) throw std::invalid_argument("matrix_exp: scale not finite");
  return matrix_exp(eig(h), scale);
}

CMat matrix_exp_unitary(const EigenSystem& es, double scale) {
  const Index n = es.eigenvalues.size();
  CVec phases(n);
  for (Index j = 0; j < n; ++j)
    phases[j] = std::polar(1.0, scale * es.eigenvalues[j]);
  CMat u = es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
  double residual = (u.adjoint() * u - CMat::Identity(n, n)).norm();
  if (residual > tol::unitarity)
    throw std::runtime_error("matrix_exp_unitary: unitarity residual too large");
  return u;
}

CMat matrix_exp_unitary(const DenseHermitian& h, double scale) {
  if (!std::isfinite(scale)) throw std::invalid_argument("matrix_exp: scale not finite");
  return matrix_exp_unitary(eig(h), scale);
}

SpectralMeasure project_state(const EigenSystem& es, const CVec& psi) {
  if (psi.size() != es.eigenvalues.size())
    throw std::invalid_argument("project_state: state dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > tol::unit_norm)
    throw std::invalid_argument("project_state: state is not normalized");
  const Index n = es.eigenvalues.size();
  const double diameter = es.eigenvalues[n - 1] - es.eigenvalues[0];
  const double gap = tol::degeneracy * std::max(diameter, 1e-300);

  SpectralMeasure out;
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && es.eigenvalues[end] - es.eigenvalues[end - 1] <= gap) ++end;
    double weight = 0.0;
    double value = 0.0;
    for (Index j = start; j < end; ++j) {
      Complex amp = es.eigenvectors.col(j).dot(psi);
      weight += std::norm(amp);
      value += es.eigenvalues[j];
    }
    out.values.push_back(value / static_cast<double>(end - start));
    out.weights.push_back(weight);
    start = end;
  }
  double mass = out.total_mass();
  if (std::abs(mass - 1.0) > tol::prob_mass)
    throw std::runtime_error("project_state: weights sum to " + std::to_string(mass));
  return out;
}

double spectral_expectation(const EigenSystem& es, const CVec& psi,
                            const std::function<double(double)>& f) {
  double s = 0.0;
  for (Index j = 0; j < es.eigenvalues.size(); ++j) {
    Complex amp = es.eigenvectors.col(j).dot(psi);
    s += std::norm(amp) * f(es.eigenvalues[j]);
  }
  return s;
}

double operator_norm(const DenseHermitian& h) {
  EigenSystem es = eig(h);
  return std::max(std::abs(es.eigenvalues[0]),
                  std::abs(es.eigenvalues[es.eigenvalues.size() - 1]));
}

double operator_norm(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(CMat(a.adjoint() * a));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("operator_norm: solver did not converge");
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace specwalk
