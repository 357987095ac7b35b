// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/matrix.hpp"

#include <stdexcept>

#include <Eigen/SVD>

#include "snideal/rng.hpp"

namespace snideal {

Spectrum s_numbers(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Spectrum{};
  Eigen::JacobiSVD<CMatrix> svd(a);
  Eigen::VectorXd sv = svd.singularValues();
  if (!sv.allFinite()) {
    double scale = a.cwiseAbs().maxCoeff();
    throw std::runtime_error("s_numbers: SVD produced non-finite values (max |entry| = " +
                             std::to_string(scale) + ", size " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + ")");
  }
  std::vector<double> out(static_cast<std::size_t>(sv.size()));
  double top = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    out[static_cast<std::size_t>(i)] = sv(i) < 1e-12 * top ? 0.0 : sv(i);
  return Spectrum::from_sorted(std::move(out));
}

double ideal_norm(const SnSpec& spec, const CMatrix& a) {
  return eval(spec, s_numbers(a));
}

IdealElement IdealElement::make(CMatrix m) {
  IdealElement e;
  e.spectrum = s_numbers(m);
  e.matrix = std::move(m);
  return e;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix adjoint(const CMatrix& a) { return a.adjoint(); }

Complex trace_pair(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || b.cols() != a.rows())
    throw std::invalid_argument("trace_pair: shape mismatch");
  return (a * b).trace();
}

CMatrix matrix_unit(int n, int m, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > m)
    throw std::invalid_argument("matrix_unit: index out of range");
  CMatrix e = CMatrix::Zero(n, m);
  e(i - 1, j - 1) = 1.0;
  return e;
}

CMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("random_matrix: size must be positive");
  Rng rng(seed);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  return m;
}

CMatrix random_unitary(int n, std::uint64_t seed) {
  CMatrix z = random_matrix(n, n, seed);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so Q is Haar, not just orthonormal
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    double mag = std::abs(d);
    q.col(i) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

CMatrix random_psd(int n, const SnSpec& spec, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("random_psd: size must be positive");
  Rng rng(derive_seed(seed, 1));
  std::vector<double> lam(static_cast<std::size_t>(n));
  for (double& v : lam) v = rng.uniform(0.05, 1.0);
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  double nrm = eval(spec, Spectrum::from_sorted(lam));
  for (double& v : lam) v /= nrm;
  CMatrix u = random_unitary(n, derive_seed(seed, 2));
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = lam[static_cast<std::size_t>(i)];
  CMatrix b = u * d.asDiagonal() * u.adjoint();
  return (b + b.adjoint()) / 2.0;
}

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double q_partition_slack(const SnSpec& spec, const CMatrix& y) {
  if (y.rows() != y.cols() || y.rows() % 2 != 0)
    throw std::invalid_argument("q_partition_slack: even square matrix required");
  Eigen::Index n = y.rows() / 2;
  double whole = ideal_norm(spec, y);
  double parts = 0.0;
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      double v = ideal_norm(spec, y.block(bi * n, bj * n, n, n));
      parts += v * v;
    }
  return whole * whole - parts;
}

} // namespace snideal
