// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "snideal/seqnorm.hpp"
#include "snideal/snspec.hpp"
#include "snideal/spectrum.hpp"

namespace snideal {

using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Singular values, nonincreasing; values below 1e-12 * s_1 are clamped to
/// zero so rank-sensitive norms (kyfan, binorm) stay stable.
Spectrum s_numbers(const CMatrix& a);

/// ||A||_Phi = Phi(s(A)). Unitarily invariant by construction.
double ideal_norm(const SnSpec& spec, const CMatrix& a);

/// Matrix with cached s-numbers.
struct IdealElement {
  CMatrix matrix;
  Spectrum spectrum;
  static IdealElement make(CMatrix m);
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
Complex trace_pair(const CMatrix& a, const CMatrix& b); // tr(a b)

/// Matrix unit e_{ij} (1-based indices) in an n x m space.
CMatrix matrix_unit(int n, int m, int i, int j);

/// Haar-distributed unitary; bit-identical for a given seed.
CMatrix random_unitary(int n, std::uint64_t seed);

/// Random positive semidefinite matrix with ||B||_Phi = 1: a Haar conjugate
/// of a random decreasing spectrum, renormalized.
CMatrix random_psd(int n, const SnSpec& spec, std::uint64_t seed);

/// Random dense matrix with independent complex normal entries.
CMatrix random_matrix(int rows, int cols, std::uint64_t seed);

/// Hermitian check: ||A - A*||_inf <= tol * ||A||_inf.
bool is_hermitian(const CMatrix& a, double tol = 1e-12);

/// Slack of the partitioned-norm inequality sum_i ||y_i||^2 <= ||y||^2 for
/// the four n x n corners of a 2n x 2n matrix; nonnegative slack means the
/// inequality holds. Meaningful for Q*-norm specs.
double q_partition_slack(const SnSpec& spec, const CMatrix& y);

} // namespace snideal
