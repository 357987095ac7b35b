// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snideal/matrix.hpp"
#include "snideal/seqnorm.hpp"

namespace snideal {

/// Finite family (T_1, ..., T_m) of n x n matrices; the coefficient tuple of
/// T = sum_i xi_i (x) T_i. Entries need not be linearly independent.
struct MatrixTuple {
  std::vector<CMatrix> matrices;

  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<CMatrix> ms);

  std::size_t m() const { return matrices.size(); }
  Eigen::Index n() const { return matrices.empty() ? 0 : matrices.front().rows(); }

  MatrixTuple adjoints() const; // entrywise T_i -> T_i*
};

/// rho_T(b) = sum_i T_i b T_i*; positivity-preserving.
CMatrix rho_apply(const MatrixTuple& t, const CMatrix& b);
/// rho_{T*}(a) = sum_i T_i* a T_i.
CMatrix rho_adj_apply(const MatrixTuple& t, const CMatrix& a);

/// Coefficient map: (x (x) I) T, i.e. T'_j = sum_i x_{ji} T_i for an
/// m' x m scalar matrix x.
MatrixTuple apply_coeff(const CMatrix& x, const MatrixTuple& t);

/// Matrix-side scalar action X T Y: tuple (X T_i Y).
MatrixTuple scalar_action(const CMatrix& x, const MatrixTuple& t, const CMatrix& y);

/// Tuple of entrywise direct sums (T_i (+) S_i), zero-padded to a common
/// coefficient count. Realizes the (M1)' block matrices.
MatrixTuple tuple_direct_sum(const MatrixTuple& t, const MatrixTuple& s);

struct NormEstimate {
  double value = 0.0;
  Exactness exactness = Exactness::lower_bound;
  CMatrix witness_a; // PSD, ||a||_{Psi*} <= 1
  CMatrix witness_b; // PSD, ||b||_{Phi} <= 1
  std::string method;
  int iterations = 0;
  int restarts_used = 0;
  std::string diagnostic; // set on non-convergence

  /// tr(a rho_T(b)) recomputed from the witnesses; equals value^2 within
  /// 1e-9 for any estimate this engine emits.
  double certify(const MatrixTuple& t) const;
};

struct McnConfig {
  int restarts = 16;
  int max_iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool unitary_kick = false; // random-unitary escape between stalls
  std::vector<CMatrix> extra_starts; // additional b starting points
};

/// ||T||_{Phi,Psi} = ||rho_T : S_Phi -> S_Psi||^(1/2), computed by trace
/// duality: alternating ascent of tr(a rho_T(b)) over the PSD parts of the
/// Psi*- and Phi-unit balls. Reports a certified lower bound with witnesses;
/// exact for the (inf,inf) and (1,1) schatten pairs where the row/column
/// closed forms certify the optimum.
NormEstimate mcn_norm(const MatrixTuple& t, const SnSpec& phi, const SnSpec& psi,
                      const McnConfig& config = {});

double row_norm(const MatrixTuple& t); // || sum T_i T_i* ||^(1/2)
double col_norm(const MatrixTuple& t); // || sum T_i* T_i ||^(1/2)
double oh_norm(const MatrixTuple& t);  // || sum T_i (x) conj(T_i) ||^(1/2)

struct MinNormConfig {
  int restarts = 12;
  int max_iters = 300;
  std::uint64_t seed = 0;
  int grid = 192; // phase/angle grid used for the exact m <= 2 path
};

/// || T ||_min = sup over unit vectors v of || sum v_i T_i ||. Exact via a
/// dense grid for m <= 2; sphere ascent with restarts otherwise.
NormEstimate min_norm(const MatrixTuple& t, const MinNormConfig& config = {});

struct RTildeConfig {
  int restarts = 12;
  int max_iters = 250;
  std::uint64_t seed = 0;
};

struct RTildeEstimate {
  double value = 0.0;          // best of the two evaluators
  double gram_value = 0.0;     // sup_xi ||(<T_i T_j* xi, xi>)||_{Phi*}^(1/2)
  double frame_value = 0.0;    // sup_{a, frame} ||sum a_k T(v_k) T(v_k)*||^(1/2)
  Exactness exactness = Exactness::lower_bound;
};

/// ||T||_{Phi, Phi_inf} via its two independent characterizations; both are
/// lower-bound estimators of the same quantity.
RTildeEstimate r_tilde_norm(const MatrixTuple& t, const SnSpec& phi,
                            const RTildeConfig& config = {});

/// ||x||_{CB(R, H(Phi,Psi))} = sup_a (||x^2 (x) a||_Psi / ||a||_Phi)^(1/2).
double cb_from_row(const Spectrum& x, const SnSpec& phi, const SnSpec& psi,
                   const MultiplicatorConfig& config = {});

/// CB(OH, H(Phi_p, Phi_q)) witness value ||lam||_r with r = 4/(1 - 2/p)
/// for p > 2; returns ||lam||_inf at p = 2. `grid_mode` re-derives the sup
/// over C by nested grid refinement instead of the Hoelder closed form.
double cb_oh_witness(const Spectrum& lam, double p, bool grid_mode = false);

/// Jordan-Wigner spin system: m pairwise anticommuting self-adjoint
/// unitaries on 2^ceil(m/2) dimensions.
MatrixTuple spin_system(int m);

struct HsharpResult {
  double closed_form = 0.0; // max(||T||_{Phi_1,Phi_theta}, row_norm)
  double phi1_part = 0.0;
  double row_part = 0.0;
  std::vector<std::pair<int, NormEstimate>> truncated; // (N, ||T (x) I_N||_{theta,theta})
};

/// H#(Phi_theta) norm: closed form against amplified truncations, which are
/// nondecreasing in N and bounded by the closed form.
HsharpResult hsharp_kyfan_theta(const MatrixTuple& t, double theta,
                                const std::vector<int>& trunc_levels = {1, 2, 3, 4},
                                const McnConfig& config = {});

} // namespace snideal
