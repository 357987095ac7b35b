// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "snideal/report.hpp"
#include "snideal/snspec.hpp"
#include "snideal/spectrum.hpp"

namespace snideal {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Exactness { exact, lower_bound, approximate };

std::string to_string(Exactness e);

/// Phi(s). Empty spectrum evaluates to 0; Phi(1,0,...) = 1 for every family.
double eval(const SnSpec& spec, const Spectrum& s);

/// Same functional on a run-length-compressed spectrum; never materializes
/// the full sequence.
double eval_compressed(const SnSpec& spec, const CompressedSpectrum& s);

/// Phi(s^2)^(1/2), the 2-convexification. Maps schatten(p) to schatten(2p).
double convexify2(const SnSpec& spec, const Spectrum& s);

/// Nonincreasing rearrangement of all pairwise products s_i t_j; this is the
/// spectrum of a tensor product of operators with those s-numbers.
Spectrum tensor_seq(const Spectrum& s, const Spectrum& t);

/// Maximizer of sum(c_i b_i) over the positive decreasing part of a norm
/// ball. `beta` is nonincreasing with the ball norm <= 1 + 1e-12; `value` is
/// the attained pairing. `exact` is set per family; for lorentz q > 1 the
/// result carries a certified optimality `gap` instead.
struct AttainResult {
  Spectrum beta;
  double value = 0.0;
  bool exact = true;
  double gap = 0.0;
};

/// max { sum c_i b_i : Phi(b) <= 1 }. The value equals the adjoint Phi*(c).
AttainResult ball_attainer(const SnSpec& spec, const Spectrum& c);

/// max { sum c_i b_i : Phi*(b) <= 1 }. The value equals Phi(c) by biduality;
/// the attainer is the norming functional of c. Exact for every family here
/// (c arrives sorted, where the lorentz functional is smooth).
AttainResult dual_ball_attainer(const SnSpec& spec, const Spectrum& c);

/// Phi*(s) — adjoint s.n. function via the trace pairing. Closed forms for
/// schatten/kyfan/kyfan_theta/binorm/lorentz(q=1); numerical ascent with a
/// certified gap for lorentz q > 1.
double dual_eval(const SnSpec& spec, const Spectrum& s);

/// Whether dual_eval / ball_attainer are closed-form for this family.
bool dual_is_exact(const SnSpec& spec);

enum class StarMode { star, star_star, binorm_partial_sums };

struct StarConfig {
  StarMode mode = StarMode::star;
  int samples = 2000;
  int max_len = 8;
  std::uint64_t seed = 0;
  // binorm_partial_sums: exact sup of S_mn/(S_m S_n) over m,n <= window.
  std::uint64_t binorm_window = 256;
  bool include_unit_rows = true; // keep the m = 1 / n = 1 boundary rows
  double c_bound = kInf;         // holds = (constant <= c_bound)
};

struct StarReport {
  StarMode mode = StarMode::star;
  bool holds = true;
  double constant = 0.0; // best c found: sup of the ratio (inf for star_star)
  Spectrum witness_x;
  Spectrum witness_y;
  std::uint64_t witness_m = 0; // binorm mode argmax indices
  std::uint64_t witness_n = 0;
};

/// Estimates the best constant in ||x(x)y||_Phi <= c ||x||_Phi ||y||_Phi
/// (mode star; star_star reverses the inequality). For binorm specs the
/// partial-sum mode computes the sup exactly over the window.
StarReport check_star(const SnSpec& spec, const StarConfig& config = {});

struct OsCrossConfig {
  int samples = 400;
  int max_len = 6;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

/// Searches for violations of the operator-space necessary condition
/// ||x(x)y||_Psi / ||x||_Psi <= ||z(x)y||_Phi / ||z||_Phi. The deterministic
/// 0/1-vector grid up to length 4 runs before any random sampling.
CampaignReport check_os_cross(const SnSpec& phi, const SnSpec& psi,
                              const OsCrossConfig& config = {});

struct BoydEstimate {
  double p_estimate = 0.0; // +inf when Phi(1^n) stays bounded
  bool unbounded = false;
  bool trend_stable = false;
  // raw series (n, log n / log Phi(1^n)); converges like 1/log n, so the
  // reported estimate comes from the two-point slope refinement below
  std::vector<std::pair<std::uint64_t, double>> series;
  std::vector<std::pair<std::uint64_t, double>> refined_series;
};

/// Boyd exponent p = lim log n / log Phi(1^n) on a geometric grid up to
/// n_max, via the family closed forms for Phi(1^n).
BoydEstimate boyd_estimate(const SnSpec& spec, std::uint64_t n_max);

struct TensorPowerConfig {
  std::uint64_t max_total_rank = std::uint64_t{1} << 26;
  std::size_t max_distinct = 2'000'000;
};

/// Series (n, ||x^(x)n||_Phi^(1/n)) for n = 1..n_max. The eigenvalue multiset
/// of x^(x)n is built by multiplicative convolution of (value, multiplicity)
/// runs; ties merge at 1e-12 relative tolerance.
std::vector<std::pair<int, double>> tensor_power_trace(
    const SnSpec& spec, const Spectrum& x, int n_max,
    const TensorPowerConfig& config = {});

struct DominanceConfig {
  int samples = 500;
  int max_len = 10;
  std::uint64_t seed = 0;
  double tol = 1e-12;
};

struct DominanceReport {
  bool holds = true;
  Spectrum witness;
  double phi_value = 0.0;
  double psi_value = 0.0;
};

/// Sampled check of Psi <= Phi on structured + random spectra. A heuristic
/// gate, not a proof: holds=true means no violation was found.
DominanceReport dominates(const SnSpec& phi, const SnSpec& psi,
                          const DominanceConfig& config = {});

struct SeqEstimate {
  double value = 0.0;
  Exactness exactness = Exactness::lower_bound;
  Spectrum maximizer;
  std::string method;
};

struct MultiplicatorConfig {
  int samples = 600;
  int max_len = 10;
  int refine_rounds = 60;
  std::uint64_t seed = 0;
};

/// ||M_{Phi,Psi}(x)|| = sup_a Psi(x (x) a) / Phi(a). Exact via ||x||_q for
/// schatten pairs p <= q; otherwise a lower-bound search over structured
/// candidates plus local refinement.
SeqEstimate multiplicator_norm(const Spectrum& x, const SnSpec& phi,
                               const SnSpec& psi,
                               const MultiplicatorConfig& config = {});

} // namespace snideal
