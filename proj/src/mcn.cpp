// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/mcn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "snideal/rng.hpp"

namespace snideal {

namespace {

struct EigPair {
  Spectrum values; // nonincreasing, clamped at 0
  CMatrix vectors; // columns aligned with values
};

// Hermitian eigendecomposition with descending, nonnegative-clamped spectrum.
EigPair eig_descending(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((h + h.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  Eigen::Index n = h.rows();
  std::vector<double> vals(static_cast<std::size_t>(n));
  CMatrix vecs(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    vals[static_cast<std::size_t>(i)] = std::max(0.0, es.eigenvalues()(n - 1 - i));
    vecs.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return {Spectrum::from_sorted(std::move(vals)), std::move(vecs)};
}

CMatrix assemble(const EigPair& e, const Spectrum& diag) {
  Eigen::VectorXd d(e.vectors.cols());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    d(i) = i < static_cast<Eigen::Index>(diag.size()) ? diag[static_cast<std::size_t>(i)] : 0.0;
  CMatrix out = e.vectors * d.asDiagonal() * e.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

double opnorm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double psd_opnorm(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((h + h.adjoint()) / 2.0);
  return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
}

} // namespace

MatrixTuple::MatrixTuple(std::vector<CMatrix> ms) : matrices(std::move(ms)) {
  if (matrices.empty()) throw std::invalid_argument("MatrixTuple: need m >= 1");
  Eigen::Index n = matrices.front().rows();
  for (const CMatrix& m : matrices)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("MatrixTuple: entries must share a square shape");
}

MatrixTuple MatrixTuple::adjoints() const {
  std::vector<CMatrix> out;
  out.reserve(matrices.size());
  for (const CMatrix& m : matrices) out.push_back(m.adjoint());
  return MatrixTuple(std::move(out));
}

CMatrix rho_apply(const MatrixTuple& t, const CMatrix& b) {
  if (b.rows() != t.n() || b.cols() != t.n())
    throw std::invalid_argument("rho_apply: shape mismatch");
  CMatrix acc = CMatrix::Zero(t.n(), t.n());
  for (const CMatrix& m : t.matrices) acc += m * b * m.adjoint();
  return acc;
}

CMatrix rho_adj_apply(const MatrixTuple& t, const CMatrix& a) {
  if (a.rows() != t.n() || a.cols() != t.n())
    throw std::invalid_argument("rho_adj_apply: shape mismatch");
  CMatrix acc = CMatrix::Zero(t.n(), t.n());
  for (const CMatrix& m : t.matrices) acc += m.adjoint() * a * m;
  return acc;
}

MatrixTuple apply_coeff(const CMatrix& x, const MatrixTuple& t) {
  if (x.cols() != static_cast<Eigen::Index>(t.m()))
    throw std::invalid_argument("apply_coeff: column count must match tuple size");
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index j = 0; j < x.rows(); ++j) {
    CMatrix acc = CMatrix::Zero(t.n(), t.n());
    for (Eigen::Index i = 0; i < x.cols(); ++i)
      acc += x(j, i) * t.matrices[static_cast<std::size_t>(i)];
    out.push_back(std::move(acc));
  }
  return MatrixTuple(std::move(out));
}

MatrixTuple scalar_action(const CMatrix& x, const MatrixTuple& t, const CMatrix& y) {
  if (x.cols() != t.n() || y.rows() != t.n())
    throw std::invalid_argument("scalar_action: shape mismatch");
  if (x.rows() != y.cols())
    throw std::invalid_argument("scalar_action: X T Y must be square");
  std::vector<CMatrix> out;
  out.reserve(t.m());
  for (const CMatrix& m : t.matrices) out.push_back(x * m * y);
  return MatrixTuple(std::move(out));
}

MatrixTuple tuple_direct_sum(const MatrixTuple& t, const MatrixTuple& s) {
  std::size_t m = std::max(t.m(), s.m());
  std::vector<CMatrix> out;
  out.reserve(m);
  CMatrix zt = CMatrix::Zero(t.n(), t.n());
  CMatrix zs = CMatrix::Zero(s.n(), s.n());
  for (std::size_t i = 0; i < m; ++i) {
    const CMatrix& a = i < t.m() ? t.matrices[i] : zt;
    const CMatrix& b = i < s.m() ? s.matrices[i] : zs;
    out.push_back(direct_sum(a, b));
  }
  return MatrixTuple(std::move(out));
}

double NormEstimate::certify(const MatrixTuple& t) const {
  return (witness_a * rho_apply(t, witness_b)).trace().real();
}

double row_norm(const MatrixTuple& t) {
  CMatrix acc = CMatrix::Zero(t.n(), t.n());
  for (const CMatrix& m : t.matrices) acc += m * m.adjoint();
  return std::sqrt(psd_opnorm(acc));
}

double col_norm(const MatrixTuple& t) {
  CMatrix acc = CMatrix::Zero(t.n(), t.n());
  for (const CMatrix& m : t.matrices) acc += m.adjoint() * m;
  return std::sqrt(psd_opnorm(acc));
}

double oh_norm(const MatrixTuple& t) {
  Eigen::Index n2 = t.n() * t.n();
  CMatrix acc = CMatrix::Zero(n2, n2);
  for (const CMatrix& m : t.matrices) acc += kron(m, m.conjugate());
  return std::sqrt(opnorm(acc));
}

NormEstimate mcn_norm(const MatrixTuple& t, const SnSpec& phi, const SnSpec& psi,
                      const McnConfig& config) {
  const Eigen::Index n = t.n();
  NormEstimate best;
  best.method = "alternating trace-duality ascent";

  // half-steps share the eigenbasis of the rho images: optimal for unitarily
  // invariant norms with the other variable fixed
  auto a_step = [&](const CMatrix& b) {
    EigPair e = eig_descending(rho_apply(t, b));
    AttainResult att = dual_ball_attainer(psi, e.values);
    return std::make_pair(assemble(e, att.beta), att.value);
  };
  auto b_step = [&](const CMatrix& a) {
    EigPair e = eig_descending(rho_adj_apply(t, a));
    AttainResult att = ball_attainer(phi, e.values);
    return std::make_pair(assemble(e, att.beta), att.value);
  };

  std::vector<CMatrix> starts;
  {
    double flat_norm = eval(phi, Spectrum::from_sorted(std::vector<double>(
                                     static_cast<std::size_t>(n), 1.0)));
    starts.push_back(CMatrix::Identity(n, n) / flat_norm);
    for (Eigen::Index k = 0; k < n; ++k) {
      CMatrix e = CMatrix::Zero(n, n);
      e(k, k) = 1.0;
      starts.push_back(e);
    }
    for (int r = 0; r < config.restarts; ++r)
      starts.push_back(random_psd(static_cast<int>(n), phi,
                                  derive_seed(config.seed, 100 + static_cast<std::uint64_t>(r))));
    for (const CMatrix& b : config.extra_starts) {
      double nb = ideal_norm(phi, b);
      if (nb > 0.0) starts.push_back(b / nb);
    }
  }

  double best_obj = -1.0;
  bool any_converged = false;
  int restart_index = 0;
  for (const CMatrix& start : starts) {
    CMatrix b = start;
    CMatrix a;
    double obj = 0.0;
    int it = 0;
    bool converged = false;
    int kicks_left = config.unitary_kick ? 2 : 0;
    for (; it < config.max_iters; ++it) {
      auto [a_new, obj_a] = a_step(b);
      a = a_new;
      auto [b_new, obj_b] = b_step(a);
      if (obj_b + 1e-14 < obj) break; // approximate attainer lost ground; keep previous
      double gain = obj_b - obj;
      obj = obj_b;
      b = b_new;
      (void)obj_a;
      if (gain <= config.tol * std::max(obj, 1.0)) {
        if (kicks_left > 0) {
          --kicks_left;
          CMatrix w = random_unitary(static_cast<int>(n),
                                     derive_seed(config.seed, 900 + static_cast<std::uint64_t>(
                                                                  restart_index * 4 + kicks_left)));
          CMatrix kicked = 0.7 * b + 0.3 * (w * b * w.adjoint());
          kicked = (kicked + kicked.adjoint()) / 2.0;
          double nb = ideal_norm(phi, kicked);
          if (nb > 0.0) {
            b = kicked / nb;
            continue;
          }
        }
        converged = true;
        break;
      }
    }
    any_converged = any_converged || converged;
    if (obj > best_obj + config.tol * std::max(1.0, best_obj)) {
      best_obj = obj;
      best.witness_a = a;
      best.witness_b = b;
      best.iterations = it;
      best.restarts_used = restart_index + 1;
    }
    ++restart_index;
  }

  // witnesses certify the reported value independently of the ascent path
  double certified = std::max(0.0, best.certify(t));
  best.value = std::sqrt(certified);

  bool closed_pair = phi.is_schatten() && psi.is_schatten() &&
                     ((phi.p() == kInf && psi.p() == kInf) ||
                      (phi.p() == 1.0 && psi.p() == 1.0));
  if (!any_converged) {
    best.exactness = Exactness::approximate;
    best.diagnostic = "no restart reached the relative-gain tolerance";
  } else if (closed_pair) {
    best.exactness = Exactness::exact;
    best.method += phi.p() == kInf ? " (row closed form certifies)" : " (column closed form certifies)";
  } else {
    best.exactness = Exactness::lower_bound;
  }
  return best;
}

NormEstimate min_norm(const MatrixTuple& t, const MinNormConfig& config) {
  const std::size_t m = t.m();
  NormEstimate est;
  est.method = "sphere ascent over coefficient vectors";

  auto value_of = [&](const Eigen::VectorXcd& v) {
    CMatrix acc = CMatrix::Zero(t.n(), t.n());
    for (std::size_t i = 0; i < m; ++i) acc += v(static_cast<Eigen::Index>(i)) * t.matrices[i];
    return opnorm(acc);
  };
  auto record = [&](const Eigen::VectorXcd& v, double val) {
    if (val > est.value) {
      est.value = val;
      est.witness_a = v;
    }
  };

  if (m == 1) {
    Eigen::VectorXcd v(1);
    v(0) = 1.0;
    record(v, value_of(v));
    est.exactness = Exactness::exact;
    est.method = "single coefficient: operator norm";
    return est;
  }

  if (m == 2) {
    // v = (cos s, sin s * e^{i u}); global phase fixed on the first entry
    double pi = 3.14159265358979323846;
    double best_s = 0.0, best_u = 0.0;
    for (int gs = 0; gs <= config.grid; ++gs) {
      double s = 0.5 * pi * gs / config.grid;
      for (int gu = 0; gu < config.grid; ++gu) {
        double u = 2.0 * pi * gu / config.grid;
        Eigen::VectorXcd v(2);
        v(0) = std::cos(s);
        v(1) = std::sin(s) * Complex(std::cos(u), std::sin(u));
        double val = value_of(v);
        if (val > est.value) {
          best_s = s;
          best_u = u;
          record(v, val);
        }
      }
    }
    double ds = 0.5 * pi / config.grid, du = 2.0 * pi / config.grid;
    for (int round = 0; round < 40; ++round) {
      bool improved = false;
      for (double s : {best_s - ds, best_s, best_s + ds})
        for (double u : {best_u - du, best_u, best_u + du}) {
          Eigen::VectorXcd v(2);
          v(0) = std::cos(s);
          v(1) = std::sin(s) * Complex(std::cos(u), std::sin(u));
          double val = value_of(v);
          if (val > est.value) {
            est.value = val;
            est.witness_a = v;
            best_s = s;
            best_u = u;
            improved = true;
          }
        }
      if (!improved) {
        ds *= 0.5;
        du *= 0.5;
      }
      if (ds < 1e-10) break;
    }
    est.exactness = Exactness::exact;
    est.method = "dense phase grid + refinement (m = 2)";
    return est;
  }

  Rng rng(config.seed);
  std::vector<Eigen::VectorXcd> starts;
  for (std::size_t i = 0; i < m; ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(m));
    e(static_cast<Eigen::Index>(i)) = 1.0;
    starts.push_back(e);
  }
  for (int r = 0; r < config.restarts; ++r) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.normal(), rng.normal());
    v.normalize();
    starts.push_back(v);
  }

  for (Eigen::VectorXcd v : starts) {
    double val = value_of(v);
    double step = 0.5;
    for (int it = 0; it < config.max_iters; ++it) {
      // gradient of the top singular value: u* T_i w per coordinate
      CMatrix acc = CMatrix::Zero(t.n(), t.n());
      for (std::size_t i = 0; i < m; ++i) acc += v(static_cast<Eigen::Index>(i)) * t.matrices[i];
      Eigen::JacobiSVD<CMatrix> svd(acc, Eigen::ComputeThinU | Eigen::ComputeThinV);
      Eigen::VectorXcd u = svd.matrixU().col(0);
      Eigen::VectorXcd w = svd.matrixV().col(0);
      Eigen::VectorXcd g(static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i)
        g(static_cast<Eigen::Index>(i)) = std::conj((u.adjoint() * (t.matrices[i] * w))(0, 0));
      Eigen::VectorXcd trial = (v + step * g).normalized();
      double tv = value_of(trial);
      if (tv > val + 1e-14) {
        v = trial;
        val = tv;
      } else {
        step *= 0.5;
        if (step < 1e-9) break;
      }
    }
    record(v, val);
  }
  est.exactness = Exactness::lower_bound;
  return est;
}

RTildeEstimate r_tilde_norm(const MatrixTuple& t, const SnSpec& phi,
                            const RTildeConfig& config) {
  const Eigen::Index n = t.n();
  const std::size_t m = t.m();
  RTildeEstimate est;

  // evaluator 1: Gram matrix G(xi) = (<T_i T_j* xi, xi>)_ij, norm in Phi*
  auto gram_value = [&](const Eigen::VectorXcd& xi) {
    CMatrix w(n, static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i)
      w.col(static_cast<Eigen::Index>(i)) = t.matrices[i].adjoint() * xi;
    CMatrix gram = w.adjoint() * w;
    return dual_eval(phi, s_numbers(gram));
  };
  {
    Rng rng(derive_seed(config.seed, 11));
    std::vector<Eigen::VectorXcd> starts;
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
      e(k) = 1.0;
      starts.push_back(e);
    }
    for (int r = 0; r < config.restarts; ++r) {
      Eigen::VectorXcd v(n);
      for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(rng.normal(), rng.normal());
      v.normalize();
      starts.push_back(v);
    }
    double best = 0.0;
    for (Eigen::VectorXcd xi : starts) {
      double val = gram_value(xi);
      double step = 0.4;
      for (int it = 0; it < config.max_iters; ++it) {
        Eigen::VectorXcd d(n);
        for (Eigen::Index i = 0; i < n; ++i) d(i) = Complex(rng.normal(), rng.normal());
        Eigen::VectorXcd trial = (xi + step * d).normalized();
        double tv = gram_value(trial);
        if (tv > val) {
          xi = trial;
          val = tv;
        } else if (it % 12 == 11) {
          step *= 0.6;
          if (step < 1e-7) break;
        }
      }
      best = std::max(best, val);
    }
    est.gram_value = std::sqrt(best);
  }

  // evaluator 2: sup over Phi-ball spectra a and orthonormal frames v(k) of
  // || sum_k a_k T(v_k) T(v_k)* ||
  {
    Rng rng(derive_seed(config.seed, 22));
    auto frame_value = [&](const CMatrix& u, Spectrum* a_out) {
      std::vector<CMatrix> bk(m);
      for (std::size_t k = 0; k < m; ++k) {
        CMatrix tv = CMatrix::Zero(n, n);
        for (std::size_t i = 0; i < m; ++i)
          tv += u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * t.matrices[i];
        bk[k] = tv * tv.adjoint();
      }
      // Frank-Wolfe on a: the objective is convex in a, so repeatedly moving
      // to the ball attainer of the supergradient is monotone
      std::vector<double> a(m, 0.0);
      a[0] = 1.0;
      double val = 0.0;
      for (int fw = 0; fw < 30; ++fw) {
        CMatrix acc = CMatrix::Zero(n, n);
        for (std::size_t k = 0; k < m; ++k) acc += a[k] * bk[k];
        Eigen::SelfAdjointEigenSolver<CMatrix> es((acc + acc.adjoint()) / 2.0);
        Eigen::VectorXcd top = es.eigenvectors().col(n - 1);
        double cur = es.eigenvalues()(n - 1);
        std::vector<double> g(m);
        for (std::size_t k = 0; k < m; ++k) g[k] = std::max(0.0, (top.adjoint() * (bk[k] * top))(0, 0).real());
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return g[x] > g[y]; });
        std::vector<double> gs(m);
        for (std::size_t k = 0; k < m; ++k) gs[k] = g[order[k]];
        AttainResult att = ball_attainer(phi, Spectrum::from_sorted(gs));
        std::vector<double> a_new(m, 0.0);
        for (std::size_t k = 0; k < att.beta.size() && k < m; ++k) a_new[order[k]] = att.beta[k];
        if (cur <= val * (1.0 + 1e-12)) {
          val = std::max(val, cur);
          break;
        }
        val = cur;
        a = std::move(a_new);
      }
      if (a_out) {
        std::vector<double> sorted_a = a;
        std::sort(sorted_a.begin(), sorted_a.end(), std::greater<double>());
        *a_out = Spectrum::from_sorted(sorted_a);
      }
      return val;
    };

    double best = 0.0;
    CMatrix u = CMatrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    best = frame_value(u, nullptr);
    for (int r = 0; r < config.restarts; ++r) {
      CMatrix cand = random_unitary(static_cast<int>(m), derive_seed(config.seed, 300 + static_cast<std::uint64_t>(r)));
      double v = frame_value(cand, nullptr);
      if (v > best) {
        best = v;
        u = cand;
      }
    }
    double step = 0.4;
    for (int it = 0; it < config.max_iters; ++it) {
      CMatrix k(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
      for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) = Complex(rng.normal(), rng.normal());
      CMatrix anti = (k - k.adjoint()) / 2.0;
      CMatrix trial = u + step * (u * anti);
      Eigen::HouseholderQR<CMatrix> qr(trial);
      CMatrix q = qr.householderQ();
      double v = frame_value(q, nullptr);
      if (v > best) {
        best = v;
        u = q;
      } else if (it % 12 == 11) {
        step *= 0.6;
        if (step < 1e-7) break;
      }
    }
    est.frame_value = std::sqrt(best);
  }

  est.value = std::max(est.gram_value, est.frame_value);
  est.exactness = Exactness::lower_bound;
  return est;
}

double cb_from_row(const Spectrum& x, const SnSpec& phi, const SnSpec& psi,
                   const MultiplicatorConfig& config) {
  return std::sqrt(multiplicator_norm(x.squared(), phi, psi, config).value);
}

double cb_oh_witness(const Spectrum& lam, double p, bool grid_mode) {
  if (p < 2.0) throw std::invalid_argument("cb_oh_witness requires p >= 2");
  if (lam.empty()) return 0.0;
  if (p == 2.0) return lam.head(); // B(H) edge: the index 4(1-2/p)^-1 diverges
  const double r = 4.0 / (1.0 - 2.0 / p);
  if (!grid_mode) return eval(SnSpec::schatten(r), lam);

  // independent re-derivation: maximize (sum lam^4 c^2)^(1/4) over the
  // positive part of the l_p sphere by nested grid refinement
  const std::size_t L = lam.size();
  auto objective = [&](const std::vector<double>& c) {
    double quad = 0.0, pnorm = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
      quad += std::pow(lam[i], 4.0) * c[i] * c[i];
      pnorm += std::pow(c[i], p);
    }
    if (pnorm == 0.0) return 0.0;
    return std::pow(quad, 0.25) / std::pow(pnorm, 0.5 / p);
  };
  std::vector<double> center(L, 1.0);
  double width = 1.0;
  double best = objective(center);
  std::vector<double> bestc = center;
  const double offsets[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (int round = 0; round < 60; ++round) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < L; ++i) combos *= 5;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<double> c(L);
      std::size_t rem = code;
      for (std::size_t i = 0; i < L; ++i) {
        c[i] = std::max(0.0, center[i] + offsets[rem % 5] * width);
        rem /= 5;
      }
      double v = objective(c);
      if (v > best) {
        best = v;
        bestc = c;
      }
    }
    center = bestc;
    width *= 0.55;
    if (width < 1e-9) break;
  }
  return best;
}

MatrixTuple spin_system(int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("spin_system: m in [1, 12]");
  int qubits = (m + 1) / 2;
  CMatrix id2 = CMatrix::Identity(2, 2);
  CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;

  auto pauli_string = [&](int site, const CMatrix& op) {
    CMatrix acc = CMatrix::Identity(1, 1);
    for (int q = 0; q < qubits; ++q) {
      const CMatrix& factor = q < site ? sz : (q == site ? op : id2);
      acc = kron(acc, factor);
    }
    return acc;
  };

  std::vector<CMatrix> us;
  for (int i = 0; i < m; ++i)
    us.push_back(pauli_string(i / 2, i % 2 == 0 ? sx : sy));
  return MatrixTuple(std::move(us));
}

HsharpResult hsharp_kyfan_theta(const MatrixTuple& t, double theta,
                                const std::vector<int>& trunc_levels,
                                const McnConfig& config) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("hsharp_kyfan_theta: theta in (0, 1]");
  SnSpec phi_theta = SnSpec::kyfan_theta(theta);

  HsharpResult out;
  out.row_part = row_norm(t);
  out.phi1_part = mcn_norm(t, SnSpec::schatten(1.0), phi_theta, config).value;
  out.closed_form = std::max(out.phi1_part, out.row_part);

  std::vector<int> levels = trunc_levels;
  std::sort(levels.begin(), levels.end());
  CMatrix prev_witness; // warm start: embedding the previous optimum keeps
                        // the truncated series monotone by construction
  for (int level : levels) {
    if (level < 1) throw std::invalid_argument("hsharp truncation level must be >= 1");
    Eigen::Index size = t.n() * level;
    if (size * size > 4096)
      throw config_error("hsharp truncation exceeds the (nN)^2 <= 4096 budget");
    std::vector<CMatrix> amplified;
    amplified.reserve(t.m());
    CMatrix id = CMatrix::Identity(level, level);
    for (const CMatrix& m : t.matrices) amplified.push_back(kron(m, id));
    MatrixTuple tn(std::move(amplified));
    McnConfig cfg = config;
    if (prev_witness.size() > 0) {
      // isometry C^n (x) C^{N_prev} -> C^n (x) C^N matching the kron layout
      Eigen::Index prev_level = prev_witness.rows() / t.n();
      CMatrix v = CMatrix::Zero(size, prev_witness.rows());
      for (Eigen::Index i = 0; i < t.n(); ++i)
        for (Eigen::Index j = 0; j < prev_level; ++j)
          v(i * level + j, i * prev_level + j) = 1.0;
      cfg.extra_starts.push_back(v * prev_witness * v.adjoint());
    }
    NormEstimate est = mcn_norm(tn, phi_theta, phi_theta, cfg);
    prev_witness = est.witness_b;
    out.truncated.emplace_back(level, std::move(est));
  }
  return out;
}

} // namespace snideal
