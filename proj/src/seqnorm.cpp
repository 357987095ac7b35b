// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/seqnorm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "snideal/rng.hpp"

namespace snideal {

namespace {

double schatten_conjugate(double p) {
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

// j^(q/p - 1), the Lorentz weight; nonincreasing in j since q <= p.
double lorentz_weight(double p, double q, std::uint64_t j) {
  return std::pow(static_cast<double>(j), q / p - 1.0);
}

double lp_sum(const std::vector<double>& v, double p) {
  // scaled by the head to keep large p stable
  double head = 0.0;
  for (double x : v) head = std::max(head, x);
  if (head == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += std::pow(x / head, p);
  return head * std::pow(acc, 1.0 / p);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Longest single spectrum this spec can evaluate (explicit binorm prefixes
// run out of pi terms).
std::uint64_t max_safe_len(const SnSpec& spec) {
  if (spec.is_binorm()) return spec.pi_length();
  return std::numeric_limits<std::uint64_t>::max();
}

Spectrum flat(std::size_t j, double scale = 1.0) {
  return Spectrum::from_sorted(std::vector<double>(j, scale));
}

Spectrum geometric(std::size_t len, double ratio) {
  std::vector<double> v(len);
  double x = 1.0;
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = x;
    x *= ratio;
  }
  return Spectrum::from_sorted(std::move(v));
}

Spectrum random_spectrum(Rng& rng, int max_len) {
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  std::vector<double> v(static_cast<std::size_t>(len));
  for (double& x : v) x = rng.uniform(1e-3, 1.0);
  std::sort(v.begin(), v.end(), std::greater<double>());
  if (!v.empty()) {
    double head = v.front();
    for (double& x : v) x /= head; // normalized head keeps ratios comparable
  }
  return Spectrum::from_sorted(std::move(v));
}

std::vector<Spectrum> structured_candidates(int max_len) {
  std::vector<Spectrum> out;
  for (int j = 1; j <= max_len; ++j) out.push_back(flat(static_cast<std::size_t>(j)));
  for (double r : {0.2, 0.5, 0.8})
    out.push_back(geometric(static_cast<std::size_t>(max_len), r));
  return out;
}

ojson spectrum_json(const Spectrum& s) { return ojson(s.values()); }

} // namespace

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::lower_bound: return "lower_bound";
    case Exactness::approximate: return "approximate";
  }
  return "?";
}

double eval(const SnSpec& spec, const Spectrum& s) {
  if (s.empty()) return 0.0;
  switch (spec.family()) {
    case Family::schatten: {
      if (spec.p() == kInf) return s.head();
      return lp_sum(s.values(), spec.p());
    }
    case Family::kyfan: {
      std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(spec.k()), s.size());
      double acc = 0.0;
      for (std::size_t i = 0; i < k; ++i) acc += s[i];
      return acc;
    }
    case Family::kyfan_theta:
      return s[0] + spec.theta() * (s.size() > 1 ? s[1] : 0.0);
    case Family::lorentz: {
      double head = s.head();
      if (head == 0.0) return 0.0;
      double q = spec.q();
      double acc = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j)
        acc += std::pow(s[j] / head, q) * lorentz_weight(spec.p(), q, j + 1);
      return head * std::pow(acc, 1.0 / q);
    }
    case Family::binorm: {
      double acc = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) acc += spec.pi(j + 1) * s[j];
      return acc;
    }
  }
  return 0.0;
}

double eval_compressed(const SnSpec& spec, const CompressedSpectrum& s) {
  if (s.runs.empty()) return 0.0;
  switch (spec.family()) {
    case Family::schatten: {
      if (spec.p() == kInf) return s.runs.front().value;
      double head = s.runs.front().value;
      if (head == 0.0) return 0.0;
      double acc = 0.0;
      for (const auto& r : s.runs)
        acc += static_cast<double>(r.count) * std::pow(r.value / head, spec.p());
      return head * std::pow(acc, 1.0 / spec.p());
    }
    case Family::kyfan: {
      std::uint64_t left = static_cast<std::uint64_t>(spec.k());
      double acc = 0.0;
      for (const auto& r : s.runs) {
        std::uint64_t take = std::min(left, r.count);
        acc += static_cast<double>(take) * r.value;
        left -= take;
        if (left == 0) break;
      }
      return acc;
    }
    case Family::kyfan_theta: {
      double first = s.runs[0].value;
      double second = 0.0;
      if (s.runs[0].count >= 2)
        second = first;
      else if (s.runs.size() > 1)
        second = s.runs[1].value;
      return first + spec.theta() * second;
    }
    case Family::lorentz: {
      double head = s.runs.front().value;
      if (head == 0.0) return 0.0;
      double q = spec.q();
      double acc = 0.0;
      std::uint64_t rank = 0;
      for (const auto& r : s.runs) {
        double wsum = 0.0;
        for (std::uint64_t i = 1; i <= r.count; ++i)
          wsum += lorentz_weight(spec.p(), q, rank + i);
        acc += std::pow(r.value / head, q) * wsum;
        rank += r.count;
      }
      return head * std::pow(acc, 1.0 / q);
    }
    case Family::binorm: {
      double acc = 0.0;
      std::uint64_t rank = 0;
      for (const auto& r : s.runs) {
        double psum = 0.0;
        for (std::uint64_t i = 1; i <= r.count; ++i) psum += spec.pi(rank + i);
        acc += r.value * psum;
        rank += r.count;
      }
      return acc;
    }
  }
  return 0.0;
}

double convexify2(const SnSpec& spec, const Spectrum& s) {
  return std::sqrt(eval(spec, s.squared()));
}

Spectrum tensor_seq(const Spectrum& s, const Spectrum& t) {
  std::vector<double> prod;
  prod.reserve(s.size() * t.size());
  for (double a : s.values())
    for (double b : t.values()) prod.push_back(a * b);
  std::sort(prod.begin(), prod.end(), std::greater<double>());
  return Spectrum::from_sorted(std::move(prod));
}

namespace {

AttainResult flat_attainer_best(const Spectrum& c,
                                const std::function<double(std::size_t)>& phi_of_flat) {
  // sup over flat directions 1_j of the pairing against the ball; exact when
  // the positive decreasing unit ball has flat extreme points
  double best = 0.0;
  std::size_t best_j = 1;
  double prefix = 0.0;
  for (std::size_t j = 1; j <= c.size(); ++j) {
    prefix += c[j - 1];
    double val = prefix / phi_of_flat(j);
    if (val > best) {
      best = val;
      best_j = j;
    }
  }
  AttainResult r;
  std::vector<double> beta(c.size(), 0.0);
  double level = 1.0 / phi_of_flat(best_j);
  for (std::size_t i = 0; i < best_j; ++i) beta[i] = level;
  r.beta = Spectrum::from_sorted(std::move(beta));
  double pair = 0.0;
  for (std::size_t i = 0; i < best_j; ++i) pair += c[i] * r.beta[i];
  r.value = pair;
  r.exact = true;
  return r;
}

double lorentz_ball_norm(const SnSpec& spec, const std::vector<double>& beta) {
  // weighted l_q expression, valid verbatim on the decreasing cone
  double acc = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    acc += lorentz_weight(spec.p(), spec.q(), j + 1) * std::pow(beta[j], spec.q());
  return std::pow(acc, 1.0 / spec.q());
}

// Pool-adjacent-violators: Euclidean projection onto nonincreasing sequences.
void project_nonincreasing(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> level(n);
  std::vector<std::size_t> width(n);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    level[blocks] = v[i];
    width[blocks] = 1;
    ++blocks;
    while (blocks > 1 && level[blocks - 2] < level[blocks - 1]) {
      double merged = (level[blocks - 2] * static_cast<double>(width[blocks - 2]) +
                       level[blocks - 1] * static_cast<double>(width[blocks - 1])) /
                      static_cast<double>(width[blocks - 2] + width[blocks - 1]);
      width[blocks - 2] += width[blocks - 1];
      level[blocks - 2] = merged;
      --blocks;
    }
  }
  std::size_t idx = 0;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t w = 0; w < width[b]; ++w) v[idx++] = std::max(0.0, level[b]);
}

AttainResult lorentz_primal_attainer(const SnSpec& spec, const Spectrum& c) {
  const std::size_t n = c.size();
  const double q = spec.q();
  const double qp = q / (q - 1.0);
  AttainResult result;
  result.exact = false;
  if (n == 0) {
    result.exact = true;
    return result;
  }

  // weighted-Hoelder upper bound, ignoring the monotonicity constraint
  double upper = 0.0;
  std::vector<double> unconstrained(n);
  for (std::size_t j = 0; j < n; ++j) {
    double w = lorentz_weight(spec.p(), q, j + 1);
    upper += std::pow(c[j], qp) * std::pow(w, 1.0 - qp);
    unconstrained[j] = w > 0.0 ? std::pow(c[j] / w, 1.0 / (q - 1.0)) : 0.0;
  }
  upper = std::pow(upper, 1.0 / qp);

  double nrm = lorentz_ball_norm(spec, unconstrained);
  if (nrm > 0.0)
    for (double& b : unconstrained) b /= nrm;
  bool monotone = true;
  for (std::size_t j = 1; j < n; ++j)
    if (unconstrained[j] > unconstrained[j - 1] + 1e-14 * unconstrained[0]) monotone = false;
  if (monotone) {
    result.beta = Spectrum::from_sorted(unconstrained);
    double pair = 0.0;
    for (std::size_t j = 0; j < n; ++j) pair += c[j] * unconstrained[j];
    result.value = pair;
    result.exact = true;
    result.gap = std::max(0.0, upper - pair);
    return result;
  }

  // projected gradient ascent on the convex set {nonincreasing >= 0, weighted
  // q-norm <= 1}; objective is linear so local optimum = global
  auto feasibilize = [&](std::vector<double>& b) {
    project_nonincreasing(b);
    double v = lorentz_ball_norm(spec, b);
    if (v > 0.0)
      for (double& x : b) x /= v;
  };
  auto pairing = [&](const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += c[j] * b[j];
    return acc;
  };

  std::vector<std::vector<double>> starts;
  {
    std::vector<double> srt = unconstrained;
    std::sort(srt.begin(), srt.end(), std::greater<double>());
    starts.push_back(srt);
    auto best_flat = flat_attainer_best(c, [&](std::size_t j) {
      return lorentz_ball_norm(spec, std::vector<double>(j, 1.0));
    });
    std::vector<double> f(best_flat.beta.values());
    f.resize(n, 0.0);
    starts.push_back(f);
    starts.push_back(std::vector<double>(n, 1.0));
    starts.push_back(std::vector<double>(c.values()));
    for (double r : {0.3, 0.5, 0.7, 0.9})
      starts.push_back(std::vector<double>(geometric(n, r).values()));
  }

  double best = 0.0;
  std::vector<double> best_beta(n, 0.0);
  for (auto& b : starts) {
    feasibilize(b);
    double cur = pairing(b);
    double step = 0.5 / std::max(1.0, c.head());
    for (int it = 0; it < 200; ++it) {
      std::vector<double> trial = b;
      for (std::size_t j = 0; j < n; ++j) trial[j] += step * c[j];
      feasibilize(trial);
      double tv = pairing(trial);
      if (tv > cur * (1.0 + 1e-9) || (cur == 0.0 && tv > 0.0)) {
        b = std::move(trial);
        cur = tv;
      } else {
        step *= 0.5;
        if (step < 1e-12) break;
      }
    }
    if (cur > best) {
      best = cur;
      best_beta = b;
    }
  }
  result.beta = Spectrum::from_sorted(best_beta);
  result.value = best;
  result.gap = std::max(0.0, upper - best);
  return result;
}

} // namespace

AttainResult ball_attainer(const SnSpec& spec, const Spectrum& c) {
  AttainResult r;
  if (c.empty()) return r;
  switch (spec.family()) {
    case Family::schatten: {
      double p = spec.p();
      if (p == kInf) {
        r.beta = flat(c.size());
        r.value = c.sum();
        return r;
      }
      if (p == 1.0) {
        std::vector<double> b(c.size(), 0.0);
        b[0] = 1.0;
        r.beta = Spectrum::from_sorted(std::move(b));
        r.value = c.head();
        return r;
      }
      double pc = schatten_conjugate(p);
      double denom = lp_sum(c.values(), pc);
      std::vector<double> b(c.size(), 0.0);
      if (denom > 0.0)
        for (std::size_t i = 0; i < c.size(); ++i)
          b[i] = std::pow(c[i] / denom, pc - 1.0);
      else
        b[0] = 1.0;
      double pair = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) pair += c[i] * b[i];
      r.beta = Spectrum::from_sorted(std::move(b));
      r.value = pair;
      return r;
    }
    case Family::kyfan: {
      int k = spec.k();
      return flat_attainer_best(c, [k](std::size_t j) {
        return static_cast<double>(std::min<std::size_t>(j, static_cast<std::size_t>(k)));
      });
    }
    case Family::kyfan_theta: {
      double th = spec.theta();
      return flat_attainer_best(c,
                                [th](std::size_t j) { return j == 1 ? 1.0 : 1.0 + th; });
    }
    case Family::binorm: {
      std::vector<double> s(c.size());
      double acc = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        acc += spec.pi(j + 1);
        s[j] = acc;
      }
      return flat_attainer_best(c, [&s](std::size_t j) { return s[j - 1]; });
    }
    case Family::lorentz: {
      if (spec.q() == 1.0) {
        std::vector<double> s(c.size());
        double acc = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) {
          acc += lorentz_weight(spec.p(), 1.0, j + 1);
          s[j] = acc;
        }
        return flat_attainer_best(c, [&s](std::size_t j) { return s[j - 1]; });
      }
      return lorentz_primal_attainer(spec, c);
    }
  }
  return r;
}

AttainResult dual_ball_attainer(const SnSpec& spec, const Spectrum& c) {
  AttainResult r;
  if (c.empty()) return r;
  switch (spec.family()) {
    case Family::schatten:
      return ball_attainer(SnSpec::schatten(schatten_conjugate(spec.p())), c);
    case Family::kyfan: {
      std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(spec.k()), c.size());
      std::vector<double> b(c.size(), 0.0);
      double pair = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        b[i] = 1.0;
        pair += c[i];
      }
      r.beta = Spectrum::from_sorted(std::move(b));
      r.value = pair;
      return r;
    }
    case Family::kyfan_theta: {
      std::vector<double> b(c.size(), 0.0);
      b[0] = 1.0;
      double pair = c[0];
      if (c.size() > 1) {
        b[1] = spec.theta();
        pair += spec.theta() * c[1];
      }
      r.beta = Spectrum::from_sorted(std::move(b));
      r.value = pair;
      return r;
    }
    case Family::binorm: {
      std::vector<double> b(c.size());
      double pair = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        b[j] = spec.pi(j + 1);
        pair += b[j] * c[j];
      }
      r.beta = Spectrum::from_sorted(std::move(b));
      r.value = pair;
      return r;
    }
    case Family::lorentz: {
      // norming functional: beta_j = w_j c_j^(q-1) / Phi(c)^(q-1)
      double q = spec.q();
      double phi = eval(spec, c);
      std::vector<double> b(c.size(), 0.0);
      double pair = 0.0;
      if (phi > 0.0) {
        for (std::size_t j = 0; j < c.size(); ++j) {
          b[j] = lorentz_weight(spec.p(), q, j + 1) * std::pow(c[j] / phi, q - 1.0);
          pair += b[j] * c[j];
        }
      } else {
        b[0] = 1.0;
      }
      r.beta = Spectrum::from_sorted(std::move(b));
      r.value = pair;
      return r;
    }
  }
  return r;
}

double dual_eval(const SnSpec& spec, const Spectrum& s) {
  if (s.empty()) return 0.0;
  switch (spec.family()) {
    case Family::schatten:
      return eval(SnSpec::schatten(schatten_conjugate(spec.p())), s);
    case Family::kyfan:
      return std::max(s.head(), s.sum() / static_cast<double>(spec.k()));
    case Family::kyfan_theta:
      return std::max(s.head(), s.sum() / (1.0 + spec.theta()));
    case Family::binorm:
    case Family::lorentz:
      return ball_attainer(spec, s).value;
  }
  return 0.0;
}

bool dual_is_exact(const SnSpec& spec) {
  if (spec.family() == Family::lorentz) return spec.q() == 1.0;
  return true;
}

StarReport check_star(const SnSpec& spec, const StarConfig& config) {
  StarReport report;
  report.mode = config.mode;

  if (config.mode == StarMode::binorm_partial_sums) {
    if (!spec.is_binorm())
      throw std::invalid_argument("binorm_partial_sums mode requires a binorm spec");
    const std::uint64_t window = config.binorm_window;
    const std::uint64_t terms = window * window;
    if (terms > (std::uint64_t{1} << 26))
      throw config_error("binorm window too large: needs " + std::to_string(terms) +
                         " pi terms");
    if (terms > spec.pi_length())
      throw config_error("binorm sequence shorter than window^2");
    std::vector<double> prefix(static_cast<std::size_t>(terms) + 1, 0.0);
    for (std::uint64_t j = 1; j <= terms; ++j)
      prefix[static_cast<std::size_t>(j)] =
          prefix[static_cast<std::size_t>(j - 1)] + spec.pi(j);
    const std::uint64_t lo = config.include_unit_rows ? 1 : 2;
    double best = 0.0;
    std::uint64_t bm = lo, bn = lo;
    for (std::uint64_t m = lo; m <= window; ++m) {
      for (std::uint64_t n = lo; n <= window; ++n) {
        double ratio = prefix[static_cast<std::size_t>(m * n)] /
                       (prefix[static_cast<std::size_t>(m)] * prefix[static_cast<std::size_t>(n)]);
        if (ratio > best) {
          best = ratio;
          bm = m;
          bn = n;
        }
      }
    }
    report.constant = best;
    report.witness_m = bm;
    report.witness_n = bn;
    report.witness_x = flat(static_cast<std::size_t>(std::min<std::uint64_t>(bm, 4096)));
    report.witness_y = flat(static_cast<std::size_t>(std::min<std::uint64_t>(bn, 4096)));
    report.holds = best <= config.c_bound;
    return report;
  }

  const bool reversed = config.mode == StarMode::star_star;
  int max_len = config.max_len;
  std::uint64_t safe = max_safe_len(spec);
  if (safe < std::numeric_limits<std::uint64_t>::max())
    max_len = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(max_len), std::max<std::uint64_t>(1, isqrt_u64(safe))));

  auto ratio_of = [&](const Spectrum& x, const Spectrum& y) {
    double denom = eval(spec, x) * eval(spec, y);
    if (denom == 0.0) return reversed ? kInf : 0.0;
    return eval(spec, tensor_seq(x, y)) / denom;
  };

  std::vector<Spectrum> pool = structured_candidates(max_len);
  Rng rng(config.seed);
  for (int i = 0; i < config.samples; ++i) pool.push_back(random_spectrum(rng, max_len));

  double best = reversed ? kInf : 0.0;
  Spectrum bx, by;
  auto consider = [&](const Spectrum& x, const Spectrum& y) {
    double r = ratio_of(x, y);
    if ((reversed && r < best) || (!reversed && r > best)) {
      best = r;
      bx = x;
      by = y;
    }
  };
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size() && j < i + 40; ++j) consider(pool[i], pool[j]);

  // local search around the best pair
  double scale = 0.25;
  for (int round = 0; round < 200; ++round) {
    Spectrum x = bx, y = by;
    std::vector<double> xv = x.values(), yv = y.values();
    for (double& v : xv) v = std::max(0.0, v * (1.0 + scale * (rng.uniform() - 0.5)));
    for (double& v : yv) v = std::max(0.0, v * (1.0 + scale * (rng.uniform() - 0.5)));
    Spectrum xt(xv), yt(yv);
    if (xt.head() == 0.0 || yt.head() == 0.0) continue;
    double r = ratio_of(xt, yt);
    if ((reversed && r < best) || (!reversed && r > best)) {
      best = r;
      bx = xt;
      by = yt;
    } else if (round % 25 == 24) {
      scale *= 0.7;
    }
  }

  report.constant = best;
  report.witness_x = bx;
  report.witness_y = by;
  report.holds = reversed ? best >= (config.c_bound == kInf ? 0.0 : config.c_bound)
                          : best <= config.c_bound;
  return report;
}

CampaignReport check_os_cross(const SnSpec& phi, const SnSpec& psi,
                              const OsCrossConfig& config) {
  CampaignReport report;
  report.spec.name = "os_cross";
  report.spec.seed = config.seed;
  report.spec.params["phi"] = phi.label();
  report.spec.params["psi"] = psi.label();
  report.spec.params["samples"] = config.samples;
  report.spec.params["max_len"] = config.max_len;
  report.tolerances["violation"] = config.tol;
  report.spec.params["dominates"] = dominates(phi, psi).holds;

  int max_len = config.max_len;
  for (const SnSpec* s : {&phi, &psi}) {
    std::uint64_t safe = max_safe_len(*s);
    if (safe < std::numeric_limits<std::uint64_t>::max())
      max_len = static_cast<int>(std::min<std::uint64_t>(
          static_cast<std::uint64_t>(max_len), std::max<std::uint64_t>(1, isqrt_u64(safe))));
  }

  // deterministic 0/1 grid first: decreasing 0/1 vectors are the flats 1_j
  std::vector<Spectrum> pool;
  for (std::size_t j = 1; j <= 4; ++j) pool.push_back(flat(j));
  std::vector<std::array<Spectrum, 3>> triples;
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool) triples.push_back({x, y, z});

  Rng rng(config.seed);
  std::vector<Spectrum> extra = structured_candidates(max_len);
  for (int i = 0; i < config.samples; ++i) extra.push_back(random_spectrum(rng, max_len));
  for (int i = 0; i < config.samples; ++i) {
    const Spectrum& x = extra[rng.below(extra.size())];
    const Spectrum& y = extra[rng.below(extra.size())];
    const Spectrum& z = extra[rng.below(extra.size())];
    triples.push_back({x, y, z});
  }

  double tightest = kInf;
  ojson tightest_case;
  for (const auto& [x, y, z] : triples) {
    double nx = eval(psi, x), nz = eval(phi, z);
    if (nx == 0.0 || nz == 0.0) continue;
    double lhs = eval(psi, tensor_seq(x, y)) / nx;
    double rhs = eval(phi, tensor_seq(z, y)) / nz;
    ++report.cases_run;
    bool ok = lhs <= rhs * (1.0 + config.tol) + config.tol;
    if (ok) {
      ++report.cases_passed;
      if (rhs - lhs < tightest) {
        tightest = rhs - lhs;
        tightest_case = {{"x", spectrum_json(x)}, {"y", spectrum_json(y)},
                         {"z", spectrum_json(z)}, {"lhs", lhs},         {"rhs", rhs}};
      }
    } else {
      ojson w = {{"x", spectrum_json(x)}, {"y", spectrum_json(y)},
                 {"z", spectrum_json(z)}, {"lhs", lhs},         {"rhs", rhs}};
      if (report.witnesses.size() < 32) report.witnesses.push_back(w);
      if (report.cases.size() < 16)
        report.cases.push_back({w, {{"violation", lhs - rhs}}, false});
    }
  }
  if (!tightest_case.is_null() && report.cases.size() < 16)
    report.cases.push_back({tightest_case, {{"margin", tightest}}, true});
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::fail;
  return report;
}

BoydEstimate boyd_estimate(const SnSpec& spec, std::uint64_t n_max) {
  if (n_max < 4) throw std::invalid_argument("boyd_estimate requires n_max >= 4");
  if (spec.is_binorm() && n_max > spec.pi_length())
    throw config_error("binorm sequence shorter than n_max");

  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 4; n <= n_max; n *= 2) grid.push_back(n);
  if (grid.empty() || grid.back() != n_max) grid.push_back(n_max);

  BoydEstimate out;

  if (spec.family() == Family::schatten) {
    // log n / log n^(1/p) simplifies to p identically
    bool bounded = spec.p() == kInf;
    for (std::uint64_t n : grid) out.series.emplace_back(n, bounded ? kInf : spec.p());
    out.refined_series = out.series;
    out.unbounded = bounded;
    out.p_estimate = bounded ? kInf : spec.p();
    out.trend_stable = true;
    return out;
  }
  if (spec.family() == Family::kyfan || spec.family() == Family::kyfan_theta) {
    for (std::uint64_t n : grid) {
      double phi = spec.family() == Family::kyfan
                       ? static_cast<double>(std::min<std::uint64_t>(
                             n, static_cast<std::uint64_t>(spec.k())))
                       : (n == 1 ? 1.0 : 1.0 + spec.theta());
      double v = phi > 1.0 ? std::log(static_cast<double>(n)) / std::log(phi) : kInf;
      out.series.emplace_back(n, v);
    }
    out.refined_series = out.series;
    out.unbounded = true;
    out.p_estimate = kInf;
    out.trend_stable = true;
    return out;
  }

  // cumulative Phi(1^n) for binorm / lorentz
  std::vector<double> phi_at(grid.size(), 0.0);
  {
    double acc = 0.0;
    std::size_t g = 0;
    for (std::uint64_t j = 1; j <= grid.back() && g < grid.size(); ++j) {
      if (spec.family() == Family::binorm)
        acc += spec.pi(j);
      else
        acc += lorentz_weight(spec.p(), spec.q(), j);
      while (g < grid.size() && grid[g] == j) {
        phi_at[g] = spec.family() == Family::binorm ? acc : std::pow(acc, 1.0 / spec.q());
        ++g;
      }
    }
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    double lg = std::log(phi_at[i]);
    out.series.emplace_back(grid[i], lg > 0.0 ? std::log(static_cast<double>(grid[i])) / lg : kInf);
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double dphi = std::log(phi_at[i]) - std::log(phi_at[i - 1]);
    double dn = std::log(static_cast<double>(grid[i])) - std::log(static_cast<double>(grid[i - 1]));
    out.refined_series.emplace_back(grid[i], dphi > 0.0 ? dn / dphi : kInf);
  }

  double last = out.refined_series.back().second;
  out.unbounded = !(std::isfinite(last));
  out.p_estimate = last;
  if (out.refined_series.size() >= 2) {
    double prev = out.refined_series[out.refined_series.size() - 2].second;
    out.trend_stable = std::isfinite(last) && std::isfinite(prev) &&
                       std::abs(last - prev) <= 0.01 * std::max(1.0, std::abs(last));
  }
  return out;
}

std::vector<std::pair<int, double>> tensor_power_trace(const SnSpec& spec,
                                                       const Spectrum& x, int n_max,
                                                       const TensorPowerConfig& config) {
  if (x.empty()) throw std::invalid_argument("tensor_power_trace: empty spectrum");
  if (n_max < 1) throw std::invalid_argument("tensor_power_trace: n_max >= 1");
  double head = x.head();
  CompressedSpectrum base = CompressedSpectrum::from_spectrum(x, 1e-12 * head);
  if (base.runs.size() > 6)
    throw std::invalid_argument("tensor_power_trace: more than 6 distinct values");

  // total rank grows like size^n; refuse rather than thrash
  double projected = std::pow(static_cast<double>(x.size()), n_max);
  if (projected > static_cast<double>(config.max_total_rank))
    throw config_error("tensor power exceeds rank budget");

  std::vector<std::pair<int, double>> series;
  CompressedSpectrum cur = base;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<CompressedSpectrum::Run> prod;
      prod.reserve(cur.runs.size() * base.runs.size());
      for (const auto& a : cur.runs)
        for (const auto& b : base.runs) prod.push_back({a.value * b.value, a.count * b.count});
      std::sort(prod.begin(), prod.end(),
                [](const auto& a, const auto& b) { return a.value > b.value; });
      CompressedSpectrum next;
      double top = prod.empty() ? 0.0 : prod.front().value;
      for (const auto& r : prod) {
        if (!next.runs.empty() && std::abs(next.runs.back().value - r.value) <= 1e-12 * top)
          next.runs.back().count += r.count;
        else
          next.runs.push_back(r);
      }
      if (next.runs.size() > config.max_distinct)
        throw config_error("tensor power exceeds distinct-value budget");
      cur = std::move(next);
    }
    double nrm = eval_compressed(spec, cur);
    series.emplace_back(n, std::pow(nrm, 1.0 / static_cast<double>(n)));
  }
  return series;
}

DominanceReport dominates(const SnSpec& phi, const SnSpec& psi,
                          const DominanceConfig& config) {
  DominanceReport report;
  int max_len = config.max_len;
  for (const SnSpec* s : {&phi, &psi}) {
    std::uint64_t safe = max_safe_len(*s);
    if (safe < std::numeric_limits<std::uint64_t>::max())
      max_len = static_cast<int>(
          std::min<std::uint64_t>(static_cast<std::uint64_t>(max_len), safe));
  }
  std::vector<Spectrum> pool = structured_candidates(max_len);
  Rng rng(config.seed);
  for (int i = 0; i < config.samples; ++i) pool.push_back(random_spectrum(rng, max_len));
  for (const Spectrum& s : pool) {
    double pv = eval(phi, s);
    double qv = eval(psi, s);
    if (qv > pv * (1.0 + config.tol)) {
      report.holds = false;
      report.witness = s;
      report.phi_value = pv;
      report.psi_value = qv;
      return report;
    }
  }
  return report;
}

SeqEstimate multiplicator_norm(const Spectrum& x, const SnSpec& phi, const SnSpec& psi,
                               const MultiplicatorConfig& config) {
  SeqEstimate est;
  if (x.empty()) return est;

  if (phi.is_schatten() && psi.is_schatten()) {
    if (phi.p() <= psi.p()) {
      est.value = eval(SnSpec::schatten(psi.p()), x);
      est.exactness = Exactness::exact;
      est.maximizer = Spectrum{1.0};
      est.method = "closed-form: ||x||_q for schatten pairs";
      return est;
    }
    est.value = kInf;
    est.exactness = Exactness::exact;
    est.method = "divergent: schatten pair with p > q";
    return est;
  }

  int max_len = config.max_len;
  for (const SnSpec* s : {&phi, &psi}) {
    std::uint64_t safe = max_safe_len(*s);
    if (safe < std::numeric_limits<std::uint64_t>::max()) {
      std::uint64_t cap = std::max<std::uint64_t>(1, safe / std::max<std::size_t>(1, x.size()));
      max_len = static_cast<int>(
          std::min<std::uint64_t>(static_cast<std::uint64_t>(max_len), cap));
    }
  }

  auto ratio_of = [&](const Spectrum& a) {
    double denom = eval(phi, a);
    if (denom == 0.0) return 0.0;
    return eval(psi, tensor_seq(x, a)) / denom;
  };

  std::vector<Spectrum> pool = structured_candidates(max_len);
  pool.push_back(x);
  Rng rng(config.seed);
  for (int i = 0; i < config.samples; ++i) pool.push_back(random_spectrum(rng, max_len));

  double best = 0.0;
  Spectrum arg;
  for (const Spectrum& a : pool) {
    double r = ratio_of(a);
    if (r > best) {
      best = r;
      arg = a;
    }
  }
  double scale = 0.25;
  for (int round = 0; round < config.refine_rounds; ++round) {
    std::vector<double> av = arg.values();
    for (double& v : av) v = std::max(0.0, v * (1.0 + scale * (rng.uniform() - 0.5)));
    Spectrum trial(av);
    if (trial.head() == 0.0) continue;
    double r = ratio_of(trial);
    if (r > best) {
      best = r;
      arg = trial;
    } else if (round % 10 == 9) {
      scale *= 0.7;
    }
  }
  est.value = best;
  est.maximizer = arg;
  est.exactness = Exactness::lower_bound;
  est.method = "candidate sweep + local refinement";
  return est;
}

} // namespace snideal
