// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per check, one pass/fail line each, every
// tolerance pinned in code. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "snideal/json_io.hpp"
#include "snideal/rng.hpp"
#include "snideal/verify.hpp"

using namespace snideal;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& label,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

MatrixTuple seeded_tuple(int m, int n, std::uint64_t seed) {
  std::vector<CMatrix> ms;
  for (int i = 0; i < m; ++i)
    ms.push_back(random_matrix(n, n, derive_seed(seed, 50 + static_cast<std::uint64_t>(i))));
  return MatrixTuple(std::move(ms));
}

Spectrum seeded_spectrum(Rng& rng, int max_len) {
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  std::vector<double> v(static_cast<std::size_t>(len));
  for (double& x : v) x = rng.uniform(1e-3, 1.0);
  return Spectrum(std::move(v));
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  double worst_row = 0.0, worst_col = 0.0, worst_oh = 0.0;
  for (int cse = 0; cse < 50; ++cse) {
    std::uint64_t seed = derive_seed(101, static_cast<std::uint64_t>(cse));
    Rng pick(seed);
    int n = 1 + static_cast<int>(pick.below(4));
    int m = 1 + static_cast<int>(pick.below(4));
    MatrixTuple t = seeded_tuple(m, n, seed);
    McnConfig cfg;
    cfg.seed = derive_seed(seed, 9);
    worst_row = std::max(worst_row,
                         std::abs(mcn_norm(t, SnSpec::schatten(kInf), SnSpec::schatten(kInf), cfg).value -
                                  row_norm(t)));
    worst_col = std::max(worst_col,
                         std::abs(mcn_norm(t, SnSpec::schatten(1.0), SnSpec::schatten(1.0), cfg).value -
                                  col_norm(t)));
    McnConfig cfg2 = cfg;
    cfg2.restarts = 24;
    worst_oh = std::max(worst_oh,
                        std::abs(mcn_norm(t, SnSpec::schatten(2.0), SnSpec::schatten(2.0), cfg2).value -
                                 oh_norm(t)));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = worst_row <= 1e-6 && worst_col <= 1e-6 && worst_oh <= 1e-3 && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "row dev %.2e, col dev %.2e, oh dev %.2e, %.1fs",
                worst_row, worst_col, worst_oh, secs);
  report(1, pass, "closed-form agreement on 50 seeded tuples", buf);
}

void criterion_2() {
  SnSpec kf2 = SnSpec::kyfan(2);
  double tensor = eval(kf2, tensor_seq(Spectrum{1.0, 1.0}, Spectrum{1.0, 1.0}));
  double square = eval(kf2, Spectrum{1.0, 1.0}) * eval(kf2, Spectrum{1.0, 1.0});
  CampaignSpec cs;
  cs.name = "os_cross";
  cs.params = {{"phi", "kyfan:2"}, {"psi", "kyfan:2"}};
  cs.seed = 7;
  CampaignReport r = run_campaign(cs);
  bool pass = tensor == 2.0 && square == 4.0 && r.verdict == Verdict::fail &&
              !r.witnesses.empty();
  char buf[120];
  std::snprintf(buf, sizeof buf, "tensor %.17g vs square %.17g, campaign %s with %zu witnesses",
                tensor, square, to_string(r.verdict).c_str(), r.witnesses.size());
  report(2, pass, "Ky Fan 2 counterexample reproduced exactly", buf);
}

void criterion_3() {
  CampaignSpec cs;
  cs.name = "duality";
  cs.params = {{"cases", 20}, {"tol", 1e-4}};
  cs.seed = 13;
  CampaignReport r = run_campaign(cs);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%zu/%zu pairs agree within 1e-4", r.cases_passed, r.cases_run);
  report(3, r.verdict == Verdict::pass, "trace duality for schatten pairs", buf);
}

void criterion_4() {
  CampaignSpec cs;
  cs.name = "lorentz_star";
  cs.params = {{"samples", 1000}, {"tol", 1e-12}};
  cs.seed = 17;
  CampaignReport r = run_campaign(cs);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%zu/%zu (p,q) cases with zero violations",
                r.cases_passed, r.cases_run);
  report(4, r.verdict == Verdict::pass, "Lorentz submultiplicativity at 1e-12", buf);
}

void criterion_5() {
  CampaignSpec cs;
  cs.name = "binorm_star";
  cs.params = {{"spec", "binorm:pow:0.5"}, {"window", 256}};
  CampaignReport r = run_campaign(cs);
  bool bit = r.verdict == Verdict::pass;

  bool schatten_ok = true;
  double worst = 0.0;
  for (double p : {1.0, 2.0, 3.0}) {
    StarConfig cfg;
    cfg.samples = 400;
    cfg.seed = 19;
    double c = check_star(SnSpec::schatten(p), cfg).constant;
    worst = std::max(worst, std::abs(c - 1.0));
    if (std::abs(c - 1.0) > 1e-12) schatten_ok = false;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "S_{mn}/(S_m S_n) bit-identical: %s; schatten |c-1| max %.2e",
                bit ? "yes" : "no", worst);
  report(5, bit && schatten_ok, "binorm star sup exact; schatten constant 1", buf);
}

void criterion_6() {
  bool exact_ok = true;
  for (double p : {1.5, 2.0, 3.0, 4.0})
    if (boyd_estimate(SnSpec::schatten(p), 65536).p_estimate != p) exact_ok = false;

  double b = boyd_estimate(SnSpec::binorm_power(0.5), 1'000'000).p_estimate;
  bool range_ok = b >= 1.96 && b <= 2.04;

  SnSpec spec = SnSpec::binorm_power(0.5);
  auto series = tensor_power_trace(spec, Spectrum{1.0, 1.0}, 10);
  // the normalized series decreases toward ||x||_2 from ||x||_pi
  bool monotone = true;
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].second > series[i - 1].second + 1e-12) monotone = false;
  double last = series.back().second;
  bool bounds_ok = last <= eval(spec, Spectrum{1.0, 1.0}) + 1e-9 &&
                   last > std::sqrt(2.0) - 0.05;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "schatten exact %s; binorm estimate %.4f; series monotone %s, last %.4f",
                exact_ok ? "yes" : "no", b, monotone ? "yes" : "no", last);
  report(6, exact_ok && range_ok && monotone && bounds_ok,
         "Boyd exponents and tensor-power limit", buf);
}

void criterion_7() {
  double worst = 0.0;
  for (double p : {1.0, 2.0, 3.0, kInf}) {
    SnSpec sn = SnSpec::schatten(p);
    SnSpec twice = SnSpec::schatten(p == kInf ? kInf : 2.0 * p);
    Rng rng(derive_seed(23, static_cast<std::uint64_t>(p == kInf ? 99 : p)));
    for (int it = 0; it < 100; ++it) {
      Spectrum x = seeded_spectrum(rng, 8);
      double dev = std::abs(cb_from_row(x, sn, sn) - eval(twice, x));
      worst = std::max(worst, dev);
    }
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "max |cb_row - ||x||_2p| = %.2e over 400 spectra", worst);
  report(7, worst <= 1e-6, "cb norm from the row space is the 2p-norm", buf);
}

void criterion_8() {
  CampaignSpec cs;
  cs.name = "spin";
  cs.params = {{"m_max", 5}, {"eta_samples", 100}, {"identity_samples", 50}};
  cs.seed = 29;
  CampaignReport r = run_campaign(cs);
  std::string identity = r.cases.empty() ? "?" : r.cases.front().values["identity"].get<std::string>();
  bool consistent = r.verdict == Verdict::pass;
  for (const auto& c : r.cases)
    if (c.values["identity"].get<std::string>() != identity) consistent = false;
  char buf[120];
  std::snprintf(buf, sizeof buf, "anticommutation <= 1e-12, sqrt2 bound, identity = %s",
                identity.c_str());
  report(8, consistent, "spin systems for m <= 5", buf);
}

void criterion_9() {
  CampaignSpec cs;
  cs.name = "oh_cb";
  cs.params = {{"cases", 8}, {"tol", 1e-6}};
  cs.seed = 31;
  CampaignReport r = run_campaign(cs);
  double pinned = cb_oh_witness(Spectrum{1.0, 1.0}, 4.0);
  bool pin_ok = std::abs(pinned - std::pow(2.0, 0.125)) <= 1e-9;
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu/%zu grid-vs-closed within 1e-6; 2^(1/8) dev %.1e",
                r.cases_passed, r.cases_run, std::abs(pinned - std::pow(2.0, 0.125)));
  report(9, r.verdict == Verdict::pass && pin_ok, "CB(OH, H(p,q)) witness formula", buf);
}

void criterion_10() {
  CampaignSpec cs;
  cs.name = "q_partition";
  cs.params = {{"blocks", 500}};
  cs.seed = 37;
  CampaignReport r = run_campaign(cs);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%zu/%zu p-values with zero violations over 500 blocks",
                r.cases_passed, r.cases_run);
  report(10, r.verdict == Verdict::pass, "partitioned-norm inequality for Q* norms", buf);
}

void criterion_11() {
  double worst = 0.0;
  int checked = 0;
  for (int cse = 0; cse < 20; ++cse) {
    std::uint64_t seed = derive_seed(41, static_cast<std::uint64_t>(cse));
    Rng pick(seed);
    int n = 1 + static_cast<int>(pick.below(3));
    int m = 1 + static_cast<int>(pick.below(3));
    MatrixTuple t = seeded_tuple(m, n, seed);
    McnConfig cfg;
    cfg.seed = derive_seed(seed, 9);
    OracleConfig ocfg;
    ocfg.seed = derive_seed(seed, 10);
    for (double p : {kInf, 1.0, 2.0}) {
      double opt = mcn_norm(t, SnSpec::schatten(p), SnSpec::schatten(p), cfg).value;
      double oracle = oracle_mcn_bruteforce(t, SnSpec::schatten(p), SnSpec::schatten(p), ocfg);
      worst = std::max(worst, std::abs(opt - oracle));
      ++checked;
    }
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "max |oracle - optimizer| = %.2e over %d runs", worst, checked);
  report(11, worst <= 1e-3, "brute-force oracle agrees with the optimizer", buf);
}

void criterion_12() {
  bool all_ok = true;
  double worst_excess = 0.0;
  for (double theta : {0.5, 1.0}) {
    for (int cse = 0; cse < 10; ++cse) {
      std::uint64_t seed = derive_seed(43, static_cast<std::uint64_t>(cse) * 2 +
                                               (theta == 1.0 ? 1 : 0));
      MatrixTuple t = seeded_tuple(2, 2, seed);
      McnConfig cfg;
      cfg.seed = derive_seed(seed, 5);
      HsharpResult h = hsharp_kyfan_theta(t, theta, {1, 2, 3, 4}, cfg);
      double prev = 0.0;
      for (const auto& [level, est] : h.truncated) {
        if (est.value < prev - 1e-9) all_ok = false;
        worst_excess = std::max(worst_excess, est.value - h.closed_form);
        if (est.value > h.closed_form + 1e-4) all_ok = false;
        prev = est.value;
      }
    }
  }
  char buf[100];
  std::snprintf(buf, sizeof buf, "20 tuples, worst excess over closed form %.2e", worst_excess);
  report(12, all_ok, "H# truncations are monotone and bounded", buf);
}

} // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/12 criteria passed in %.1fs\n", 12 - g_failures, secs);
  return g_failures;
}
