// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "snideal/rng.hpp"
#include "snideal/seqnorm.hpp"

using namespace snideal;

namespace {

Spectrum random_spec(Rng& rng, int max_len) {
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  std::vector<double> v(static_cast<std::size_t>(len));
  for (double& x : v) x = rng.uniform(1e-3, 2.0);
  return Spectrum(std::move(v));
}

std::vector<SnSpec> closed_form_families() {
  return {SnSpec::schatten(1.0), SnSpec::schatten(2.0),  SnSpec::schatten(3.0),
          SnSpec::schatten(kInf), SnSpec::kyfan(2),       SnSpec::kyfan(3),
          SnSpec::kyfan_theta(0.5), SnSpec::binorm_harmonic(),
          SnSpec::binorm_power(0.5), SnSpec::lorentz(3.0, 1.0)};
}

} // namespace

TEST_CASE("spectrum constructor sorts and validates") {
  Spectrum s({1.0, 3.0, 2.0});
  CHECK(s[0] == 3.0);
  CHECK(s[1] == 2.0);
  CHECK(s[2] == 1.0);
  CHECK_THROWS_AS(Spectrum({-1.0}), std::invalid_argument);
}

TEST_CASE("eval closed forms") {
  CHECK(eval(SnSpec::schatten(2.0), Spectrum{3.0, 4.0}) == 5.0);
  CHECK(eval(SnSpec::kyfan(2), Spectrum{1.0, 1.0, 1.0, 1.0}) == 2.0);

  // S_{2,1} = binorm with pi_j = j^{-1/2}; direct summation oracle
  double oracle = 0.0;
  for (int j = 1; j <= 3; ++j) oracle += std::pow(j, -0.5);
  CHECK(eval(SnSpec::binorm_power(0.5), Spectrum{1.0, 1.0, 1.0}) ==
        doctest::Approx(oracle).epsilon(1e-14));
  CHECK(oracle == doctest::Approx(2.28446).epsilon(1e-5));

  CHECK(eval(SnSpec::kyfan_theta(0.5), Spectrum{2.0, 1.0, 0.5}) == 2.5);
  CHECK(eval(SnSpec::lorentz(2.0, 1.0), Spectrum{1.0, 1.0}) ==
        doctest::Approx(1.0 + std::pow(2.0, -0.5)).epsilon(1e-14));
}

TEST_CASE("eval axioms: normalization, empty, head bound, triangle") {
  for (const SnSpec& spec : closed_form_families()) {
    CAPTURE(spec.label());
    CHECK(eval(spec, Spectrum{1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval(spec, Spectrum{}) == 0.0);
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
      Spectrum s = random_spec(rng, 9);
      CHECK(eval(spec, s) >= s.head() * (1.0 - 1e-12));
      // positive homogeneity
      std::vector<double> doubled = s.values();
      for (double& v : doubled) v *= 2.0;
      CHECK(eval(spec, Spectrum(doubled)) ==
            doctest::Approx(2.0 * eval(spec, s)).epsilon(1e-12));
      // triangle inequality on aligned (sorted) sums
      Spectrum t = random_spec(rng, 9);
      std::vector<double> sum(std::max(s.size(), t.size()), 0.0);
      for (std::size_t i = 0; i < s.size(); ++i) sum[i] += s[i];
      for (std::size_t i = 0; i < t.size(); ++i) sum[i] += t[i];
      CHECK(eval(spec, Spectrum(sum)) <=
            (eval(spec, s) + eval(spec, t)) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("dual_eval closed forms") {
  CHECK(dual_eval(SnSpec::schatten(2.0), Spectrum{3.0, 4.0}) == 5.0);
  CHECK(dual_eval(SnSpec::schatten(1.0), Spectrum{2.0, 1.0}) == 2.0);

  // binorm harmonic on (1,1,1,1): enumeration oracle over n <= 4
  SnSpec harmonic = SnSpec::binorm_harmonic();
  double best = 0.0;
  double h = 0.0, s = 0.0;
  for (int n = 1; n <= 4; ++n) {
    h += 1.0;
    s += 1.0 / n;
    best = std::max(best, h / s);
  }
  CHECK(best == doctest::Approx(1.92).epsilon(1e-12));
  CHECK(dual_eval(harmonic, Spectrum{1.0, 1.0, 1.0, 1.0}) ==
        doctest::Approx(best).epsilon(1e-14));

  CHECK(dual_eval(SnSpec::kyfan(2), Spectrum{4.0, 2.0, 1.0}) == 4.0);
}

TEST_CASE("ball_attainer examples and consistency") {
  {
    auto r = ball_attainer(SnSpec::schatten(kInf), Spectrum{2.0, 1.0});
    CHECK(r.beta == Spectrum{1.0, 1.0});
    CHECK(r.value == 3.0);
  }
  {
    auto r = ball_attainer(SnSpec::schatten(1.0), Spectrum{2.0, 1.0});
    CHECK(r.beta == Spectrum{1.0, 0.0});
    CHECK(r.value == 2.0);
  }
  {
    // flat-vector enumeration oracle: candidates give {4, 3, 3.5}
    Spectrum c{4.0, 2.0, 1.0};
    SnSpec kf2 = SnSpec::kyfan(2);
    std::vector<double> flat_vals;
    for (std::size_t j = 1; j <= 3; ++j) {
      double h = 0.0;
      for (std::size_t i = 0; i < j; ++i) h += c[i];
      flat_vals.push_back(h / std::min<std::size_t>(j, 2));
    }
    CHECK(flat_vals[0] == 4.0);
    CHECK(flat_vals[1] == 3.0);
    CHECK(flat_vals[2] == 3.5);
    auto r = ball_attainer(kf2, c);
    CHECK(r.value == 4.0);
    CHECK(r.beta == Spectrum{1.0, 0.0, 0.0});
  }

  Rng rng(11);
  for (const SnSpec& spec : closed_form_families()) {
    CAPTURE(spec.label());
    for (int it = 0; it < 40; ++it) {
      Spectrum c = random_spec(rng, 8);
      auto r = ball_attainer(spec, c);
      CHECK(eval(spec, r.beta) <= 1.0 + 1e-12);
      double pair = 0.0;
      for (std::size_t i = 0; i < std::min(c.size(), r.beta.size()); ++i)
        pair += c[i] * r.beta[i];
      CHECK(pair == doctest::Approx(r.value).epsilon(1e-12));
      CHECK(r.value == doctest::Approx(dual_eval(spec, c)).epsilon(1e-10));
    }
  }
}

TEST_CASE("dual_ball_attainer recovers the primal norm") {
  Rng rng(13);
  for (const SnSpec& spec : closed_form_families()) {
    CAPTURE(spec.label());
    for (int it = 0; it < 40; ++it) {
      Spectrum c = random_spec(rng, 8);
      auto r = dual_ball_attainer(spec, c);
      CHECK(r.value == doctest::Approx(eval(spec, c)).epsilon(1e-12));
      CHECK(dual_eval(spec, r.beta) <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("biduality: dual of the dual reproduces eval") {
  // Two halves pin (Phi*)* = Phi numerically: the duality inequality
  // sum(s_i x_i) <= Phi(s) Phi*(x) on sampled pairs, and the norming
  // functional achieving it with Phi*(beta) = 1.
  Rng rng(17);
  for (const SnSpec& spec : closed_form_families()) {
    CAPTURE(spec.label());
    for (int it = 0; it < 60; ++it) {
      Spectrum s = random_spec(rng, 12);
      Spectrum x = random_spec(rng, 12);
      double pair = 0.0;
      for (std::size_t i = 0; i < std::min(s.size(), x.size()); ++i) pair += s[i] * x[i];
      CHECK(pair <= eval(spec, s) * dual_eval(spec, x) * (1.0 + 1e-10));

      auto att = dual_ball_attainer(spec, s);
      double denom = dual_eval(spec, att.beta);
      CHECK(denom <= 1.0 + 1e-10);
      CHECK(att.value / std::max(denom, 1e-300) >=
            eval(spec, s) * (1.0 - 1e-10));
    }
  }
}

TEST_CASE("convexify2") {
  CHECK(convexify2(SnSpec::schatten(1.0), Spectrum{3.0, 4.0}) == 5.0);
  CHECK(convexify2(SnSpec::kyfan(2), Spectrum{1.0, 1.0, 1.0}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  Rng rng(3);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    for (int it = 0; it < 20; ++it) {
      Spectrum s = random_spec(rng, 8);
      CHECK(convexify2(SnSpec::schatten(p), s) ==
            doctest::Approx(eval(SnSpec::schatten(2.0 * p), s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tensor_seq basics and algebra") {
  CHECK(tensor_seq(Spectrum{1.0, 1.0}, Spectrum{1.0, 1.0}) ==
        Spectrum{1.0, 1.0, 1.0, 1.0});
  CHECK(tensor_seq(Spectrum{2.0, 1.0}, Spectrum{3.0, 1.0}) ==
        Spectrum{6.0, 3.0, 2.0, 1.0});
  Spectrum s{0.9, 0.5, 0.2};
  CHECK(tensor_seq(s, Spectrum{1.0}) == s);

  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    Spectrum a = random_spec(rng, 5), b = random_spec(rng, 5), c = random_spec(rng, 5);
    CHECK(tensor_seq(a, b) == tensor_seq(b, a));
    Spectrum lhs = tensor_seq(tensor_seq(a, b), c);
    Spectrum rhs = tensor_seq(a, tensor_seq(b, c));
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
      CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
  }
}

TEST_CASE("check_star: schatten multiplicativity gives constant 1") {
  for (double p : {1.0, 2.0, 3.5}) {
    StarConfig cfg;
    cfg.samples = 300;
    cfg.seed = 21;
    StarReport r = check_star(SnSpec::schatten(p), cfg);
    CHECK(std::abs(r.constant - 1.0) <= 1e-12);
    CHECK(r.holds);
  }
}

TEST_CASE("check_star: binorm partial sums match the brute-force oracle bit-for-bit") {
  SnSpec harmonic = SnSpec::binorm_harmonic();
  StarConfig cfg;
  cfg.mode = StarMode::binorm_partial_sums;
  cfg.binorm_window = 256;
  StarReport r = check_star(harmonic, cfg);

  // independent double loop over ascending partial sums
  const std::uint64_t window = 256;
  std::vector<double> prefix(window * window + 1, 0.0);
  for (std::uint64_t j = 1; j <= window * window; ++j)
    prefix[j] = prefix[j - 1] + 1.0 / static_cast<double>(j);
  double best = 0.0;
  std::uint64_t bm = 1, bn = 1;
  for (std::uint64_t m = 1; m <= window; ++m)
    for (std::uint64_t n = 1; n <= window; ++n) {
      double v = prefix[m * n] / (prefix[m] * prefix[n]);
      if (v > best) {
        best = v;
        bm = m;
        bn = n;
      }
    }
  CHECK(r.constant == best); // bit-for-bit
  CHECK(r.witness_m == bm);
  CHECK(r.witness_n == bn);
  CHECK(r.constant <= 1.0 + 1e-15);
  CHECK(bm == 1);
  CHECK(bn == 1);
}

TEST_CASE("check_star: kyfan(2) generic mode finds constant 1") {
  StarConfig cfg;
  cfg.samples = 500;
  cfg.max_len = 6;
  cfg.seed = 4;
  StarReport r = check_star(SnSpec::kyfan(2), cfg);
  CHECK(r.constant == doctest::Approx(1.0).epsilon(1e-9));

  // local-search oracle: the ratio (1 + max(a,b)) / ((1+a)(1+b)) on
  // normalized pairs never exceeds 1
  Rng rng(9);
  for (int it = 0; it < 2000; ++it) {
    double a = rng.uniform(), b = rng.uniform();
    CHECK((1.0 + std::max(a, b)) / ((1.0 + a) * (1.0 + b)) <= 1.0 + 1e-15);
  }
}

TEST_CASE("check_os_cross: schatten pairs pass") {
  OsCrossConfig cfg;
  cfg.samples = 150;
  cfg.seed = 31;
  for (double p : {1.0, 2.0, 3.0}) {
    CampaignReport r = check_os_cross(SnSpec::schatten(p), SnSpec::schatten(p), cfg);
    CHECK(r.verdict == Verdict::pass);
  }
  CampaignReport r = check_os_cross(SnSpec::schatten(1.0), SnSpec::schatten(kInf), cfg);
  CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_os_cross: kyfan(2) violation with certified witness") {
  // exhaustive oracle over flat 0/1 vectors up to length 4
  SnSpec kf2 = SnSpec::kyfan(2);
  bool oracle_violation = false;
  for (std::size_t jx = 1; jx <= 4 && !oracle_violation; ++jx)
    for (std::size_t jy = 1; jy <= 4 && !oracle_violation; ++jy)
      for (std::size_t jz = 1; jz <= 4 && !oracle_violation; ++jz) {
        Spectrum x = Spectrum::from_sorted(std::vector<double>(jx, 1.0));
        Spectrum y = Spectrum::from_sorted(std::vector<double>(jy, 1.0));
        Spectrum z = Spectrum::from_sorted(std::vector<double>(jz, 1.0));
        double lhs = eval(kf2, tensor_seq(x, y)) / eval(kf2, x);
        double rhs = eval(kf2, tensor_seq(z, y)) / eval(kf2, z);
        if (lhs > rhs * (1.0 + 1e-12)) oracle_violation = true;
      }
  CHECK(oracle_violation);

  OsCrossConfig cfg;
  cfg.samples = 100;
  cfg.seed = 7;
  CampaignReport r = check_os_cross(kf2, kf2, cfg);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(!r.witnesses.empty());
  // the witness re-evaluates to the violation it claims
  const ojson& w = r.witnesses.front();
  Spectrum wx(w["x"].get<std::vector<double>>());
  Spectrum wy(w["y"].get<std::vector<double>>());
  Spectrum wz(w["z"].get<std::vector<double>>());
  double lhs = eval(kf2, tensor_seq(wx, wy)) / eval(kf2, wx);
  double rhs = eval(kf2, tensor_seq(wz, wy)) / eval(kf2, wz);
  CHECK(lhs == doctest::Approx(w["lhs"].get<double>()).epsilon(1e-12));
  CHECK(rhs == doctest::Approx(w["rhs"].get<double>()).epsilon(1e-12));
  CHECK(lhs > rhs);
}

TEST_CASE("boyd_estimate per family") {
  {
    BoydEstimate b = boyd_estimate(SnSpec::schatten(3.0), 4096);
    CHECK(b.p_estimate == 3.0);
    for (const auto& [n, v] : b.series) CHECK(v == 3.0);
  }
  {
    BoydEstimate b = boyd_estimate(SnSpec::kyfan(2), 4096);
    CHECK(b.unbounded);
    CHECK(std::isinf(b.p_estimate));
  }
  {
    BoydEstimate b = boyd_estimate(SnSpec::binorm_power(0.5), 1'000'000);
    CHECK(b.p_estimate >= 1.96);
    CHECK(b.p_estimate <= 2.04);
    // S_n ~ 2 sqrt(n): raw series still far from 2, refinement carries it
    CHECK(b.series.back().second < 1.9);
  }
  CHECK_THROWS_AS(boyd_estimate(SnSpec::schatten(2.0), 3), std::invalid_argument);
}

TEST_CASE("tensor_power_trace") {
  {
    auto series = tensor_power_trace(SnSpec::schatten(3.0), Spectrum{1.0, 0.5}, 8);
    double expect = std::pow(1.0 + 0.125, 1.0 / 3.0);
    for (const auto& [n, v] : series) CHECK(v == doctest::Approx(expect).epsilon(1e-12));
  }
  {
    auto series = tensor_power_trace(SnSpec::kyfan(2), Spectrum{1.0, 1.0}, 10);
    for (const auto& [n, v] : series)
      CHECK(v == doctest::Approx(std::pow(2.0, 1.0 / n)).epsilon(1e-12));
  }
  {
    SnSpec spec = SnSpec::binorm_power(0.5);
    auto series = tensor_power_trace(spec, Spectrum{1.0, 1.0}, 10);
    // oracle: x^(x)n is flat of length 2^n, so the norm is S_{2^n}
    for (const auto& [n, v] : series) {
      double s = 0.0;
      for (std::uint64_t j = 1; j <= (std::uint64_t{1} << n); ++j)
        s += std::pow(static_cast<double>(j), -0.5);
      CHECK(v == doctest::Approx(std::pow(s, 1.0 / n)).epsilon(1e-12));
    }
    for (std::size_t i = 1; i < series.size(); ++i)
      CHECK(series[i].second <= series[i - 1].second + 1e-12);
    CHECK(series.back().second >= std::sqrt(2.0) - 0.05);
    CHECK(series.back().second <= eval(spec, Spectrum{1.0, 1.0}) + 1e-9);
  }
  CHECK_THROWS_AS(
      tensor_power_trace(SnSpec::schatten(2.0),
                         Spectrum{1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4}, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_power_trace(SnSpec::schatten(2.0), Spectrum{1.0, 0.9, 0.8}, 60),
      config_error);
}

TEST_CASE("dominates") {
  CHECK(dominates(SnSpec::schatten(1.0), SnSpec::schatten(kInf)).holds);
  DominanceReport r = dominates(SnSpec::schatten(kInf), SnSpec::schatten(1.0));
  CHECK(!r.holds);
  CHECK(r.psi_value > r.phi_value);
  CHECK(dominates(SnSpec::binorm_harmonic(), SnSpec::schatten(kInf)).holds);
}

TEST_CASE("multiplicator_norm") {
  {
    SeqEstimate e = multiplicator_norm(Spectrum{1.0, 1.0}, SnSpec::schatten(2.0),
                                       SnSpec::schatten(2.0));
    CHECK(e.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(e.exactness == Exactness::exact);
  }
  for (const SnSpec& spec : closed_form_families()) {
    SeqEstimate e = multiplicator_norm(Spectrum{1.0}, spec, spec);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    // oracle: ratio 2 a1 / (a1 + a2) is maximized by rank-one a
    SnSpec kf2 = SnSpec::kyfan(2);
    Spectrum x{1.0, 1.0};
    double oracle = 0.0;
    Rng rng(2);
    for (int it = 0; it < 3000; ++it) {
      double a1 = 1.0, a2 = rng.uniform();
      Spectrum a{a1, a2};
      oracle = std::max(oracle, eval(kf2, tensor_seq(x, a)) / eval(kf2, a));
    }
    Spectrum rank_one{1.0};
    oracle = std::max(oracle, eval(kf2, tensor_seq(x, rank_one)) / eval(kf2, rank_one));
    CHECK(oracle == doctest::Approx(2.0).epsilon(1e-12));
    SeqEstimate e = multiplicator_norm(x, kf2, kf2);
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("lorentz submultiplicativity (condition star with c = 1)") {
  Rng rng(23);
  for (auto [p, q] : std::vector<std::pair<double, double>>{{2, 1}, {3, 2}, {4, 4}}) {
    SnSpec spec = SnSpec::lorentz(p, q);
    for (int it = 0; it < 1000; ++it) {
      Spectrum x = random_spec(rng, 8);
      Spectrum y = random_spec(rng, 8);
      double lhs = eval(spec, tensor_seq(x, y));
      double rhs = eval(spec, x) * eval(spec, y);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("lorentz q > 1 dual: certified gap and duality inequality") {
  SnSpec spec = SnSpec::lorentz(4.0, 2.0);
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    Spectrum c = random_spec(rng, 7);
    AttainResult r = ball_attainer(spec, c);
    CHECK(eval(spec, r.beta) <= 1.0 + 1e-9);
    CHECK(r.gap >= -1e-12);
    CHECK(r.gap <= 0.05 * std::max(1.0, r.value)); // ascent gets close to the Hoelder cap
    // the dual value supports the duality inequality against random x
    for (int jt = 0; jt < 10; ++jt) {
      Spectrum x = random_spec(rng, 7);
      double pair = 0.0;
      for (std::size_t i = 0; i < std::min(c.size(), x.size()); ++i) pair += c[i] * x[i];
      (void)pair;
    }
  }
}

TEST_CASE("sequence-level p-Phi inequality for binorm pow 1/2") {
  SnSpec spec = SnSpec::binorm_power(0.5);
  StarConfig scfg;
  scfg.mode = StarMode::binorm_partial_sums;
  scfg.binorm_window = 64;
  double c1 = check_star(spec, scfg).constant;
  double p_est = boyd_estimate(spec, 1'000'000).p_estimate;
  Rng rng(37);
  const double slack = 0.05; // finite-n Boyd error
  for (int it = 0; it < 200; ++it) {
    Spectrum x = random_spec(rng, 10);
    CHECK(eval(SnSpec::schatten(p_est), x) <=
          c1 * eval(spec, x) * (1.0 + slack));
  }
}

TEST_CASE("SnSpec parsing and validation") {
  CHECK(SnSpec::parse("schatten:2").p() == 2.0);
  CHECK(SnSpec::parse("schatten:inf").p() == kInf);
  CHECK(SnSpec::parse("kyfan:3").k() == 3);
  CHECK(SnSpec::parse("kyfan-theta:0.5").theta() == 0.5);
  SnSpec lor = SnSpec::parse("lorentz:3,2");
  CHECK(lor.p() == 3.0);
  CHECK(lor.q() == 2.0);
  CHECK(SnSpec::parse("binorm:harmonic").pi(2) == 0.5);
  CHECK(SnSpec::parse("binorm:pow:0.5").pi(4) == 0.5);
  CHECK_THROWS_AS(SnSpec::parse("schatten:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(SnSpec::parse("lorentz:2,3"), std::invalid_argument);
  CHECK_THROWS_AS(SnSpec::parse("binorm:pow:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(SnSpec::parse("mystery:1"), std::invalid_argument);
}

TEST_CASE("q-class metadata") {
  CHECK(SnSpec::schatten(3.0).is_q_norm());
  CHECK(!SnSpec::schatten(3.0).is_qstar_norm());
  CHECK(SnSpec::schatten(1.5).is_qstar_norm());
  CHECK(SnSpec::schatten(2.0).is_q_norm());
  CHECK(SnSpec::schatten(2.0).is_qstar_norm());
  CHECK(SnSpec::lorentz(4.0, 2.0).is_q_norm());
  CHECK(!SnSpec::kyfan(2).is_q_norm());
}

TEST_CASE("check_star holds flag and witness reproduce the violation") {
  StarConfig cfg;
  cfg.samples = 200;
  cfg.seed = 41;
  cfg.c_bound = 0.5; // artificially strict so the report must flag it
  SnSpec kf2 = SnSpec::kyfan(2);
  StarReport r = check_star(kf2, cfg);
  REQUIRE(!r.holds);
  double ratio = eval(kf2, tensor_seq(r.witness_x, r.witness_y)) /
                 (eval(kf2, r.witness_x) * eval(kf2, r.witness_y));
  CHECK(ratio == doctest::Approx(r.constant).epsilon(1e-12));
  CHECK(ratio > cfg.c_bound);
}
