// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snideal/spectrum.hpp"

namespace snideal {

enum class Family {
  schatten,    // l_p norm of the s-numbers, 1 <= p <= inf
  kyfan,       // sum of the k largest
  kyfan_theta, // a1 + theta*a2, 0 < theta <= 1
  lorentz,     // (sum_j s_j^q / j^(1-q/p))^(1/q), 1 <= q <= p < inf
  binorm,      // sum_j pi_j s_j for a binormalizing sequence pi
};

enum class BinormKind { harmonic, power, explicit_values };

/// Descriptor of a symmetric norming function. Value type, cheap to copy,
/// safe to share across threads.
class SnSpec {
public:
  static SnSpec schatten(double p);
  static SnSpec kyfan(int k);
  static SnSpec kyfan_theta(double theta);
  static SnSpec lorentz(double p, double q);
  static SnSpec binorm_harmonic();                       // pi_j = 1/j
  static SnSpec binorm_power(double alpha);              // pi_j = j^-alpha, 0 < alpha <= 1
  static SnSpec binorm_values(std::vector<double> pi);   // explicit prefix

  /// Parses the CLI/config syntax: schatten:p, kyfan:k, kyfan-theta:t,
  /// lorentz:p,q, binorm:harmonic, binorm:pow:a, binorm:file:<path>.
  static SnSpec parse(const std::string& text);

  Family family() const { return family_; }
  double p() const { return p_; }
  double q() const { return q_; }
  double theta() const { return theta_; }
  int k() const { return k_; }
  BinormKind binorm_kind() const { return binorm_kind_; }

  bool is_binorm() const { return family_ == Family::binorm; }
  bool is_schatten() const { return family_ == Family::schatten; }

  /// pi_j (1-based) of a binorm spec; throws if j exceeds an explicit prefix.
  double pi(std::uint64_t j) const;
  /// S_n = sum_{j<=n} pi_j by sequential ascending summation. The check_star
  /// oracle comparison is bit-for-bit, so the summation order is part of the
  /// contract.
  double pi_partial_sum(std::uint64_t n) const;
  /// Largest n for which pi_j is defined (SIZE_MAX for generated sequences).
  std::uint64_t pi_length() const;

  const std::string& label() const { return label_; }

  /// True when this family is the 2-convexification of an s.n. function
  /// (schatten p >= 2, lorentz q >= 2).
  bool is_q_norm() const;
  /// True when this family is the adjoint of a Q-norm (schatten p <= 2).
  bool is_qstar_norm() const;

  bool operator==(const SnSpec& other) const;

private:
  SnSpec() = default;

  Family family_ = Family::schatten;
  double p_ = 2.0;
  double q_ = 0.0;
  double theta_ = 0.0;
  int k_ = 0;
  BinormKind binorm_kind_ = BinormKind::harmonic;
  double alpha_ = 0.0;
  std::vector<double> pi_values_;
  std::string label_;
};

} // namespace snideal
