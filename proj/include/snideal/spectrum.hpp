// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace snideal {

/// A finite nonincreasing sequence of nonnegative reals (s-numbers,
/// sequence-space test vectors). Inputs are rearranged on construction, so
/// callers never have to care about order.
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);
  Spectrum(std::initializer_list<double> values)
      : Spectrum(std::vector<double>(values)) {}

  /// Trusts that `values` is already sorted nonincreasing and nonnegative.
  static Spectrum from_sorted(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  double head() const { return values_.empty() ? 0.0 : values_.front(); }
  double sum() const;

  /// Entrywise square, used by 2-convexification.
  Spectrum squared() const;

  bool operator==(const Spectrum& other) const = default;

private:
  std::vector<double> values_;
};

/// Spectrum as (value, multiplicity) runs, sorted by decreasing value.
/// Tensor powers are held in this form; materializing length(x)^n entries is
/// exactly what this type avoids.
struct CompressedSpectrum {
  struct Run {
    double value = 0.0;
    std::uint64_t count = 0;
  };
  std::vector<Run> runs; // strictly decreasing values

  std::uint64_t total() const;
  static CompressedSpectrum from_spectrum(const Spectrum& s, double merge_tol = 0.0);
  Spectrum materialize(std::uint64_t max_entries) const;
};

/// Raised when an operation would exceed its documented size/memory budget.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace snideal
