// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace snideal {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("spectrum entries must be finite");
    if (v < 0.0) throw std::invalid_argument("spectrum entries must be nonnegative");
  }
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

Spectrum Spectrum::from_sorted(std::vector<double> values) {
  Spectrum s;
  s.values_ = std::move(values);
  return s;
}

double Spectrum::sum() const {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc;
}

Spectrum Spectrum::squared() const {
  std::vector<double> sq(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) sq[i] = values_[i] * values_[i];
  return from_sorted(std::move(sq));
}

std::uint64_t CompressedSpectrum::total() const {
  std::uint64_t t = 0;
  for (const Run& r : runs) t += r.count;
  return t;
}

CompressedSpectrum CompressedSpectrum::from_spectrum(const Spectrum& s, double merge_tol) {
  CompressedSpectrum c;
  for (double v : s.values()) {
    if (!c.runs.empty() && std::abs(c.runs.back().value - v) <= merge_tol) {
      c.runs.back().count += 1;
    } else {
      c.runs.push_back({v, 1});
    }
  }
  return c;
}

Spectrum CompressedSpectrum::materialize(std::uint64_t max_entries) const {
  if (total() > max_entries)
    throw config_error("compressed spectrum too large to materialize");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total()));
  for (const Run& r : runs)
    for (std::uint64_t i = 0; i < r.count; ++i) out.push_back(r.value);
  return Spectrum::from_sorted(std::move(out));
}

} // namespace snideal
