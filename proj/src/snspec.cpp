// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/snspec.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace snideal {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double parse_real(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInfinity;
  std::size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
  return v;
}

} // namespace

SnSpec SnSpec::schatten(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten requires p >= 1");
  SnSpec s;
  s.family_ = Family::schatten;
  s.p_ = p;
  std::ostringstream os;
  if (p == kInfinity)
    os << "schatten:inf";
  else
    os << "schatten:" << p;
  s.label_ = os.str();
  return s;
}

SnSpec SnSpec::kyfan(int k) {
  if (k < 1) throw std::invalid_argument("kyfan requires k >= 1");
  SnSpec s;
  s.family_ = Family::kyfan;
  s.k_ = k;
  s.label_ = "kyfan:" + std::to_string(k);
  return s;
}

SnSpec SnSpec::kyfan_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("kyfan-theta requires theta in (0, 1]");
  SnSpec s;
  s.family_ = Family::kyfan_theta;
  s.theta_ = theta;
  std::ostringstream os;
  os << "kyfan-theta:" << theta;
  s.label_ = os.str();
  return s;
}

SnSpec SnSpec::lorentz(double p, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("lorentz requires q >= 1");
  if (!(q <= p)) throw std::invalid_argument("lorentz requires q <= p");
  if (!(p < kInfinity)) throw std::invalid_argument("lorentz requires p < inf");
  SnSpec s;
  s.family_ = Family::lorentz;
  s.p_ = p;
  s.q_ = q;
  std::ostringstream os;
  os << "lorentz:" << p << "," << q;
  s.label_ = os.str();
  return s;
}

SnSpec SnSpec::binorm_harmonic() {
  SnSpec s;
  s.family_ = Family::binorm;
  s.binorm_kind_ = BinormKind::harmonic;
  s.label_ = "binorm:harmonic";
  return s;
}

SnSpec SnSpec::binorm_power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("binorm:pow requires alpha in (0, 1]");
  SnSpec s;
  s.family_ = Family::binorm;
  s.binorm_kind_ = BinormKind::power;
  s.alpha_ = alpha;
  std::ostringstream os;
  os << "binorm:pow:" << alpha;
  s.label_ = os.str();
  return s;
}

SnSpec SnSpec::binorm_values(std::vector<double> pi) {
  if (pi.empty()) throw std::invalid_argument("binorm sequence is empty");
  if (pi.front() != 1.0) throw std::invalid_argument("binorm requires pi_1 = 1");
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!(pi[i] >= 0.0) || !std::isfinite(pi[i]))
      throw std::invalid_argument("binorm entries must be finite and nonnegative");
    if (i > 0 && pi[i] > pi[i - 1] + 1e-15)
      throw std::invalid_argument("binorm sequence must be nonincreasing");
  }
  SnSpec s;
  s.family_ = Family::binorm;
  s.binorm_kind_ = BinormKind::explicit_values;
  s.pi_values_ = std::move(pi);
  s.label_ = "binorm:explicit[" + std::to_string(s.pi_values_.size()) + "]";
  return s;
}

SnSpec SnSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "schatten") return schatten(parse_real(rest));
  if (head == "kyfan") return kyfan(static_cast<int>(parse_real(rest)));
  if (head == "kyfan-theta") return kyfan_theta(parse_real(rest));
  if (head == "lorentz") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("lorentz syntax is lorentz:p,q");
    return lorentz(parse_real(rest.substr(0, comma)), parse_real(rest.substr(comma + 1)));
  }
  if (head == "binorm") {
    if (rest == "harmonic") return binorm_harmonic();
    if (rest.rfind("pow:", 0) == 0) return binorm_power(parse_real(rest.substr(4)));
    if (rest.rfind("file:", 0) == 0) {
      std::string path = rest.substr(5);
      std::ifstream in(path);
      if (!in) throw std::invalid_argument("cannot open binorm file: " + path);
      std::vector<double> pi;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        pi.push_back(parse_real(line));
      }
      SnSpec s = binorm_values(std::move(pi));
      s.label_ = "binorm:file:" + path;
      return s;
    }
    throw std::invalid_argument("unknown binorm generator: " + rest);
  }
  throw std::invalid_argument("unknown norm spec: " + text);
}

double SnSpec::pi(std::uint64_t j) const {
  if (family_ != Family::binorm) throw std::invalid_argument("pi() requires a binorm spec");
  if (j == 0) throw std::invalid_argument("pi indices are 1-based");
  switch (binorm_kind_) {
    case BinormKind::harmonic:
      return 1.0 / static_cast<double>(j);
    case BinormKind::power:
      return std::pow(static_cast<double>(j), -alpha_);
    case BinormKind::explicit_values:
      if (j > pi_values_.size())
        throw std::invalid_argument("binorm sequence exhausted at j = " + std::to_string(j));
      return pi_values_[j - 1];
  }
  return 0.0;
}

double SnSpec::pi_partial_sum(std::uint64_t n) const {
  double acc = 0.0;
  for (std::uint64_t j = 1; j <= n; ++j) acc += pi(j);
  return acc;
}

std::uint64_t SnSpec::pi_length() const {
  if (family_ != Family::binorm) return 0;
  if (binorm_kind_ == BinormKind::explicit_values) return pi_values_.size();
  return std::numeric_limits<std::uint64_t>::max();
}

bool SnSpec::is_q_norm() const {
  if (family_ == Family::schatten) return p_ >= 2.0;
  if (family_ == Family::lorentz) return q_ >= 2.0;
  return false;
}

bool SnSpec::is_qstar_norm() const {
  return family_ == Family::schatten && p_ <= 2.0;
}

bool SnSpec::operator==(const SnSpec& other) const {
  return family_ == other.family_ && p_ == other.p_ && q_ == other.q_ &&
         theta_ == other.theta_ && k_ == other.k_ && alpha_ == other.alpha_ &&
         binorm_kind_ == other.binorm_kind_ && pi_values_ == other.pi_values_;
}

} // namespace snideal
