#include "rikit/power_value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rikit {

namespace {

long lcm_long(long a, long b) {
  Int g = boost::multiprecision::gcd(Int(a), Int(b));
  Int l = Int(a) / g * Int(b);
  if (l > 4096) throw std::domain_error("power comparison: exponent denominators too large");
  return l.convert_to<long>();
}

long denominator_of(const Rat& e) {
  Int den = boost::multiprecision::denominator(e);
  if (den > 4096) throw std::domain_error("power comparison: exponent denominator too large");
  return den.convert_to<long>();
}

}  // namespace

PowerValue PowerValue::infinity() {
  PowerValue out;
  out.kind_ = Kind::Inf;
  return out;
}

PowerValue PowerValue::of(Rat value) {
  if (value < 0) throw std::invalid_argument("negative value in power arithmetic");
  PowerValue out;
  if (value == 0) return out;
  out.kind_ = Kind::Finite;
  out.q_ = std::move(value);
  return out;
}

PowerValue PowerValue::pow(Rat base, Rat exponent) {
  if (base < 0) throw std::invalid_argument("negative base in power arithmetic");
  if (base == 0) {
    if (exponent <= 0) throw std::domain_error("0 raised to a non-positive power");
    return zero();
  }
  PowerValue out;
  out.kind_ = Kind::Finite;
  out.q_ = 1;
  out.push_factor(std::move(base), std::move(exponent));
  out.normalize();
  return out;
}

void PowerValue::push_factor(Rat base, Rat exponent) {
  if (exponent == 0 || base == 1) return;
  factors_.emplace_back(std::move(base), std::move(exponent));
}

void PowerValue::normalize() {
  if (kind_ != Kind::Finite) return;
  std::sort(factors_.begin(), factors_.end());
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& f : factors_) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(std::move(f));
    }
  }
  factors_.clear();
  for (auto& f : merged) {
    if (f.second == 0 || f.first == 1) continue;
    Int den = boost::multiprecision::denominator(f.second);
    if (den == 1) {
      // Integral exponent folds into the rational mantissa.
      q_ *= rat_pow_int(f.first, boost::multiprecision::numerator(f.second).convert_to<long>());
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

PowerValue operator*(const PowerValue& a, const PowerValue& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_inf() || b.is_inf()) throw std::domain_error("0 * inf in power arithmetic");
    return PowerValue::zero();
  }
  if (a.is_inf() || b.is_inf()) return PowerValue::infinity();
  PowerValue out;
  out.kind_ = PowerValue::Kind::Finite;
  out.q_ = a.q_ * b.q_;
  out.factors_ = a.factors_;
  out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  out.normalize();
  return out;
}

PowerValue PowerValue::pow_rat(const Rat& exponent) const {
  if (exponent == 0) return of(Rat(1));
  if (is_zero()) {
    if (exponent < 0) throw std::domain_error("0 raised to a negative power");
    return zero();
  }
  if (is_inf()) return exponent > 0 ? infinity() : zero();
  PowerValue out;
  out.kind_ = Kind::Finite;
  out.q_ = 1;
  out.push_factor(q_, exponent);
  for (const auto& f : factors_) out.push_factor(f.first, f.second * exponent);
  out.normalize();
  return out;
}

double PowerValue::to_double() const {
  if (is_zero()) return 0.0;
  if (is_inf()) return HUGE_VAL;
  double out = rat_to_double(q_);
  for (const auto& f : factors_) out *= rat_pow_double(f.first, f.second);
  return out;
}

std::string PowerValue::to_string() const {
  if (auto q = as_rat()) return format_rat(*q);
  return format_double(to_double());
}

std::optional<Rat> PowerValue::as_rat() const {
  if (is_zero()) return Rat(0);
  if (is_inf()) return std::nullopt;
  Rat out = q_;
  for (const auto& f : factors_) {
    auto exact = rat_pow_exact(f.first, f.second);
    if (!exact) return std::nullopt;
    out *= *exact;
  }
  return out;
}

ExtValue PowerValue::to_ext_value() const {
  if (is_inf()) return ExtValue::infinity();
  if (auto q = as_rat()) return ExtValue::exact(*q);
  return ExtValue::approx(to_double());
}

bool pv_less(const PowerValue& a, const PowerValue& b) {
  if (b.is_inf()) return !a.is_inf();
  if (a.is_inf()) return false;
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;

  long d = 1;
  for (const auto& f : a.factors_) d = lcm_long(d, denominator_of(f.second));
  for (const auto& f : b.factors_) d = lcm_long(d, denominator_of(f.second));

  auto raised = [d](const PowerValue& v) {
    Rat out = rat_pow_int(v.q_, d);
    for (const auto& f : v.factors_) {
      Rat e = f.second * d;  // integral by construction of d
      out *= rat_pow_int(f.first, boost::multiprecision::numerator(e).convert_to<long>());
    }
    return out;
  };
  return raised(a) < raised(b);
}

bool pv_equal(const PowerValue& a, const PowerValue& b) {
  return !pv_less(a, b) && !pv_less(b, a);
}

PowerValue pv_max(const PowerValue& a, const PowerValue& b) { return pv_less(a, b) ? b : a; }

PowerValue pv_div(const PowerValue& a, const PowerValue& b) {
  if (b.is_zero()) {
    if (a.is_zero()) throw std::domain_error("pv_div: 0/0");
    return PowerValue::infinity();
  }
  if (b.is_inf()) {
    if (a.is_inf()) throw std::domain_error("pv_div: inf/inf");
    return PowerValue::zero();
  }
  if (a.is_zero() || a.is_inf()) return a;
  return a * b.pow_rat(Rat(-1));
}

}  // namespace rikit
