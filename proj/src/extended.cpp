#include "rikit/extended.hpp"

#include <cmath>
#include <stdexcept>

namespace rikit {

ExtRat::ExtRat(Rat value) : inf_(false), q_(std::move(value)) {
  if (q_ < 0) throw std::invalid_argument("negative value where [0, inf] expected");
}

ExtRat ExtRat::infinity() {
  ExtRat out;
  out.inf_ = true;
  return out;
}

const Rat& ExtRat::finite() const {
  if (inf_) throw std::domain_error("infinite bound used as a finite rational");
  return q_;
}

double ExtRat::to_double() const { return inf_ ? HUGE_VAL : rat_to_double(q_); }

std::string ExtRat::to_string() const { return inf_ ? "inf" : format_rat(q_); }

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return ExtRat::infinity();
  return ExtRat(a.q_ + b.q_);
}

ExtRat operator*(const ExtRat& a, const ExtRat& b) {
  if (a.is_zero() || b.is_zero()) return ExtRat();
  if (a.inf_ || b.inf_) return ExtRat::infinity();
  return ExtRat(a.q_ * b.q_);
}

ExtRat& ExtRat::operator+=(const ExtRat& other) {
  *this = *this + other;
  return *this;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.q_ == b.q_;
}

bool operator<(const ExtRat& a, const ExtRat& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.q_ < b.q_;
}

bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }

ExtRat interval_length(const Rat& a, const ExtRat& b) {
  if (b.is_inf()) return ExtRat::infinity();
  if (b.finite() < a) throw std::invalid_argument("interval end before start");
  return ExtRat(b.finite() - a);
}

ExtRat parse_ext(const std::string& text) {
  if (text == "inf") return ExtRat::infinity();
  return ExtRat(parse_rat(text));
}

ExtValue ExtValue::exact(Rat value) {
  if (value < 0) throw std::invalid_argument("negative quasinorm value");
  return ExtValue(Kind::Exact, std::move(value), 0);
}

ExtValue ExtValue::approx(double value) {
  if (std::isnan(value) || value < 0) {
    throw std::invalid_argument("quasinorm value must be non-negative");
  }
  if (std::isinf(value)) return infinity();
  return ExtValue(Kind::Approx, Rat(0), value);
}

ExtValue ExtValue::infinity() { return ExtValue(Kind::Inf, Rat(0), 0); }

ExtValue ExtValue::of(const ExtRat& value) {
  return value.is_inf() ? infinity() : exact(value.finite());
}

const Rat& ExtValue::rat() const {
  if (kind_ != Kind::Exact) throw std::domain_error("not an exact value");
  return q_;
}

double ExtValue::value() const {
  switch (kind_) {
    case Kind::Exact:
      return rat_to_double(q_);
    case Kind::Approx:
      return d_;
    default:
      return HUGE_VAL;
  }
}

std::string ExtValue::to_string() const {
  switch (kind_) {
    case Kind::Exact:
      return format_rat(q_);
    case Kind::Approx:
      return format_double(d_);
    default:
      return "inf";
  }
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.is_inf() || b.is_inf()) return ExtValue::infinity();
  if (a.is_exact() && b.is_exact()) return ExtValue::exact(a.q_ + b.q_);
  return ExtValue::approx(a.value() + b.value());
}

ExtValue operator*(const ExtValue& a, const ExtValue& b) {
  if (a.is_zero() || b.is_zero()) return ExtValue::zero();
  if (a.is_inf() || b.is_inf()) return ExtValue::infinity();
  if (a.is_exact() && b.is_exact()) return ExtValue::exact(a.q_ * b.q_);
  return ExtValue::approx(a.value() * b.value());
}

bool ev_less(const ExtValue& a, const ExtValue& b) {
  if (b.is_inf()) return !a.is_inf();
  if (a.is_inf()) return false;
  if (a.is_exact() && b.is_exact()) return a.rat() < b.rat();
  return a.value() < b.value();
}

ExtValue ev_max(const ExtValue& a, const ExtValue& b) { return ev_less(a, b) ? b : a; }

bool ev_equal_exact(const ExtValue& a, const ExtValue& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  if (!a.is_exact() || !b.is_exact()) return false;
  return a.rat() == b.rat();
}

bool ev_close(const ExtValue& a, const ExtValue& b, double rel_tol, double abs_tol) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  if (a.is_exact() && b.is_exact()) return a.rat() == b.rat();
  double x = a.value();
  double y = b.value();
  return std::abs(x - y) <= abs_tol + rel_tol * std::max(std::abs(x), std::abs(y));
}

ExtValue ev_pow(const ExtValue& base, const Rat& exponent) {
  if (exponent == 0) return ExtValue::exact(Rat(1));
  if (base.is_inf()) {
    return exponent > 0 ? ExtValue::infinity() : ExtValue::zero();
  }
  if (base.is_zero()) {
    if (exponent < 0) throw std::domain_error("0 raised to a negative power");
    return ExtValue::zero();
  }
  if (base.is_exact()) {
    if (auto exact = rat_pow_exact(base.rat(), exponent)) {
      return ExtValue::exact(*exact);
    }
    return ExtValue::approx(rat_pow_double(base.rat(), exponent));
  }
  return ExtValue::approx(std::pow(base.value(), rat_to_double(exponent)));
}

}  // namespace rikit
