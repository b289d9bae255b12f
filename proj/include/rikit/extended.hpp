#pragma once

#include <string>

#include "rikit/rational.hpp"

namespace rikit {

// Non-negative rational extended with +infinity. Carries interval bounds,
// measures, and exact quasinorm values. Multiplication uses the measure
// convention 0 * inf = 0.
class ExtRat {
 public:
  ExtRat() : inf_(false), q_(0) {}
  ExtRat(Rat value);  // NOLINT: implicit by design, throws if negative
  ExtRat(int value) : ExtRat(Rat(value)) {}

  static ExtRat infinity();

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && q_ == 0; }
  const Rat& finite() const;  // throws on infinity
  double to_double() const;
  std::string to_string() const;  // "p/q" or "inf"

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator*(const ExtRat& a, const ExtRat& b);
  ExtRat& operator+=(const ExtRat& other);

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b);
  friend bool operator<=(const ExtRat& a, const ExtRat& b);
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

 private:
  bool inf_;
  Rat q_;
};

// Length of the interval [a, b); b may be infinite.
ExtRat interval_length(const Rat& a, const ExtRat& b);

// Parses "inf" or a rational literal.
ExtRat parse_ext(const std::string& text);

// Quasinorm result: exact non-negative rational when the evaluation stayed in
// rational arithmetic, a double otherwise, or +infinity. Arithmetic keeps
// exactness whenever both operands are exact; 0 * inf = 0.
class ExtValue {
 public:
  ExtValue() : kind_(Kind::Exact), q_(0), d_(0) {}

  static ExtValue exact(Rat value);
  static ExtValue approx(double value);
  static ExtValue infinity();
  static ExtValue zero() { return ExtValue(); }
  static ExtValue of(const ExtRat& value);

  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_approx() const { return kind_ == Kind::Approx; }
  bool is_inf() const { return kind_ == Kind::Inf; }
  bool is_zero() const { return kind_ == Kind::Exact && q_ == 0; }
  const Rat& rat() const;  // exact values only
  double value() const;    // double view, infinity -> HUGE_VAL
  std::string to_string() const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator*(const ExtValue& a, const ExtValue& b);

 private:
  enum class Kind { Exact, Approx, Inf };
  ExtValue(Kind kind, Rat q, double d) : kind_(kind), q_(std::move(q)), d_(d) {}

  Kind kind_;
  Rat q_;
  double d_;
};

// Total order for taking suprema: exact pairs compare exactly, anything else
// through doubles (an infinity dominates).
bool ev_less(const ExtValue& a, const ExtValue& b);
ExtValue ev_max(const ExtValue& a, const ExtValue& b);

// True when both are exact (or both infinite) and equal as rationals.
bool ev_equal_exact(const ExtValue& a, const ExtValue& b);

// |a - b| <= abs_tol + rel_tol * max(|a|, |b|), with infinities matching only
// each other. The exact/exact case compares exactly.
bool ev_close(const ExtValue& a, const ExtValue& b, double rel_tol, double abs_tol);

// base^exponent: exact when a rational power exists, double otherwise.
ExtValue ev_pow(const ExtValue& base, const Rat& exponent);

}  // namespace rikit
