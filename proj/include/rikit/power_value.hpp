#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rikit/extended.hpp"

namespace rikit {

// Exact arithmetic for non-negative reals of the form q * prod b_i^{e_i}
// (rational q > 0, rational bases b_i > 0, rational exponents), extended with
// 0 and +infinity. Comparisons are decided exactly by raising both sides to
// the least common multiple of the exponent denominators, which reduces them
// to rational comparisons. Exponent denominators stay tiny here (powers like
// t^{1/2} and 2^{k/2}), so the intermediate integers remain manageable.
class PowerValue {
 public:
  PowerValue() : kind_(Kind::Zero), q_(0) {}

  static PowerValue zero() { return PowerValue(); }
  static PowerValue infinity();
  static PowerValue of(Rat value);                 // value >= 0
  static PowerValue pow(Rat base, Rat exponent);   // base >= 0; 0^e needs e > 0

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_inf() const { return kind_ == Kind::Inf; }
  bool is_finite() const { return kind_ != Kind::Inf; }

  friend PowerValue operator*(const PowerValue& a, const PowerValue& b);
  PowerValue pow_rat(const Rat& exponent) const;  // nonzero exponent needs > 0 value

  double to_double() const;
  std::string to_string() const;
  // Exact rational value when every exponent folds away.
  std::optional<Rat> as_rat() const;
  ExtValue to_ext_value() const;

  friend bool pv_less(const PowerValue& a, const PowerValue& b);
  friend bool pv_equal(const PowerValue& a, const PowerValue& b);

 private:
  enum class Kind { Zero, Finite, Inf };

  void push_factor(Rat base, Rat exponent);
  void normalize();

  Kind kind_;
  Rat q_;
  std::vector<std::pair<Rat, Rat>> factors_;  // (base, exponent)
};

inline bool pv_less_equal(const PowerValue& a, const PowerValue& b) {
  return !pv_less(b, a);
}

PowerValue pv_max(const PowerValue& a, const PowerValue& b);

// a / b; throws std::domain_error on 0/0 and inf/inf.
PowerValue pv_div(const PowerValue& a, const PowerValue& b);

}  // namespace rikit
