#include "rikit/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rikit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rat(const std::string& text) {
  throw std::invalid_argument("not a rational literal: '" + text + "'");
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) bad_rat(text);

  Rat out;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rat(text);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    out = Rat(Int(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) bad_rat(text);
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    out = Rat(Int(whole) * scale + (frac.empty() ? Int(0) : Int(frac)), scale);
  } else {
    if (!all_digits(s)) bad_rat(text);
    out = Rat(Int(s));
  }
  return negative ? Rat(-out) : out;
}

std::string format_rat(const Rat& value) {
  Int num = boost::multiprecision::numerator(value);
  Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rat_pow_int(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (base == 0) {
    if (exponent < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  unsigned long mag = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
  Int num = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                       static_cast<unsigned>(mag));
  Int den = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                       static_cast<unsigned>(mag));
  return exponent < 0 ? Rat(den, num) : Rat(num, den);
}

namespace {

// Exact integer n-th root by bisection on the bit length; nullopt when v is
// not a perfect n-th power.
std::optional<Int> int_root(const Int& v, unsigned long n) {
  if (v < 0) return std::nullopt;
  if (v == 0 || v == 1 || n == 1) return v;
  Int lo = 1;
  Int hi = Int(1) << (boost::multiprecision::msb(v) / n + 2);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    Int p = boost::multiprecision::pow(mid, static_cast<unsigned>(n));
    if (p <= v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(n)) == v) return lo;
  return std::nullopt;
}

}  // namespace

std::optional<Rat> rat_root(const Rat& value, unsigned long n) {
  if (value < 0 || n == 0) return std::nullopt;
  auto num = int_root(boost::multiprecision::numerator(value), n);
  if (!num) return std::nullopt;
  auto den = int_root(boost::multiprecision::denominator(value), n);
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& exponent) {
  if (base < 0) return std::nullopt;
  if (base == 0) {
    if (exponent <= 0) return std::nullopt;
    return Rat(0);
  }
  Int e_num = boost::multiprecision::numerator(exponent);
  Int e_den = boost::multiprecision::denominator(exponent);
  if (e_num > 1000000 || e_num < -1000000 || e_den > 1000000) return std::nullopt;
  auto root = rat_root(base, e_den.convert_to<unsigned long>());
  if (!root) return std::nullopt;
  return rat_pow_int(*root, e_num.convert_to<long>());
}

double rat_pow_double(const Rat& base, const Rat& exponent) {
  if (auto exact = rat_pow_exact(base, exponent)) return rat_to_double(*exact);
  return std::pow(rat_to_double(base), rat_to_double(exponent));
}

Rat rat_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("rat_from_double: non-finite value");
  if (value == 0) return Rat(0);
  int exp = 0;
  double m = std::frexp(value, &exp);  // value = m * 2^exp, |m| in [0.5, 1)
  long long mantissa = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rat out(mantissa);
  Rat two(2);
  if (exp >= 0) {
    out *= rat_pow_int(two, exp);
  } else {
    out /= rat_pow_int(two, -exp);
  }
  return out;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace rikit
