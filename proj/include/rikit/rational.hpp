#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace rikit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", integer, or plain decimal literals ("3", "-1/2", "0.25").
// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// Canonical form: "p" or "p/q" with q > 1.
std::string format_rat(const Rat& value);

double rat_to_double(const Rat& value);

// Exact integer power; negative exponents require a nonzero base.
Rat rat_pow_int(const Rat& base, long exponent);

// Exact n-th root of a perfect n-th power; nullopt otherwise. n >= 1,
// value >= 0.
std::optional<Rat> rat_root(const Rat& value, unsigned long n);

// base^exponent as an exact rational when one exists. base must be >= 0;
// base == 0 needs exponent > 0.
std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& exponent);

// base^exponent through doubles, for the inexact paths.
double rat_pow_double(const Rat& base, const Rat& exponent);

// Exact rational value of a finite double (dyadic).
Rat rat_from_double(double value);

// Fixed 12-significant-digit rendering used everywhere a measured double is
// printed, so repeated runs emit identical bytes.
std::string format_double(double value);

}  // namespace rikit
