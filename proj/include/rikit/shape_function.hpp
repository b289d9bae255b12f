#pragma once

#include <string>
#include <vector>

#include "rikit/extended.hpp"
#include "rikit/power_value.hpp"

namespace rikit::shapefn {

// One piece: value coef * t^exp + add on (from, to]. Pure power pieces have
// add = 0; an affine piece (a chord) is the combination of a p=1 and a p=0
// contribution, i.e. exp = 1 with add > 0. Only the concave-majorant output
// uses affine pieces; the analytic operations (doubling constant, weak
// quasiconcavity, bar, reciprocal integral, max) require pure powers.
struct ShapePiece {
  Rat from;
  ExtRat to;
  Rat coef;     // > 0
  Rat exp;
  Rat add = 0;  // >= 0, nonzero only with exp == 1

  friend bool operator==(const ShapePiece&, const ShapePiece&) = default;
};

// Piecewise-power function on (0, alpha), 0 at 0, left-continuous by the
// (from, to] piece convention. Pieces must tile (0, alpha) and carry positive
// coefficients; monotonicity (non-decreasing, upward jumps only) is recorded,
// not required, so that derived shapes such as t/phi(t) can round-trip.
class ShapeFunction {
 public:
  static ShapeFunction make(std::vector<ShapePiece> pieces, ExtRat alpha);

  const std::vector<ShapePiece>& pieces() const { return pieces_; }
  const ExtRat& alpha() const { return alpha_; }
  bool monotone() const { return monotone_; }
  bool pure_power() const { return pure_power_; }

  // Left-continuous value at t in (0, alpha]; eval(0) = 0.
  ExtValue eval(const Rat& t) const;
  PowerValue eval_power(const Rat& t) const;
  double eval_d(double t) const;
  // eval extended with the limit convention at infinity.
  ExtValue eval_ext(const ExtRat& t) const;

  ExtValue limit_at_zero() const;
  // Limit at alpha from the left (a value for finite alpha, possibly
  // +infinity otherwise).
  ExtValue limit_at_sup() const;

  // Index of the piece whose (from, to] interval contains t.
  size_t piece_index(const Rat& t) const;

  friend bool operator==(const ShapeFunction&, const ShapeFunction&) = default;

 private:
  std::vector<ShapePiece> pieces_;
  ExtRat alpha_;
  bool monotone_ = true;
  bool pure_power_ = true;
};

// Single piece coef * t^exp on (0, alpha).
ShapeFunction power_shape(Rat coef, Rat exp, ExtRat alpha = ExtRat::infinity());
// min(t, 1) and the constant-1 function on (0, inf), frequent shapes.
ShapeFunction min_t_one_shape();
ShapeFunction one_shape();

// Exact doubling supremum sup_{0 < t < alpha/2} phi(2t)/phi(t); infinite when
// unbounded. Requires pure power pieces.
PowerValue doubling_power(const ShapeFunction& phi);
ExtValue delta2_constant(const ShapeFunction& phi);

// sup over 0 < s <= t of (phi(t)/t) / (phi(s)/s): 1 exactly when phi(t)/t is
// non-increasing, finite when phi(t)/t is equivalent to a non-increasing
// function.
PowerValue wqc_power(const ShapeFunction& phi);
ExtValue wqc_constant(const ShapeFunction& phi);

struct ShapeReport {
  bool monotone = false;
  bool left_continuous = true;  // by the piece convention
  bool vanishes_only_at_zero = true;
  ExtValue delta2;
  bool delta2_finite = false;
  bool admissible = false;
  ExtValue wqc;
  ExtValue limit_at_zero;
  ExtValue limit_at_sup;
};

ShapeReport check_admissible(const ShapeFunction& phi);

// Globally concave: non-decreasing, continuous, per-piece exponents in [0,1]
// and non-increasing across pieces (slopes can only flatten).
bool is_concave(const ShapeFunction& phi);

// Compact deterministic rendering, e.g. "t^(1/2)" or "{1*t on (0,1]; 1 on (1,inf]}".
std::string signature(const ShapeFunction& phi);

// t / phi(t), with 0 at 0. Monotonicity of the result is recorded by the
// ShapeFunction itself; bar(bar(phi)) == phi exactly.
ShapeFunction bar(const ShapeFunction& phi);

// Exact integral of 1/phi over (from, to] intersected with (0, alpha).
ExtValue reciprocal_integral_over(const ShapeFunction& phi, const Rat& from, const ExtRat& to);
// Integral of 1/phi over (0, t].
ExtValue reciprocal_integral(const ShapeFunction& phi, const ExtRat& t);

// Pointwise max; piece crossings must land on rational points (throws
// std::domain_error otherwise).
ShapeFunction max_with(const ShapeFunction& a, const ShapeFunction& b);

struct MajorantResult {
  ShapeFunction majorant;
  double max_ratio;       // max of majorant/phi over 1000 log-spaced probes
  std::vector<Rat> grid;  // sample points actually used
};

// Least concave majorant of the samples of phi on a geometric grid (with the
// breakpoints of phi inserted): the upper hull of the sample points, emitted
// chord by chord as affine pieces. The result majorizes phi at every grid
// point, is concave, and for phi with non-increasing phi(t)/t stays below
// 2*phi everywhere. Requires a finite weak-quasiconcavity constant;
// grid_size >= 2 controls the sample density.
MajorantResult concave_majorant(const ShapeFunction& phi, int grid_size);

}  // namespace rikit::shapefn
