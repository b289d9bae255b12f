#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rikit/corpus.hpp"
#include "rikit/shape_function.hpp"

using namespace rikit;
using namespace rikit::shapefn;

namespace {

const ExtRat kInf = ExtRat::infinity();

ShapeFunction jump_shape() {
  // t on (0,1], 2t beyond: admissible with a jump at 1
  return ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)}, {Rat(1), kInf, Rat(2), Rat(1)}}, kInf);
}

ShapeFunction cubic_mix() {
  // t on (0,1], t^3 beyond (continuous)
  return ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)}, {Rat(1), kInf, Rat(1), Rat(3)}}, kInf);
}

// Dense-grid oracle for the doubling constant: max of phi(2t)/phi(t) over
// log-spaced t in (0, alpha/2).
double doubling_oracle(const ShapeFunction& phi) {
  const double hi = phi.alpha().is_inf() ? 1e6 : phi.alpha().to_double() / 2;
  double best = 0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = 1e-6 * std::pow(hi / 1e-6, i / 4000.0);
    if (t <= 0 || 2 * t > (phi.alpha().is_inf() ? 2e300 : phi.alpha().to_double())) continue;
    best = std::max(best, phi.eval_d(2 * t) / phi.eval_d(t));
  }
  return best;
}

}  // namespace

TEST_CASE("construction validates tiling and positivity") {
  CHECK_THROWS(ShapeFunction::make({{Rat(1), kInf, Rat(1), Rat(1)}}, kInf));  // hole at 0
  CHECK_THROWS(ShapeFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)}}, kInf));
  CHECK_THROWS(ShapeFunction::make({{Rat(0), kInf, Rat(0), Rat(1)}}, kInf));  // zero coef
  CHECK_THROWS(ShapeFunction::make({{Rat(0), kInf, Rat(1), Rat(1), Rat(1)},  // affine needs
                                    {Rat(0), kInf, Rat(1), Rat(2), Rat(1)}},
                                   kInf));  // exp == 1
}

TEST_CASE("evaluation is left-continuous at junctions") {
  const auto phi = jump_shape();
  CHECK(phi.eval(Rat(1)).rat() == Rat(1));
  CHECK(phi.eval(Rat(3, 2)).rat() == Rat(3));
  CHECK(phi.eval_d(0.5) == 0.5);
  CHECK(phi.limit_at_zero().is_zero());
  CHECK(phi.limit_at_sup().is_inf());
  CHECK(phi.monotone());
}

TEST_CASE("bounded shapes evaluate up to the domain bound") {
  const auto phi = power_shape(Rat(1), Rat(1, 2), ExtRat(Rat(4)));
  CHECK(phi.eval(Rat(4)).rat() == Rat(2));
  CHECK(phi.limit_at_sup().rat() == Rat(2));
  CHECK_THROWS(phi.eval(Rat(5)));
}

TEST_CASE("doubling constants on the catalog") {
  CHECK(pv_equal(doubling_power(power_shape(Rat(1), Rat(1))), PowerValue::of(Rat(2))));
  CHECK(pv_equal(doubling_power(power_shape(Rat(1), Rat(1, 2))),
                 PowerValue::pow(Rat(2), Rat(1, 2))));
  CHECK(pv_equal(doubling_power(power_shape(Rat(1), Rat(2))), PowerValue::of(Rat(4))));
  CHECK(pv_equal(doubling_power(jump_shape()), PowerValue::of(Rat(4))));
  CHECK(pv_equal(doubling_power(cubic_mix()), PowerValue::of(Rat(8))));
  CHECK(pv_equal(doubling_power(min_t_one_shape()), PowerValue::of(Rat(2))));
  // bounded domain: sup over (0, 2) of sqrt(2t)/sqrt(t)
  CHECK(pv_equal(doubling_power(power_shape(Rat(1), Rat(1, 2), ExtRat(Rat(4)))),
                 PowerValue::pow(Rat(2), Rat(1, 2))));
}

TEST_CASE("doubling matches a dense-grid oracle") {
  for (const auto& [name, phi] : corpus::shape_catalog()) {
    CAPTURE(name);
    const double exact = doubling_power(phi).to_double();
    const double grid = doubling_oracle(phi);
    CHECK(grid <= exact * (1 + 1e-9));
    CHECK(grid >= exact * (1 - 1e-3));  // the grid nearly attains the sup
  }
}

TEST_CASE("weak quasiconcavity constants") {
  CHECK(pv_equal(wqc_power(power_shape(Rat(1), Rat(1, 2))), PowerValue::of(Rat(1))));
  CHECK(pv_equal(wqc_power(min_t_one_shape()), PowerValue::of(Rat(1))));
  CHECK(wqc_power(power_shape(Rat(1), Rat(2))).is_inf());
  CHECK(pv_equal(wqc_power(jump_shape()), PowerValue::of(Rat(2))));
  // max(t,1): t/phi ratio sup is attained flattening towards 0
  const auto maxshape = ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(0)}, {Rat(1), kInf, Rat(1), Rat(1)}}, kInf);
  CHECK(pv_equal(wqc_power(maxshape), PowerValue::of(Rat(1))));
}

TEST_CASE("admissibility report") {
  const auto ok = check_admissible(power_shape(Rat(2), Rat(1, 3)));
  CHECK(ok.admissible);
  CHECK(ok.monotone);
  CHECK(ok.left_continuous);
  CHECK(ok.vanishes_only_at_zero);
  CHECK(ok.delta2_finite);
  CHECK(ok.wqc.is_exact());

  const auto down = ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(2), Rat(0)}, {Rat(1), kInf, Rat(1), Rat(1)}}, kInf);
  CHECK(!check_admissible(down).monotone);
  CHECK(!check_admissible(down).admissible);

  // t^2 is admissible (doubling 4) though far from quasiconcave
  const auto quad = check_admissible(power_shape(Rat(1), Rat(2)));
  CHECK(quad.admissible);
  CHECK(quad.wqc.is_inf());
}

TEST_CASE("bar swaps concavity class") {
  const auto bar_sqrt = bar(power_shape(Rat(1), Rat(1, 2)));
  CHECK(bar_sqrt.eval(Rat(4)).rat() == Rat(2));  // t / sqrt(t) = sqrt(t)
  const auto bar_2t = bar(power_shape(Rat(2), Rat(1)));
  CHECK(bar_2t.eval(Rat(10)).rat() == Rat(1, 2));
  const auto bar_min = bar(min_t_one_shape());  // t/min(t,1) = max(1, t)
  CHECK(bar_min.eval(Rat(1, 2)).rat() == Rat(1));
  CHECK(bar_min.eval(Rat(3)).rat() == Rat(3));
  CHECK(bar_min.monotone());
}

TEST_CASE("reciprocal integrals") {
  const auto sqrt_shape = power_shape(Rat(1), Rat(1, 2));
  CHECK(reciprocal_integral(sqrt_shape, Rat(4)).rat() == Rat(4));  // 2*sqrt(4)
  CHECK(reciprocal_integral(power_shape(Rat(1), Rat(1)), Rat(1)).is_inf());
  CHECK(reciprocal_integral(power_shape(Rat(1), Rat(2)), Rat(1)).is_inf());
  CHECK(reciprocal_integral(min_t_one_shape(), Rat(1)).is_inf());
  const auto maxshape = ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(0)}, {Rat(1), kInf, Rat(1), Rat(1)}}, kInf);
  CHECK(reciprocal_integral(maxshape, Rat(1, 2)).rat() == Rat(1, 2));
  const auto v = reciprocal_integral(maxshape, Rat(2));
  CHECK(v.is_approx());
  CHECK(v.value() == doctest::Approx(1 + std::log(2.0)));
  // window form: integral of 1/sqrt over [1, 4) = 2*2 - 2*1
  CHECK(reciprocal_integral_over(sqrt_shape, Rat(1), ExtRat(Rat(4))).rat() == Rat(2));
  CHECK(reciprocal_integral_over(sqrt_shape, Rat(0), kInf).is_inf());
}

TEST_CASE("pointwise max of shapes") {
  const auto m = max_with(power_shape(Rat(1), Rat(1, 2)), power_shape(Rat(1), Rat(1)));
  CHECK(m.eval(Rat(1, 4)).rat() == Rat(1, 2));  // sqrt wins below 1
  CHECK(m.eval(Rat(4)).rat() == Rat(4));        // t wins above 1
  CHECK(m.monotone());
  const auto n = max_with(power_shape(Rat(1), Rat(1)), power_shape(Rat(2), Rat(1)));
  CHECK(n.eval(Rat(5)).rat() == Rat(10));
  // crossing of 2 and t^2 sits at sqrt(2): not representable
  CHECK_THROWS_AS(max_with(power_shape(Rat(2), Rat(0)), power_shape(Rat(1), Rat(2))),
                  std::domain_error);
}

TEST_CASE("least concave majorant of a concave shape changes nothing") {
  const auto res = concave_majorant(min_t_one_shape(), 200);
  CHECK(res.max_ratio <= 1 + 1e-9);
  for (double t : {0.01, 0.5, 1.0, 7.0, 900.0}) {
    CHECK(res.majorant.eval_d(t) >= min_t_one_shape().eval_d(t) * (1 - 1e-12));
    CHECK(res.majorant.eval_d(t) <= min_t_one_shape().eval_d(t) * (1 + 1e-9));
  }
}

TEST_CASE("least concave majorant bridges a jump within factor 2") {
  const auto res = concave_majorant(jump_shape(), 400);
  CHECK(res.max_ratio > 1.5);
  CHECK(res.max_ratio <= 2 + 1e-9);
  const auto& phi = jump_shape();
  for (double t : {0.001, 0.3, 1.0, 2.5, 1e3}) {
    CHECK(res.majorant.eval_d(t) >= phi.eval_d(t) * (1 - 1e-12));
  }
  // concavity along the grid: midpoint above chord
  const auto& g = res.grid;
  for (size_t i = 0; i + 2 < g.size(); i += 7) {
    const double a = rat_to_double(g[i]), b = rat_to_double(g[i + 2]);
    const double mid = res.majorant.eval_d((a + b) / 2);
    CHECK(mid >= (res.majorant.eval_d(a) + res.majorant.eval_d(b)) / 2 - 1e-9);
  }
}

TEST_CASE("concavity recognizer") {
  CHECK(is_concave(power_shape(Rat(1), Rat(1, 2))));
  CHECK(is_concave(min_t_one_shape()));
  CHECK(!is_concave(power_shape(Rat(1), Rat(2))));
  CHECK(!is_concave(jump_shape()));  // upward jump breaks concavity
  // continuous kink, exponents increasing: sqrt then t is convex at 1
  const auto convex_kink = ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1, 2)}, {Rat(1), kInf, Rat(1), Rat(1)}}, kInf);
  CHECK(!is_concave(convex_kink));
  const auto concave_kink = ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)}, {Rat(1), kInf, Rat(1), Rat(1, 2)}}, kInf);
  CHECK(is_concave(concave_kink));
}

TEST_CASE("signatures are stable and distinct") {
  CHECK(signature(power_shape(Rat(1), Rat(1, 2))) ==
        signature(power_shape(Rat(1), Rat(1, 2))));
  CHECK(signature(power_shape(Rat(1), Rat(1, 2))) != signature(power_shape(Rat(1), Rat(1))));
  CHECK(signature(min_t_one_shape()) != signature(one_shape()));
}
