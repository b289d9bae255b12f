#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rikit/extended.hpp"
#include "rikit/power_value.hpp"
#include "rikit/rational.hpp"

using namespace rikit;

TEST_CASE("rational parse and format round-trip") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-2") == Rat(-2));
  CHECK(format_rat(Rat(10, 4)) == "5/2");
  CHECK(format_rat(Rat(7)) == "7");
  CHECK(rat_to_double(Rat(1, 2)) == 0.5);
}

TEST_CASE("exact powers") {
  auto r = rat_pow_exact(Rat(4), Rat(1, 2));
  REQUIRE(r.has_value());
  CHECK(*r == Rat(2));
  CHECK(rat_pow_exact(Rat(8, 27), Rat(2, 3)).value() == Rat(4, 9));
  CHECK(!rat_pow_exact(Rat(2), Rat(1, 2)).has_value());
  CHECK(rat_pow_exact(Rat(4), Rat(-1, 2)).value() == Rat(1, 2));
  CHECK(rat_pow_double(Rat(2), Rat(1, 2)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rat_from_double is exact on representable values") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(3.0) == Rat(3));
  CHECK(rat_from_double(0.1) != Rat(1, 10));  // binary fraction, not 1/10
  CHECK(std::abs(rat_to_double(rat_from_double(0.1)) - 0.1) == 0.0);
}

TEST_CASE("extended rationals") {
  const ExtRat inf = ExtRat::infinity();
  CHECK(inf.is_inf());
  CHECK(ExtRat(Rat(2)) < inf);
  CHECK((ExtRat(Rat(2)) + inf).is_inf());
  CHECK((ExtRat(Rat(0)) * inf).is_zero());  // measure-theoretic convention
  CHECK(interval_length(Rat(1), ExtRat(Rat(3))) == ExtRat(Rat(2)));
  CHECK(interval_length(Rat(1), inf).is_inf());
}

TEST_CASE("extended values track exactness") {
  const ExtValue a = ExtValue::exact(Rat(3, 2));
  const ExtValue b = ExtValue::approx(0.5);
  CHECK((a + a).is_exact());
  CHECK(!(a + b).is_exact());
  CHECK((a * ExtValue::infinity()).is_inf());
  CHECK(ev_pow(ExtValue::exact(Rat(4)), Rat(1, 2)).is_exact());
  CHECK(!ev_pow(ExtValue::exact(Rat(2)), Rat(1, 2)).is_exact());
  CHECK(ev_close(ev_pow(ExtValue::exact(Rat(2)), Rat(1, 2)), ExtValue::approx(std::sqrt(2.0)),
                 1e-12, 1e-12));
  CHECK(ev_max(a, b).value() == 1.5);
}

TEST_CASE("power values compare exactly") {
  const PowerValue a = PowerValue::pow(Rat(2), Rat(1, 2));   // sqrt(2)
  const PowerValue b = PowerValue::pow(Rat(8), Rat(1, 6));   // also 2^(1/2)
  CHECK(pv_equal(a, b));
  CHECK(pv_less(PowerValue::of(Rat(7, 5)), a));
  CHECK(pv_less(a, PowerValue::of(Rat(3, 2))));
  const PowerValue c = a * PowerValue::pow(Rat(3), Rat(1, 3));
  CHECK(c.to_double() == doctest::Approx(std::sqrt(2.0) * std::cbrt(3.0)));
  CHECK(pv_equal(a.pow_rat(Rat(2)), PowerValue::of(Rat(2))));
  CHECK(pv_equal(pv_div(c, a), PowerValue::pow(Rat(3), Rat(1, 3))));
  CHECK(pv_div(PowerValue::of(Rat(1)), PowerValue::zero()).is_inf());
  CHECK(pv_div(PowerValue::of(Rat(1)), PowerValue::infinity()).is_zero());
  CHECK_THROWS_AS(pv_div(PowerValue::zero(), PowerValue::zero()), std::domain_error);
  CHECK(pv_max(a, b).to_double() == doctest::Approx(std::sqrt(2.0)));
  const auto r = PowerValue::pow(Rat(4), Rat(1, 2)).as_rat();
  REQUIRE(r.has_value());
  CHECK(*r == Rat(2));
}
