#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rikit/corpus.hpp"
#include "rikit/duality.hpp"

using namespace rikit;
using namespace rikit::duality;
using spaces::SpaceSpec;
using stepcore::StepFunction;

namespace {

const ExtRat kInf = ExtRat::infinity();

shapefn::ShapeFunction sqrt_shape() { return shapefn::power_shape(Rat(1), Rat(1, 2)); }
shapefn::ShapeFunction id_shape() { return shapefn::power_shape(Rat(1), Rat(1)); }

StepFunction flat(const Rat& len, const Rat& v = Rat(1)) {
  return StepFunction::make({{Rat(0), ExtRat(len), v}}, Rat(0), kInf);
}

}  // namespace

TEST_CASE("closed-form associates") {
  CHECK(associate_closed_form(SpaceSpec::lp(ExtRat(Rat(2))))->space().name() == "Lp(2)");
  CHECK(associate_closed_form(SpaceSpec::lp(ExtRat(Rat(3))))->space().name() == "Lp(3/2)");
  CHECK(associate_closed_form(SpaceSpec::lp(ExtRat(Rat(1))))->space().name() == "Lp(inf)");
  CHECK(associate_closed_form(SpaceSpec::lp(kInf))->space().name() == "Lp(1)");
  CHECK_FALSE(associate_closed_form(SpaceSpec::lp(ExtRat(Rat(1, 2)))).has_value());
  CHECK_FALSE(associate_closed_form(SpaceSpec::lorentz(ExtRat(Rat(2)), ExtRat(Rat(1)))).has_value());

  // the square-root shape is its own bar transform
  const auto lam = associate_closed_form(SpaceSpec::lorentz_endpoint(sqrt_shape()));
  CHECK(lam->space().name() == SpaceSpec::marcinkiewicz(sqrt_shape()).name());
  const auto mar = associate_closed_form(SpaceSpec::marcinkiewicz(sqrt_shape()));
  CHECK(mar->space().name() == SpaceSpec::lorentz_endpoint(sqrt_shape()).name());

  CHECK(associate_closed_form(SpaceSpec::sum_l1_linf())->space().name() == "L1&Linf");
  CHECK(associate_closed_form(SpaceSpec::cap_l1_linf())->space().name() == "L1+Linf");

  const auto weak = associate_closed_form(SpaceSpec::weak_marcinkiewicz(sqrt_shape()));
  CHECK_FALSE(weak->is_space());
  CHECK(weak->name().find("int[") == 0);

  const auto atom = associate_closed_form(SpaceSpec::atomic(Rat(2), SpaceSpec::lp(ExtRat(Rat(2)))));
  CHECK(atom->space().name() == "seq[beta=2,Lp(2)]");
}

TEST_CASE("bar transform swaps endpoint pairs") {
  // bar of t is the constant 1, bar of 2t is the constant 1/2
  const auto two_t = shapefn::power_shape(Rat(2), Rat(1));
  const auto lam2 = associate_closed_form(SpaceSpec::lorentz_endpoint(two_t));
  REQUIRE(lam2.has_value());
  const auto& bar = lam2->space().phi();
  CHECK(bar.eval(Rat(5)).rat() == Rat(1, 2));
  CHECK(bar.eval(Rat(1, 7)).rat() == Rat(1, 2));
}

TEST_CASE("weighted reciprocal norm values") {
  CHECK(weighted_reciprocal_norm(sqrt_shape(), flat(Rat(4))).rat() == 4);
  const StepFunction mix = StepFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(2)}, {Rat(1), ExtRat(Rat(4)), Rat(1)}}, Rat(0), kInf);
  CHECK(weighted_reciprocal_norm(sqrt_shape(), mix).rat() == 6);
  // 1/t is not integrable at 0, so any nonzero input blows up
  CHECK(weighted_reciprocal_norm(id_shape(), flat(Rat(1))).is_inf());
  CHECK(weighted_reciprocal_norm(id_shape(), StepFunction::make({}, Rat(0), kInf)).value() == 0);
}

TEST_CASE("weak space of the identity shape has a trivial associate") {
  const auto form = associate_closed_form(SpaceSpec::weak_marcinkiewicz(id_shape()));
  REQUIRE(form.has_value());
  CHECK(associate_norm(*form, flat(Rat(1))).is_inf());
  CHECK(associate_norm(*form, flat(Rat(1, 8), Rat(5))).is_inf());
}

TEST_CASE("clamp candidate stays under the reciprocal") {
  const auto c = reciprocal_clamp_candidate(sqrt_shape(), Rat(1, 4), Rat(4), 4);
  REQUIRE(!c.pieces().empty());
  CHECK(c.pieces().front().a == Rat(1, 4));
  CHECK(c.pieces().back().b == ExtRat(Rat(4)));
  for (const auto& p : c.pieces()) {
    // value * phi(t) <= 1 across the cell; the sup sits at the right end
    const auto bound = ExtValue::exact(p.v) * sqrt_shape().eval(p.b.finite());
    CHECK(bound.value() <= 1.0 + 1e-12);
    CHECK(p.v > 0);
  }
  // weak norm of the clamp approaches 1 from below
  const auto weak = spaces::norm(SpaceSpec::weak_marcinkiewicz(sqrt_shape()), c);
  CHECK(weak.value() <= 1.0 + 1e-12);
  CHECK(weak.value() > 0.8);
}

TEST_CASE("associate estimate certifies the weak square-root weight") {
  const auto spec = SpaceSpec::weak_marcinkiewicz(sqrt_shape());
  const auto res = associate_estimate(spec, flat(Rat(1)));
  // the true associate value is 2; the estimate must certify at least 99%
  // of it without ever exceeding it
  CHECK(res.value.value() >= 2.0 * 0.99);
  if (res.value.is_exact()) {
    CHECK(res.value.rat() <= 2);
  } else {
    CHECK(res.value.value() <= 2.0 + 1e-12);
  }
  CHECK(!res.witness.empty());
}

TEST_CASE("estimate never exceeds a computable associate") {
  // for L2 the associate is L2 itself, so the estimate is bounded by it
  corpus::Rng rng(99);
  const auto spec = SpaceSpec::lp(ExtRat(Rat(2)));
  for (int i = 0; i < 25; ++i) {
    const StepFunction g = corpus::random_compact_step(rng, 5);
    const auto est = associate_estimate(spec, g);
    const auto truth = spaces::norm(SpaceSpec::lp(ExtRat(Rat(2))), g);
    CHECK(est.value.value() <= truth.value() * (1 + 1e-9) + 1e-12);
  }
}

TEST_CASE("pairing bound holds with closed forms") {
  const auto spec = SpaceSpec::weak_marcinkiewicz(sqrt_shape());
  const auto form = associate_closed_form(spec);
  const auto rep = holder_check(spec, *form, flat(Rat(4)), flat(Rat(1)));
  CHECK(rep.holds);
  CHECK(rep.lhs.rat() == 1);
  CHECK(rep.rhs.rat() == 4);
  CHECK(rep.slack == doctest::Approx(3.0));

  // zero against infinity counts as infinite, never as zero
  const auto weak_id = SpaceSpec::weak_marcinkiewicz(id_shape());
  const auto form_id = associate_closed_form(weak_id);
  const StepFunction zero = StepFunction::make({}, Rat(0), kInf);
  const auto rep0 = holder_check(weak_id, *form_id, zero, flat(Rat(1)));
  CHECK(rep0.holds);

  corpus::Rng rng(5);
  const auto l2 = SpaceSpec::lp(ExtRat(Rat(2)));
  const auto l2form = associate_closed_form(l2);
  for (int i = 0; i < 40; ++i) {
    const StepFunction f = corpus::random_step(rng, 5);
    const StepFunction g = corpus::random_step(rng, 5);
    if (!f.alpha().is_inf() || !g.alpha().is_inf()) continue;
    CHECK(holder_check(l2, *l2form, f, g).holds);
  }
}

TEST_CASE("resonance is attained by sorting") {
  const auto res = resonance_gap({Rat(3), Rat(1)}, {Rat(1), Rat(2)});
  CHECK(res.best == 7);
  CHECK(res.sorted_pairing == 7);
  CHECK(res.attained_by_sorting);

  const auto skew = resonance_gap({Rat(1), Rat(4), Rat(2)}, {Rat(1, 2), Rat(3), Rat(1)});
  CHECK(skew.sorted_pairing == Rat(4) * Rat(3) + Rat(2) * Rat(1) + Rat(1) * Rat(1, 2));
  CHECK(skew.attained_by_sorting);

  CHECK(resonance_gap({}, {}).best == 0);
  CHECK_THROWS(resonance_gap(std::vector<Rat>(9, Rat(1)), std::vector<Rat>(9, Rat(1))));
}
