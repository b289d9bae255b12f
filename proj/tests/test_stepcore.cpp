#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rikit/corpus.hpp"
#include "rikit/step_function.hpp"

using namespace rikit;
using namespace rikit::stepcore;

namespace {

const ExtRat kInf = ExtRat::infinity();

StepFunction two_level() {
  // 3 on [0,1), 1 on [1,2), 0 beyond
  return StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(3)}, {Rat(1), ExtRat(Rat(2)), Rat(1)}},
                            Rat(0), kInf);
}

}  // namespace

TEST_CASE("canonical form merges touching equal pieces and drops tail-valued ones") {
  const auto f = StepFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(2)}, {Rat(1), ExtRat(Rat(2)), Rat(2)},
       {Rat(3), ExtRat(Rat(4)), Rat(0)}},
      Rat(0), kInf);
  REQUIRE(f.pieces().size() == 1);
  CHECK(f.pieces()[0] == Piece{Rat(0), ExtRat(Rat(2)), Rat(2)});
  CHECK(f.value_at(Rat(7, 2)) == Rat(0));
  CHECK(f.support_bound() == Rat(2));
}

TEST_CASE("construction rejects overlap, escape past alpha, negative values") {
  CHECK_THROWS(StepFunction::make(
      {{Rat(0), ExtRat(Rat(2)), Rat(1)}, {Rat(1), ExtRat(Rat(3)), Rat(2)}}, Rat(0), kInf));
  CHECK_THROWS(StepFunction::make({{Rat(0), ExtRat(Rat(3)), Rat(1)}}, Rat(0), ExtRat(Rat(2))));
  CHECK_THROWS(StepFunction::make({{Rat(0), kInf, Rat(1)}}, Rat(0), ExtRat(Rat(2))));
  CHECK_THROWS(StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(-1)}}, Rat(0), kInf));
}

TEST_CASE("rearrangement of a two-level function") {
  const auto r = rearrange(two_level());
  REQUIRE(r.steps().size() == 3);
  CHECK(r.steps()[0] == MonotoneStep::Step{Rat(0), ExtRat(Rat(3))});
  CHECK(r.steps()[1] == MonotoneStep::Step{Rat(1), ExtRat(Rat(1))});
  CHECK(r.steps()[2] == MonotoneStep::Step{Rat(2), ExtRat(Rat(0))});
  CHECK(r.tail().is_zero());
}

TEST_CASE("rearrangement closes gaps") {
  const auto f = StepFunction::make({{Rat(1), ExtRat(Rat(2)), Rat(2)}}, Rat(0), kInf);
  const auto r = rearrange(f);
  CHECK(r.value_at(Rat(1, 2)) == ExtRat(Rat(2)));
  CHECK(r.value_at(Rat(3, 2)).is_zero());
}

TEST_CASE("rearrangement floors at the tail on an infinite domain") {
  const auto f = StepFunction::make({{Rat(2), ExtRat(Rat(3)), Rat(3)}}, Rat(1), kInf);
  const auto r = rearrange(f);
  CHECK(r.value_at(Rat(1, 2)) == ExtRat(Rat(3)));
  CHECK(r.value_at(Rat(5)) == ExtRat(Rat(1)));
  CHECK(r.tail() == ExtRat(Rat(1)));
  CHECK(r.settle_point() == Rat(1));
}

TEST_CASE("rearrangement on a bounded domain sorts the tail mass in place") {
  const auto f =
      StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1)}}, Rat(2), ExtRat(Rat(2)));
  const auto r = rearrange(f);
  CHECK(r.alpha() == ExtRat(Rat(2)));
  CHECK(r.value_at(Rat(1, 2)) == ExtRat(Rat(2)));
  CHECK(r.value_at(Rat(3, 2)) == ExtRat(Rat(1)));
}

TEST_CASE("an unbounded piece dominates like a tail") {
  const auto f = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(5)}, {Rat(3), kInf, Rat(2)}},
                                    Rat(1), kInf);
  const auto r = rearrange(f);
  CHECK(r.value_at(Rat(1, 2)) == ExtRat(Rat(5)));
  CHECK(r.value_at(Rat(100)) == ExtRat(Rat(2)));
  CHECK(r.tail() == ExtRat(Rat(2)));
}

TEST_CASE("distribution of a two-level function, and equimeasurability") {
  const auto d = distribution(two_level());
  CHECK(d.value_at(Rat(1, 2)) == ExtRat(Rat(2)));
  CHECK(d.value_at(Rat(1)) == ExtRat(Rat(1)));  // {f > 1} = [0,1)
  CHECK(d.value_at(Rat(2)) == ExtRat(Rat(1)));
  CHECK(d.value_at(Rat(3)).is_zero());
  CHECK(distribution(rearrange(two_level())) == d);
}

TEST_CASE("distribution below a nonzero tail is infinite") {
  const auto f = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(3)}}, Rat(1), kInf);
  const auto d = distribution(f);
  CHECK(d.value_at(Rat(1, 2)).is_inf());
  CHECK(!d.finite_values());
  CHECK(d.value_at(Rat(2)) == ExtRat(Rat(1)));
}

TEST_CASE("running average of a two-level layout") {
  const auto m = maximal(rearrange(two_level()));
  CHECK(m.value_at(Rat(1, 2)) == Rat(3));
  CHECK(m.value_at(Rat(3, 2)) == Rat(7, 3));  // (3 + 1/2) / (3/2)
  CHECK(m.value_at(Rat(4)) == Rat(1));        // 4 / 4
}

TEST_CASE("dilation scales the domain") {
  const auto f = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1)}}, Rat(0), kInf);
  CHECK(dilate(f, Rat(2)).support_bound() == Rat(1, 2));
  CHECK(dilate(f, Rat(1, 2)).support_bound() == Rat(2));
  CHECK(dilate(f, Rat(2)).value_at(Rat(1, 4)) == Rat(1));
}

TEST_CASE("integration windows") {
  const auto f = two_level();
  CHECK(integrate(f) == ExtRat(Rat(4)));
  CHECK(integrate(f, Rat(1, 2), ExtRat(Rat(3, 2))) == ExtRat(Rat(2)));
  CHECK(integrate(f, Rat(0), kInf) == ExtRat(Rat(4)));
  const auto g = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(3)}}, Rat(1), kInf);
  CHECK(integrate(g).is_inf());
  CHECK(integrate(rearrange(g), Rat(0), ExtRat(Rat(2))) == ExtRat(Rat(4)));
}

TEST_CASE("product integral") {
  const auto f = StepFunction::make({{Rat(0), ExtRat(Rat(2)), Rat(1)}}, Rat(0), kInf);
  const auto g = StepFunction::make({{Rat(1), ExtRat(Rat(3)), Rat(3)}}, Rat(0), kInf);
  CHECK(integrate_product(f, g) == ExtRat(Rat(3)));
  const auto h = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(2)}}, Rat(1), kInf);
  CHECK(integrate_product(h, h).is_inf());  // tail * tail has infinite mass
}

TEST_CASE("pointwise sum and scale") {
  const auto f = two_level();
  const auto s = add(f, f);
  CHECK(s.value_at(Rat(1, 2)) == Rat(6));
  CHECK(s == scale(f, Rat(2)));
  CHECK(scale(f, Rat(0)).is_zero());
}

TEST_CASE("truncation materializes tail regions") {
  const auto f = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(5)}}, Rat(2), kInf);
  const auto t = truncate(f, Rat(3));
  CHECK(t.tail() == Rat(0));
  CHECK(t.value_at(Rat(1, 2)) == Rat(5));
  CHECK(t.value_at(Rat(2)) == Rat(2));
  CHECK(t.value_at(Rat(4)) == Rat(0));
  CHECK(integrate(t) == ExtRat(Rat(9)));
}

TEST_CASE("window restriction splits a layout at 1") {
  const auto r = rearrange(StepFunction::make(
      {{Rat(0), ExtRat(Rat(1, 2)), Rat(3)}, {Rat(1, 2), ExtRat(Rat(4)), Rat(2)}}, Rat(0), kInf));
  const auto local = restrict_window(r, Window::Local);
  CHECK(local.value_at(Rat(1, 4)) == Rat(3));
  CHECK(local.value_at(Rat(3, 4)) == Rat(2));
  CHECK(local.support_bound() == Rat(1));
  const auto global = restrict_window(r, Window::Global);
  CHECK(global.value_at(Rat(1, 2)) == Rat(0));
  CHECK(global.value_at(Rat(2)) == Rat(2));
  CHECK(global.support_bound() == Rat(4));
}

TEST_CASE("window restriction stretches a positive tail across the cut") {
  const auto r = rearrange(
      StepFunction::make({{Rat(0), ExtRat(Rat(1, 4)), Rat(5)}}, Rat(2), kInf));
  const auto local = restrict_window(r, Window::Local);
  CHECK(local.value_at(Rat(1, 2)) == Rat(2));
  CHECK(local.support_bound() == Rat(1));
  const auto global = restrict_window(r, Window::Global);
  CHECK(global.value_at(Rat(100)) == Rat(2));
  CHECK(global.tail() == Rat(0));
  CHECK(global.pieces().back().b.is_inf());
}

TEST_CASE("sequence realization and sorting") {
  const auto g = SequenceFn::make({Rat(1), Rat(3), Rat(0), Rat(2)}, Rat(1, 2));
  const auto s = sort_descending(g);
  CHECK(s.entries() == std::vector<Rat>{Rat(3), Rat(2), Rat(1)});
  const auto f = realize(g);
  CHECK(f.value_at(Rat(1, 4)) == Rat(1));
  CHECK(f.value_at(Rat(5, 4)) == Rat(0));
  CHECK(f.value_at(Rat(7, 4)) == Rat(2));
  CHECK(integrate(f) == ExtRat(Rat(3)));
  // realizing the sorted sequence is the rearrangement of the realization
  CHECK(realize(s) == rearrange(f).to_step_function());
}

TEST_CASE("rearrangement is idempotent and equimeasurable on random inputs") {
  for (uint64_t i = 0; i < 200; ++i) {
    corpus::Rng rng(corpus::trial_seed(42, i));
    const auto f = corpus::random_step(rng, 6);
    const auto r = rearrange(f);
    CHECK(distribution(f) == distribution(r));
    if (r.finite_values()) {
      CHECK(rearrange(r.to_step_function()) == r);
    }
  }
}

TEST_CASE("sum rearrangement is dominated by shifted rearrangements pointwise") {
  // (f+g)*(s+t) <= f*(s) + g*(t), spot-checked at s = t = u/2
  for (uint64_t i = 0; i < 200; ++i) {
    corpus::Rng rng(corpus::trial_seed(7, i));
    const auto f = corpus::random_compact_step(rng, 5);
    const auto g = corpus::random_compact_step(rng, 5);
    const auto rs = rearrange(add(f, g));
    const auto rf = rearrange(f);
    const auto rg = rearrange(g);
    for (int k = 1; k <= 8; ++k) {
      const Rat u(k, 2);
      CHECK(rs.value_at(u) <= rf.value_at(u / 2) + rg.value_at(u / 2));
    }
  }
}
