#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rikit/corpus.hpp"
#include "rikit/theorems.hpp"

using namespace rikit;
using namespace rikit::theorems;
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

TEST_CASE("running-average constants") {
  CHECK(endpoint_constant(sqrt_shape()).rat() == 2);
  CHECK(endpoint_constant(shapefn::power_shape(Rat(1), Rat(1, 3))).rat() == Rat(3, 2));
  CHECK(endpoint_constant(shapefn::power_shape(Rat(1), Rat(1, 2), ExtRat(Rat(4)))).rat() == 2);
  CHECK(endpoint_constant(id_shape()).is_inf());
  CHECK(endpoint_constant(shapefn::min_t_one_shape()).is_inf());
  CHECK(endpoint_constant(shapefn::power_shape(Rat(3), Rat(1, 2))).rat() == 2);
}

TEST_CASE("endpoint equivalence reports") {
  const auto good = endpoint_equivalence(sqrt_shape(), 7, 60);
  CHECK(good.ok());
  REQUIRE(!good.measured.empty());
  CHECK(good.measured.front().first == "S");
  CHECK(good.measured.front().second == "2");
  double ratio = 0;
  for (const auto& [k, v] : good.measured) {
    if (k == "max_ratio") ratio = std::stod(v);
  }
  CHECK(ratio > 1.9);
  CHECK(ratio <= 2.0);

  const auto bad = endpoint_equivalence(id_shape(), 7, 40);
  CHECK(bad.ok());
  for (const auto& [k, v] : bad.measured) {
    if (k == "S") CHECK(v == "inf");
    if (k == "max_ratio") CHECK(std::stod(v) >= std::log(1024.0) / 2);
  }
}

TEST_CASE("level sup identity is exact") {
  const StepFunction two_level = StepFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(3)}, {Rat(1), ExtRat(Rat(2)), Rat(1)}}, Rat(0), kInf);
  const auto res = sup_equality(two_level, sqrt_shape());
  CHECK(res.equal);
  CHECK(pv_equal(res.lhs, PowerValue::of(Rat(3))));

  // a gap layout and a tail layout
  const StepFunction gap = StepFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(2)}, {Rat(3), ExtRat(Rat(4)), Rat(5)}}, Rat(0), kInf);
  CHECK(sup_equality(gap, sqrt_shape()).equal);
  const StepFunction tailed =
      StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(4)}}, Rat(1, 2), kInf);
  CHECK(sup_equality(tailed, sqrt_shape()).equal);
  CHECK(sup_equality(StepFunction::make({}, Rat(0), kInf), sqrt_shape()).equal);

  corpus::Rng rng(3);
  for (const auto& [name, phi] : corpus::shape_catalog()) {
    CAPTURE(name);
    for (int i = 0; i < 40; ++i) {
      StepFunction f = corpus::random_compact_step(rng, 6);
      if (rng.chance(1, 4)) {
        f = StepFunction::make(f.pieces(), corpus::small_positive(rng), kInf);
      }
      CHECK(sup_equality(f, phi).equal);
    }
  }
}

TEST_CASE("set oracle brackets the weak norm") {
  CHECK(set_oracle(flat(Rat(1)), sqrt_shape()).rat() == 1);
  // the oracle sits between the weak and the running-average norms
  corpus::Rng rng(11);
  const auto weak = SpaceSpec::weak_marcinkiewicz(sqrt_shape());
  const auto strong = SpaceSpec::marcinkiewicz(sqrt_shape());
  for (int i = 0; i < 60; ++i) {
    const StepFunction f = corpus::random_compact_step(rng, 6);
    const auto oracle = set_oracle(f, sqrt_shape());
    const auto m = spaces::norm(weak, f);
    const auto M = spaces::norm(strong, f);
    CHECK(m.value() <= oracle.value() * (1 + 1e-9) + 1e-15);
    CHECK(oracle.value() <= M.value() * (1 + 1e-9) + 1e-15);
  }
  // a positive tail pushes the oracle to infinity for growing shapes
  const StepFunction tailed = StepFunction::make({}, Rat(1), kInf);
  CHECK(set_oracle(tailed, sqrt_shape()).is_inf());
}

TEST_CASE("trimmed sets keep measure within integral budget") {
  const StepFunction f = StepFunction::make(
      {{Rat(0), ExtRat(Rat(1, 4)), Rat(4)}, {Rat(1, 4), ExtRat(Rat(1)), Rat(1)}}, Rat(0), kInf);
  const StepFunction e = flat(Rat(1));
  const PowerValue bound = spaces::weak_m_power(stepcore::rearrange(f), id_shape());
  CHECK(pv_equal(bound, PowerValue::of(Rat(1))));

  const auto res = dual_sets_forward(f, id_shape(), bound, e, 1);
  CHECK(res.holds);
  CHECK(res.kept_measure == Rat(3, 4));
  CHECK(res.required_measure == Rat(1, 2));
  CHECK(res.integral.rat() == Rat(3, 4));
  CHECK(res.allowed.rat() == 2);

  // deeper trims keep more of the set
  const auto res3 = dual_sets_forward(f, id_shape(), bound, e, 3);
  CHECK(res3.holds);
  CHECK(res3.kept_measure >= Rat(7, 8));

  // an inflated bound only loosens the thresholds
  const auto loose = dual_sets_forward(f, id_shape(), bound * PowerValue::of(Rat(2)), e, 2);
  CHECK(loose.holds);
}

TEST_CASE("embedding characterizations") {
  const auto in2 = embedding_into_sum(sqrt_shape(), 7, 60);
  CHECK(in2.ok());
  bool embedded = false;
  std::string constant;
  for (const auto& [k, v] : in2.measured) {
    if (k == "embedded") embedded = v == "yes";
    if (k == "constant") constant = v;
  }
  CHECK(embedded);
  CHECK(constant == "2");

  const auto in1 = embedding_into_sum(id_shape(), 7, 40);
  CHECK(in1.ok());
  for (const auto& [k, v] : in1.measured) {
    if (k == "embedded") CHECK(v == "no");
  }

  const auto cap1 = embedding_from_cap(id_shape(), 7, 60);
  CHECK(cap1.ok());
  for (const auto& [k, v] : cap1.measured) {
    if (k == "embedded") CHECK(v == "yes");
  }
  const auto cap_sq = embedding_from_cap(shapefn::power_shape(Rat(1), Rat(2)), 7, 40);
  CHECK(cap_sq.ok());
  for (const auto& [k, v] : cap_sq.measured) {
    if (k == "embedded") CHECK(v == "no");
  }
}

TEST_CASE("amalgam of the ceiling shape") {
  const auto rep = amalgam_max_identity(sqrt_shape(), 7, 60);
  CHECK(rep.ok());
  const auto rep2 = amalgam_max_identity(id_shape(), 7, 60);
  CHECK(rep2.ok());
}

TEST_CASE("suite registry") {
  CHECK(suite_names().back() == "all");
  CHECK_THROWS(run_suite("mystery", 7, 5));

  const auto reports = run_suite("all", 7, 8);
  CHECK(reports.size() >= 15);
  for (const auto& rep : reports) {
    CAPTURE(rep.name);
    CHECK(rep.ok());
  }
  // deterministic: same seed, same measurements
  const auto again = run_suite("rearrange", 7, 30);
  const auto again2 = run_suite("rearrange", 7, 30);
  REQUIRE(again.size() == again2.size());
  CHECK(again[0].measured == again2[0].measured);
  CHECK(again[0].verdict == again2[0].verdict);
}
