#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>

#include "rikit/corpus.hpp"
#include "rikit/json_io.hpp"

using namespace rikit;
using namespace rikit::json_io;
using stepcore::StepFunction;

namespace {

const ExtRat kInf = ExtRat::infinity();

StepFunction sample_step() {
  return StepFunction::make({{Rat(0), ExtRat(Rat(1, 2)), Rat(3)}, {Rat(1), ExtRat(Rat(2)), Rat(1, 3)}},
                            Rat(0), kInf);
}

}  // namespace

TEST_CASE("step function round trip") {
  const StepFunction f = sample_step();
  CHECK(step_from_json(to_json(f)) == f);

  const StepFunction tailed = StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(2)}}, Rat(1, 4), kInf);
  CHECK(step_from_json(to_json(tailed)) == tailed);

  const StepFunction bounded =
      StepFunction::make({{Rat(1), ExtRat(Rat(3)), Rat(5)}}, Rat(0), ExtRat(Rat(4)));
  CHECK(step_from_json(to_json(bounded)) == bounded);
  CHECK(to_json(bounded)["alpha"] == "4");

  const StepFunction zero = StepFunction::make({}, Rat(0), kInf);
  CHECK(step_from_json(to_json(zero)) == zero);
}

TEST_CASE("defaults fill in when fields are absent") {
  const Json j = Json::parse(R"({"pieces":[{"a":"0","b":"1","v":"2"}]})");
  const StepFunction f = step_from_json(j);
  CHECK(f.tail() == 0);
  CHECK(f.alpha().is_inf());
  CHECK(f.value_at(Rat(1, 2)) == 2);
}

TEST_CASE("sequence round trip") {
  const auto g = stepcore::SequenceFn::make({Rat(3), Rat(0), Rat(1, 2)}, Rat(2));
  CHECK(sequence_from_json(to_json(g)) == g);

  const Json j = Json::parse(R"({"entries":["1","2"]})");
  CHECK(sequence_from_json(j).beta() == 1);
}

TEST_CASE("shape round trip") {
  for (const auto& [name, phi] : corpus::shape_catalog()) {
    CAPTURE(name);
    const auto back = shape_from_json(to_json(phi));
    CHECK(shapefn::signature(back) == shapefn::signature(phi));
  }
  const auto bounded = shapefn::power_shape(Rat(1), Rat(1, 2), ExtRat(Rat(4)));
  CHECK(shapefn::signature(shape_from_json(to_json(bounded))) == shapefn::signature(bounded));
}

TEST_CASE("space spec round trip covers every kind") {
  const auto sqrt_shape = shapefn::power_shape(Rat(1), Rat(1, 2));
  const std::vector<spaces::SpaceSpec> specs = {
      spaces::SpaceSpec::lp(ExtRat(Rat(2))),
      spaces::SpaceSpec::lp(kInf),
      spaces::SpaceSpec::lorentz(ExtRat(Rat(2)), ExtRat(Rat(1))),
      spaces::SpaceSpec::weak_marcinkiewicz(sqrt_shape),
      spaces::SpaceSpec::marcinkiewicz(sqrt_shape),
      spaces::SpaceSpec::lorentz_endpoint(sqrt_shape),
      spaces::SpaceSpec::sum_l1_linf(),
      spaces::SpaceSpec::cap_l1_linf(),
      spaces::SpaceSpec::wl(spaces::SpaceSpec::lp(kInf), spaces::SpaceSpec::weak_marcinkiewicz(sqrt_shape)),
      spaces::SpaceSpec::atomic(Rat(2), spaces::SpaceSpec::lp(ExtRat(Rat(1, 2)))),
  };
  for (const auto& spec : specs) {
    CAPTURE(spec.name());
    CHECK(spec_from_json(to_json(spec)).name() == spec.name());
  }
}

TEST_CASE("norms agree across a round trip") {
  const auto spec = spaces::SpaceSpec::lorentz(ExtRat(Rat(2)), ExtRat(Rat(1)));
  const StepFunction f = sample_step();
  const auto direct = spaces::norm(spec, f);
  const auto back = spaces::norm(spec_from_json(to_json(spec)), step_from_json(to_json(f)));
  CHECK(direct.value() == doctest::Approx(back.value()).epsilon(1e-15));
}

TEST_CASE("serialization is byte stable") {
  const auto j = to_json(sample_step());
  CHECK(j.dump() == to_json(sample_step()).dump());
  CHECK(to_json(spaces::SpaceSpec::sum_l1_linf()).dump() == R"({"kind":"sum_l1_linf"})");
  CHECK(j.dump() ==
        R"({"pieces":[{"a":"0","b":"1/2","v":"3"},{"a":"1","b":"2","v":"1/3"}],"tail":"0","alpha":"inf"})");
}

TEST_CASE("inline and file arguments load the same payload") {
  const std::string text = R"({"entries":["1","1/2"],"beta":"1"})";
  const Json inline_j = load_json_arg(text);
  const std::string path = "json_arg_probe.json";
  {
    std::ofstream out(path);
    out << text;
  }
  CHECK(load_json_arg(path) == inline_j);
  std::remove(path.c_str());
}

TEST_CASE("malformed payloads are rejected") {
  CHECK_THROWS(step_from_json(Json::parse(R"({"pieces":[{"a":"1","b":"0","v":"1"}]})")));
  CHECK_THROWS(spec_from_json(Json::parse(R"({"kind":"mystery"})")));
  CHECK_THROWS(shape_from_json(Json::parse(R"({"pieces":[]})")));
}
