#pragma once

#include <json.hpp>
#include <string>

#include "rikit/shape_function.hpp"
#include "rikit/space.hpp"
#include "rikit/step_function.hpp"

namespace rikit::json_io {

// All numeric payloads are carried as exact strings ("3/4", "inf"); keys are
// emitted in a fixed order so output is byte-reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const stepcore::StepFunction& f);
Json to_json(const stepcore::MonotoneStep& fstar);
Json to_json(const stepcore::SequenceFn& g);
Json to_json(const shapefn::ShapeFunction& phi);
Json to_json(const spaces::SpaceSpec& spec);

stepcore::StepFunction step_from_json(const Json& j);
stepcore::SequenceFn sequence_from_json(const Json& j);
shapefn::ShapeFunction shape_from_json(const Json& j);
spaces::SpaceSpec spec_from_json(const Json& j);

// Accepts inline JSON (leading '{') or a path to a JSON file.
Json load_json_arg(const std::string& arg);

}  // namespace rikit::json_io
