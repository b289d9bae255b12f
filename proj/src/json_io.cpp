#include "rikit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace rikit::json_io {

namespace {

using stepcore::Piece;
using stepcore::SequenceFn;
using stepcore::StepFunction;

std::string ext_str(const ExtRat& v) { return v.to_string(); }

Rat rat_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  return parse_rat(j.at(key).get<std::string>());
}

ExtRat ext_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  return parse_ext(j.at(key).get<std::string>());
}

}  // namespace

Json to_json(const StepFunction& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"a", format_rat(p.a)}, {"b", ext_str(p.b)}, {"v", format_rat(p.v)}});
  }
  return {{"pieces", pieces}, {"tail", format_rat(f.tail())}, {"alpha", ext_str(f.alpha())}};
}

Json to_json(const stepcore::MonotoneStep& fstar) {
  Json steps = Json::array();
  for (const auto& s : fstar.steps()) {
    steps.push_back({{"T", format_rat(s.T)}, {"v", ext_str(s.v)}});
  }
  return {{"steps", steps}, {"tail", ext_str(fstar.tail())}, {"alpha", ext_str(fstar.alpha())}};
}

Json to_json(const SequenceFn& g) {
  Json entries = Json::array();
  for (const auto& e : g.entries()) entries.push_back(format_rat(e));
  return {{"entries", entries}, {"beta", format_rat(g.beta())}};
}

Json to_json(const shapefn::ShapeFunction& phi) {
  Json pieces = Json::array();
  for (const auto& p : phi.pieces()) {
    Json piece = {{"from", format_rat(p.from)},
                  {"to", ext_str(p.to)},
                  {"coef", format_rat(p.coef)},
                  {"exp", format_rat(p.exp)}};
    if (p.add != 0) piece["add"] = format_rat(p.add);
    pieces.push_back(std::move(piece));
  }
  return {{"pieces", pieces}, {"alpha", ext_str(phi.alpha())}};
}

Json to_json(const spaces::SpaceSpec& spec) {
  using spaces::Kind;
  switch (spec.kind()) {
    case Kind::Lp:
      return {{"kind", "lp"}, {"p", ext_str(spec.p())}};
    case Kind::Lorentz:
      return {{"kind", "lorentz"}, {"p", ext_str(spec.p())}, {"q", ext_str(spec.q())}};
    case Kind::WeakMarcinkiewicz:
      return {{"kind", "weak_m"}, {"phi", to_json(spec.phi())}};
    case Kind::Marcinkiewicz:
      return {{"kind", "strong_m"}, {"phi", to_json(spec.phi())}};
    case Kind::LorentzEndpoint:
      return {{"kind", "lambda"}, {"phi", to_json(spec.phi())}};
    case Kind::SumL1Linf:
      return {{"kind", "sum_l1_linf"}};
    case Kind::CapL1Linf:
      return {{"kind", "cap_l1_linf"}};
    case Kind::WL:
      return {{"kind", "wl"}, {"local", to_json(spec.local())}, {"global", to_json(spec.global())}};
    case Kind::Atomic:
      return {{"kind", "atomic"}, {"beta", format_rat(spec.beta())}, {"inner", to_json(spec.inner())}};
  }
  throw std::logic_error("unhandled spec kind");
}

StepFunction step_from_json(const Json& j) {
  std::vector<Piece> pieces;
  for (const auto& p : j.value("pieces", Json::array())) {
    pieces.push_back({rat_field(p, "a"), ext_field(p, "b"), rat_field(p, "v")});
  }
  const Rat tail = j.contains("tail") ? rat_field(j, "tail") : Rat(0);
  const ExtRat alpha = j.contains("alpha") ? ext_field(j, "alpha") : ExtRat::infinity();
  return StepFunction::make(std::move(pieces), tail, alpha);
}

SequenceFn sequence_from_json(const Json& j) {
  std::vector<Rat> entries;
  for (const auto& e : j.value("entries", Json::array())) {
    entries.push_back(parse_rat(e.get<std::string>()));
  }
  const Rat beta = j.contains("beta") ? rat_field(j, "beta") : Rat(1);
  return SequenceFn::make(std::move(entries), beta);
}

shapefn::ShapeFunction shape_from_json(const Json& j) {
  std::vector<shapefn::ShapePiece> pieces;
  for (const auto& p : j.value("pieces", Json::array())) {
    shapefn::ShapePiece piece{rat_field(p, "from"), ext_field(p, "to"), rat_field(p, "coef"),
                              rat_field(p, "exp")};
    if (p.contains("add")) piece.add = rat_field(p, "add");
    pieces.push_back(std::move(piece));
  }
  const ExtRat alpha = j.contains("alpha") ? ext_field(j, "alpha") : ExtRat::infinity();
  return shapefn::ShapeFunction::make(std::move(pieces), alpha);
}

spaces::SpaceSpec spec_from_json(const Json& j) {
  using spaces::SpaceSpec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") return SpaceSpec::lp(ext_field(j, "p"));
  if (kind == "lorentz") return SpaceSpec::lorentz(ext_field(j, "p"), ext_field(j, "q"));
  if (kind == "weak_m") return SpaceSpec::weak_marcinkiewicz(shape_from_json(j.at("phi")));
  if (kind == "strong_m") return SpaceSpec::marcinkiewicz(shape_from_json(j.at("phi")));
  if (kind == "lambda") return SpaceSpec::lorentz_endpoint(shape_from_json(j.at("phi")));
  if (kind == "sum_l1_linf") return SpaceSpec::sum_l1_linf();
  if (kind == "cap_l1_linf") return SpaceSpec::cap_l1_linf();
  if (kind == "wl")
    return SpaceSpec::wl(spec_from_json(j.at("local")), spec_from_json(j.at("global")));
  if (kind == "atomic")
    return SpaceSpec::atomic(rat_field(j, "beta"), spec_from_json(j.at("inner")));
  throw std::invalid_argument("unknown space kind: " + kind);
}

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file: " + arg);
  return Json::parse(in);
}

}  // namespace rikit::json_io
