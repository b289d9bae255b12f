// Command-line front end: evaluates quasinorms on exactly represented step
// functions, inspects shape functions, and runs the verification suites.
// All output is byte-deterministic for a fixed invocation.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rikit/duality.hpp"
#include "rikit/json_io.hpp"
#include "rikit/represent.hpp"
#include "rikit/theorems.hpp"

using namespace rikit;
using json_io::Json;

namespace {

Json value_json(const ExtValue& v) {
  Json out;
  out["value"] = v.to_string();
  out["exact"] = v.is_exact();
  if (!v.is_inf()) out["double"] = format_double(v.value());
  return out;
}

std::string value_text(const ExtValue& v) {
  if (v.is_inf()) return "inf";
  if (v.is_exact()) return format_rat(v.rat()) + " (exact)";
  return v.to_string() + " (approx)";
}

Json report_json(const theorems::CheckReport& rep) {
  Json out;
  out["name"] = rep.name;
  out["verdict"] = rep.verdict;
  Json measured = Json::object();
  for (const auto& [k, v] : rep.measured) measured[k] = v;
  out["measured"] = measured;
  if (!rep.witness.empty()) out["witness"] = rep.witness;
  out["seed"] = rep.seed;
  out["trials"] = rep.trials;
  return out;
}

void print_report(const theorems::CheckReport& rep) {
  std::string line = rep.verdict + "  " + rep.name;
  for (const auto& [k, v] : rep.measured) line += "  " + k + "=" + v;
  if (!rep.witness.empty()) line += "  witness=" + rep.witness;
  std::cout << line << "\n";
}

std::vector<Rat> parse_samples(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rat(item));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"quasinorm calculator for rearrangement-invariant spaces on step functions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON object instead of text");

  std::string space_arg, input_arg, shape_arg, inner_arg, seq_arg, samples_arg;
  std::string suite = "all";
  std::string beta_arg = "1";
  uint64_t seed = 1;
  int trials = 0;

  auto* eval = app.add_subcommand("eval", "quasinorm of a step function");
  eval->add_option("--space", space_arg, "space spec (inline JSON or file)")->required();
  eval->add_option("--input", input_arg, "step function (inline JSON or file)")->required();

  auto* rearr = app.add_subcommand("rearrange", "decreasing rearrangement of a step function");
  rearr->add_option("--input", input_arg, "step function (inline JSON or file)")->required();

  auto* fund = app.add_subcommand("fundamental", "fundamental function of a space");
  fund->add_option("--space", space_arg, "space spec (inline JSON or file)")->required();
  fund->add_option("--sample", samples_arg, "comma-separated points to evaluate");

  auto* shape = app.add_subcommand("shape-check", "admissibility report for a shape function");
  shape->add_option("--shape", shape_arg, "shape (inline JSON or file)")->required();

  auto* endpoint = app.add_subcommand("endpoint-check",
                                      "weak vs strong endpoint norms for a shape");
  endpoint->add_option("--shape", shape_arg, "shape (inline JSON or file)")->required();
  endpoint->add_option("--seed", seed, "seed for the trial stream");
  endpoint->add_option("--trials", trials, "trial count (0 picks the default)");

  auto* assoc = app.add_subcommand("associate", "associate norm: closed form and lower estimate");
  assoc->add_option("--space", space_arg, "space spec (inline JSON or file)")->required();
  assoc->add_option("--input", input_arg, "step function to measure")->required();

  auto* rep = app.add_subcommand("represent-check",
                                 "block-average representation identity for a sequence");
  rep->add_option("--inner", inner_arg, "inner space spec (inline JSON or file)")->required();
  rep->add_option("--beta", beta_arg, "atom width (rational)");
  rep->add_option("--seq", seq_arg, "sequence (inline JSON or file)");
  rep->add_option("--input", input_arg, "step function to push through the representation");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "seed for the trial stream");
  verify->add_option("--trials", trials, "per-report trial count (0 picks defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) {
    const auto spec = json_io::spec_from_json(json_io::load_json_arg(space_arg));
    const auto f = json_io::step_from_json(json_io::load_json_arg(input_arg));
    const ExtValue v = spaces::norm(spec, f);
    if (as_json) {
      Json out;
      out["space"] = spec.name();
      out["norm"] = value_json(v);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "space: " << spec.name() << "\n" << "norm = " << value_text(v) << "\n";
    }
    return 0;
  }

  if (rearr->parsed()) {
    const auto f = json_io::step_from_json(json_io::load_json_arg(input_arg));
    const auto fstar = stepcore::rearrange(f);
    if (as_json) {
      std::cout << json_io::to_json(fstar).dump() << "\n";
    } else {
      for (size_t i = 0; i < fstar.steps().size(); ++i) {
        const auto& s = fstar.steps()[i];
        const std::string to = i + 1 < fstar.steps().size()
                                   ? format_rat(fstar.steps()[i + 1].T)
                                   : fstar.alpha().to_string();
        std::cout << "[" << format_rat(s.T) << ", " << to << ") -> " << s.v.to_string() << "\n";
      }
      if (fstar.steps().empty())
        std::cout << "[0, " << fstar.alpha().to_string() << ") -> " << fstar.tail().to_string()
                  << "\n";
    }
    return 0;
  }

  if (fund->parsed()) {
    const auto spec = json_io::spec_from_json(json_io::load_json_arg(space_arg));
    const auto f = spaces::fundamental(spec);
    Json out;
    out["space"] = spec.name();
    out["shape"] = shapefn::signature(f.shape);
    out["exact"] = f.exact;
    Json samples = Json::array();
    std::string sample_text;
    for (const auto& t : parse_samples(samples_arg)) {
      const ExtValue v = spaces::fundamental_value(spec, ExtRat(t));
      Json one;
      one["t"] = format_rat(t);
      one["value"] = value_json(v);
      samples.push_back(one);
      sample_text += "  phi(" + format_rat(t) + ") = " + value_text(v) + "\n";
    }
    if (as_json) {
      if (!samples.empty()) out["samples"] = samples;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "space: " << spec.name() << "\n"
                << "fundamental: " << shapefn::signature(f.shape)
                << (f.exact ? " (exact)" : " (equivalent)") << "\n"
                << sample_text;
    }
    return 0;
  }

  if (shape->parsed()) {
    const auto phi = json_io::shape_from_json(json_io::load_json_arg(shape_arg));
    const auto report = shapefn::check_admissible(phi);
    Json out;
    out["signature"] = shapefn::signature(phi);
    out["monotone"] = report.monotone;
    out["vanishes_only_at_zero"] = report.vanishes_only_at_zero;
    out["admissible"] = report.admissible;
    out["doubling"] = report.delta2.to_string();
    out["wqc"] = report.wqc.to_string();
    out["concave"] = shapefn::is_concave(phi);
    if (!report.wqc.is_inf()) {
      out["majorant_ratio"] = format_double(shapefn::concave_majorant(phi, 64).max_ratio);
    }
    if (as_json) {
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& [k, v] : out.items()) {
        std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    return 0;
  }

  if (endpoint->parsed()) {
    const auto phi = json_io::shape_from_json(json_io::load_json_arg(shape_arg));
    const auto report = theorems::endpoint_equivalence(phi, seed, trials > 0 ? trials : 120);
    if (as_json) {
      std::cout << report_json(report).dump() << "\n";
    } else {
      print_report(report);
    }
    return report.ok() ? 0 : 1;
  }

  if (assoc->parsed()) {
    const auto spec = json_io::spec_from_json(json_io::load_json_arg(space_arg));
    const auto g = json_io::step_from_json(json_io::load_json_arg(input_arg));
    const auto form = duality::associate_closed_form(spec);
    const auto est = duality::associate_estimate(spec, g);
    Json out;
    out["space"] = spec.name();
    out["closed_form"] = form ? form->name() : "none";
    if (form) out["closed_form_value"] = value_json(duality::associate_norm(*form, g));
    out["estimate"] = value_json(est.value);
    out["witness"] = est.witness;
    if (as_json) {
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "space: " << spec.name() << "\n"
                << "closed form: " << (form ? form->name() : "none") << "\n";
      if (form)
        std::cout << "closed-form value = "
                  << value_text(duality::associate_norm(*form, g)) << "\n";
      std::cout << "estimate >= " << value_text(est.value) << "  [" << est.witness << "]\n";
    }
    return 0;
  }

  if (rep->parsed()) {
    const auto inner = json_io::spec_from_json(json_io::load_json_arg(inner_arg));
    const Rat beta = parse_rat(beta_arg);
    const auto r = represent::representation(inner, beta);
    Json out;
    out["seq_space"] = r.seq_spec.name();
    if (r.modulus_bound) out["modulus_bound"] = r.modulus_bound->to_string();
    bool ok = true;
    if (!seq_arg.empty()) {
      const auto g = json_io::sequence_from_json(json_io::load_json_arg(seq_arg));
      const auto id = represent::verify_identity(r.seq_spec, g);
      out["lhs"] = value_json(id.lhs);
      out["rhs"] = value_json(id.rhs);
      out["exact_equal"] = id.exact_equal;
      out["rel_gap"] = format_double(id.rel_gap);
      ok = id.exact_equal || id.rel_gap <= 1e-9;
    }
    if (!input_arg.empty()) {
      const auto f = json_io::step_from_json(json_io::load_json_arg(input_arg));
      out["blocks"] = json_io::to_json(
          represent::block_average(stepcore::rearrange(f), beta));
      out["rep_norm"] = value_json(represent::rep_norm(r, f));
    }
    if (as_json) {
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& [k, v] : out.items()) {
        std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    return ok ? 0 : 1;
  }

  if (verify->parsed()) {
    const auto reports = theorems::run_suite(suite, seed, trials);
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.ok();
    if (as_json) {
      Json out;
      out["suite"] = suite;
      out["seed"] = seed;
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      out["reports"] = arr;
      out["ok"] = all_ok;
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& r : reports) print_report(r);
      std::cout << (all_ok ? "all checks hold" : "CHECK FAILED") << " (" << reports.size()
                << (reports.size() == 1 ? " report" : " reports") << ", seed " << seed << ")\n";
    }
    return all_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
