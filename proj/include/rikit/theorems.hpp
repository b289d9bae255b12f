#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rikit/duality.hpp"
#include "rikit/represent.hpp"
#include "rikit/space.hpp"

namespace rikit::theorems {

struct CheckReport {
  std::string name;
  std::string verdict;  // "holds" / "fails" / "vacuous"
  std::vector<std::pair<std::string, std::string>> measured;  // ordered key/value pairs
  std::string witness;
  uint64_t seed = 0;
  int trials = 0;

  bool ok() const { return verdict != "fails"; }
};

// sup over t of (phi(t)/t) * integral_0^t ds/phi(s): the constant tying the
// running-average norm to the plain weak norm. Exact endpoint enumeration
// (each piece contributes a monotone expression).
ExtValue endpoint_constant(const shapefn::ShapeFunction& phi);

// Strong vs weak endpoint norms: weak <= strong <= S * weak on seeded
// inputs, with near-extremal inputs pushing the ratio towards S (or past any
// constant when S is infinite).
CheckReport endpoint_equivalence(const shapefn::ShapeFunction& phi, uint64_t seed, int trials);

// Weak space into L1+Linf; the constant is integral_0^1 1/phi, finite or not.
CheckReport embedding_into_sum(const shapefn::ShapeFunction& phi, uint64_t seed, int trials);

// L1 cap Linf into the weak space; the constant is max(phi(1), sup_{t>=1} phi(t)/t).
CheckReport embedding_from_cap(const shapefn::ShapeFunction& phi, uint64_t seed, int trials);

struct DualSetResult {
  stepcore::StepFunction kept;  // the trimmed set as an indicator
  Rat kept_measure;
  Rat required_measure;  // (1 - 2^-k) * mu(E)
  ExtValue integral;     // integral of f over the trimmed set
  ExtValue allowed;      // C^k A mu(E) / phi(mu(E))
  bool holds;
};

// From a weak bound A on f (phi(t) f*(t) <= A), trims E by the top level set
// {f > C^k A / phi(mu E)}: the remainder keeps at least (1 - 2^-k) of the
// measure while its integral stays within the stated budget.
DualSetResult dual_sets_forward(const stepcore::StepFunction& f,
                                const shapefn::ShapeFunction& phi, const PowerValue& weak_bound,
                                const stepcore::StepFunction& indicator, int k);

// sup over prefix measures s of phi(s)/s * (largest integral of f over a set
// of measure s); the set-search view of the strong norm, always at least the
// weak norm.
ExtValue set_oracle(const stepcore::StepFunction& f, const shapefn::ShapeFunction& phi);

struct SupEquality {
  PowerValue lhs;  // sup_t phi(t) f*(t)
  PowerValue rhs;  // sup_s s phi(mu{f > s})
  bool equal;
};

SupEquality sup_equality(const stepcore::StepFunction& f, const shapefn::ShapeFunction& phi);

// Weak norm under max(phi0, 1) against the two-piece amalgam: ess sup below
// scale 1 plus the shifted weak norm beyond it. Two-sided bounds with
// explicit constants.
CheckReport amalgam_max_identity(const shapefn::ShapeFunction& phi0, uint64_t seed, int trials);

const std::vector<std::string>& suite_names();  // includes "all"
std::vector<CheckReport> run_suite(const std::string& name, uint64_t seed, int trials);

}  // namespace rikit::theorems
