#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rikit/space.hpp"

namespace rikit::duality {

// The associate norm in closed form: either another space spec, or the
// weighted integral g -> integral of g*(t)/phi(t) dt (a norm that may be
// identically infinite when 1/phi is nowhere integrable).
class AssociateForm {
 public:
  static AssociateForm of_space(spaces::SpaceSpec spec);
  static AssociateForm of_weight(shapefn::ShapeFunction phi);

  bool is_space() const { return space_.has_value(); }
  const spaces::SpaceSpec& space() const;
  const shapefn::ShapeFunction& weight() const;
  std::string name() const;

 private:
  AssociateForm() = default;
  std::optional<spaces::SpaceSpec> space_;
  std::optional<shapefn::ShapeFunction> weight_;
};

// Closed-form associates: endpoint pairs swap under the bar transform, the
// weak space maps to its reciprocal weight, Lebesgue exponents conjugate for
// p >= 1, sum and intersection of L1/Linf swap, and atomic wraps recurse.
// Anything else has no closed form here.
std::optional<AssociateForm> associate_closed_form(const spaces::SpaceSpec& spec);

// integral of f*(t)/phi(t) dt over the whole domain, exact per flat.
ExtValue weighted_reciprocal_norm(const shapefn::ShapeFunction& phi,
                                  const stepcore::StepFunction& f);

ExtValue associate_norm(const AssociateForm& form, const stepcore::StepFunction& g);

// A step function staying just under 1/phi on [eps, bound), cut uniformly
// per doubling of the argument; a near-extremal input for weak-type norms.
stepcore::StepFunction reciprocal_clamp_candidate(const shapefn::ShapeFunction& phi,
                                                  const Rat& eps, const Rat& bound,
                                                  int per_octave);

struct EstimateResult {
  ExtValue value;       // best certified lower bound for the associate norm
  std::string witness;  // which candidate attained it
};

// Lower estimate of the associate norm by pairing g against feasible inputs:
// sup over candidates c of (integral c * g*) / norm(spec, c). Ratios that
// pass through floating point are shaved by 2^-40 so the reported value
// never overstates the bound.
EstimateResult associate_estimate(const spaces::SpaceSpec& spec, const stepcore::StepFunction& g,
                                  const std::vector<stepcore::StepFunction>& extra = {});

struct HolderReport {
  ExtValue lhs;  // integral f g
  ExtValue rhs;  // norm(spec, f) * associate norm of g
  double slack;  // rhs - lhs through doubles
  bool holds;
};

// Verifies integral f g <= norm * associate-norm. A zero factor next to an
// infinite one counts as infinite, so the bound never fails vacuously.
HolderReport holder_check(const spaces::SpaceSpec& spec, const AssociateForm& form,
                          const stepcore::StepFunction& f, const stepcore::StepFunction& g);

struct ResonanceResult {
  Rat best;            // max over pairings of sum a_i * b_sigma(i)
  Rat sorted_pairing;  // pairing both lists in decreasing order
  bool attained_by_sorting;
};

// Exhaustive search over the pairings of two lists (sizes up to 8).
ResonanceResult resonance_gap(std::vector<Rat> a, std::vector<Rat> b);

}  // namespace rikit::duality
