#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "rikit/extended.hpp"
#include "rikit/power_value.hpp"
#include "rikit/shape_function.hpp"
#include "rikit/step_function.hpp"

namespace rikit::spaces {

enum class Kind {
  Lp,
  Lorentz,
  WeakMarcinkiewicz,  // m_phi: sup phi(t) f*(t)
  Marcinkiewicz,      // M_phi: sup phi(t) f**(t)
  LorentzEndpoint,    // Lambda_phi: integral of f* dphi
  SumL1Linf,          // L1 + Linf
  CapL1Linf,          // L1 ∩ Linf
  WL,                 // ||f* chi_[0,1)||_local + ||f* chi_[1,inf)||_global
  Atomic,             // sequence space over atoms of measure beta
};

// Immutable description of a quasinormed function space. Recursive variants
// (WL, Atomic) share their children.
class SpaceSpec {
 public:
  static SpaceSpec lp(ExtRat p);                   // p > 0 or infinite
  static SpaceSpec lorentz(ExtRat p, ExtRat q);    // p = inf requires q = inf
  static SpaceSpec weak_marcinkiewicz(shapefn::ShapeFunction phi);
  static SpaceSpec marcinkiewicz(shapefn::ShapeFunction phi);
  static SpaceSpec lorentz_endpoint(shapefn::ShapeFunction phi);
  static SpaceSpec sum_l1_linf();
  static SpaceSpec cap_l1_linf();
  static SpaceSpec wl(SpaceSpec local, SpaceSpec global);
  static SpaceSpec atomic(Rat beta, SpaceSpec inner);

  Kind kind() const { return kind_; }
  const ExtRat& p() const { return p_; }
  const ExtRat& q() const { return q_; }
  const shapefn::ShapeFunction& phi() const;
  const SpaceSpec& local() const;
  const SpaceSpec& global() const;
  const SpaceSpec& inner() const;
  const Rat& beta() const { return beta_; }

  // Deterministic short label, e.g. "Lp(2)" or "m[t^(1/2)]".
  std::string name() const;

 private:
  SpaceSpec() = default;

  Kind kind_ = Kind::Lp;
  ExtRat p_;
  ExtRat q_;
  std::optional<shapefn::ShapeFunction> phi_;
  std::shared_ptr<const SpaceSpec> left_;   // WL local / Atomic inner
  std::shared_ptr<const SpaceSpec> right_;  // WL global
  Rat beta_ = 1;
};

// Quasinorm of f (compute the rearrangement, then evaluate). Exact whenever
// every power evaluation stays rational.
ExtValue norm(const SpaceSpec& spec, const stepcore::StepFunction& f);
// Same, for an already rearranged layout (values must be finite).
ExtValue norm_rearranged(const SpaceSpec& spec, const stepcore::MonotoneStep& fstar);
// Sequence quasinorm of an atomic spec: the inner norm of the realized
// rearranged sequence.
ExtValue norm_seq(const SpaceSpec& spec, const stepcore::SequenceFn& g);

// sup over t of t^{1/p} fstar(t), kept in exact power form.
PowerValue weak_lp_power(const stepcore::MonotoneStep& fstar, const ExtRat& p);
// sup over t of phi(t) fstar(t) for pure power phi, in exact power form.
PowerValue weak_m_power(const stepcore::MonotoneStep& fstar, const shapefn::ShapeFunction& phi);

struct Fundamental {
  shapefn::ShapeFunction shape;
  // True when the shape reproduces the norm of every chi_[0,t) exactly;
  // false marks an up-to-equivalence stand-in (WL continuations, irrational
  // Lorentz coefficients, Marcinkiewicz over phi with wqc constant > 1).
  bool exact = true;
};

// Closed-form fundamental function t -> norm(chi_[0,t)).
Fundamental fundamental(const SpaceSpec& spec);
// The closed form evaluated directly (exact arithmetic where possible),
// including the variants whose single-shape encoding is only equivalent.
ExtValue fundamental_value(const SpaceSpec& spec, const ExtRat& t);

// Analytic bound on the modulus of concavity, when one is declared for the
// variant; measured probes must stay below it.
std::optional<ExtValue> declared_modulus_bound(const SpaceSpec& spec);
// Max over seeded random pairs of ||f+g|| / (||f|| + ||g||).
double modulus_probe(const SpaceSpec& spec, int trials, uint64_t seed);

}  // namespace rikit::spaces
