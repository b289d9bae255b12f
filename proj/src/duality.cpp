#include "rikit/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rikit::duality {

namespace {

using spaces::Kind;
using spaces::SpaceSpec;
using stepcore::MonotoneStep;
using stepcore::StepFunction;

struct Flat {
  Rat a;
  ExtRat b;
  Rat v;
};

std::vector<Flat> flats(const MonotoneStep& fstar) {
  std::vector<Flat> out;
  const auto& st = fstar.steps();
  if (st.empty()) {
    if (!fstar.tail().is_zero()) out.push_back({Rat(0), fstar.alpha(), fstar.tail().finite()});
    return out;
  }
  for (size_t i = 0; i < st.size(); ++i) {
    ExtRat b = i + 1 < st.size() ? ExtRat(st[i + 1].T) : fstar.alpha();
    out.push_back({st[i].T, std::move(b), st[i].v.finite()});
  }
  return out;
}

ExtValue ev_ratio(const ExtValue& a, const ExtValue& b) {
  if (a.is_inf()) return ExtValue::infinity();
  if (b.is_inf()) return ExtValue::zero();
  if (b.is_zero()) return a.is_zero() ? ExtValue::zero() : ExtValue::infinity();
  if (a.is_exact() && b.is_exact()) return ExtValue::exact(a.rat() / b.rat());
  return ExtValue::approx(a.value() / b.value());
}

}  // namespace

AssociateForm AssociateForm::of_space(SpaceSpec spec) {
  AssociateForm out;
  out.space_ = std::move(spec);
  return out;
}

AssociateForm AssociateForm::of_weight(shapefn::ShapeFunction phi) {
  AssociateForm out;
  out.weight_ = std::move(phi);
  return out;
}

const SpaceSpec& AssociateForm::space() const {
  if (!space_) throw std::logic_error("associate form is not a space");
  return *space_;
}

const shapefn::ShapeFunction& AssociateForm::weight() const {
  if (!weight_) throw std::logic_error("associate form is not a weight");
  return *weight_;
}

std::string AssociateForm::name() const {
  if (space_) return space_->name();
  return "int[f*/" + shapefn::signature(*weight_) + "]";
}

std::optional<AssociateForm> associate_closed_form(const SpaceSpec& spec) {
  switch (spec.kind()) {
    case Kind::Lp: {
      const ExtRat& p = spec.p();
      if (p.is_inf()) return AssociateForm::of_space(SpaceSpec::lp(ExtRat(Rat(1))));
      if (p.finite() < 1) return std::nullopt;  // only the zero function pairs finitely
      if (p.finite() == 1) return AssociateForm::of_space(SpaceSpec::lp(ExtRat::infinity()));
      const Rat pe = p.finite();
      return AssociateForm::of_space(SpaceSpec::lp(ExtRat(pe / (pe - 1))));
    }
    case Kind::WeakMarcinkiewicz:
      return AssociateForm::of_weight(spec.phi());
    case Kind::Marcinkiewicz:
      try {
        return AssociateForm::of_space(SpaceSpec::lorentz_endpoint(shapefn::bar(spec.phi())));
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    case Kind::LorentzEndpoint:
      try {
        return AssociateForm::of_space(SpaceSpec::marcinkiewicz(shapefn::bar(spec.phi())));
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    case Kind::SumL1Linf:
      return AssociateForm::of_space(SpaceSpec::cap_l1_linf());
    case Kind::CapL1Linf:
      return AssociateForm::of_space(SpaceSpec::sum_l1_linf());
    case Kind::Atomic: {
      const auto inner = associate_closed_form(spec.inner());
      if (!inner || !inner->is_space()) return std::nullopt;
      return AssociateForm::of_space(SpaceSpec::atomic(spec.beta(), inner->space()));
    }
    case Kind::Lorentz:
    case Kind::WL:
      return std::nullopt;
  }
  return std::nullopt;
}

ExtValue weighted_reciprocal_norm(const shapefn::ShapeFunction& phi, const StepFunction& f) {
  if (phi.alpha() != f.alpha())
    throw std::invalid_argument("shape and function have different domain bounds");
  ExtValue total = ExtValue::zero();
  for (const auto& fl : flats(stepcore::rearrange(f))) {
    if (fl.v == 0) continue;
    total = total + ExtValue::exact(fl.v) * shapefn::reciprocal_integral_over(phi, fl.a, fl.b);
    if (total.is_inf()) return total;
  }
  return total;
}

ExtValue associate_norm(const AssociateForm& form, const StepFunction& g) {
  if (form.is_space()) return spaces::norm(form.space(), g);
  return weighted_reciprocal_norm(form.weight(), g);
}

StepFunction reciprocal_clamp_candidate(const shapefn::ShapeFunction& phi, const Rat& eps,
                                        const Rat& bound, int per_octave) {
  if (eps <= 0 || bound <= eps) throw std::invalid_argument("clamp window is empty");
  if (per_octave < 1) throw std::invalid_argument("per_octave must be >= 1");
  if (!phi.alpha().is_inf() && ExtRat(bound) > phi.alpha())
    throw std::invalid_argument("clamp window leaves the shape domain");
  std::vector<stepcore::Piece> pieces;
  Rat left = eps;
  const Rat m(per_octave);
  Rat octave = eps;
  while (left < bound) {
    for (int i = 1; i <= per_octave && left < bound; ++i) {
      Rat right = octave * (m + i) / m;
      if (right > bound) right = bound;
      // a certified value just under 1/phi(right): exact when the shape
      // evaluates rationally, otherwise shaved below the double estimate
      Rat v;
      if (const auto exact = phi.eval_power(right).as_rat()) {
        v = Rat(1) / *exact;
      } else {
        v = rat_from_double((1.0 - 0x1.0p-30) / phi.eval_d(rat_to_double(right)));
      }
      pieces.push_back({left, ExtRat(right), v});
      left = right;
    }
    octave *= 2;
  }
  return StepFunction::make(std::move(pieces), Rat(0), phi.alpha());
}

EstimateResult associate_estimate(const SpaceSpec& spec, const StepFunction& g,
                                  const std::vector<StepFunction>& extra) {
  const StepFunction gs = stepcore::rearrange(g).to_step_function();
  const bool weak_shape = spec.kind() == Kind::WeakMarcinkiewicz;

  std::vector<std::pair<std::string, StepFunction>> candidates;
  for (int j = -10; j <= 10; ++j) {
    const Rat s = rat_pow_int(Rat(2), j);
    if (ExtRat(s) >= g.alpha()) break;
    candidates.emplace_back("chi[0,2^" + std::to_string(j) + ")",
                            StepFunction::make({{Rat(0), ExtRat(s), Rat(1)}}, Rat(0), g.alpha()));
  }
  if (spec.kind() == Kind::WeakMarcinkiewicz || spec.kind() == Kind::Marcinkiewicz) {
    Rat hi = rat_pow_int(Rat(2), 16);
    if (!g.alpha().is_inf() && g.alpha().finite() < hi) hi = g.alpha().finite();
    candidates.emplace_back(
        "clamp[2^-20,2^16]",
        reciprocal_clamp_candidate(spec.phi(), rat_pow_int(Rat(2), -20), hi, 128));
  }
  for (size_t i = 0; i < extra.size(); ++i) {
    candidates.emplace_back("extra#" + std::to_string(i),
                            stepcore::rearrange(extra[i]).to_step_function());
  }

  EstimateResult best{ExtValue::zero(), "none"};
  std::optional<PowerValue> best_pv;
  for (const auto& [label, c] : candidates) {
    const ExtRat paired = stepcore::integrate_product(c, gs);
    if (paired.is_zero()) continue;
    ExtValue ratio;
    if (weak_shape && !paired.is_inf()) {
      // fully exact path: both the pairing and the weak norm are power values
      const PowerValue nrm = spaces::weak_m_power(stepcore::rearrange(c), spec.phi());
      if (nrm.is_zero() || nrm.is_inf()) continue;
      const PowerValue r = pv_div(PowerValue::of(paired.finite()), nrm);
      if (!best_pv || pv_less(*best_pv, r)) {
        best_pv = r;
        best = {r.to_ext_value(), label};
      }
      continue;
    }
    const ExtValue nrm = spaces::norm(spec, c);
    if (nrm.is_zero() || nrm.is_inf()) continue;
    ratio = ev_ratio(ExtValue::of(paired), nrm);
    if (ratio.is_approx()) ratio = ExtValue::approx(ratio.value() * (1.0 - 0x1.0p-40));
    if (ev_less(best.value, ratio)) best = {ratio, label};
  }
  return best;
}

HolderReport holder_check(const SpaceSpec& spec, const AssociateForm& form,
                          const StepFunction& f, const StepFunction& g) {
  HolderReport out{ExtValue::zero(), ExtValue::zero(), 0.0, false};
  out.lhs = ExtValue::of(stepcore::integrate_product(f, g));
  const ExtValue nf = spaces::norm(spec, f);
  const ExtValue ng = associate_norm(form, g);
  if ((nf.is_zero() && ng.is_inf()) || (nf.is_inf() && ng.is_zero())) {
    out.rhs = ExtValue::infinity();
  } else {
    out.rhs = nf * ng;
  }
  if (out.rhs.is_inf()) {
    out.slack = HUGE_VAL;
    out.holds = true;
  } else {
    out.slack = out.rhs.value() - out.lhs.value();
    if (out.lhs.is_exact() && out.rhs.is_exact()) {
      out.holds = out.lhs.rat() <= out.rhs.rat();
    } else {
      out.holds = out.lhs.value() <= out.rhs.value() * (1 + 1e-9) + 1e-12;
    }
  }
  return out;
}

ResonanceResult resonance_gap(std::vector<Rat> a, std::vector<Rat> b) {
  const size_t n = std::max(a.size(), b.size());
  if (n > 8) throw std::invalid_argument("resonance search limited to 8 entries");
  a.resize(n, Rat(0));
  b.resize(n, Rat(0));

  std::vector<Rat> sa = a, sb = b;
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  Rat sorted = 0;
  for (size_t i = 0; i < n; ++i) sorted += sa[i] * sb[i];

  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end());
  Rat best = 0;
  bool first = true;
  do {
    Rat sum = 0;
    for (size_t i = 0; i < n; ++i) sum += a[i] * b[perm[i]];
    if (first || sum > best) best = sum;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {best, sorted, best == sorted};
}

}  // namespace rikit::duality
