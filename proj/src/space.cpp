#include "rikit/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "rikit/corpus.hpp"
#include "rikit/parallel.hpp"

namespace rikit::spaces {

namespace {

using stepcore::MaximalFunction;
using stepcore::MonotoneStep;
using stepcore::SequenceFn;
using stepcore::StepFunction;

struct Flat {
  Rat a;
  ExtRat b;
  Rat v;
};

// The constancy intervals [a, b) of a finite-valued layout. A constant
// function is canonically held in the tail with no steps.
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

ExtValue ess_sup(const MonotoneStep& fstar) {
  if (fstar.steps().empty()) {
    return fstar.tail().is_zero() ? ExtValue::zero() : ExtValue::exact(fstar.tail().finite());
  }
  return ExtValue::exact(fstar.steps().front().v.finite());
}

// hi - lo for hi >= lo, hi possibly infinite.
ExtValue ev_diff(const ExtValue& hi, const ExtValue& lo) {
  if (hi.is_inf()) return ExtValue::infinity();
  if (hi.is_exact() && lo.is_exact()) return ExtValue::exact(hi.rat() - lo.rat());
  return ExtValue::approx(hi.value() - lo.value());
}

void check_shape_domain(const shapefn::ShapeFunction& phi, const ExtRat& alpha) {
  if (phi.alpha() != alpha)
    throw std::invalid_argument("shape and function have different domain bounds");
}

ExtValue norm_lp(const ExtRat& p, const MonotoneStep& fstar) {
  if (p.is_inf()) return ess_sup(fstar);
  const Rat pe = p.finite();
  ExtValue total = ExtValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    if (fl.b.is_inf()) return ExtValue::infinity();
    total = total + ev_pow(ExtValue::exact(fl.v), pe) * ExtValue::exact(fl.b.finite() - fl.a);
  }
  return ev_pow(total, Rat(1) / pe);
}

ExtValue norm_lorentz(const ExtRat& p, const ExtRat& q, const MonotoneStep& fstar) {
  if (p.is_inf()) return ess_sup(fstar);  // construction forces q = inf here
  if (q.is_inf()) return weak_lp_power(fstar, p).to_ext_value();
  const Rat pe = p.finite();
  const Rat qe = q.finite();
  const Rat r = qe / pe;
  ExtValue total = ExtValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    if (fl.b.is_inf()) return ExtValue::infinity();
    const ExtValue weight =
        ev_diff(ev_pow(ExtValue::exact(fl.b.finite()), r), ev_pow(ExtValue::exact(fl.a), r));
    total = total + ev_pow(ExtValue::exact(fl.v), qe) * weight * ExtValue::exact(pe / qe);
  }
  return ev_pow(total, Rat(1) / qe);
}

ExtValue norm_weak_m(const shapefn::ShapeFunction& phi, const MonotoneStep& fstar) {
  check_shape_domain(phi, fstar.alpha());
  ExtValue best = ExtValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    // sup of phi over [a, b) is the left limit at b: phi(b) by
    // left-continuity, or the limit at the domain bound.
    const ExtValue at_b = fl.b.is_inf() ? phi.limit_at_sup() : phi.eval(fl.b.finite());
    best = ev_max(best, ExtValue::exact(fl.v) * at_b);
  }
  return best;
}

// sup over one cell (u, w] of phi(t) * (v + B/t) where the shape piece and
// the running-average segment are fixed. With phi = c t^p the function is
// c v t^p + c B t^{p-1}: each summand is monotone, and for p in (0,1) the sum
// is decreasing-then-increasing, so the supremum always sits at a cell end
// (or is a one-sided limit there). No line search is needed.
ExtValue cell_sup(const shapefn::ShapeFunction& phi, size_t piece_idx, const Rat& v, const Rat& B,
                  const Rat& u, const ExtRat& w) {
  const auto& piece = phi.pieces()[piece_idx];
  ExtValue best = ExtValue::zero();
  auto value_at = [&](const Rat& t) {
    return phi.eval(t) * ExtValue::exact(v + B / t);
  };
  if (u > 0) {
    best = ev_max(best, value_at(u));
  } else if (piece.exp == 0) {
    best = ev_max(best, ExtValue::exact(piece.coef * v));  // B = 0 on the first segment
  }
  if (!w.is_inf()) {
    best = ev_max(best, value_at(w.finite()));
  } else if (v > 0) {
    if (piece.exp > 0) return ExtValue::infinity();
    best = ev_max(best, ExtValue::exact(piece.coef * v));
  } else if (B > 0) {
    if (piece.exp > 1) return ExtValue::infinity();
    if (piece.exp == 1) best = ev_max(best, ExtValue::exact(piece.coef * B));
  }
  return best;
}

ExtValue norm_marcinkiewicz(const shapefn::ShapeFunction& phi, const MonotoneStep& fstar) {
  check_shape_domain(phi, fstar.alpha());
  if (fstar.is_zero()) return ExtValue::zero();
  const MaximalFunction mx = stepcore::maximal(fstar);
  const ExtRat& alpha = fstar.alpha();

  std::set<Rat> cuts;
  auto add_cut = [&](const Rat& x) {
    if (x > 0 && (alpha.is_inf() || x < alpha.finite())) cuts.insert(x);
  };
  for (const auto& p : phi.pieces()) {
    add_cut(p.from);
    if (!p.to.is_inf()) add_cut(p.to.finite());
  }
  for (const auto& s : mx.segments()) add_cut(s.T);
  std::vector<Rat> ends(cuts.begin(), cuts.end());
  if (!alpha.is_inf()) ends.push_back(alpha.finite());

  // cells are visited with non-decreasing left ends, so the active segment
  // only ever advances
  size_t seg_idx = 0;
  auto segment_at = [&](const Rat& u) {
    while (seg_idx + 1 < mx.segments().size() && mx.segments()[seg_idx + 1].T <= u) ++seg_idx;
    return seg_idx;
  };

  ExtValue best = ExtValue::zero();
  Rat prev = 0;
  auto handle = [&](const Rat& u, const ExtRat& w) {
    const auto& seg = mx.segments()[segment_at(u)];
    const Rat B = seg.A - seg.v * seg.T;
    const size_t idx = w.is_inf() ? phi.pieces().size() - 1 : phi.piece_index(w.finite());
    best = ev_max(best, cell_sup(phi, idx, seg.v, B, u, w));
  };
  for (const auto& x : ends) {
    handle(prev, ExtRat(x));
    prev = x;
  }
  if (alpha.is_inf()) handle(prev, ExtRat::infinity());
  return best;
}

ExtValue norm_lorentz_endpoint(const shapefn::ShapeFunction& phi, const MonotoneStep& fstar) {
  check_shape_domain(phi, fstar.alpha());
  ExtValue total = ExtValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    const ExtValue at_b = fl.b.is_inf() ? phi.limit_at_sup() : phi.eval(fl.b.finite());
    const ExtValue at_a = fl.a == 0 ? ExtValue::zero() : phi.eval(fl.a);
    total = total + ExtValue::exact(fl.v) * ev_diff(at_b, at_a);
    if (total.is_inf()) return total;
  }
  return total;
}

SequenceFn add_sequences(const SequenceFn& a, const SequenceFn& b) {
  std::vector<Rat> entries(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < entries.size(); ++i) entries[i] = a.at(i) + b.at(i);
  return SequenceFn::make(std::move(entries), a.beta());
}

}  // namespace

SpaceSpec SpaceSpec::lp(ExtRat p) {
  if (p.is_zero()) throw std::invalid_argument("Lp needs p > 0");
  SpaceSpec out;
  out.kind_ = Kind::Lp;
  out.p_ = std::move(p);
  out.q_ = out.p_;
  return out;
}

SpaceSpec SpaceSpec::lorentz(ExtRat p, ExtRat q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("Lorentz needs p, q > 0");
  if (p.is_inf() && !q.is_inf())
    throw std::invalid_argument("Lorentz(inf, q) with finite q is not a function space");
  SpaceSpec out;
  out.kind_ = Kind::Lorentz;
  out.p_ = std::move(p);
  out.q_ = std::move(q);
  return out;
}

namespace {
void require_shape(const shapefn::ShapeFunction& phi, const char* space) {
  if (!phi.pure_power())
    throw std::invalid_argument(std::string(space) + " needs a pure power shape");
  if (!phi.monotone())
    throw std::invalid_argument(std::string(space) + " needs a non-decreasing shape");
}
}  // namespace

SpaceSpec SpaceSpec::weak_marcinkiewicz(shapefn::ShapeFunction phi) {
  require_shape(phi, "weak Marcinkiewicz space");
  SpaceSpec out;
  out.kind_ = Kind::WeakMarcinkiewicz;
  out.phi_ = std::move(phi);
  return out;
}

SpaceSpec SpaceSpec::marcinkiewicz(shapefn::ShapeFunction phi) {
  require_shape(phi, "Marcinkiewicz space");
  SpaceSpec out;
  out.kind_ = Kind::Marcinkiewicz;
  out.phi_ = std::move(phi);
  return out;
}

SpaceSpec SpaceSpec::lorentz_endpoint(shapefn::ShapeFunction phi) {
  require_shape(phi, "Lorentz endpoint space");
  for (const auto& p : phi.pieces()) {
    if (p.exp > 1)
      throw std::invalid_argument("Lorentz endpoint space needs per-piece concave shape");
  }
  SpaceSpec out;
  out.kind_ = Kind::LorentzEndpoint;
  out.phi_ = std::move(phi);
  return out;
}

SpaceSpec SpaceSpec::sum_l1_linf() {
  SpaceSpec out;
  out.kind_ = Kind::SumL1Linf;
  return out;
}

SpaceSpec SpaceSpec::cap_l1_linf() {
  SpaceSpec out;
  out.kind_ = Kind::CapL1Linf;
  return out;
}

SpaceSpec SpaceSpec::wl(SpaceSpec local, SpaceSpec global) {
  if (local.kind() == Kind::Atomic || global.kind() == Kind::Atomic)
    throw std::invalid_argument("WL components must be non-atomic");
  SpaceSpec out;
  out.kind_ = Kind::WL;
  out.left_ = std::make_shared<const SpaceSpec>(std::move(local));
  out.right_ = std::make_shared<const SpaceSpec>(std::move(global));
  return out;
}

SpaceSpec SpaceSpec::atomic(Rat beta, SpaceSpec inner) {
  if (beta <= 0) throw std::invalid_argument("atomic spec needs beta > 0");
  if (inner.kind() == Kind::Atomic) throw std::invalid_argument("atomic spec cannot nest");
  SpaceSpec out;
  out.kind_ = Kind::Atomic;
  out.beta_ = std::move(beta);
  out.left_ = std::make_shared<const SpaceSpec>(std::move(inner));
  return out;
}

const shapefn::ShapeFunction& SpaceSpec::phi() const {
  if (!phi_) throw std::logic_error("spec carries no shape");
  return *phi_;
}

const SpaceSpec& SpaceSpec::local() const {
  if (kind_ != Kind::WL) throw std::logic_error("not an amalgam spec");
  return *left_;
}

const SpaceSpec& SpaceSpec::global() const {
  if (kind_ != Kind::WL) throw std::logic_error("not an amalgam spec");
  return *right_;
}

const SpaceSpec& SpaceSpec::inner() const {
  if (kind_ != Kind::Atomic) throw std::logic_error("not an atomic spec");
  return *left_;
}

std::string SpaceSpec::name() const {
  switch (kind_) {
    case Kind::Lp:
      return "Lp(" + p_.to_string() + ")";
    case Kind::Lorentz:
      return "Lorentz(" + p_.to_string() + "," + q_.to_string() + ")";
    case Kind::WeakMarcinkiewicz:
      return "m[" + shapefn::signature(*phi_) + "]";
    case Kind::Marcinkiewicz:
      return "M[" + shapefn::signature(*phi_) + "]";
    case Kind::LorentzEndpoint:
      return "Lambda[" + shapefn::signature(*phi_) + "]";
    case Kind::SumL1Linf:
      return "L1+Linf";
    case Kind::CapL1Linf:
      return "L1&Linf";
    case Kind::WL:
      return "WL(" + left_->name() + "," + right_->name() + ")";
    case Kind::Atomic:
      return "seq[beta=" + format_rat(beta_) + "," + left_->name() + "]";
  }
  return "?";
}

ExtValue norm_rearranged(const SpaceSpec& spec, const MonotoneStep& fstar) {
  if (!fstar.finite_values())
    throw std::invalid_argument("norm of a layout with infinite values");
  switch (spec.kind()) {
    case Kind::Lp:
      return norm_lp(spec.p(), fstar);
    case Kind::Lorentz:
      return norm_lorentz(spec.p(), spec.q(), fstar);
    case Kind::WeakMarcinkiewicz:
      return norm_weak_m(spec.phi(), fstar);
    case Kind::Marcinkiewicz:
      return norm_marcinkiewicz(spec.phi(), fstar);
    case Kind::LorentzEndpoint:
      return norm_lorentz_endpoint(spec.phi(), fstar);
    case Kind::SumL1Linf:
      return ExtValue::of(stepcore::integrate(fstar, Rat(0), std::min(ExtRat(Rat(1)), fstar.alpha())));
    case Kind::CapL1Linf: {
      const ExtRat total = stepcore::integrate(fstar, Rat(0), fstar.alpha());
      if (total.is_inf()) return ExtValue::infinity();
      return ess_sup(fstar) + ExtValue::of(total);
    }
    case Kind::WL:
      return norm(spec.local(), stepcore::restrict_window(fstar, stepcore::Window::Local)) +
             norm(spec.global(), stepcore::restrict_window(fstar, stepcore::Window::Global));
    case Kind::Atomic:
      throw std::invalid_argument("atomic spec applies to sequences");
  }
  throw std::logic_error("unhandled spec kind");
}

ExtValue norm(const SpaceSpec& spec, const StepFunction& f) {
  if (spec.kind() == Kind::Atomic)
    throw std::invalid_argument("atomic spec applies to sequences");
  return norm_rearranged(spec, stepcore::rearrange(f));
}

ExtValue norm_seq(const SpaceSpec& spec, const SequenceFn& g) {
  if (spec.kind() != Kind::Atomic)
    throw std::invalid_argument("sequence norm needs an atomic spec");
  if (spec.beta() != g.beta()) throw std::invalid_argument("atom measures differ");
  return norm(spec.inner(), stepcore::realize(stepcore::sort_descending(g)));
}

PowerValue weak_lp_power(const MonotoneStep& fstar, const ExtRat& p) {
  if (!fstar.finite_values())
    throw std::invalid_argument("norm of a layout with infinite values");
  if (p.is_inf()) {
    const ExtValue sup = ess_sup(fstar);
    return sup.is_zero() ? PowerValue::zero() : PowerValue::of(sup.rat());
  }
  const Rat pe = Rat(1) / p.finite();
  PowerValue best = PowerValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    if (fl.b.is_inf()) return PowerValue::infinity();
    best = pv_max(best, PowerValue::of(fl.v) * PowerValue::pow(fl.b.finite(), pe));
  }
  return best;
}

PowerValue weak_m_power(const MonotoneStep& fstar, const shapefn::ShapeFunction& phi) {
  if (!phi.pure_power())
    throw std::invalid_argument("exact weak norm needs a pure power shape");
  check_shape_domain(phi, fstar.alpha());
  PowerValue best = PowerValue::zero();
  for (const auto& fl : flats(fstar)) {
    if (fl.v == 0) continue;
    PowerValue at_b;
    if (fl.b.is_inf()) {
      const auto& last = phi.pieces().back();
      if (last.exp > 0) return PowerValue::infinity();
      at_b = last.exp == 0 ? PowerValue::of(last.coef) : PowerValue::zero();
    } else {
      at_b = phi.eval_power(fl.b.finite());
    }
    best = pv_max(best, PowerValue::of(fl.v) * at_b);
  }
  return best;
}

Fundamental fundamental(const SpaceSpec& spec) {
  using shapefn::ShapeFunction;
  using shapefn::ShapePiece;
  switch (spec.kind()) {
    case Kind::Lp:
      if (spec.p().is_inf()) return {shapefn::one_shape(), true};
      return {shapefn::power_shape(Rat(1), Rat(1) / spec.p().finite()), true};
    case Kind::Lorentz: {
      if (spec.p().is_inf()) return {shapefn::one_shape(), true};
      const Rat exp = Rat(1) / spec.p().finite();
      if (spec.q().is_inf()) return {shapefn::power_shape(Rat(1), exp), true};
      const Rat ratio = spec.p().finite() / spec.q().finite();
      if (auto coef = rat_pow_exact(ratio, Rat(1) / spec.q().finite()))
        return {shapefn::power_shape(*coef, exp), true};
      return {shapefn::power_shape(
                  rat_from_double(rat_pow_double(ratio, Rat(1) / spec.q().finite())), exp),
              false};
    }
    case Kind::WeakMarcinkiewicz:
      return {spec.phi(), true};
    case Kind::Marcinkiewicz:
      return {spec.phi(), pv_equal(shapefn::wqc_power(spec.phi()), PowerValue::of(Rat(1)))};
    case Kind::LorentzEndpoint:
      return {spec.phi(), true};
    case Kind::SumL1Linf:
      return {shapefn::min_t_one_shape(), true};
    case Kind::CapL1Linf:
      // 1 + t, one affine piece.
      return {ShapeFunction::make({{Rat(0), ExtRat::infinity(), Rat(1), Rat(1), Rat(1)}},
                                  ExtRat::infinity()),
              true};
    case Kind::WL: {
      // Local fundamental on (0,1], then the global one scaled to attach
      // continuously; only an equivalent stand-in beyond 1.
      const Fundamental loc = fundamental(spec.local());
      const Fundamental glob = fundamental(spec.global());
      std::vector<ShapePiece> pieces;
      for (const auto& p : loc.shape.pieces()) {
        if (p.from >= 1) break;
        pieces.push_back({p.from, std::min(p.to, ExtRat(Rat(1))), p.coef, p.exp, p.add});
      }
      const ExtValue at1_loc = loc.shape.eval(Rat(1));
      const ExtValue at1_glob = glob.shape.eval(Rat(1));
      Rat scale;
      if (at1_loc.is_exact() && at1_glob.is_exact() && at1_glob.rat() != 0) {
        scale = at1_loc.rat() / at1_glob.rat();
      } else {
        scale = rat_from_double(at1_loc.value() / at1_glob.value());
      }
      for (const auto& p : glob.shape.pieces()) {
        if (p.to <= ExtRat(Rat(1))) continue;
        pieces.push_back({std::max(p.from, Rat(1)), p.to, p.coef * scale, p.exp, p.add * scale});
      }
      return {ShapeFunction::make(std::move(pieces), glob.shape.alpha()), false};
    }
    case Kind::Atomic:
      throw std::invalid_argument("fundamental function needs a non-atomic spec");
  }
  throw std::logic_error("unhandled spec kind");
}

ExtValue fundamental_value(const SpaceSpec& spec, const ExtRat& t) {
  if (t.is_zero()) return ExtValue::zero();
  switch (spec.kind()) {
    case Kind::Lp:
      if (spec.p().is_inf()) return ExtValue::exact(Rat(1));
      if (t.is_inf()) return ExtValue::infinity();
      return ev_pow(ExtValue::exact(t.finite()), Rat(1) / spec.p().finite());
    case Kind::Lorentz: {
      if (spec.p().is_inf()) return ExtValue::exact(Rat(1));
      if (t.is_inf()) return ExtValue::infinity();
      const ExtValue power = ev_pow(ExtValue::exact(t.finite()), Rat(1) / spec.p().finite());
      if (spec.q().is_inf()) return power;
      return ev_pow(ExtValue::exact(spec.p().finite() / spec.q().finite()),
                    Rat(1) / spec.q().finite()) *
             power;
    }
    case Kind::WeakMarcinkiewicz:
    case Kind::Marcinkiewicz:
    case Kind::LorentzEndpoint:
      return spec.phi().eval_ext(t);
    case Kind::SumL1Linf:
      return ExtValue::of(std::min(t, ExtRat(Rat(1))));
    case Kind::CapL1Linf:
      if (t.is_inf()) return ExtValue::infinity();
      return ExtValue::exact(1 + t.finite());
    case Kind::WL: {
      if (!t.is_inf() && t.finite() <= 1) return fundamental_value(spec.local(), t);
      const ExtRat shifted = t.is_inf() ? t : ExtRat(t.finite() - 1);
      return fundamental_value(spec.local(), ExtRat(Rat(1))) +
             fundamental_value(spec.global(), shifted);
    }
    case Kind::Atomic:
      throw std::invalid_argument("fundamental function needs a non-atomic spec");
  }
  throw std::logic_error("unhandled spec kind");
}

std::optional<ExtValue> declared_modulus_bound(const SpaceSpec& spec) {
  switch (spec.kind()) {
    case Kind::Lp:
      if (spec.p().is_inf() || spec.p().finite() >= 1) return ExtValue::exact(Rat(1));
      return ev_pow(ExtValue::exact(Rat(2)), Rat(1) / spec.p().finite() - 1);
    case Kind::Lorentz: {
      if (spec.p().is_inf()) return ExtValue::exact(Rat(1));
      ExtValue bound = ev_pow(ExtValue::exact(Rat(2)), Rat(1) / spec.p().finite());
      if (!spec.q().is_inf() && spec.q().finite() < 1)
        bound = bound * ev_pow(ExtValue::exact(Rat(2)), Rat(1) / spec.q().finite() - 1);
      return bound;
    }
    case Kind::WeakMarcinkiewicz:
      return shapefn::delta2_constant(spec.phi());
    case Kind::Marcinkiewicz:
      // The running average is subadditive, so the supremum form is too.
      return ExtValue::exact(Rat(1));
    case Kind::LorentzEndpoint:
      if (shapefn::is_concave(spec.phi())) return ExtValue::exact(Rat(1));
      return shapefn::delta2_constant(spec.phi());
    case Kind::SumL1Linf:
    case Kind::CapL1Linf:
      return ExtValue::exact(Rat(1));
    case Kind::WL:
      return std::nullopt;  // reported from measurements only
    case Kind::Atomic:
      return declared_modulus_bound(spec.inner());
  }
  return std::nullopt;
}

double modulus_probe(const SpaceSpec& spec, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("modulus probe needs trials >= 1");
  std::vector<double> ratios(static_cast<size_t>(trials), 0.0);
  parallel::run_indexed(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    ExtValue nf, ng, nsum;
    if (spec.kind() == Kind::Atomic) {
      const SequenceFn f = corpus::random_sequence(rng, 8, spec.beta());
      const SequenceFn g = corpus::random_sequence(rng, 8, spec.beta());
      nf = norm_seq(spec, f);
      ng = norm_seq(spec, g);
      nsum = norm_seq(spec, add_sequences(f, g));
    } else {
      const StepFunction f = corpus::random_compact_step(rng, 6);
      const StepFunction g = corpus::random_compact_step(rng, 6);
      nf = norm(spec, f);
      ng = norm(spec, g);
      nsum = norm(spec, stepcore::add(f, g));
    }
    if (nf.is_inf() || ng.is_inf() || nsum.is_inf()) return;
    const double denom = nf.value() + ng.value();
    if (denom <= 0) return;
    ratios[static_cast<size_t>(i)] = nsum.value() / denom;
  });
  return *std::max_element(ratios.begin(), ratios.end());
}

}  // namespace rikit::spaces
