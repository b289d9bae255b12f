#include "rikit/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rikit/corpus.hpp"
#include "rikit/parallel.hpp"

namespace rikit::theorems {

namespace {

using shapefn::ShapeFunction;
using spaces::SpaceSpec;
using stepcore::MonotoneStep;
using stepcore::StepFunction;

std::string fmt(double v) { return format_double(v); }

// a <= b, exactly when both sides are exact, with relative slack otherwise.
bool leq(const ExtValue& a, const ExtValue& b) {
  if (b.is_inf()) return true;
  if (a.is_inf()) return false;
  if (a.is_exact() && b.is_exact()) return a.rat() <= b.rat();
  return a.value() <= b.value() * (1 + 1e-9) + 1e-15;
}

double finite_ratio(const ExtValue& num, const ExtValue& den) {
  if (num.is_inf() || den.is_inf()) return 0.0;
  if (den.value() <= 0) return 0.0;
  return num.value() / den.value();
}

// phi's limit at the top of its domain as a power value.
PowerValue shape_limit_pv(const ShapeFunction& phi) {
  if (!phi.alpha().is_inf()) return phi.eval_power(phi.alpha().finite());
  const auto& last = phi.pieces().back();
  if (last.exp > 0) return PowerValue::infinity();
  return PowerValue::of(last.coef);
}

// sup over [from, alpha) of phi(t)/t, piecewise monotone enumeration.
PowerValue psi_sup_from(const ShapeFunction& phi, const Rat& from) {
  PowerValue best = PowerValue::zero();
  for (const auto& p : phi.pieces()) {
    if (!(p.to.is_inf()) && p.to.finite() <= from) continue;
    const Rat left = std::max(p.from, from);
    const Rat q = p.exp - 1;  // psi = coef * t^q on the piece
    if (q > 0) {
      if (p.to.is_inf()) return PowerValue::infinity();
      best = pv_max(best, PowerValue::of(p.coef) * PowerValue::pow(p.to.finite(), q));
    } else if (q == 0) {
      best = pv_max(best, PowerValue::of(p.coef));
    } else {
      if (left == 0) return PowerValue::infinity();
      best = pv_max(best, PowerValue::of(p.coef) * PowerValue::pow(left, q));
    }
  }
  return best;
}

// An infinite-domain test input: compactly supported mass, sometimes with a
// positive tail glued on.
StepFunction random_infinite_domain_input(corpus::Rng& rng, int max_pieces) {
  StepFunction f = corpus::random_compact_step(rng, max_pieces);
  if (rng.chance(1, 4)) {
    const Rat tail = corpus::small_positive(rng);
    f = StepFunction::make(f.pieces(), tail, ExtRat::infinity());
  }
  return f;
}

}  // namespace

ExtValue endpoint_constant(const ShapeFunction& phi) {
  if (!phi.pure_power() || !phi.monotone())
    throw std::invalid_argument("endpoint constant needs a monotone pure power shape");
  ExtValue best = ExtValue::zero();
  for (const auto& p : phi.pieces()) {
    if (p.from == 0) {
      if (p.exp >= 1) return ExtValue::infinity();
      best = ev_max(best, ExtValue::exact(Rat(1) / (Rat(1) - p.exp)));
    } else {
      const ExtValue reach = shapefn::reciprocal_integral(phi, p.from);
      if (reach.is_inf()) return ExtValue::infinity();
      // right limit of phi at the junction uses this piece's formula
      const ExtValue phi_right =
          ExtValue::exact(p.coef) * ev_pow(ExtValue::exact(p.from), p.exp);
      best = ev_max(best, phi_right * reach * ExtValue::exact(Rat(1) / p.from));
    }
    if (p.to.is_inf()) {
      if (p.exp >= 1) return ExtValue::infinity();
      best = ev_max(best, ExtValue::exact(Rat(1) / (Rat(1) - p.exp)));
    } else {
      const Rat b = p.to.finite();
      const ExtValue reach = shapefn::reciprocal_integral(phi, b);
      if (reach.is_inf()) return ExtValue::infinity();
      best = ev_max(best, phi.eval(b) * reach * ExtValue::exact(Rat(1) / b));
    }
  }
  return best;
}

CheckReport endpoint_equivalence(const ShapeFunction& phi, uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "endpoint[" + shapefn::signature(phi) + "]";
  rep.seed = seed;
  rep.trials = trials;
  const ExtValue S = endpoint_constant(phi);
  const auto weak = SpaceSpec::weak_marcinkiewicz(phi);
  const auto strong = SpaceSpec::marcinkiewicz(phi);

  int failures = 0;
  double max_ratio = 0;
  auto probe = [&](const StepFunction& f, const std::string& label) {
    const ExtValue m = spaces::norm(weak, f);
    const ExtValue M = spaces::norm(strong, f);
    bool ok = leq(m, M);
    if (!S.is_inf()) ok = ok && leq(M, S * m);
    if (!ok && failures++ == 0) rep.witness = label;
    max_ratio = std::max(max_ratio, finite_ratio(M, m));
  };

  for (int i = 0; i < trials; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    probe(random_infinite_domain_input(rng, 6), "trial " + std::to_string(i));
  }
  // near-extremal inputs tracking 1/phi over widening windows
  std::vector<double> window_ratios;
  for (int k : {4, 8, 12}) {
    const auto c = duality::reciprocal_clamp_candidate(phi, rat_pow_int(Rat(2), -k),
                                                       rat_pow_int(Rat(2), k), 64);
    const ExtValue m = spaces::norm(weak, c);
    const ExtValue M = spaces::norm(strong, c);
    if (!leq(m, M) || (!S.is_inf() && !leq(M, S * m))) {
      if (failures++ == 0) rep.witness = "clamp window 2^" + std::to_string(k);
    }
    window_ratios.push_back(finite_ratio(M, m));
    max_ratio = std::max(max_ratio, window_ratios.back());
  }

  rep.measured.emplace_back("S", S.to_string());
  rep.measured.emplace_back("max_ratio", fmt(max_ratio));
  for (size_t i = 0; i < window_ratios.size(); ++i) {
    rep.measured.emplace_back("window_ratio_" + std::to_string(4 * (i + 1)),
                              fmt(window_ratios[i]));
  }
  bool ok = failures == 0;
  if (S.is_inf()) {
    // no constant can work: the window ratios must keep growing
    ok = ok && window_ratios[0] < window_ratios[1] && window_ratios[1] < window_ratios[2];
  }
  rep.verdict = ok ? "holds" : "fails";
  if (failures > 0) rep.measured.emplace_back("failures", std::to_string(failures));
  return rep;
}

CheckReport embedding_into_sum(const ShapeFunction& phi, uint64_t seed, int trials) {
  if (!phi.alpha().is_inf())
    throw std::invalid_argument("embedding checks run on the infinite domain");
  CheckReport rep;
  rep.name = "embed-sum[" + shapefn::signature(phi) + "]";
  rep.seed = seed;
  rep.trials = trials;
  const ExtValue constant = shapefn::reciprocal_integral(phi, Rat(1));
  const bool embedded = !constant.is_inf();
  const auto weak = SpaceSpec::weak_marcinkiewicz(phi);
  const auto sum = SpaceSpec::sum_l1_linf();

  int failures = 0;
  if (embedded) {
    for (int i = 0; i < trials; ++i) {
      corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
      const StepFunction f = random_infinite_domain_input(rng, 6);
      const ExtValue m = spaces::norm(weak, f);
      if (m.is_inf()) continue;
      if (!leq(spaces::norm(sum, f), constant * m)) {
        if (failures++ == 0) rep.witness = "trial " + std::to_string(i);
      }
    }
    // the clamp input nearly attains the constant
    const auto c = duality::reciprocal_clamp_candidate(phi, Rat(1, 1 << 14), Rat(1), 64);
    const double attained =
        finite_ratio(spaces::norm(sum, c), spaces::norm(weak, c));
    rep.measured.emplace_back("constant", constant.to_string());
    rep.measured.emplace_back("attained", fmt(attained));
    rep.verdict = failures == 0 ? "holds" : "fails";
  } else {
    // ratios must grow past any constant as the window reaches towards 0
    std::vector<double> ratios;
    for (int k : {4, 8, 12}) {
      const auto c = duality::reciprocal_clamp_candidate(phi, rat_pow_int(Rat(2), -k), Rat(1), 32);
      ratios.push_back(finite_ratio(spaces::norm(sum, c), spaces::norm(weak, c)));
      rep.measured.emplace_back("ratio_2^-" + std::to_string(k), fmt(ratios.back()));
    }
    rep.measured.emplace_back("constant", "inf");
    rep.verdict = (ratios[0] < ratios[1] && ratios[1] < ratios[2]) ? "holds" : "fails";
  }
  rep.measured.emplace_back("embedded", embedded ? "yes" : "no");
  return rep;
}

CheckReport embedding_from_cap(const ShapeFunction& phi, uint64_t seed, int trials) {
  if (!phi.alpha().is_inf())
    throw std::invalid_argument("embedding checks run on the infinite domain");
  CheckReport rep;
  rep.name = "embed-cap[" + shapefn::signature(phi) + "]";
  rep.seed = seed;
  rep.trials = trials;
  const PowerValue growth = psi_sup_from(phi, Rat(1));
  const bool embedded = !growth.is_inf();
  const auto weak = SpaceSpec::weak_marcinkiewicz(phi);
  const auto cap = SpaceSpec::cap_l1_linf();

  int failures = 0;
  if (embedded) {
    const ExtValue constant = ev_max(phi.eval(Rat(1)), growth.to_ext_value());
    for (int i = 0; i < trials; ++i) {
      corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
      const StepFunction f = corpus::random_compact_step(rng, 6);
      if (!leq(spaces::norm(weak, f), constant * spaces::norm(cap, f))) {
        if (failures++ == 0) rep.witness = "trial " + std::to_string(i);
      }
    }
    rep.measured.emplace_back("constant", constant.to_string());
    rep.verdict = failures == 0 ? "holds" : "fails";
  } else {
    std::vector<double> ratios;
    for (int k : {2, 6, 10}) {
      const Rat len = rat_pow_int(Rat(2), k);
      const StepFunction flat =
          StepFunction::make({{Rat(0), ExtRat(len), Rat(1)}}, Rat(0), ExtRat::infinity());
      ratios.push_back(finite_ratio(spaces::norm(weak, flat), spaces::norm(cap, flat)));
      rep.measured.emplace_back("ratio_2^" + std::to_string(k), fmt(ratios.back()));
    }
    rep.measured.emplace_back("constant", "inf");
    rep.verdict = (ratios[0] < ratios[1] && ratios[1] < ratios[2]) ? "holds" : "fails";
  }
  rep.measured.emplace_back("embedded", embedded ? "yes" : "no");
  return rep;
}

DualSetResult dual_sets_forward(const StepFunction& f, const ShapeFunction& phi,
                                const PowerValue& weak_bound, const StepFunction& indicator,
                                int k) {
  if (k < 1) throw std::invalid_argument("trim depth must be >= 1");
  if (f.alpha() != indicator.alpha() || f.alpha() != phi.alpha())
    throw std::invalid_argument("domain bounds differ");
  for (const auto& p : indicator.pieces()) {
    if (p.v != 0 && p.v != 1) throw std::invalid_argument("indicator values must be 0 or 1");
  }
  if (indicator.tail() != 0 && f.alpha().is_inf())
    throw std::invalid_argument("indicator must have finite measure");
  const ExtRat mu_ext = stepcore::integrate(indicator);
  if (mu_ext.is_inf() || mu_ext.is_zero())
    throw std::invalid_argument("indicator must have finite positive measure");
  const Rat mu = mu_ext.finite();

  const PowerValue doubling = shapefn::doubling_power(phi);
  if (doubling.is_inf()) throw std::invalid_argument("shape must double");
  const PowerValue threshold =
      doubling.pow_rat(Rat(k)) * weak_bound * pv_div(PowerValue::of(Rat(1)), phi.eval_power(mu));

  // walk the union of breakpoints; keep where the indicator is on and f is
  // at or below the threshold
  std::set<Rat> cuts;
  auto collect = [&](const StepFunction& g) {
    for (const auto& p : g.pieces()) {
      cuts.insert(p.a);
      if (!p.b.is_inf()) cuts.insert(p.b.finite());
    }
  };
  collect(f);
  collect(indicator);
  cuts.insert(Rat(0));
  std::vector<Rat> edges(cuts.begin(), cuts.end());
  std::vector<stepcore::Piece> kept_pieces;
  auto keep = [&](const Rat& a, const ExtRat& b, const Rat& sample) {
    if (indicator.value_at(sample) != 1) return;
    if (pv_less(threshold, PowerValue::of(f.value_at(sample)))) return;
    kept_pieces.push_back({a, b, Rat(1)});
  };
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    keep(edges[i], ExtRat(edges[i + 1]), (edges[i] + edges[i + 1]) / 2);
  }
  if (f.alpha().is_inf()) {
    keep(edges.back(), ExtRat::infinity(), edges.back() + 1);
  } else if (ExtRat(edges.back()) < f.alpha()) {
    keep(edges.back(), f.alpha(), (edges.back() + f.alpha().finite()) / 2);
  }

  DualSetResult out{StepFunction::make(std::move(kept_pieces), Rat(0), f.alpha()),
                    Rat(0),
                    mu * (Rat(1) - rat_pow_int(Rat(1, 2), k)),
                    ExtValue::zero(),
                    (threshold * PowerValue::of(mu)).to_ext_value(),
                    false};
  out.kept_measure = stepcore::integrate(out.kept).finite();
  const ExtRat integral = stepcore::integrate_product(f, out.kept);
  out.integral = ExtValue::of(integral);
  const bool measure_ok = out.kept_measure >= out.required_measure;
  const bool budget_ok =
      !integral.is_inf() &&
      pv_less_equal(PowerValue::of(integral.finite()),
                    threshold * PowerValue::of(mu));
  out.holds = measure_ok && budget_ok;
  return out;
}

ExtValue set_oracle(const StepFunction& f, const ShapeFunction& phi) {
  if (phi.alpha() != f.alpha())
    throw std::invalid_argument("shape and function have different domain bounds");
  const MonotoneStep fstar = stepcore::rearrange(f);
  std::set<Rat> cuts;
  auto add = [&](const Rat& x) {
    if (x > 0 && (f.alpha().is_inf() || x <= f.alpha().finite())) cuts.insert(x);
  };
  for (const auto& s : fstar.steps()) add(s.T);
  for (const auto& p : phi.pieces()) {
    add(p.from);
    if (!p.to.is_inf()) add(p.to.finite());
  }
  if (!f.alpha().is_inf()) add(f.alpha().finite());

  ExtValue best = ExtValue::zero();
  for (const auto& s : cuts) {
    const ExtRat mass = stepcore::integrate(fstar, Rat(0), ExtRat(s));
    best = ev_max(best, phi.eval(s) * ExtValue::of(mass) * ExtValue::exact(Rat(1) / s));
  }
  if (f.alpha().is_inf()) {
    const Rat tail_v = fstar.tail().finite();
    const auto& last = phi.pieces().back();
    if (tail_v > 0) {
      if (last.exp > 0) return ExtValue::infinity();
      best = ev_max(best, ExtValue::exact(last.coef * tail_v));
    } else {
      const ExtRat total = stepcore::integrate(fstar, Rat(0), ExtRat::infinity());
      if (last.exp == 1) {
        best = ev_max(best, ExtValue::exact(last.coef) * ExtValue::of(total));
      } else if (last.exp > 1 && !total.is_zero()) {
        return ExtValue::infinity();
      }
    }
  }
  return best;
}

SupEquality sup_equality(const StepFunction& f, const ShapeFunction& phi) {
  if (phi.alpha() != f.alpha())
    throw std::invalid_argument("shape and function have different domain bounds");
  SupEquality out{spaces::weak_m_power(stepcore::rearrange(f), phi), PowerValue::zero(), false};

  const MonotoneStep d = stepcore::distribution(f);
  const auto& st = d.steps();
  PowerValue rhs = PowerValue::zero();
  for (size_t i = 0; i < st.size(); ++i) {
    if (st[i].v.is_zero()) continue;
    // the final flat always carries value 0, so a nonzero flat has an end
    const Rat s_end = st[i + 1].T;
    const PowerValue at_level =
        st[i].v.is_inf() ? shape_limit_pv(phi) : phi.eval_power(st[i].v.finite());
    if (at_level.is_inf()) {
      out.rhs = PowerValue::infinity();
      out.equal = out.lhs.is_inf();
      return out;
    }
    rhs = pv_max(rhs, PowerValue::of(s_end) * at_level);
  }
  out.rhs = rhs;
  if (out.lhs.is_inf() || out.rhs.is_inf()) {
    out.equal = out.lhs.is_inf() && out.rhs.is_inf();
  } else {
    out.equal = pv_equal(out.lhs, out.rhs);
  }
  return out;
}

CheckReport amalgam_max_identity(const ShapeFunction& phi0, uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "amalgam[" + shapefn::signature(phi0) + "]";
  rep.seed = seed;
  rep.trials = trials;
  const ShapeFunction phimax = shapefn::max_with(phi0, shapefn::one_shape());
  const auto lifted = SpaceSpec::weak_marcinkiewicz(phimax);
  const auto amalgam =
      SpaceSpec::wl(SpaceSpec::lp(ExtRat::infinity()), SpaceSpec::weak_marcinkiewicz(phi0));
  const ExtValue forward_bound =
      shapefn::delta2_constant(phi0) * ev_max(ExtValue::exact(Rat(1)), phi0.eval(Rat(1)));
  const ExtValue backward_bound = ExtValue::exact(Rat(2));

  int failures = 0;
  double max_fwd = 0, max_back = 0;
  for (int i = 0; i < trials; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = random_infinite_domain_input(rng, 6);
    const ExtValue n1 = spaces::norm(lifted, f);
    const ExtValue n2 = spaces::norm(amalgam, f);
    const bool ok = leq(n1, forward_bound * n2) && leq(n2, backward_bound * n1);
    if (!ok && failures++ == 0) rep.witness = "trial " + std::to_string(i);
    max_fwd = std::max(max_fwd, finite_ratio(n1, n2));
    max_back = std::max(max_back, finite_ratio(n2, n1));
  }
  rep.measured.emplace_back("forward_bound", forward_bound.to_string());
  rep.measured.emplace_back("max_forward_ratio", fmt(max_fwd));
  rep.measured.emplace_back("backward_bound", backward_bound.to_string());
  rep.measured.emplace_back("max_backward_ratio", fmt(max_back));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

namespace {

int defaulted(int trials, int fallback) { return trials > 0 ? trials : fallback; }

CheckReport suite_rearrange(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "rearrange-invariants";
  rep.seed = seed;
  rep.trials = trials;
  std::vector<int> fail(static_cast<size_t>(trials), 0);
  parallel::run_indexed(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = corpus::random_step(rng, 6);
    const MonotoneStep r = stepcore::rearrange(f);
    bool ok = stepcore::distribution(f) == stepcore::distribution(r);
    if (r.finite_values() && !r.tail().is_inf()) {
      ok = ok && stepcore::rearrange(r.to_step_function()) == r;
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    if (fail[static_cast<size_t>(i)] && failures++ == 0)
      rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_hl_inequality(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "pairing-inequality";
  rep.seed = seed;
  rep.trials = trials;
  std::vector<int> fail(static_cast<size_t>(trials), 0);
  parallel::run_indexed(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = random_infinite_domain_input(rng, 5);
    const StepFunction g = random_infinite_domain_input(rng, 5);
    const ExtRat lhs = stepcore::integrate_product(f, g);
    const ExtRat rhs = stepcore::integrate_product(
        stepcore::rearrange(f).to_step_function(), stepcore::rearrange(g).to_step_function());
    fail[static_cast<size_t>(i)] = lhs <= rhs ? 0 : 1;
  });
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    if (fail[static_cast<size_t>(i)] && failures++ == 0)
      rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_resonance(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "pairing-resonance";
  rep.seed = seed;
  rep.trials = trials;
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    std::vector<Rat> a, b;
    const int n = static_cast<int>(rng.uniform(1, 6));
    for (int j = 0; j < n; ++j) {
      a.push_back(rng.chance(1, 5) ? Rat(0) : corpus::small_positive(rng));
      b.push_back(rng.chance(1, 5) ? Rat(0) : corpus::small_positive(rng));
    }
    const auto res = duality::resonance_gap(a, b);
    if (!res.attained_by_sorting && failures++ == 0) rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_lemma_sup(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "level-sup-identity";
  rep.seed = seed;
  const auto catalog = corpus::shape_catalog();
  const int per_shape = trials;
  rep.trials = per_shape * static_cast<int>(catalog.size() + 1);
  int failures = 0;
  int exact_hits = 0;
  for (size_t s = 0; s < catalog.size(); ++s) {
    for (int i = 0; i < per_shape; ++i) {
      corpus::Rng rng(corpus::trial_seed(seed + s, static_cast<uint64_t>(i)));
      const StepFunction f = random_infinite_domain_input(rng, 6);
      const auto res = sup_equality(f, catalog[s].second);
      if (res.equal) {
        ++exact_hits;
      } else if (failures++ == 0) {
        rep.witness = catalog[s].first + " trial " + std::to_string(i);
      }
    }
  }
  // bounded shape against bounded-domain inputs
  const auto bounded = shapefn::power_shape(Rat(1), Rat(1, 2), ExtRat(Rat(4)));
  for (int i = 0; i < per_shape; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed + 100, static_cast<uint64_t>(i)));
    StepFunction f = stepcore::truncate(corpus::random_compact_step(rng, 5), Rat(4));
    f = StepFunction::make(f.pieces(), corpus::small_positive(rng), ExtRat(Rat(4)));
    const auto res = sup_equality(f, bounded);
    if (res.equal) {
      ++exact_hits;
    } else if (failures++ == 0) {
      rep.witness = "bounded trial " + std::to_string(i);
    }
  }
  rep.measured.emplace_back("exact_equal", std::to_string(exact_hits));
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_dual_sets(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "dual-set-trim";
  rep.seed = seed;
  rep.trials = trials;
  const auto catalog = std::vector<ShapeFunction>{
      shapefn::power_shape(Rat(1), Rat(1)), shapefn::power_shape(Rat(1), Rat(1, 2)),
      shapefn::min_t_one_shape()};
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = corpus::random_compact_step(rng, 6);
    if (f.is_zero()) continue;
    // a random union of up to 3 intervals
    std::vector<stepcore::Piece> on;
    Rat cursor = 0;
    const int parts = static_cast<int>(rng.uniform(1, 3));
    for (int j = 0; j < parts; ++j) {
      cursor += corpus::small_positive(rng);
      const Rat a = cursor;
      cursor += corpus::small_positive(rng);
      on.push_back({a, ExtRat(cursor), Rat(1)});
    }
    const StepFunction e = StepFunction::make(std::move(on), Rat(0), ExtRat::infinity());
    const auto& phi = catalog[static_cast<size_t>(i) % catalog.size()];
    const int k = 1 + i % 3;
    const PowerValue bound = spaces::weak_m_power(stepcore::rearrange(f), phi);
    const auto res = dual_sets_forward(f, phi, bound, e, k);
    if (!res.holds && failures++ == 0) rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_set_oracle(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "set-oracle-bounds";
  rep.seed = seed;
  rep.trials = trials;
  const auto sqrt_shape = shapefn::power_shape(Rat(1), Rat(1, 2));
  const auto weak = SpaceSpec::weak_marcinkiewicz(sqrt_shape);
  const auto strong = SpaceSpec::marcinkiewicz(sqrt_shape);
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = random_infinite_domain_input(rng, 6);
    const ExtValue oracle = set_oracle(f, sqrt_shape);
    const bool ok = leq(spaces::norm(weak, f), oracle) && leq(oracle, spaces::norm(strong, f));
    if (!ok && failures++ == 0) rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_holder(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "pairing-duality";
  rep.seed = seed;
  const std::vector<SpaceSpec> specs = {
      SpaceSpec::lp(ExtRat(Rat(2))),
      SpaceSpec::weak_marcinkiewicz(shapefn::power_shape(Rat(1), Rat(1, 2))),
      SpaceSpec::lorentz_endpoint(shapefn::power_shape(Rat(1), Rat(1, 2))),
      SpaceSpec::sum_l1_linf(),
  };
  rep.trials = trials * static_cast<int>(specs.size());
  int failures = 0;
  double min_slack = HUGE_VAL;
  for (size_t s = 0; s < specs.size(); ++s) {
    const auto form = duality::associate_closed_form(specs[s]);
    for (int i = 0; i < trials; ++i) {
      corpus::Rng rng(corpus::trial_seed(seed + s, static_cast<uint64_t>(i)));
      const StepFunction f = random_infinite_domain_input(rng, 5);
      const StepFunction g = random_infinite_domain_input(rng, 5);
      const auto res = duality::holder_check(specs[s], *form, f, g);
      if (!res.holds && failures++ == 0)
        rep.witness = specs[s].name() + " trial " + std::to_string(i);
      if (std::isfinite(res.slack)) min_slack = std::min(min_slack, res.slack);
    }
  }
  rep.measured.emplace_back("min_slack", fmt(min_slack));
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_associate_roundtrip(uint64_t seed, int) {
  CheckReport rep;
  rep.name = "associate-roundtrip";
  rep.seed = seed;
  rep.trials = 0;
  const auto sqrt_shape = shapefn::power_shape(Rat(1), Rat(1, 2));
  const std::vector<SpaceSpec> specs = {
      SpaceSpec::lp(ExtRat(Rat(3))),
      SpaceSpec::lp(ExtRat(Rat(1))),
      SpaceSpec::lorentz_endpoint(sqrt_shape),
      SpaceSpec::marcinkiewicz(sqrt_shape),
      SpaceSpec::sum_l1_linf(),
      SpaceSpec::cap_l1_linf(),
  };
  int failures = 0;
  for (const auto& spec : specs) {
    const auto once = duality::associate_closed_form(spec);
    if (!once || !once->is_space()) {
      ++failures;
      continue;
    }
    const auto twice = duality::associate_closed_form(once->space());
    if (!twice || !twice->is_space() || twice->space().name() != spec.name()) {
      if (failures++ == 0) rep.witness = spec.name();
    }
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_represent_identity(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "representation-identity";
  rep.seed = seed;
  const std::vector<SpaceSpec> inners = {
      SpaceSpec::lp(ExtRat(Rat(1))), SpaceSpec::lp(ExtRat::infinity()),
      SpaceSpec::lp(ExtRat(Rat(2))), SpaceSpec::lp(ExtRat(Rat(1, 2)))};
  rep.trials = trials * 2 * static_cast<int>(inners.size());
  int failures = 0;
  int exact_hits = 0;
  for (size_t s = 0; s < inners.size(); ++s) {
    const bool needs_exact = s < 2;
    for (const Rat beta : {Rat(1), Rat(2)}) {
      const auto spec = SpaceSpec::atomic(beta, inners[s]);
      for (int i = 0; i < trials; ++i) {
        corpus::Rng rng(corpus::trial_seed(seed + s, static_cast<uint64_t>(i)));
        const auto g = corpus::random_sequence(rng, 8, beta);
        const auto res = represent::verify_identity(spec, g);
        if (res.exact_equal) ++exact_hits;
        const bool ok = needs_exact ? res.exact_equal : res.rel_gap <= 1e-12;
        if (!ok && failures++ == 0)
          rep.witness = inners[s].name() + " trial " + std::to_string(i);
      }
    }
  }
  rep.measured.emplace_back("exact_equal", std::to_string(exact_hits));
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_block_subadditivity(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "block-average-subadditivity";
  rep.seed = seed;
  rep.trials = trials;
  std::vector<int> fail(static_cast<size_t>(trials), 0);
  parallel::run_indexed(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = corpus::random_compact_step(rng, 5);
    const StepFunction g = corpus::random_compact_step(rng, 5);
    const Rat beta = rng.chance(1, 2) ? Rat(1) : Rat(2);
    const auto total = represent::block_average(stepcore::rearrange(stepcore::add(f, g)), beta);
    const auto sf = represent::shifted_block_average(stepcore::rearrange(f), beta);
    const auto sg = represent::shifted_block_average(stepcore::rearrange(g), beta);
    const size_t n = std::max({total.size(), sf.size(), sg.size()});
    bool ok = true;
    for (size_t j = 0; j < n; ++j) {
      if (total.at(j) > 2 * (sf.at(j) + sg.at(j))) ok = false;
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    if (fail[static_cast<size_t>(i)] && failures++ == 0)
      rep.witness = "trial " + std::to_string(i);
  }
  rep.measured.emplace_back("failures", std::to_string(failures));
  rep.verdict = failures == 0 ? "holds" : "fails";
  return rep;
}

CheckReport suite_rep_modulus(uint64_t seed, int trials) {
  CheckReport rep;
  rep.name = "representation-modulus";
  rep.seed = seed;
  rep.trials = trials;
  const auto r = represent::representation(SpaceSpec::lp(ExtRat(Rat(1, 2))), Rat(1));
  const double measured = represent::rep_modulus_probe(r, trials, seed);
  rep.measured.emplace_back("bound", r.modulus_bound ? r.modulus_bound->to_string() : "none");
  rep.measured.emplace_back("measured", fmt(measured));
  rep.verdict =
      (r.modulus_bound && measured <= r.modulus_bound->value() * (1 + 1e-9)) ? "holds" : "fails";
  return rep;
}

CheckReport suite_shift_example(uint64_t seed, int) {
  CheckReport rep;
  rep.name = "shifted-block-example";
  rep.seed = seed;
  rep.trials = 1;
  const StepFunction f =
      StepFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1)}}, Rat(0), ExtRat::infinity());
  const auto s = represent::shifted_block_average(stepcore::rearrange(f), Rat(1));
  const auto t = represent::block_average(stepcore::rearrange(f), Rat(1));
  const bool ok = s.entries() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)} &&
                  t.entries() == std::vector<Rat>{Rat(1)};
  rep.measured.emplace_back("shifted", "(1/2,1/2)");
  rep.measured.emplace_back("plain", "(1)");
  rep.verdict = ok ? "holds" : "fails";
  return rep;
}

std::vector<CheckReport> suite_endpoint(uint64_t seed, int trials) {
  const int n = defaulted(trials, 120);
  return {endpoint_equivalence(shapefn::power_shape(Rat(1), Rat(1, 2)), seed, n),
          endpoint_equivalence(shapefn::power_shape(Rat(1), Rat(1, 3)), seed, n),
          endpoint_equivalence(shapefn::power_shape(Rat(1), Rat(1)), seed, n)};
}

std::vector<CheckReport> suite_embed(uint64_t seed, int trials) {
  const int n = defaulted(trials, 150);
  std::vector<CheckReport> out;
  for (const Rat& e : {Rat(2), Rat(1), Rat(1, 2)}) {
    out.push_back(embedding_into_sum(shapefn::power_shape(Rat(1), e), seed, n));
    out.push_back(embedding_from_cap(shapefn::power_shape(Rat(1), e), seed, n));
  }
  return out;
}

std::vector<CheckReport> suite_amalgam(uint64_t seed, int trials) {
  const int n = defaulted(trials, 150);
  return {amalgam_max_identity(shapefn::power_shape(Rat(1), Rat(1)), seed, n),
          amalgam_max_identity(shapefn::power_shape(Rat(1), Rat(1, 2)), seed, n)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rearrange", "hl",        "lemma-sup",
                                                 "endpoint",  "embed",     "dual",
                                                 "represent", "amalgam",   "all"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, uint64_t seed, int trials) {
  if (name == "rearrange") return {suite_rearrange(seed, defaulted(trials, 500))};
  if (name == "hl")
    return {suite_hl_inequality(seed, defaulted(trials, 500)),
            suite_resonance(seed, defaulted(trials, 150))};
  if (name == "lemma-sup") return {suite_lemma_sup(seed, defaulted(trials, 60))};
  if (name == "endpoint") return suite_endpoint(seed, trials);
  if (name == "embed") return suite_embed(seed, trials);
  if (name == "dual")
    return {suite_dual_sets(seed, defaulted(trials, 200)),
            suite_set_oracle(seed, defaulted(trials, 200)),
            suite_holder(seed, defaulted(trials, 100)), suite_associate_roundtrip(seed, 0)};
  if (name == "represent")
    return {suite_represent_identity(seed, defaulted(trials, 50)),
            suite_block_subadditivity(seed, defaulted(trials, 500)),
            suite_rep_modulus(seed, defaulted(trials, 150)), suite_shift_example(seed, 0)};
  if (name == "amalgam") return suite_amalgam(seed, trials);
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, seed, trials);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace rikit::theorems
