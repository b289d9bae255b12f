#include "rikit/represent.hpp"

#include <algorithm>
#include <stdexcept>

#include "rikit/corpus.hpp"
#include "rikit/parallel.hpp"

namespace rikit::represent {

namespace {

using stepcore::MonotoneStep;
using stepcore::SequenceFn;
using stepcore::StepFunction;

// Entry n integrates fstar over [scale*n, scale*(n+1)) and divides by beta.
SequenceFn scaled_block_average(const MonotoneStep& fstar, const Rat& beta, const Rat& scale) {
  if (beta <= 0) throw std::invalid_argument("block width must be positive");
  if (!fstar.tail().is_zero() && fstar.alpha().is_inf())
    throw std::invalid_argument("block averages need finitely supported mass");
  const Rat end = fstar.tail().is_zero() ? fstar.settle_point() : fstar.alpha().finite();
  std::vector<Rat> entries;
  for (Rat left = 0; left < end; left += scale) {
    ExtRat right(left + scale);
    if (ExtRat(end) < right) right = ExtRat(end);
    entries.push_back(stepcore::integrate(fstar, left, right).finite() / beta);
  }
  return SequenceFn::make(std::move(entries), beta);
}

}  // namespace

SequenceFn block_average(const MonotoneStep& fstar, const Rat& beta) {
  return scaled_block_average(fstar, beta, beta);
}

SequenceFn shifted_block_average(const MonotoneStep& fstar, const Rat& beta) {
  return scaled_block_average(fstar, beta, beta / 2);
}

AtomicRepresentation representation(const spaces::SpaceSpec& inner, const Rat& beta) {
  AtomicRepresentation out{spaces::SpaceSpec::atomic(beta, inner), std::nullopt};
  if (const auto c = spaces::declared_modulus_bound(inner)) {
    out.modulus_bound = ExtValue::exact(Rat(4)) * *c * *c;
  }
  return out;
}

ExtValue rep_norm(const AtomicRepresentation& rep, const StepFunction& f) {
  return spaces::norm_seq(rep.seq_spec,
                          block_average(stepcore::rearrange(f), rep.seq_spec.beta()));
}

IdentityReport verify_identity(const spaces::SpaceSpec& seq_spec, const SequenceFn& g) {
  IdentityReport out{spaces::norm_seq(seq_spec, g),
                     spaces::norm(seq_spec.inner(), stepcore::realize(g)), false, 0.0};
  if (out.lhs.is_inf() || out.rhs.is_inf()) {
    out.exact_equal = out.lhs.is_inf() && out.rhs.is_inf();
    out.rel_gap = out.exact_equal ? 0.0 : HUGE_VAL;
    return out;
  }
  if (out.lhs.is_exact() && out.rhs.is_exact()) {
    out.exact_equal = out.lhs.rat() == out.rhs.rat();
  }
  const double scale = std::max({out.lhs.value(), out.rhs.value(), 1.0});
  out.rel_gap = std::abs(out.lhs.value() - out.rhs.value()) / scale;
  if (out.exact_equal) out.rel_gap = 0.0;
  return out;
}

double rep_modulus_probe(const AtomicRepresentation& rep, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("modulus probe needs trials >= 1");
  std::vector<double> ratios(static_cast<size_t>(trials), 0.0);
  parallel::run_indexed(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const StepFunction f = corpus::random_compact_step(rng, 5);
    const StepFunction g = corpus::random_compact_step(rng, 5);
    const ExtValue nf = rep_norm(rep, f);
    const ExtValue ng = rep_norm(rep, g);
    const ExtValue nsum = rep_norm(rep, stepcore::add(f, g));
    if (nf.is_inf() || ng.is_inf() || nsum.is_inf()) return;
    const double denom = nf.value() + ng.value();
    if (denom <= 0) return;
    ratios[static_cast<size_t>(i)] = nsum.value() / denom;
  });
  return *std::max_element(ratios.begin(), ratios.end());
}

}  // namespace rikit::represent
