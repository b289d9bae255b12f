#include "rikit/step_function.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rikit::stepcore {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

// Sorted distinct finite breakpoints of f within [0, alpha), including 0.
std::vector<Rat> breakpoints(const StepFunction& f) {
  std::vector<Rat> cuts;
  cuts.push_back(Rat(0));
  for (const auto& p : f.pieces()) {
    cuts.push_back(p.a);
    if (!p.b.is_inf()) cuts.push_back(p.b.finite());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::vector<Rat> merge_cuts(std::vector<Rat> a, const std::vector<Rat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Total measure carried by each distinct positive value of f, including the
// tail's background set.
std::map<Rat, ExtRat> level_measures(const StepFunction& f) {
  std::map<Rat, ExtRat> measure;
  Rat cursor = 0;
  ExtRat background;
  for (const auto& p : f.pieces()) {
    background += ExtRat(p.a - cursor);
    if (p.b.is_inf()) {
      measure[p.v] += ExtRat::infinity();
      cursor = p.a;  // nothing follows an unbounded piece
    } else {
      measure[p.v] += ExtRat(p.b.finite() - p.a);
      cursor = p.b.finite();
    }
  }
  if (f.pieces().empty() || !f.pieces().back().b.is_inf()) {
    background += interval_length(cursor, f.alpha());
  }
  if (f.tail() > 0 && !background.is_zero()) measure[f.tail()] += background;
  measure.erase(Rat(0));
  return measure;
}

}  // namespace

StepFunction StepFunction::make(std::vector<Piece> pieces, Rat tail, ExtRat alpha) {
  if (tail < 0) invalid("step function: negative tail");
  if (alpha.is_zero()) invalid("step function: empty domain");
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });

  std::vector<Piece> kept;
  for (auto& p : pieces) {
    if (p.v < 0) invalid("step function: negative value");
    if (p.a < 0) invalid("step function: piece starts before 0");
    if (ExtRat(p.a) >= p.b) {
      if (ExtRat(p.a) == p.b) continue;  // empty piece
      invalid("step function: piece ends before it starts");
    }
    if (p.b > alpha) invalid("step function: piece exceeds the domain");
    if (!kept.empty()) {
      const ExtRat& prev_end = kept.back().b;
      if (prev_end.is_inf()) invalid("step function: piece after an unbounded piece");
      if (p.a < prev_end.finite()) invalid("step function: overlapping pieces");
    }
    if (p.v == tail) continue;  // background value; fold into the tail
    if (!kept.empty() && kept.back().v == p.v && !kept.back().b.is_inf() &&
        kept.back().b.finite() == p.a) {
      kept.back().b = p.b;  // merge touching equal values
    } else {
      kept.push_back(std::move(p));
    }
  }

  StepFunction out;
  out.pieces_ = std::move(kept);
  out.tail_ = std::move(tail);
  out.alpha_ = std::move(alpha);
  return out;
}

Rat StepFunction::value_at(const Rat& t) const {
  if (t < 0 || ExtRat(t) >= alpha_) throw std::domain_error("evaluation outside [0, alpha)");
  // pieces are sorted and disjoint: only the last piece starting at or
  // before t can contain it
  const auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                                   [](const Rat& x, const Piece& p) { return x < p.a; });
  if (it != pieces_.begin()) {
    const auto& p = *std::prev(it);
    if (ExtRat(t) < p.b) return p.v;
  }
  return tail_;
}

Rat StepFunction::support_bound() const {
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    if (it->b.is_inf()) throw std::domain_error("support bound of an unbounded piece");
    return it->b.finite();
  }
  return Rat(0);
}

MonotoneStep MonotoneStep::make(std::vector<Step> steps, ExtRat tail, ExtRat alpha) {
  if (alpha.is_zero()) invalid("monotone step: empty domain");
  if (!steps.empty()) {
    if (steps.front().T != 0) invalid("monotone step: first breakpoint must be 0");
    for (size_t i = 0; i + 1 < steps.size(); ++i) {
      if (!(steps[i].T < steps[i + 1].T)) invalid("monotone step: breakpoints not increasing");
      if (!(steps[i].v > steps[i + 1].v)) invalid("monotone step: values not decreasing");
    }
    if (steps.back().v != tail) invalid("monotone step: final value must equal the tail");
    if (ExtRat(steps.back().T) >= alpha) invalid("monotone step: breakpoint beyond the domain");
    if (steps.size() == 1 && steps[0].v == tail) steps.clear();  // constant function
  }
  MonotoneStep out;
  out.steps_ = std::move(steps);
  out.tail_ = std::move(tail);
  out.alpha_ = std::move(alpha);
  return out;
}

ExtRat MonotoneStep::value_at(const Rat& t) const {
  if (t < 0 || ExtRat(t) >= alpha_) throw std::domain_error("evaluation outside [0, alpha)");
  const auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                                   [](const Rat& x, const Step& s) { return x < s.T; });
  return it == steps_.begin() ? tail_ : std::prev(it)->v;
}

bool MonotoneStep::finite_values() const {
  return steps_.empty() || !steps_.front().v.is_inf();
}

Rat MonotoneStep::settle_point() const {
  return steps_.empty() ? Rat(0) : steps_.back().T;
}

StepFunction MonotoneStep::to_step_function() const {
  if (!finite_values()) throw std::domain_error("infinite values in a step layout");
  if (tail_.is_inf()) throw std::domain_error("infinite tail in a step layout");
  std::vector<Piece> pieces;
  for (size_t i = 0; i + 1 < steps_.size(); ++i) {
    pieces.push_back({steps_[i].T, ExtRat(steps_[i + 1].T), steps_[i].v.finite()});
  }
  return StepFunction::make(std::move(pieces), tail_.finite(), alpha_);
}

MaximalFunction MaximalFunction::make(std::vector<Segment> segments) {
  if (segments.empty() || segments.front().T != 0) {
    invalid("maximal function: segments must start at 0");
  }
  for (size_t i = 0; i + 1 < segments.size(); ++i) {
    if (!(segments[i].T < segments[i + 1].T)) {
      invalid("maximal function: breakpoints not increasing");
    }
  }
  MaximalFunction out;
  out.segments_ = std::move(segments);
  return out;
}

Rat MaximalFunction::value_at(const Rat& t) const {
  if (t <= 0) throw std::domain_error("running average undefined at 0");
  const Segment* seg = &segments_.front();
  for (const auto& s : segments_) {
    if (t < s.T) break;
    seg = &s;
  }
  return (seg->A + seg->v * (t - seg->T)) / t;
}

SequenceFn SequenceFn::make(std::vector<Rat> entries, Rat beta) {
  if (beta <= 0) invalid("sequence: atom width must be positive");
  for (const auto& e : entries) {
    if (e < 0) invalid("sequence: negative entry");
  }
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
  SequenceFn out;
  out.entries_ = std::move(entries);
  out.beta_ = std::move(beta);
  return out;
}

MonotoneStep rearrange(const StepFunction& f) {
  auto measure = level_measures(f);

  // The essential tail of the rearrangement: the largest level carried by an
  // infinite-measure set. Levels at or below it are absorbed.
  Rat essential = 0;
  for (const auto& [v, m] : measure) {
    if (m.is_inf() && v > essential) essential = v;
  }

  std::vector<MonotoneStep::Step> steps;
  Rat cursor = 0;
  for (auto it = measure.rbegin(); it != measure.rend(); ++it) {
    if (!(it->first > essential)) break;  // descending values
    steps.push_back({cursor, ExtRat(it->first)});
    cursor += it->second.finite();
  }
  ExtRat tail(essential);
  if (!steps.empty() || essential > 0) {
    if (ExtRat(cursor) < f.alpha()) {
      steps.push_back({cursor, tail});
    } else {
      // The positive levels fill the whole domain; the lowest stacked level is
      // the final stretch.
      tail = steps.back().v;
    }
  }
  return MonotoneStep::make(std::move(steps), std::move(tail), f.alpha());
}

MonotoneStep distribution(const StepFunction& f) {
  auto measure = level_measures(f);

  // Ascending positive levels u_1 < ... < u_r; measure{f > s} equals the
  // suffix sum over levels above s, constant on [u_{i-1}, u_i).
  std::vector<Rat> levels;
  levels.reserve(measure.size());
  for (const auto& entry : measure) levels.push_back(entry.first);
  std::vector<ExtRat> above(levels.size());  // above[i] = measure{f >= u_{i+1}}... see loop
  ExtRat cumulative;
  for (size_t i = levels.size(); i-- > 0;) {
    cumulative += measure[levels[i]];
    above[i] = cumulative;  // measure{f > s} for s in [u_{i-1}, u_i)
  }

  std::vector<MonotoneStep::Step> steps;
  Rat start = 0;
  for (size_t i = 0; i < levels.size(); ++i) {
    if (steps.empty() || steps.back().v != above[i]) steps.push_back({start, above[i]});
    start = levels[i];
  }
  if (!levels.empty()) steps.push_back({levels.back(), ExtRat()});
  return MonotoneStep::make(std::move(steps), ExtRat(), ExtRat::infinity());
}

MonotoneStep distribution(const MonotoneStep& fstar) {
  return distribution(fstar.to_step_function());
}

MaximalFunction maximal(const MonotoneStep& fstar) {
  if (!fstar.finite_values() || fstar.tail().is_inf()) {
    throw std::domain_error("running average of an infinite-valued layout");
  }
  std::vector<MaximalFunction::Segment> segments;
  Rat area = 0;
  Rat cursor = 0;
  const auto& steps = fstar.steps();
  if (steps.empty()) {
    segments.push_back({Rat(0), Rat(0), fstar.tail().finite()});
  } else {
    for (size_t i = 0; i < steps.size(); ++i) {
      area += (i == 0 ? Rat(0) : steps[i - 1].v.finite() * (steps[i].T - cursor));
      cursor = steps[i].T;
      segments.push_back({cursor, area, steps[i].v.finite()});
    }
  }
  if (!fstar.alpha().is_inf()) {
    const Rat& end = fstar.alpha().finite();
    Rat last_value = segments.back().v;
    Rat last_T = segments.back().T;
    if (end > last_T) {
      segments.push_back({end, segments.back().A + last_value * (end - last_T), Rat(0)});
    }
  }
  return MaximalFunction::make(std::move(segments));
}

StepFunction dilate(const StepFunction& f, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("dilation parameter must be positive");
  if (!f.alpha().is_inf()) {
    throw std::domain_error("dilation needs an unbounded domain");
  }
  std::vector<Piece> pieces;
  for (const auto& p : f.pieces()) {
    pieces.push_back({p.a / t, p.b.is_inf() ? p.b : ExtRat(p.b.finite() / t), p.v});
  }
  return StepFunction::make(std::move(pieces), f.tail(), f.alpha());
}

ExtRat integrate(const StepFunction& f, const Rat& from, const ExtRat& to) {
  if (from < 0 || ExtRat(from) > to || to > f.alpha()) {
    throw std::invalid_argument("integration window outside the domain");
  }
  ExtRat total;
  Rat cursor = from;
  for (const auto& p : f.pieces()) {
    ExtRat piece_end = p.b;
    Rat lo = std::max(p.a, from);
    ExtRat hi = piece_end < to ? piece_end : to;
    if (ExtRat(lo) >= hi) continue;
    // background gap before this piece
    if (cursor < lo) {
      total += ExtRat(f.tail()) * ExtRat(lo - cursor);
    }
    total += ExtRat(p.v) * interval_length(lo, hi);
    if (hi.is_inf()) return total;
    cursor = hi.finite();
  }
  if (ExtRat(cursor) < to) {
    total += ExtRat(f.tail()) * interval_length(cursor, to);
  }
  return total;
}

ExtRat integrate(const StepFunction& f) {
  return integrate(f, Rat(0), f.alpha());
}

ExtRat integrate(const MonotoneStep& fstar, const Rat& from, const ExtRat& to) {
  return integrate(fstar.to_step_function(), from, to);
}

ExtRat integrate_product(const StepFunction& f, const StepFunction& g) {
  if (f.alpha() != g.alpha()) {
    throw std::invalid_argument("product of functions on different domains");
  }
  auto cuts = merge_cuts(breakpoints(f), breakpoints(g));
  ExtRat total;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat value = f.value_at(cuts[i]) * g.value_at(cuts[i]);
    total += ExtRat(value) * ExtRat(cuts[i + 1] - cuts[i]);
  }
  if (ExtRat(cuts.back()) < f.alpha()) {
    Rat value = f.value_at(cuts.back()) * g.value_at(cuts.back());
    total += ExtRat(value) * interval_length(cuts.back(), f.alpha());
  }
  return total;
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  if (f.alpha() != g.alpha()) {
    throw std::invalid_argument("sum of functions on different domains");
  }
  auto cuts = merge_cuts(breakpoints(f), breakpoints(g));
  std::vector<Piece> pieces;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    pieces.push_back({cuts[i], ExtRat(cuts[i + 1]), f.value_at(cuts[i]) + g.value_at(cuts[i])});
  }
  if (ExtRat(cuts.back()) < f.alpha()) {
    pieces.push_back({cuts.back(), f.alpha(), f.value_at(cuts.back()) + g.value_at(cuts.back())});
  }
  return StepFunction::make(std::move(pieces), f.tail() + g.tail(), f.alpha());
}

StepFunction scale(const StepFunction& f, const Rat& c) {
  if (c < 0) throw std::invalid_argument("scaling by a negative constant");
  std::vector<Piece> pieces;
  for (const auto& p : f.pieces()) pieces.push_back({p.a, p.b, p.v * c});
  return StepFunction::make(std::move(pieces), f.tail() * c, f.alpha());
}

StepFunction truncate(const StepFunction& f, const Rat& T) {
  if (T < 0) throw std::invalid_argument("truncation point must be non-negative");
  if (!(ExtRat(T) < f.alpha())) return f;
  std::vector<Piece> pieces;
  Rat cursor = 0;
  for (const auto& p : f.pieces()) {
    if (p.a >= T) break;
    if (cursor < p.a && f.tail() != 0) pieces.push_back({cursor, ExtRat(p.a), f.tail()});
    const ExtRat hi = std::min(p.b, ExtRat(T));
    if (ExtRat(p.a) < hi) pieces.push_back({p.a, hi, p.v});
    if (p.b.is_inf()) return StepFunction::make(std::move(pieces), Rat(0), f.alpha());
    cursor = p.b.finite();
  }
  if (cursor < T && f.tail() != 0) pieces.push_back({cursor, ExtRat(T), f.tail()});
  return StepFunction::make(std::move(pieces), Rat(0), f.alpha());
}

StepFunction restrict_window(const MonotoneStep& fstar, Window window) {
  StepFunction full = fstar.to_step_function();
  std::vector<Piece> pieces;
  if (window == Window::Local) {
    ExtRat cut = std::min(ExtRat(Rat(1)), full.alpha());
    for (const auto& p : full.pieces()) {
      if (ExtRat(p.a) >= cut) break;
      pieces.push_back({p.a, std::min(p.b, cut), p.v});
    }
    // Tail stretch inside [0, 1).
    Rat settle = fstar.settle_point();
    if (full.tail() > 0 && ExtRat(settle) < cut) {
      pieces.push_back({settle, cut, full.tail()});
    }
    return StepFunction::make(std::move(pieces), Rat(0), full.alpha());
  }
  // Global window [1, alpha); values stay in place.
  const Rat one(1);
  if (full.alpha() <= ExtRat(one)) {
    return StepFunction::make({}, Rat(0), full.alpha());
  }
  for (const auto& p : full.pieces()) {
    if (p.b <= ExtRat(one)) continue;
    pieces.push_back({std::max(p.a, one), p.b, p.v});
  }
  if (full.tail() > 0) {
    Rat start = std::max(fstar.settle_point(), one);
    pieces.push_back({start, full.alpha(), full.tail()});
  }
  return StepFunction::make(std::move(pieces), Rat(0), full.alpha());
}

StepFunction realize(const SequenceFn& g) {
  std::vector<Piece> pieces;
  for (size_t n = 0; n < g.size(); ++n) {
    if (g.entries()[n] == 0) continue;
    Rat a = g.beta() * Rat(static_cast<long>(n));
    Rat b = g.beta() * Rat(static_cast<long>(n) + 1);
    pieces.push_back({a, ExtRat(b), g.entries()[n]});
  }
  return StepFunction::make(std::move(pieces), Rat(0), ExtRat::infinity());
}

SequenceFn sort_descending(const SequenceFn& g) {
  auto entries = g.entries();
  std::sort(entries.begin(), entries.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return SequenceFn::make(std::move(entries), g.beta());
}

}  // namespace rikit::stepcore
