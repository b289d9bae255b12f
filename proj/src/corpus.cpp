#include "rikit/corpus.hpp"

namespace rikit::corpus {

using stepcore::MonotoneStep;
using stepcore::Piece;
using stepcore::SequenceFn;
using stepcore::StepFunction;

uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int64_t Rng::uniform(int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
}

bool Rng::chance(uint64_t num, uint64_t den) { return next() % den < num; }

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rat small_positive(Rng& rng) {
  static const int dens[] = {1, 2, 3, 4, 6, 8, 12};
  const Int num(rng.uniform(1, 16));
  const Int den(dens[rng.uniform(0, 6)]);
  return Rat(num, den);
}

StepFunction random_step(Rng& rng, int max_pieces) {
  const int n = static_cast<int>(rng.uniform(0, max_pieces));
  std::vector<Piece> pieces;
  Rat cursor = 0;
  for (int i = 0; i < n; ++i) {
    if (rng.chance(1, 3)) cursor += small_positive(rng);  // gap
    const Rat a = cursor;
    cursor += small_positive(rng);
    const Rat v = rng.chance(1, 6) ? Rat(0) : small_positive(rng);
    pieces.push_back({a, ExtRat(cursor), v});
  }
  const Rat tail = rng.chance(1, 5) ? small_positive(rng) : Rat(0);
  ExtRat alpha = ExtRat::infinity();
  if (rng.chance(1, 4)) {
    alpha = ExtRat(cursor + small_positive(rng));
  } else if (!pieces.empty() && rng.chance(1, 8)) {
    pieces.back().b = ExtRat::infinity();
  }
  return StepFunction::make(std::move(pieces), tail, alpha);
}

StepFunction random_compact_step(Rng& rng, int max_pieces) {
  const int n = static_cast<int>(rng.uniform(0, max_pieces));
  std::vector<Piece> pieces;
  Rat cursor = 0;
  for (int i = 0; i < n; ++i) {
    if (rng.chance(1, 3)) cursor += small_positive(rng);
    const Rat a = cursor;
    cursor += small_positive(rng);
    const Rat v = rng.chance(1, 8) ? Rat(0) : small_positive(rng);
    pieces.push_back({a, ExtRat(cursor), v});
  }
  return StepFunction::make(std::move(pieces), Rat(0), ExtRat::infinity());
}

MonotoneStep random_layout(Rng& rng, int max_pieces) {
  return stepcore::rearrange(random_step(rng, max_pieces));
}

SequenceFn random_sequence(Rng& rng, int max_len, const Rat& beta) {
  const int n = static_cast<int>(rng.uniform(0, max_len));
  std::vector<Rat> entries;
  for (int i = 0; i < n; ++i)
    entries.push_back(rng.chance(1, 5) ? Rat(0) : small_positive(rng));
  return SequenceFn::make(std::move(entries), beta);
}

std::vector<std::pair<std::string, shapefn::ShapeFunction>> shape_catalog() {
  using shapefn::ShapeFunction;
  const ExtRat inf = ExtRat::infinity();
  std::vector<std::pair<std::string, ShapeFunction>> out;
  out.emplace_back("t", shapefn::power_shape(Rat(1), Rat(1)));
  out.emplace_back("sqrt", shapefn::power_shape(Rat(1), Rat(1, 2)));
  out.emplace_back("t^2", shapefn::power_shape(Rat(1), Rat(2)));
  out.emplace_back("2t", shapefn::power_shape(Rat(2), Rat(1)));
  out.emplace_back("min(t,1)", shapefn::min_t_one_shape());
  out.emplace_back("max(t,1)",
                   ShapeFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(0)},
                                        {Rat(1), inf, Rat(1), Rat(1)}},
                                       inf));
  // jump at 1: t on (0,1], 2t beyond
  out.emplace_back("jump", ShapeFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)},
                                                {Rat(1), inf, Rat(2), Rat(1)}},
                                               inf));
  // cube-root then linear: concave-ish mix with a kink
  out.emplace_back("mix", ShapeFunction::make({{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1, 3)},
                                               {Rat(1), inf, Rat(1), Rat(1)}},
                                              inf));
  return out;
}

}  // namespace rikit::corpus
