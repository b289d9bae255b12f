#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rikit/rational.hpp"
#include "rikit/shape_function.hpp"
#include "rikit/step_function.hpp"

namespace rikit::corpus {

// splitmix64; deterministic across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  int64_t uniform(int64_t lo, int64_t hi);  // inclusive
  bool chance(uint64_t num, uint64_t den);  // true with probability num/den
  double uniform01();

 private:
  uint64_t state_;
};

// Per-trial stream: trial i of a run with seed s draws from seed s ^ i.
inline uint64_t trial_seed(uint64_t seed, uint64_t index) { return seed ^ index; }

// Rationals with denominator in {1,2,3,4,6,8,12} and numerator 1..16.
Rat small_positive(Rng& rng);

// A step function exercising every representation feature: gaps, zero
// pieces, nonzero tails, bounded domains, an unbounded piece.
stepcore::StepFunction random_step(Rng& rng, int max_pieces);

// Compactly supported on [0, inf): zero tail, bounded support.
stepcore::StepFunction random_compact_step(Rng& rng, int max_pieces);

// An already non-increasing layout (rearrangement of a random step).
stepcore::MonotoneStep random_layout(Rng& rng, int max_pieces);

// Finitely supported non-negative sequence with atom width beta.
stepcore::SequenceFn random_sequence(Rng& rng, int max_len, const Rat& beta);

// Named admissible shapes on (0, inf) used by the default suites.
std::vector<std::pair<std::string, shapefn::ShapeFunction>> shape_catalog();

}  // namespace rikit::corpus
