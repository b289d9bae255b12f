#pragma once

#include <optional>

#include "rikit/space.hpp"

namespace rikit::represent {

// Entry n is the average of the layout over [beta n, beta (n+1)). The layout
// must settle to zero (finitely supported output); partial final blocks on a
// bounded domain still divide by beta.
stepcore::SequenceFn block_average(const stepcore::MonotoneStep& fstar, const Rat& beta);

// Entry n averages over the half-shifted block [beta n/2, beta (n+1)/2),
// still normalized by beta.
stepcore::SequenceFn shifted_block_average(const stepcore::MonotoneStep& fstar, const Rat& beta);

struct AtomicRepresentation {
  spaces::SpaceSpec seq_spec;               // atomic(beta, inner)
  std::optional<ExtValue> modulus_bound;    // 4 C^2 from the inner defect C
};

AtomicRepresentation representation(const spaces::SpaceSpec& inner, const Rat& beta);

// The norm of f carried through its block-average representation.
ExtValue rep_norm(const AtomicRepresentation& rep, const stepcore::StepFunction& f);

struct IdentityReport {
  ExtValue lhs;  // atomic norm of the sequence
  ExtValue rhs;  // function norm of its realization
  bool exact_equal;
  double rel_gap;
};

// The same value through two code paths: sorting the sequence before
// realizing it, against rearranging the realized function.
IdentityReport verify_identity(const spaces::SpaceSpec& seq_spec, const stepcore::SequenceFn& g);

// Largest observed ratio norm(f+g) / (norm f + norm g) for the represented
// norm over seeded trials.
double rep_modulus_probe(const AtomicRepresentation& rep, int trials, uint64_t seed);

}  // namespace rikit::represent
