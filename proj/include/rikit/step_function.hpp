#pragma once

#include <utility>
#include <vector>

#include "rikit/extended.hpp"

namespace rikit::stepcore {

// One constant piece: value v on [a, b).
struct Piece {
  Rat a;
  ExtRat b;
  Rat v;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Finitely-valued non-negative function on ([0, alpha), Lebesgue): the listed
// pieces, and `tail` on the rest of the domain. Canonical form is enforced on
// construction: pieces sorted and disjoint, nonempty, values differing from
// the tail, touching equal-valued pieces merged, and at most one unbounded
// piece (only when alpha is infinite).
class StepFunction {
 public:
  StepFunction() = default;  // zero function on [0, inf)

  static StepFunction make(std::vector<Piece> pieces, Rat tail, ExtRat alpha);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rat& tail() const { return tail_; }
  const ExtRat& alpha() const { return alpha_; }

  Rat value_at(const Rat& t) const;  // t in [0, alpha)
  bool is_zero() const { return pieces_.empty() && tail_ == 0; }
  // Least M with f = tail on [M, alpha); zero function gives 0.
  Rat support_bound() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Piece> pieces_;
  Rat tail_ = 0;
  ExtRat alpha_ = ExtRat::infinity();
};

// Non-increasing right-continuous step layout on [0, alpha): value steps[i].v
// on [steps[i].T, steps[i+1].T), with the final entry's value extending to
// alpha; that final value is duplicated in `tail`. Values strictly decrease.
// Values are extended rationals so the same type carries distribution
// functions, which are +infinity below an essential level.
class MonotoneStep {
 public:
  struct Step {
    Rat T;
    ExtRat v;

    friend bool operator==(const Step&, const Step&) = default;
  };

  MonotoneStep() = default;  // identically 0 on [0, inf)

  static MonotoneStep make(std::vector<Step> steps, ExtRat tail, ExtRat alpha);

  const std::vector<Step>& steps() const { return steps_; }
  const ExtRat& tail() const { return tail_; }
  const ExtRat& alpha() const { return alpha_; }

  ExtRat value_at(const Rat& t) const;  // t in [0, alpha)
  bool finite_values() const;
  bool is_zero() const { return steps_.empty() && tail_.is_zero(); }
  // Start of the final (tail-valued) stretch.
  Rat settle_point() const;

  // Same function as a StepFunction; requires finite values.
  StepFunction to_step_function() const;

  friend bool operator==(const MonotoneStep&, const MonotoneStep&) = default;

 private:
  std::vector<Step> steps_;
  ExtRat tail_;
  ExtRat alpha_ = ExtRat::infinity();
};

// Piecewise form of the running-average function t -> (A + v*(t - T)) / t on
// [T, next T), where A is the integral of the underlying layout up to T. The
// last piece extends to +infinity.
class MaximalFunction {
 public:
  struct Segment {
    Rat T;
    Rat A;
    Rat v;

    friend bool operator==(const Segment&, const Segment&) = default;
  };

  static MaximalFunction make(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  Rat value_at(const Rat& t) const;  // t > 0

 private:
  std::vector<Segment> segments_;
};

// Finitely supported non-negative sequence with atom width beta: entry n is
// carried by the block [beta*n, beta*(n+1)).
class SequenceFn {
 public:
  SequenceFn() : beta_(1) {}

  static SequenceFn make(std::vector<Rat> entries, Rat beta);

  const std::vector<Rat>& entries() const { return entries_; }
  const Rat& beta() const { return beta_; }
  Rat at(size_t n) const { return n < entries_.size() ? entries_[n] : Rat(0); }
  size_t size() const { return entries_.size(); }

  friend bool operator==(const SequenceFn&, const SequenceFn&) = default;

 private:
  std::vector<Rat> entries_;
  Rat beta_;
};

// Non-increasing rearrangement onto [0, alpha).
MonotoneStep rearrange(const StepFunction& f);

// Distribution function s -> measure{f > s}, a non-increasing step function of
// the level s on [0, inf); the value is +infinity below any level carried by
// an infinite-measure set.
MonotoneStep distribution(const StepFunction& f);
MonotoneStep distribution(const MonotoneStep& fstar);

// Running average t -> (1/t) * integral of fstar over [0, t].
MaximalFunction maximal(const MonotoneStep& fstar);

// s -> f(t*s); requires alpha infinite and t > 0.
StepFunction dilate(const StepFunction& f, const Rat& t);

ExtRat integrate(const StepFunction& f);
ExtRat integrate(const StepFunction& f, const Rat& from, const ExtRat& to);
ExtRat integrate(const MonotoneStep& fstar, const Rat& from, const ExtRat& to);

// Exact integral of the pointwise product; domains must agree.
ExtRat integrate_product(const StepFunction& f, const StepFunction& g);

StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, const Rat& c);

// f * chi_[0, T): zero from T on (tail regions inside [0, T) materialize).
StepFunction truncate(const StepFunction& f, const Rat& T);

// Truncation windows used by the amalgam norm: [0,1) and [1, alpha).
enum class Window { Local, Global };
StepFunction restrict_window(const MonotoneStep& fstar, Window window);

// The step realization of a sequence: entry n on [beta*n, beta*(n+1)).
StepFunction realize(const SequenceFn& g);

SequenceFn sort_descending(const SequenceFn& g);

}  // namespace rikit::stepcore
