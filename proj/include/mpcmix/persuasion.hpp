#pragma once

#include <utility>
#include <vector>

#include "mpcmix/decomposition.hpp"
#include "mpcmix/distribution.hpp"
#include "mpcmix/rational.hpp"

namespace mpcmix {

/// Continuous piecewise-linear function on [first knot, last knot]; evaluating
/// outside that interval throws Error("domain").
class PiecewiseLinearFn {
 public:
  using Knot = std::pair<Rational, Rational>;

  /// Needs at least two knots with strictly increasing x, else
  /// Error("invalid-function").
  explicit PiecewiseLinearFn(std::vector<Knot> knots);

  static PiecewiseLinearFn affine(const Rational& slope, const Rational& intercept,
                                  const Rational& lo, const Rational& hi);

  Rational operator()(const Rational& x) const;

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& lower() const { return knots_.front().first; }
  const Rational& upper() const { return knots_.back().first; }
  bool covers(const Rational& lo, const Rational& hi) const { return lower() <= lo && hi <= upper(); }

  /// Nondecreasing, starting at 0 and ending at 1.
  bool is_cdf() const;

  friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

 private:
  std::vector<Knot> knots_;
};

Rational expected_value(const DiscreteDistribution& d, const PiecewiseLinearFn& u);

struct PersuasionSolution {
  SmpcTriple optimum;   // LP optimum over the candidate support
  Rational value;       // its expected utility
  SmpcTriple reduced;   // best component of the decomposition, at most n atoms
  Mixture certificate;  // decomposition of optimum
  bool knot_complete = false;  // every knot of u inside the prior's hull is a candidate
};

/// Maximizes E_Q[u] over contractions Q of the prior whose atoms lie in the
/// candidate set, then reduces the optimum to at most n atoms.
///
/// Preconditions (Error("precondition") otherwise): candidates strictly
/// increasing, inside [a_1, a_n] and containing every prior atom; u defined on
/// [a_1, a_n].
PersuasionSolution solve_linear_persuasion(const DiscreteDistribution& prior,
                                           const PiecewiseLinearFn& utility,
                                           const RationalVector& candidates);

struct ReducedSupport {
  SmpcTriple best;
  Mixture certificate;
};

/// Decomposes the triple and keeps the component with the largest E[u]
/// (first in mixture order on ties).
ReducedSupport reduce_support(const SmpcTriple& triple, const PiecewiseLinearFn& utility);

/// Win probability of a deviation against one atomless opponent with the
/// given cdf: sum_j q_j G(b_j).
Rational deviation_payoff(const DiscreteDistribution& deviation, const PiecewiseLinearFn& opponent_cdf);

struct DeviationCheck {
  Rational max_payoff;
  SmpcTriple witness;  // an achieving contraction with at most n atoms
  bool profitable = false;  // max_payoff > equilibrium value
  bool knot_complete = false;
};

/// Best response of one seller to an opponent playing opponent_cdf, over
/// contractions of the prior supported on candidates plus the cdf's knots.
DeviationCheck check_no_profitable_deviation(const DiscreteDistribution& prior,
                                             const PiecewiseLinearFn& opponent_cdf,
                                             const Rational& equilibrium_value,
                                             const RationalVector& candidates);

/// Splits a pure-strategy distribution over posterior means into a mixture of
/// strategies with at most n atoms inducing the same distribution.
Mixture construct_mixed_equilibrium(const SmpcTriple& pure_strategy);

/// Payoff of each mixture component against the opponent cdf.
std::vector<Rational> component_payoffs(const Mixture& mixture, const PiecewiseLinearFn& opponent_cdf);

}  // namespace mpcmix
