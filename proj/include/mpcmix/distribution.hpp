#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mpcmix/matrix.hpp"
#include "mpcmix/rational.hpp"

namespace mpcmix {

/// Finitely supported probability measure on the real line: strictly
/// increasing atoms carrying positive weights that sum to exactly one.
class DiscreteDistribution {
 public:
  /// Throws Error("invalid-distribution") when any invariant fails.
  DiscreteDistribution(RationalVector atoms, RationalVector weights);

  static DiscreteDistribution point_mass(const Rational& x);

  std::size_t size() const { return atoms_.size(); }
  const RationalVector& atoms() const { return atoms_; }
  const RationalVector& weights() const { return weights_; }

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  RationalVector atoms_;
  RationalVector weights_;
};

/// Row-stochastic matrix with entries in [0, 1]. Rows index source atoms and
/// columns index target atoms.
class TransitionMatrix {
 public:
  /// Throws Error("entry-range") or Error("row-sum").
  explicit TransitionMatrix(RationalMatrix matrix);

  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
  const RationalMatrix& matrix() const { return matrix_; }

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  RationalMatrix matrix_;
};

/// A source P, garbling F and target Q with pF = q and (pa)F = qb exactly.
/// Instances only come out of validate_smpc and apply_transition.
class SmpcTriple {
 public:
  const DiscreteDistribution& source() const { return source_; }
  const TransitionMatrix& transition() const { return transition_; }
  const DiscreteDistribution& target() const { return target_; }

  friend bool operator==(const SmpcTriple&, const SmpcTriple&) = default;

 private:
  friend SmpcTriple validate_smpc(const DiscreteDistribution&, const TransitionMatrix&,
                                  const DiscreteDistribution&);
  SmpcTriple(DiscreteDistribution source, TransitionMatrix transition, DiscreteDistribution target)
      : source_(std::move(source)), transition_(std::move(transition)), target_(std::move(target)) {}

  DiscreteDistribution source_;
  TransitionMatrix transition_;
  DiscreteDistribution target_;
};

/// Certifies (P, F, Q). Errors, checked in this order: "dimension", then for
/// each column j the weight identity ("weight-identity") and the barycenter
/// identity ("barycenter-identity"). Messages carry the 1-based column.
SmpcTriple validate_smpc(const DiscreteDistribution& source, const TransitionMatrix& transition,
                         const DiscreteDistribution& target);

/// Pushes P through F. Columns of zero mass are dropped, columns with equal
/// barycenters are summed, and the surviving columns are ordered by
/// barycenter so the target atoms increase.
SmpcTriple apply_transition(const DiscreteDistribution& source, const TransitionMatrix& transition);

Rational mean(const DiscreteDistribution& d);

/// E[u(X)] for a function given by its values at the atoms.
Rational expectation(const DiscreteDistribution& d, const RationalVector& values_at_atoms);

/// Result of the convex-order test; reason is empty when holds is true.
struct MpcCheck {
  bool holds = false;
  std::string reason;
  std::optional<Rational> violation_point;
};

/// Equal means and E_Q[(t - X)^+] <= E_P[(t - X)^+] at every atom of P and Q.
MpcCheck check_mpc(const DiscreteDistribution& source, const DiscreteDistribution& target);

inline bool is_mpc(const DiscreteDistribution& source, const DiscreteDistribution& target) {
  return check_mpc(source, target).holds;
}

}  // namespace mpcmix
