#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mpcmix/distribution.hpp"
#include "mpcmix/persuasion.hpp"

namespace mpcmix {

/// Seeded generator of small exact instances. Atoms are distinct fractions
/// k/d with d <= 6 and |k| <= 20; weights and matrix rows are random positive
/// integers normalized to sum to one.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);

  Rational random_atom();
  DiscreteDistribution distribution(std::size_t n);

  /// Row-stochastic n x m matrix. Each entry is zero with probability
  /// zero_chance (every row keeps at least one positive entry).
  TransitionMatrix transition(std::size_t n, std::size_t m, double zero_chance = 0.3);

  /// P from distribution(n) pushed through transition(n, m); merging may
  /// leave the target with fewer than m atoms.
  SmpcTriple smpc(std::size_t n, std::size_t m, double zero_chance = 0.3);

  /// Piecewise-linear function with the given number of knots spanning
  /// [lo, hi], values k/d with |k| <= 20.
  PiecewiseLinearFn function(const Rational& lo, const Rational& hi, std::size_t knots);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mpcmix
