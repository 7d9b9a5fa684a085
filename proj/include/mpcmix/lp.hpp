#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mpcmix/distribution.hpp"
#include "mpcmix/matrix.hpp"
#include "mpcmix/rational.hpp"

namespace mpcmix {

enum class ConstraintSense { eq, le, ge };

/// maximize objective . x  subject to  constraints x (sense) rhs,  x >= 0.
struct StandardFormLP {
  RationalVector objective;
  RationalMatrix constraints;
  RationalVector rhs;
  std::vector<ConstraintSense> sense;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  RationalVector solution;  // set when optimal
  Rational value;           // set when optimal
  std::size_t iterations = 0;
};

/// Exact two-phase dense-tableau simplex. Entering and leaving variables follow
/// Bland's rule (lowest index), so the method terminates on degenerate input.
LPOutcome solve(const StandardFormLP& lp);

/// A row-stochastic F with pF = q and (pa)F = qb, found by a feasibility LP,
/// or nullopt when Q is not a contraction of P.
std::optional<TransitionMatrix> find_witness(const DiscreteDistribution& source,
                                             const DiscreteDistribution& target);

}  // namespace mpcmix
