#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mpcmix/distribution.hpp"
#include "mpcmix/matrix.hpp"
#include "mpcmix/rational.hpp"

namespace mpcmix {

/// Record of one split. Column indices are zero-based.
///
/// coefficients is the canonical null vector of the transition's columns
/// (first nonzero entry equal to 1). group_a holds the columns with negative
/// coefficients and group_b those with positive ones; j_star and j_star_star
/// are the lowest-index maximizers of |c| within each group.
struct SplitCertificate {
  RationalVector coefficients;
  std::vector<std::size_t> group_a;
  std::vector<std::size_t> group_b;
  std::size_t j_star = 0;
  std::size_t j_star_star = 0;
  Rational alpha;
};

struct Split {
  Rational alpha;
  SmpcTriple left;   // column j_star zeroed
  SmpcTriple right;  // column j_star_star zeroed
  SplitCertificate certificate;
};

struct MixtureComponent {
  Rational weight;
  SmpcTriple component;
};

/// Positive weights summing to one over SMPCs of a common source.
struct Mixture {
  std::vector<MixtureComponent> components;
};

/// Moves column j of the transition onto the others using the null vector c:
/// every column k is rescaled by (1 - c_k / c_j), so column j vanishes and
/// row sums are unchanged. Throws Error("zero-coefficient") if c_j = 0 and
/// Error("out-of-range") if some entry leaves [0, 1], which happens exactly
/// when j does not maximize |c| within its sign group.
TransitionMatrix zero_column(const TransitionMatrix& transition, std::span<const Rational> c,
                             std::size_t j);

/// Writes a component's transition into the column layout of reference, with
/// zero columns at the reference atoms the component does not use. Throws
/// Error("dimension") if a component atom is missing from reference.
RationalMatrix embed_transition(const SmpcTriple& component, const DiscreteDistribution& reference);

/// One two-way split of an SMPC whose transition has linearly dependent
/// columns: T = alpha * left + (1 - alpha) * right, with the identity checked
/// exactly on the embedded matrices before returning. Throws Error("no-split")
/// when the columns are independent.
Split split_once(const SmpcTriple& triple);

/// Repeated splitting until every component has at most as many atoms as the
/// source. Equal components are coalesced; the result is ordered by descending
/// weight, then lexicographically by target atoms.
Mixture decompose_full(const SmpcTriple& triple);

/// The measure sum_k w_k Q_k.
DiscreteDistribution recompose(const Mixture& mixture);

/// sum_k w_k F_k with every F_k embedded in reference's column layout.
RationalMatrix recompose_transition(const Mixture& mixture, const DiscreteDistribution& reference);

/// Outcome of trying to zero each column of an (n+1)-atom SMPC.
struct UniquenessReport {
  std::pair<std::size_t, std::size_t> pair;  // (j_star, j_star_star)
  std::vector<std::size_t> tied;      // also zeroable; vanish together with a pair member
  std::vector<std::size_t> rejected;  // zero_column fails on these
};

/// Requires m = n + 1 and a one-dimensional null space, else
/// Error("precondition"). Attempts zero_column on every column.
UniquenessReport verify_uniqueness(const SmpcTriple& triple);

}  // namespace mpcmix
