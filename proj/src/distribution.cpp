#include "mpcmix/distribution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mpcmix/error.hpp"

namespace mpcmix {
namespace {

std::string col_label(std::size_t j) { return "column " + std::to_string(j + 1); }

// E[(t - X)^+]
Rational lower_partial_moment(const DiscreteDistribution& d, const Rational& t) {
  Rational total;
  for (std::size_t i = 0; i < d.size() && d.atoms()[i] < t; ++i) {
    total += d.weights()[i] * (t - d.atoms()[i]);
  }
  return total;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(RationalVector atoms, RationalVector weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty()) throw Error("invalid-distribution", "distribution has no atoms");
  if (atoms_.size() != weights_.size()) {
    throw Error("invalid-distribution", "atoms and weights differ in length");
  }
  Rational total;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0 && !(atoms_[i - 1] < atoms_[i])) {
      throw Error("invalid-distribution", "atoms must be strictly increasing (atom " +
                                              std::to_string(i + 1) + ")");
    }
    if (weights_[i].sign() <= 0) {
      throw Error("invalid-distribution",
                  "weight " + std::to_string(i + 1) + " is not positive: " + weights_[i].to_string());
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw Error("invalid-distribution", "weights sum to " + total.to_string() + ", not 1");
  }
}

DiscreteDistribution DiscreteDistribution::point_mass(const Rational& x) {
  return DiscreteDistribution({x}, {Rational(1)});
}

TransitionMatrix::TransitionMatrix(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    Rational total;
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      const Rational& x = matrix_(r, c);
      if (x.sign() < 0 || x > 1) {
        throw Error("entry-range", "entry (" + std::to_string(r + 1) + ", " +
                                          std::to_string(c + 1) + ") = " + x.to_string() +
                                          " is outside [0, 1]");
      }
      total += x;
    }
    if (total != 1) {
      throw Error("row-sum", "row " + std::to_string(r + 1) + " sums to " + total.to_string());
    }
  }
}

SmpcTriple validate_smpc(const DiscreteDistribution& source, const TransitionMatrix& transition,
                         const DiscreteDistribution& target) {
  if (transition.rows() != source.size() || transition.cols() != target.size()) {
    throw Error("dimension", "transition is " + std::to_string(transition.rows()) + "x" +
                                 std::to_string(transition.cols()) + " but source has " +
                                 std::to_string(source.size()) + " atoms and target has " +
                                 std::to_string(target.size()));
  }
  const auto& p = source.weights();
  const auto& a = source.atoms();
  for (std::size_t j = 0; j < target.size(); ++j) {
    Rational mass;
    Rational moment;
    for (std::size_t i = 0; i < source.size(); ++i) {
      const Rational flow = p[i] * transition(i, j);
      mass += flow;
      moment += flow * a[i];
    }
    if (mass != target.weights()[j]) {
      throw Error("weight-identity", "weight identity violated at " + col_label(j) + ": pF = " +
                                         mass.to_string() + ", q = " +
                                         target.weights()[j].to_string());
    }
    const Rational expected = target.weights()[j] * target.atoms()[j];
    if (moment != expected) {
      throw Error("barycenter-identity", "barycenter identity violated at " + col_label(j) +
                                             ": (pa)F = " + moment.to_string() +
                                             ", qb = " + expected.to_string());
    }
  }
  return SmpcTriple(source, transition, target);
}

SmpcTriple apply_transition(const DiscreteDistribution& source, const TransitionMatrix& transition) {
  if (transition.rows() != source.size()) {
    throw Error("dimension", "transition has " + std::to_string(transition.rows()) +
                                 " rows but source has " + std::to_string(source.size()) +
                                 " atoms");
  }
  const std::size_t n = source.size();
  // barycenter -> original columns landing there
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < transition.cols(); ++j) {
    Rational mass;
    Rational moment;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational flow = source.weights()[i] * transition(i, j);
      mass += flow;
      moment += flow * source.atoms()[i];
    }
    if (mass.is_zero()) continue;
    groups[moment / mass].push_back(j);
  }

  RationalMatrix merged(n, groups.size());
  RationalVector atoms;
  RationalVector weights;
  std::size_t out = 0;
  for (const auto& [atom, cols] : groups) {
    Rational mass;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : cols) merged(i, out) += transition(i, j);
      mass += source.weights()[i] * merged(i, out);
    }
    atoms.push_back(atom);
    weights.push_back(mass);
    ++out;
  }
  return validate_smpc(source, TransitionMatrix(std::move(merged)),
                       DiscreteDistribution(std::move(atoms), std::move(weights)));
}

Rational mean(const DiscreteDistribution& d) {
  Rational total;
  for (std::size_t i = 0; i < d.size(); ++i) total += d.weights()[i] * d.atoms()[i];
  return total;
}

Rational expectation(const DiscreteDistribution& d, const RationalVector& values_at_atoms) {
  if (values_at_atoms.size() != d.size()) {
    throw Error("dimension", "expected one value per atom");
  }
  Rational total;
  for (std::size_t i = 0; i < d.size(); ++i) total += d.weights()[i] * values_at_atoms[i];
  return total;
}

MpcCheck check_mpc(const DiscreteDistribution& source, const DiscreteDistribution& target) {
  if (mean(source) != mean(target)) return {false, "mean mismatch", std::nullopt};

  std::set<Rational> points(source.atoms().begin(), source.atoms().end());
  points.insert(target.atoms().begin(), target.atoms().end());
  for (const Rational& t : points) {
    if (lower_partial_moment(target, t) > lower_partial_moment(source, t)) {
      return {false, "integrated cdf of target exceeds source", t};
    }
  }
  return {true, "", std::nullopt};
}

}  // namespace mpcmix
