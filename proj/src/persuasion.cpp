#include "mpcmix/persuasion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mpcmix/error.hpp"
#include "mpcmix/lp.hpp"

namespace mpcmix {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error("precondition", message);
}

void check_candidates(const DiscreteDistribution& prior, const RationalVector& candidates) {
  require(!candidates.empty(), "candidate set is empty");
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    require(candidates[j - 1] < candidates[j], "candidates must be strictly increasing");
  }
  const Rational& lo = prior.atoms().front();
  const Rational& hi = prior.atoms().back();
  require(lo <= candidates.front() && candidates.back() <= hi,
          "candidates must lie within the prior's support hull");
  for (const Rational& a : prior.atoms()) {
    require(std::binary_search(candidates.begin(), candidates.end(), a),
            "candidates must include every prior atom (missing " + a.to_string() + ")");
  }
}

bool knots_covered(const DiscreteDistribution& prior, const PiecewiseLinearFn& fn,
                   const RationalVector& candidates) {
  const Rational& lo = prior.atoms().front();
  const Rational& hi = prior.atoms().back();
  for (const auto& [x, y] : fn.knots()) {
    if (x < lo || x > hi) continue;
    if (!std::binary_search(candidates.begin(), candidates.end(), x)) return false;
  }
  return true;
}

}  // namespace

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw Error("invalid-function", "need at least two knots");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k - 1].first < knots_[k].first)) {
      throw Error("invalid-function", "knot abscissae must be strictly increasing");
    }
  }
}

PiecewiseLinearFn PiecewiseLinearFn::affine(const Rational& slope, const Rational& intercept,
                                            const Rational& lo, const Rational& hi) {
  return PiecewiseLinearFn({{lo, slope * lo + intercept}, {hi, slope * hi + intercept}});
}

Rational PiecewiseLinearFn::operator()(const Rational& x) const {
  if (x < lower() || x > upper()) {
    throw Error("domain", "x = " + x.to_string() + " is outside [" + lower().to_string() + ", " +
                              upper().to_string() + "]");
  }
  const auto hi = std::lower_bound(knots_.begin(), knots_.end(), x,
                                   [](const Knot& k, const Rational& v) { return k.first < v; });
  if (hi->first == x) return hi->second;
  const auto lo = hi - 1;
  const Rational t = (x - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

bool PiecewiseLinearFn::is_cdf() const {
  if (knots_.front().second != 0 || knots_.back().second != 1) return false;
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (knots_[k].second < knots_[k - 1].second) return false;
  }
  return true;
}

Rational expected_value(const DiscreteDistribution& d, const PiecewiseLinearFn& u) {
  Rational total;
  for (std::size_t j = 0; j < d.size(); ++j) total += d.weights()[j] * u(d.atoms()[j]);
  return total;
}

PersuasionSolution solve_linear_persuasion(const DiscreteDistribution& prior,
                                           const PiecewiseLinearFn& utility,
                                           const RationalVector& candidates) {
  check_candidates(prior, candidates);
  require(utility.covers(prior.atoms().front(), prior.atoms().back()),
          "utility must be defined on the prior's support hull");

  const std::size_t n = prior.size();
  const std::size_t k = candidates.size();
  const auto var = [k](std::size_t i, std::size_t j) { return i * k + j; };

  RationalVector u_at(k);
  for (std::size_t j = 0; j < k; ++j) u_at[j] = utility(candidates[j]);

  StandardFormLP lp{RationalVector(n * k), RationalMatrix(n + k, n * k), RationalVector(n + k),
                    std::vector<ConstraintSense>(n + k, ConstraintSense::eq)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& p = prior.weights()[i];
    for (std::size_t j = 0; j < k; ++j) {
      lp.objective[var(i, j)] = p * u_at[j];
      lp.constraints(i, var(i, j)) = 1;
      // Column j must have barycenter b_j: sum_i p_i (a_i - b_j) F_ij = 0.
      lp.constraints(n + j, var(i, j)) = p * (prior.atoms()[i] - candidates[j]);
    }
    lp.rhs[i] = 1;
  }

  const LPOutcome outcome = solve(lp);
  if (outcome.status != LPStatus::optimal) {
    // Full disclosure is always feasible and the objective is bounded.
    throw std::logic_error("persuasion LP did not reach an optimum");
  }

  RationalMatrix f(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) f(i, j) = outcome.solution[var(i, j)];
  }
  SmpcTriple optimum = apply_transition(prior, TransitionMatrix(std::move(f)));
  ReducedSupport reduced = reduce_support(optimum, utility);
  return {std::move(optimum), outcome.value, std::move(reduced.best),
          std::move(reduced.certificate), knots_covered(prior, utility, candidates)};
}

ReducedSupport reduce_support(const SmpcTriple& triple, const PiecewiseLinearFn& utility) {
  Mixture certificate = decompose_full(triple);
  std::size_t best = 0;
  Rational best_value;
  for (std::size_t k = 0; k < certificate.components.size(); ++k) {
    Rational value = expected_value(certificate.components[k].component.target(), utility);
    if (k == 0 || value > best_value) {
      best = k;
      best_value = std::move(value);
    }
  }
  SmpcTriple chosen = certificate.components[best].component;
  return {std::move(chosen), std::move(certificate)};
}

Rational deviation_payoff(const DiscreteDistribution& deviation, const PiecewiseLinearFn& opponent_cdf) {
  require(opponent_cdf.is_cdf(), "opponent strategy is not a cdf rising from 0 to 1");
  return expected_value(deviation, opponent_cdf);
}

DeviationCheck check_no_profitable_deviation(const DiscreteDistribution& prior,
                                             const PiecewiseLinearFn& opponent_cdf,
                                             const Rational& equilibrium_value,
                                             const RationalVector& candidates) {
  require(opponent_cdf.is_cdf(), "opponent strategy is not a cdf rising from 0 to 1");
  const Rational& lo = prior.atoms().front();
  const Rational& hi = prior.atoms().back();
  std::set<Rational> support(candidates.begin(), candidates.end());
  for (const auto& [x, y] : opponent_cdf.knots()) {
    if (lo <= x && x <= hi) support.insert(x);
  }
  const RationalVector merged(support.begin(), support.end());

  PersuasionSolution solution = solve_linear_persuasion(prior, opponent_cdf, merged);
  const bool profitable = solution.value > equilibrium_value;
  return {std::move(solution.value), std::move(solution.reduced), profitable, solution.knot_complete};
}

Mixture construct_mixed_equilibrium(const SmpcTriple& pure_strategy) {
  Mixture mixture = decompose_full(pure_strategy);
  if (recompose(mixture) != pure_strategy.target()) {
    throw std::logic_error("mixture does not reproduce the pure strategy");
  }
  return mixture;
}

std::vector<Rational> component_payoffs(const Mixture& mixture, const PiecewiseLinearFn& opponent_cdf) {
  std::vector<Rational> out;
  out.reserve(mixture.components.size());
  for (const auto& item : mixture.components) {
    out.push_back(deviation_payoff(item.component.target(), opponent_cdf));
  }
  return out;
}

}  // namespace mpcmix
