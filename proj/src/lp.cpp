#include "mpcmix/lp.hpp"

#include <limits>

#include "mpcmix/error.hpp"

namespace mpcmix {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), data_(rows, RationalVector(cols + 1)), basis_(rows, kNone) {}

  std::size_t rows() const { return data_.size(); }
  Rational& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  Rational& rhs(std::size_t r) { return data_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t row, std::size_t col) {
    auto& prow = data_[row];
    const Rational inv = Rational(1) / prow[col];
    for (auto& x : prow) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r < data_.size(); ++r) {
      if (r != row) eliminate(data_[r], prow, col);
    }
    eliminate(cost_, prow, col);
    basis_[row] = col;
  }

  void erase_row(std::size_t row) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  // Loads weights w (length cols) and prices out the basic columns so that
  // cost_[j] is the reduced cost and cost_[cols] is minus the objective value.
  void set_objective(const RationalVector& weights) {
    cost_.assign(cols_ + 1, Rational());
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = weights[j];
    for (std::size_t r = 0; r < data_.size(); ++r) eliminate(cost_, data_[r], basis_[r]);
  }

  Rational value() const { return -cost_[cols_]; }

  // Runs Bland-rule iterations over the columns allowed[j] == true.
  LPStatus optimize(const std::vector<bool>& allowed, std::size_t& iterations) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return LPStatus::optimal;

      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < data_.size(); ++r) {
        const Rational& a = data_[r][enter];
        if (a.sign() <= 0) continue;
        Rational ratio = data_[r][cols_] / a;
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return LPStatus::unbounded;
      pivot(leave, enter);
      ++iterations;
    }
  }

 private:
  static void eliminate(RationalVector& target, const RationalVector& pivot_row, std::size_t col) {
    if (target[col].is_zero()) return;
    const Rational factor = target[col];
    for (std::size_t c = 0; c < target.size(); ++c) {
      if (!pivot_row[c].is_zero()) target[c] -= factor * pivot_row[c];
    }
  }

  std::size_t cols_;
  std::vector<RationalVector> data_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
};

}  // namespace

LPOutcome solve(const StandardFormLP& lp) {
  const std::size_t m = lp.constraints.rows();
  const std::size_t d = lp.constraints.cols();
  if (lp.objective.size() != d || lp.rhs.size() != m || lp.sense.size() != m) {
    throw Error("dimension", "LP objective, rhs and sense must match the constraint matrix");
  }

  // Normalize to nonnegative right-hand sides.
  std::vector<ConstraintSense> sense = lp.sense;
  std::vector<bool> flipped(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    if (lp.rhs[r].sign() < 0) {
      flipped[r] = true;
      if (sense[r] == ConstraintSense::le) {
        sense[r] = ConstraintSense::ge;
      } else if (sense[r] == ConstraintSense::ge) {
        sense[r] = ConstraintSense::le;
      }
    }
  }

  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (auto s : sense) {
    if (s != ConstraintSense::eq) ++n_slack;
    if (s != ConstraintSense::le) ++n_art;
  }
  const std::size_t art_begin = d + n_slack;
  const std::size_t cols = art_begin + n_art;

  Tableau t(m, cols);
  std::size_t next_slack = d;
  std::size_t next_art = art_begin;
  for (std::size_t r = 0; r < m; ++r) {
    const Rational sign = flipped[r] ? Rational(-1) : Rational(1);
    for (std::size_t c = 0; c < d; ++c) t.at(r, c) = sign * lp.constraints(r, c);
    t.rhs(r) = sign * lp.rhs[r];
    if (sense[r] == ConstraintSense::le) {
      t.at(r, next_slack) = 1;
      t.basis(r) = next_slack++;
    } else {
      if (sense[r] == ConstraintSense::ge) t.at(r, next_slack++) = -1;
      t.at(r, next_art) = 1;
      t.basis(r) = next_art++;
    }
  }

  LPOutcome out;
  std::vector<bool> allowed(cols, true);

  if (n_art > 0) {
    RationalVector phase1(cols);
    for (std::size_t j = art_begin; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed, out.iterations);
    if (t.value().sign() < 0) {
      out.status = LPStatus::infeasible;
      return out;
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t r = t.rows(); r-- > 0;) {
      if (t.basis(r) < art_begin) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (!t.at(r, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.erase_row(r);
      } else {
        t.pivot(r, col);
        ++out.iterations;
      }
    }
    for (std::size_t j = art_begin; j < cols; ++j) allowed[j] = false;
  }

  RationalVector phase2(cols);
  for (std::size_t j = 0; j < d; ++j) phase2[j] = lp.objective[j];
  t.set_objective(phase2);
  if (t.optimize(allowed, out.iterations) == LPStatus::unbounded) {
    out.status = LPStatus::unbounded;
    return out;
  }

  out.status = LPStatus::optimal;
  out.solution.assign(d, Rational());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis(r) < d) out.solution[t.basis(r)] = t.rhs(r);
  }
  for (std::size_t j = 0; j < d; ++j) out.value += lp.objective[j] * out.solution[j];
  return out;
}

std::optional<TransitionMatrix> find_witness(const DiscreteDistribution& source,
                                             const DiscreteDistribution& target) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  const auto var = [m](std::size_t i, std::size_t j) { return i * m + j; };

  StandardFormLP lp{RationalVector(n * m), RationalMatrix(n + 2 * m, n * m), {}, {}};
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i, ++row) {
    for (std::size_t j = 0; j < m; ++j) lp.constraints(row, var(i, j)) = 1;
    lp.rhs.push_back(1);
  }
  for (std::size_t j = 0; j < m; ++j, ++row) {
    for (std::size_t i = 0; i < n; ++i) lp.constraints(row, var(i, j)) = source.weights()[i];
    lp.rhs.push_back(target.weights()[j]);
  }
  for (std::size_t j = 0; j < m; ++j, ++row) {
    for (std::size_t i = 0; i < n; ++i) {
      lp.constraints(row, var(i, j)) = source.weights()[i] * source.atoms()[i];
    }
    lp.rhs.push_back(target.weights()[j] * target.atoms()[j]);
  }
  lp.sense.assign(row, ConstraintSense::eq);

  const LPOutcome outcome = solve(lp);
  if (outcome.status != LPStatus::optimal) return std::nullopt;

  RationalMatrix f(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) f(i, j) = outcome.solution[var(i, j)];
  }
  return TransitionMatrix(std::move(f));
}

}  // namespace mpcmix
