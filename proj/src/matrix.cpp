#include "mpcmix/matrix.hpp"

#include <algorithm>

#include "mpcmix/error.hpp"

namespace mpcmix {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error("dimension", "matrix must have at least one row and one column");
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error("dimension", "matrix must have at least one row and one column");
  }
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw Error("dimension", "row " + std::to_string(r) + " has " +
                                   std::to_string(rows[r].size()) + " entries, expected " +
                                   std::to_string(m.cols_));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<RationalVector> RationalMatrix::to_rows() const {
  std::vector<RationalVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

RationalVector RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error("dimension", "vector length does not match matrix columns");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

RowEchelon reduced_row_echelon(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;

    if (pivot != lead_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
    }
    const Rational inv = Rational(1) / a(lead_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(lead_row, c).is_zero()) a(r, c) -= factor * a(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

std::optional<RationalVector> null_space_vector(const RationalMatrix& m) {
  const RowEchelon echelon = reduced_row_echelon(m);
  const auto& pivots = echelon.pivot_columns;
  if (pivots.size() == m.cols()) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;

  // x_free = 1, other free variables 0, pivot variables read off the RREF.
  RationalVector c(m.cols());
  c[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    c[pivots[k]] = -echelon.reduced(k, free_col);
  }

  const auto first = std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
  const Rational scale = *first;
  for (auto& x : c) x /= scale;
  return c;
}

}  // namespace mpcmix
