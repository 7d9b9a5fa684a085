#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpcmix/rational.hpp"

namespace mpcmix {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals with at least one row and column.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Builds from a list of rows; throws Error("dimension") if ragged or empty.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RationalVector column(std::size_t c) const;
  std::vector<RationalVector> to_rows() const;

  /// M * x for a column vector x of length cols().
  RationalVector apply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivots are the
/// first nonzero entry found scanning rows top to bottom in the current column.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon reduced_row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// A nonzero c with M c = 0, scaled so its first nonzero entry is 1, or
/// nullopt when M has full column rank. The vector is the null-space basis
/// element belonging to the lowest-index free column of the RREF.
std::optional<RationalVector> null_space_vector(const RationalMatrix& m);

}  // namespace mpcmix
