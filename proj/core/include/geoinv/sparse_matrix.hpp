#pragma once

#include "geoinv/numeric.hpp"

#include <span>
#include <vector>

namespace geoinv {

/// Exact integer sparse matrix. Rows hold (column, value) pairs ordered by
/// column; zero values are never stored.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long nnz() const;

  /// Accumulates `v` into entry (r, c); the entry is erased if the sum is 0.
  void add(int r, int c, const Int& v);
  const Int* find(int r, int c) const;
  const std::vector<std::pair<int, Int>>& row(int r) const;
  bool row_empty(int r) const { return row(r).empty(); }

  SparseIntMatrix transposed() const;
  std::vector<std::vector<Int>> dense() const;
  std::vector<Rat> apply(std::span<const Rat> x) const;   // y = A x
  std::vector<Int> apply(std::span<const Int> x) const;

  bool operator==(const SparseIntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, Int>>> data_;
};

/// Row submatrix in the given row order.
SparseIntMatrix select_rows(const SparseIntMatrix& m, std::span<const int> rows);

}  // namespace geoinv
