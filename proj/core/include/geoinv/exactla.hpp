#pragma once

#include "geoinv/sparse_matrix.hpp"

#include <span>
#include <vector>

namespace geoinv {

/// Exact integer basis of a matrix null space. Each vector is primitive
/// (gcd 1) with its first nonzero entry positive, carries a zero at every
/// other vector's defining free column, and the basis is sorted by that
/// column. Identical inputs produce bitwise-identical output.
struct KernelBasis {
  int width = 0;
  std::vector<std::vector<Int>> vectors;
  std::vector<int> leads;  // defining free column per vector, ascending

  int dimension() const { return static_cast<int>(vectors.size()); }
  bool contains(std::span<const Rat> v) const;
  bool contains(std::span<const Int> v) const;
};

/// Vertical concatenation of the transposes of `ops`, with `extra_rows`
/// (cleared to integers by common-denominator scaling) stacked on top.
/// All ops must share their row count, which becomes the stacked width.
SparseIntMatrix stack_transposed(std::span<const SparseIntMatrix> ops,
                                 const std::vector<std::vector<Rat>>& extra_rows = {});

/// Removes all-zero rows; the kernel is unchanged.
SparseIntMatrix prune_zero_rows(const SparseIntMatrix& m);

/// Exact rational null space, canonicalized per KernelBasis. Fraction-free
/// elimination over big integers; pivot is the largest-magnitude entry in
/// the current column, ties to the lowest row index.
KernelBasis rational_kernel(const SparseIntMatrix& m);

bool same_span(const KernelBasis& a, const KernelBasis& b);

/// Sums the columns of each group; groups must partition [0, cols).
/// Solving the collapsed system searches kernel vectors that are constant
/// on every group (the orbit-reduction preconditioner).
SparseIntMatrix collapse_columns(const SparseIntMatrix& m, const std::vector<std::vector<int>>& groups);

/// Expands a collapsed vector back to full width (one value per group).
std::vector<Int> expand_collapsed(std::span<const Int> reduced,
                                  const std::vector<std::vector<int>>& groups, int width);

}  // namespace geoinv
