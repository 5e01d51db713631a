#pragma once

#include "geoinv/multiindex.hpp"
#include "geoinv/sparse_matrix.hpp"

#include <span>
#include <vector>

namespace geoinv {

/// Coordinate plane spanned by two axes, 1-based with a < b. An n-space has
/// n(n-1)/2 of them, one per independent rotational speed.
struct RotationPlane {
  int a = 1, b = 2;
  RotationPlane() = default;
  RotationPlane(int a_, int b_);
  bool operator==(const RotationPlane&) const = default;
  std::string str() const;  // "(1,2)"
};

std::vector<RotationPlane> rotation_planes(int dim);
/// The n-1 planes containing the first axis; they generate all rotations.
std::vector<RotationPlane> plane_fan(int dim);

enum class PlaneSet { fan, all };
std::vector<RotationPlane> planes_for(int dim, PlaneSet set);

/// Antisymmetric generator E for a unit rotational speed in the oriented
/// plane (a, b): E[b-1][a-1] = +1, E[a-1][b-1] = -1, zero elsewhere
/// (row-major). Swapping the orientation negates the matrix. 2D plane (1,2)
/// gives [[0,-1],[1,0]], i.e. point velocity xdot = E x.
std::vector<int> generator_sign_convention(int a, int b, int dim);
std::vector<int> generator_sign_convention(const RotationPlane& plane, int dim);

/// Integer linear combination of moments of one common order.
struct LinearCombo {
  std::vector<std::pair<MultiIndex, Int>> terms;
};

/// Time derivative of a single moment under a unit rotational speed in the
/// plane: mdot_p = sum_ij p_i l_ij m_{..p_i-1..p_j+1..}. Terms with p_i = 0
/// drop out; the result preserves the total order.
LinearCombo derivative_single(const MultiIndex& idx, const RotationPlane& plane);

/// Same derivative against an arbitrary antisymmetric integer generator
/// (row-major dim x dim); used for cross-checks and orientation tests.
LinearCombo derivative_with_generator(const MultiIndex& idx, std::span<const int> generator, int dim);

/// Matrix M with vdot = M v for the descriptor's entries under a unit
/// rotational speed in the plane; obtained by the product rule over each
/// entry's factors. Rows and columns follow the descriptor's canonical order.
SparseIntMatrix operator_on_basis(const BasisDescriptor& desc, const RotationPlane& plane);

/// Rectangular variant: only the rows for the listed entry positions.
SparseIntMatrix operator_on_rows(const BasisDescriptor& desc, std::span<const int> rows,
                                 const RotationPlane& plane);

/// Process-wide operator cache keyed by (descriptor signature, plane);
/// safe for concurrent use. The returned reference stays valid.
const SparseIntMatrix& cached_operator(const BasisDescriptor& desc, const RotationPlane& plane);

}  // namespace geoinv
