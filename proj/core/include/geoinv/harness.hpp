#pragma once

#include "geoinv/poly.hpp"
#include "geoinv/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace geoinv {

enum class TransformClass { rotation, scale, affine, translation };
std::string_view to_string(TransformClass c);
TransformClass transform_class_from(std::string_view s);

/// A sampled transform. Rotations satisfy Q^T Q = I to 1e-12 with det +1;
/// scales are diagonal with sigma_j in [0.25, 4]; affine maps are R2*S*R1
/// with det > 0; translations keep the identity matrix and move the offset.
struct TransformSpec {
  TransformClass cls = TransformClass::rotation;
  int dim = 0;
  uint64_t seed = 0;
  std::vector<double> matrix;  // row-major dim x dim
  std::vector<double> offset;  // all zero except for translations
  double det = 1.0;
  // factor matrices kept for the affine recomposition check
  std::vector<double> rot1, scale_diag, rot2;
};

TransformSpec random_transform(int dim, TransformClass cls, uint64_t seed);

/// Coordinates mapped by the matrix (plus offset); every weight is
/// multiplied by |det|, so discrete moments follow the density
/// transformation law of the continuous definition.
PointCloud apply(const TransformSpec& t, const PointCloud& cloud);

/// Centered at the gravity center and scaled to unit RMS radius.
PointCloud normalized_cloud(const PointCloud& cloud);

/// Gaussian cloud with weights in [0.5, 1.5]; deterministic per seed.
PointCloud random_cloud(int dim, int count, uint64_t seed);

struct InvariantCheckRow {
  int index = 0;
  InvariantClass cls = InvariantClass::rotation;
  double max_rel_err = 0.0;
  bool passed = false;
};

struct InvarianceReport {
  TransformClass transform = TransformClass::rotation;
  int trials = 0;
  double tol = 0.0;
  uint64_t seed = 0;
  std::vector<InvariantCheckRow> rows;

  bool all_passed() const;
  /// key=value lines, one per invariant plus a result line; both the human
  /// and the machine format.
  std::string text() const;
};

/// Evaluates every invariant on `trials` seeded transforms of the cloud and
/// reports the max relative error (denominator max(|I|, 1e-12)). The cloud
/// is pre-centered and pre-scaled to unit RMS radius. Throws
/// incompatible-class unless the invariant class is checkable under the
/// transform class (scale under scale; rotation under rotation; affine under
/// rotation, scale, translation and affine).
InvarianceReport check_invariance(std::span<const InvariantPolynomial> invs, const PointCloud& cloud,
                                  TransformClass transform, int trials, double tol, uint64_t seed);

bool classes_compatible(InvariantClass inv, TransformClass transform);

}  // namespace geoinv
