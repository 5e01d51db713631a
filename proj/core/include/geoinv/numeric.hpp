#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace geoinv {

// Exact arithmetic used by the operator/kernel pipeline. Coefficients stay
// small in practice, but kernel extraction must be exact, not approximate.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

/// gcd of |entries|, 0 for an all-zero vector.
Int vector_gcd(std::span<const Int> v);

/// Scales a rational vector to a primitive integer vector (gcd 1). The
/// scaling factor is positive, so the direction is preserved.
std::vector<Int> clear_denominators(std::span<const Rat> v);

/// Canonical form of an integer vector: divided by the gcd, first nonzero
/// entry positive. All-zero vectors are returned unchanged.
std::vector<Int> primitive_vector(std::vector<Int> v);

}  // namespace geoinv
