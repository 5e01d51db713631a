#pragma once

#include "geoinv/exactla.hpp"
#include "geoinv/generators.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace geoinv {

enum class InvariantClass { scale, rotation, affine };
std::string_view to_string(InvariantClass c);
InvariantClass invariant_class_from(std::string_view s);

/// Entries of a descriptor whose per-coordinate weighted exponent sums
/// sum_i (p_j^i + 1) k_i agree for every coordinate j; dividing any of them
/// by mu_0^d gives a non-uniform-scale invariant.
struct ScaleSelection {
  BasisDescriptor desc;
  std::vector<int> selected;  // positions into desc.entries(), ascending
  int d = 0;                  // common weighted sum (0 when nothing selected)
};

/// Rational-coefficient polynomial in central moments over a mu_0 power.
struct InvariantPolynomial {
  int dim = 0;
  InvariantClass cls = InvariantClass::rotation;
  std::vector<std::pair<MonomialEntry, Rat>> terms;  // canonical entry order
  int denominator_power = 0;
  std::vector<std::pair<int, int>> desc_parts;  // provenance

  int max_order() const;
  bool operator==(const InvariantPolynomial&) const = default;
};

/// Pipeline counters surfaced by the CLI.
struct GenerationReport {
  int basis_size = 0;
  int selected = -1;  // -1 when the class has no scale selection step
  int d = 0;
  int pruned_rows = 0, pruned_cols = 0;
  int kernel_dim = 0;
};

ScaleSelection select_scale_invariant(const BasisDescriptor& desc);

/// One single-term invariant per selected entry, denominator mu_0^d.
std::vector<InvariantPolynomial> scale_invariants(const BasisDescriptor& desc);

/// Kernel of the stacked transposed plane operators, one polynomial per
/// kernel vector.
std::vector<InvariantPolynomial> rotation_invariants(const BasisDescriptor& desc,
                                                     PlaneSet planes = PlaneSet::fan,
                                                     GenerationReport* report = nullptr);

/// Rotation-invariant combinations of the scale-selected entries; empty when
/// the selection is empty. Denominator mu_0^d.
std::vector<InvariantPolynomial> affine_invariants(const BasisDescriptor& desc,
                                                   PlaneSet planes = PlaneSet::fan,
                                                   GenerationReport* report = nullptr);

/// Coefficient vector of the product a*b expanded in the target basis.
/// Throws basis-mismatch when an expanded term is absent from the target.
std::vector<Rat> expand_product(const InvariantPolynomial& a, const InvariantPolynomial& b,
                                const BasisDescriptor& target);

/// Kernel of the class's operator stack augmented with the known rows
/// (full-basis width); every returned invariant has a coefficient vector
/// orthogonal to each known row.
std::vector<InvariantPolynomial> independent_invariants(const BasisDescriptor& desc,
                                                        const std::vector<std::vector<Rat>>& known,
                                                        InvariantClass cls,
                                                        PlaneSet planes = PlaneSet::fan,
                                                        GenerationReport* report = nullptr);

/// Orbits of the selected entries under all coordinate permutations, each
/// group ascending, groups ordered by smallest member. Positions refer to
/// the selection, not the full basis.
std::vector<std::vector<int>> orbit_partition(const ScaleSelection& selection);

/// Dense coefficient vector of the polynomial over the target basis.
std::vector<Rat> coefficient_vector(const InvariantPolynomial& inv, const BasisDescriptor& target);

}  // namespace geoinv
