#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace geoinv {

/// Exponent tuple (p1,...,pn) addressing the moment mu_{p1...pn} of an
/// n-dimensional object. Dimension must be >= 2.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int dim);
  static MultiIndex unit(int dim, int axis);  // axis in [0, dim)

  int dim() const { return static_cast<int>(e_.size()); }
  int order() const;
  int operator[](int axis) const { return e_[static_cast<size_t>(axis)]; }
  const std::vector<int>& exponents() const { return e_; }

  /// Moves one unit of exponent from axis `from` to axis `to` (0-based).
  MultiIndex shifted(int from, int to) const;
  /// Coordinate permutation: result[j] = (*this)[perm[j]].
  MultiIndex permuted(std::span<const int> perm) const;

  bool operator==(const MultiIndex&) const = default;
  std::string str() const;  // "(2,0)"

 private:
  std::vector<int> e_;
};

/// Canonical listing order for multi-indices: lower total order first, ties
/// broken by descending graded reverse-lexicographic comparison (so within
/// one order the listing starts at (p,0,...,0) and ends at (0,...,0,p)).
bool canonical_index_less(const MultiIndex& a, const MultiIndex& b);

struct CanonicalIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return canonical_index_less(a, b);
  }
};

/// One monomial over moments: a product of (multi-index, power) factors with
/// power >= 1 and factors held sorted in canonical index order.
class MonomialEntry {
 public:
  MonomialEntry() = default;
  explicit MonomialEntry(std::vector<std::pair<MultiIndex, int>> factors);

  const std::vector<std::pair<MultiIndex, int>>& factors() const { return f_; }
  int degree() const;  // sum of powers

  /// Removes one power of the factor at position `pos` and multiplies by the
  /// index `replacement` instead (the product-rule step).
  MonomialEntry with_factor_replaced(size_t pos, const MultiIndex& replacement) const;
  MonomialEntry times(const MonomialEntry& other) const;
  MonomialEntry permuted(std::span<const int> perm) const;

  bool operator==(const MonomialEntry&) const = default;
  std::string str() const;  // "(2,0)^1 (0,2)^1"

 private:
  std::vector<std::pair<MultiIndex, int>> f_;
};

/// Deterministic entry order: lower total moment order first, ties broken by
/// the lexicographic comparison of the expanded factor sequences under the
/// canonical index order. For a fixed descriptor this coincides with the
/// generation order of `monomial_basis` / `product_basis`.
bool monomial_entry_less(const MonomialEntry& a, const MonomialEntry& b);

struct MonomialEntryLess {
  bool operator()(const MonomialEntry& a, const MonomialEntry& b) const {
    return monomial_entry_less(a, b);
  }
};

long long binomial(int n, int k);

/// All multi-indices of the given total order in canonical order.
/// Length is C(order + dim - 1, dim - 1). Throws invalid-dimension if dim < 2.
std::vector<MultiIndex> enumerate_order(int dim, int order);

/// All degree-`degree` monomials over `base`, i.e. all multisets of size
/// `degree` over the base entries, in canonical order.
std::vector<MonomialEntry> monomial_basis(const std::vector<MultiIndex>& base, int degree);

/// Ordered monomial basis of a moment vector, possibly mixing orders.
class BasisDescriptor {
 public:
  BasisDescriptor() = default;
  /// parts: (order p, degree k) components; sorted ascending on construction.
  BasisDescriptor(int dim, std::vector<std::pair<int, int>> parts);

  int dim() const { return dim_; }
  const std::vector<std::pair<int, int>>& parts() const { return parts_; }
  const std::vector<MonomialEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  std::optional<int> position(const MonomialEntry& e) const;
  /// Highest moment order used by any factor.
  int max_order() const;
  /// Stable key, e.g. "n2(2,1)(5,2)"; used for operator caching.
  std::string signature() const;
  std::string parts_str() const;  // "(2,1),(5,2)"

  bool operator==(const BasisDescriptor& o) const {
    return dim_ == o.dim_ && parts_ == o.parts_;
  }

 private:
  int dim_ = 0;
  std::vector<std::pair<int, int>> parts_;
  std::vector<MonomialEntry> entries_;
  std::map<MonomialEntry, int, MonomialEntryLess> pos_;
};

/// Builds the basis whose entries are all cross-products of the per-part
/// monomial bases (duplicates removed, first occurrence kept).
BasisDescriptor product_basis(int dim, std::vector<std::pair<int, int>> parts);

}  // namespace geoinv
