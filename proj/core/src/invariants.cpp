#include "geoinv/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geoinv {

std::string_view to_string(InvariantClass c) {
  switch (c) {
    case InvariantClass::scale: return "scale";
    case InvariantClass::rotation: return "rotation";
    case InvariantClass::affine: return "affine";
  }
  return "?";
}

InvariantClass invariant_class_from(std::string_view s) {
  if (s == "scale") return InvariantClass::scale;
  if (s == "rotation") return InvariantClass::rotation;
  if (s == "affine") return InvariantClass::affine;
  throw std::invalid_argument("unknown invariant class: " + std::string(s));
}

int InvariantPolynomial::max_order() const {
  int m = 0;
  for (const auto& [entry, coef] : terms) {
    (void)coef;
    for (const auto& [idx, p] : entry.factors()) {
      (void)p;
      m = std::max(m, idx.order());
    }
  }
  return m;
}

ScaleSelection select_scale_invariant(const BasisDescriptor& desc) {
  const int n = desc.dim();
  ScaleSelection sel;
  sel.desc = desc;
  long long d = -1;
  for (int i = 0; i < desc.size(); ++i) {
    const auto& entry = desc.entries()[static_cast<size_t>(i)];
    std::vector<long long> s(static_cast<size_t>(n), 0);
    for (const auto& [idx, k] : entry.factors())
      for (int j = 0; j < n; ++j) s[static_cast<size_t>(j)] += static_cast<long long>(idx[j] + 1) * k;
    if (std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) != s.end()) continue;
    if (d < 0)
      d = s[0];
    else if (d != s[0])
      throw std::logic_error("scale selection produced two different degrees");  // cannot happen
    sel.selected.push_back(i);
  }
  sel.d = d < 0 ? 0 : static_cast<int>(d);
  return sel;
}

namespace {

InvariantPolynomial make_polynomial(const BasisDescriptor& desc, InvariantClass cls, int d,
                                    std::vector<std::pair<MonomialEntry, Rat>> terms) {
  InvariantPolynomial inv;
  inv.dim = desc.dim();
  inv.cls = cls;
  inv.denominator_power = d;
  inv.desc_parts = desc.parts();
  inv.terms = std::move(terms);
  return inv;
}

std::vector<InvariantPolynomial> kernel_to_polynomials(const BasisDescriptor& desc,
                                                       const std::vector<int>& columns_to_entries,
                                                       const KernelBasis& kb, InvariantClass cls, int d) {
  std::vector<InvariantPolynomial> out;
  out.reserve(static_cast<size_t>(kb.dimension()));
  for (const auto& vec : kb.vectors) {
    std::vector<std::pair<MonomialEntry, Rat>> terms;
    for (size_t c = 0; c < vec.size(); ++c) {
      if (vec[c] == 0) continue;
      terms.emplace_back(desc.entries()[static_cast<size_t>(columns_to_entries[c])], Rat(vec[c]));
    }
    out.push_back(make_polynomial(desc, cls, d, std::move(terms)));
  }
  return out;
}

std::vector<int> identity_columns(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::vector<InvariantPolynomial> scale_invariants(const BasisDescriptor& desc) {
  const ScaleSelection sel = select_scale_invariant(desc);
  std::vector<InvariantPolynomial> out;
  out.reserve(sel.selected.size());
  for (int i : sel.selected)
    out.push_back(make_polynomial(desc, InvariantClass::scale, sel.d,
                                  {{desc.entries()[static_cast<size_t>(i)], Rat(1)}}));
  return out;
}

std::vector<InvariantPolynomial> rotation_invariants(const BasisDescriptor& desc, PlaneSet planes,
                                                     GenerationReport* report) {
  return independent_invariants(desc, {}, InvariantClass::rotation, planes, report);
}

std::vector<InvariantPolynomial> affine_invariants(const BasisDescriptor& desc, PlaneSet planes,
                                                   GenerationReport* report) {
  return independent_invariants(desc, {}, InvariantClass::affine, planes, report);
}

std::vector<Rat> expand_product(const InvariantPolynomial& a, const InvariantPolynomial& b,
                                const BasisDescriptor& target) {
  std::vector<Rat> beta(static_cast<size_t>(target.size()), Rat(0));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      const MonomialEntry prod = ea.times(eb);
      const auto pos = target.position(prod);
      if (!pos)
        throw std::invalid_argument("basis-mismatch: product term " + prod.str() +
                                    " not in target basis " + target.signature());
      beta[static_cast<size_t>(*pos)] += ca * cb;
    }
  return beta;
}

std::vector<InvariantPolynomial> independent_invariants(const BasisDescriptor& desc,
                                                        const std::vector<std::vector<Rat>>& known,
                                                        InvariantClass cls, PlaneSet planes,
                                                        GenerationReport* report) {
  if (cls == InvariantClass::scale)
    throw std::invalid_argument("independent_invariants handles rotation and affine classes only");
  for (const auto& row : known)
    if (static_cast<int>(row.size()) != desc.size())
      throw std::invalid_argument("shape-mismatch: known rows must have the basis width");

  const auto plane_list = planes_for(desc.dim(), planes);
  GenerationReport rep;
  rep.basis_size = desc.size();

  std::vector<int> columns_to_entries;
  std::vector<SparseIntMatrix> ops;
  std::vector<std::vector<Rat>> extra;
  int d = 0;

  if (cls == InvariantClass::rotation) {
    columns_to_entries = identity_columns(desc.size());
    for (const auto& pl : plane_list) ops.push_back(cached_operator(desc, pl));
    extra = known;
  } else {
    const ScaleSelection sel = select_scale_invariant(desc);
    rep.selected = static_cast<int>(sel.selected.size());
    rep.d = sel.d;
    d = sel.d;
    if (sel.selected.empty()) {
      if (report) *report = rep;
      return {};
    }
    columns_to_entries = sel.selected;
    for (const auto& pl : plane_list)
      ops.push_back(select_rows(cached_operator(desc, pl), sel.selected));
    // Known rows live in the full basis; the kernel runs over the selected
    // entries, so restrict (the result is supported on the selection anyway).
    for (const auto& row : known) {
      std::vector<Rat> r;
      r.reserve(sel.selected.size());
      for (int i : sel.selected) r.push_back(row[static_cast<size_t>(i)]);
      extra.push_back(std::move(r));
    }
  }

  const SparseIntMatrix stacked = prune_zero_rows(stack_transposed(ops, extra));
  rep.pruned_rows = stacked.rows();
  rep.pruned_cols = stacked.cols();
  const KernelBasis kb = rational_kernel(stacked);
  rep.kernel_dim = kb.dimension();
  if (report) *report = rep;
  return kernel_to_polynomials(desc, columns_to_entries, kb, cls, d);
}

std::vector<std::vector<int>> orbit_partition(const ScaleSelection& selection) {
  const BasisDescriptor& desc = selection.desc;
  const int n = desc.dim();
  const int m = static_cast<int>(selection.selected.size());

  std::map<MonomialEntry, int, MonomialEntryLess> where;
  for (int i = 0; i < m; ++i)
    where.emplace(desc.entries()[static_cast<size_t>(selection.selected[static_cast<size_t>(i)])], i);

  std::vector<int> parent(static_cast<size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
  };

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int i = 0; i < m; ++i) {
      const MonomialEntry image =
          desc.entries()[static_cast<size_t>(selection.selected[static_cast<size_t>(i)])].permuted(perm);
      const auto it = where.find(image);
      if (it == where.end())
        throw std::logic_error("selection is not closed under coordinate permutations");
      unite(i, it->second);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

std::vector<Rat> coefficient_vector(const InvariantPolynomial& inv, const BasisDescriptor& target) {
  std::vector<Rat> out(static_cast<size_t>(target.size()), Rat(0));
  for (const auto& [entry, coef] : inv.terms) {
    const auto pos = target.position(entry);
    if (!pos)
      throw std::invalid_argument("basis-mismatch: term " + entry.str() + " not in basis " +
                                  target.signature());
    out[static_cast<size_t>(*pos)] = coef;
  }
  return out;
}

}  // namespace geoinv
