#include "geoinv/generators.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace geoinv {

RotationPlane::RotationPlane(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b <= a) throw std::invalid_argument("rotation plane needs 1 <= a < b");
}

std::string RotationPlane::str() const {
  std::ostringstream os;
  os << '(' << a << ',' << b << ')';
  return os.str();
}

std::vector<RotationPlane> rotation_planes(int dim) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: dim must be >= 2");
  std::vector<RotationPlane> out;
  out.reserve(static_cast<size_t>(dim) * static_cast<size_t>(dim - 1) / 2);
  for (int a = 1; a <= dim; ++a)
    for (int b = a + 1; b <= dim; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<RotationPlane> plane_fan(int dim) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: dim must be >= 2");
  std::vector<RotationPlane> out;
  for (int b = 2; b <= dim; ++b) out.emplace_back(1, b);
  return out;
}

std::vector<RotationPlane> planes_for(int dim, PlaneSet set) {
  return set == PlaneSet::fan ? plane_fan(dim) : rotation_planes(dim);
}

std::vector<int> generator_sign_convention(int a, int b, int dim) {
  if (a < 1 || b < 1 || a > dim || b > dim || a == b)
    throw std::invalid_argument("generator axes must be distinct and within dimension");
  std::vector<int> e(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0);
  e[static_cast<size_t>(b - 1) * static_cast<size_t>(dim) + static_cast<size_t>(a - 1)] = 1;
  e[static_cast<size_t>(a - 1) * static_cast<size_t>(dim) + static_cast<size_t>(b - 1)] = -1;
  return e;
}

std::vector<int> generator_sign_convention(const RotationPlane& plane, int dim) {
  return generator_sign_convention(plane.a, plane.b, dim);
}

LinearCombo derivative_single(const MultiIndex& idx, const RotationPlane& plane) {
  const int a = plane.a - 1, b = plane.b - 1;
  if (plane.b > idx.dim()) throw std::invalid_argument("dimension-mismatch: plane outside index dimension");
  LinearCombo out;
  // l[b][a] = +1 contributes p_b * m_{p_b-1, p_a+1}
  if (idx[b] > 0) out.terms.emplace_back(idx.shifted(b, a), Int(idx[b]));
  // l[a][b] = -1 contributes -p_a * m_{p_a-1, p_b+1}
  if (idx[a] > 0) out.terms.emplace_back(idx.shifted(a, b), Int(-idx[a]));
  return out;
}

LinearCombo derivative_with_generator(const MultiIndex& idx, std::span<const int> generator, int dim) {
  if (static_cast<int>(generator.size()) != dim * dim)
    throw std::invalid_argument("shape-mismatch: generator must be dim x dim");
  std::map<std::vector<int>, Int> acc;
  for (int i = 0; i < dim; ++i) {
    if (idx[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      const int l = generator[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
      if (l == 0 || i == j) continue;
      acc[idx.shifted(i, j).exponents()] += Int(idx[i]) * l;
    }
  }
  LinearCombo out;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms.emplace_back(MultiIndex(e), c);
  return out;
}

SparseIntMatrix operator_on_rows(const BasisDescriptor& desc, std::span<const int> rows,
                                 const RotationPlane& plane) {
  SparseIntMatrix m(static_cast<int>(rows.size()), desc.size());
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    const MonomialEntry& entry = desc.entries().at(static_cast<size_t>(rows[ri]));
    const auto& factors = entry.factors();
    for (size_t f = 0; f < factors.size(); ++f) {
      const auto& [idx, power] = factors[f];
      const LinearCombo combo = derivative_single(idx, plane);
      for (const auto& [target_idx, coef] : combo.terms) {
        const MonomialEntry target = entry.with_factor_replaced(f, target_idx);
        const auto pos = desc.position(target);
        if (!pos)
          throw std::logic_error("basis-mismatch: product-rule term " + target.str() +
                                 " outside descriptor " + desc.signature());
        m.add(static_cast<int>(ri), *pos, coef * power);
      }
    }
  }
  return m;
}

SparseIntMatrix operator_on_basis(const BasisDescriptor& desc, const RotationPlane& plane) {
  std::vector<int> all(static_cast<size_t>(desc.size()));
  for (int i = 0; i < desc.size(); ++i) all[static_cast<size_t>(i)] = i;
  return operator_on_rows(desc, all, plane);
}

const SparseIntMatrix& cached_operator(const BasisDescriptor& desc, const RotationPlane& plane) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, std::unique_ptr<SparseIntMatrix>> cache;
  const auto key = std::make_tuple(desc.signature(), plane.a, plane.b);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<SparseIntMatrix>(operator_on_basis(desc, plane));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

}  // namespace geoinv
