#include "geoinv/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geoinv {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.size() < 2) throw std::invalid_argument("invalid-dimension: multi-index needs dim >= 2");
  for (int p : e_)
    if (p < 0) throw std::invalid_argument("multi-index exponents must be non-negative");
}

MultiIndex MultiIndex::zero(int dim) { return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

MultiIndex MultiIndex::unit(int dim, int axis) {
  std::vector<int> e(static_cast<size_t>(dim), 0);
  e.at(static_cast<size_t>(axis)) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiIndex MultiIndex::shifted(int from, int to) const {
  std::vector<int> e = e_;
  if (e.at(static_cast<size_t>(from)) <= 0)
    throw std::invalid_argument("shifted: exponent at source axis is zero");
  --e[static_cast<size_t>(from)];
  ++e.at(static_cast<size_t>(to));
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::permuted(std::span<const int> perm) const {
  std::vector<int> e(e_.size());
  for (size_t j = 0; j < e_.size(); ++j) e[j] = e_[static_cast<size_t>(perm[j])];
  return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t j = 0; j < e_.size(); ++j) {
    if (j) os << ',';
    os << e_[j];
  }
  os << ')';
  return os.str();
}

bool canonical_index_less(const MultiIndex& a, const MultiIndex& b) {
  const int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  // Descending grevlex: a precedes b when the rightmost nonzero entry of
  // a - b is negative.
  for (int j = a.dim() - 1; j >= 0; --j) {
    const int d = a[j] - b[j];
    if (d != 0) return d < 0;
  }
  return false;
}

MonomialEntry::MonomialEntry(std::vector<std::pair<MultiIndex, int>> factors) : f_(std::move(factors)) {
  for (const auto& [idx, p] : f_) {
    (void)idx;
    if (p <= 0) throw std::invalid_argument("monomial factor powers must be >= 1");
  }
  std::sort(f_.begin(), f_.end(), [](const auto& x, const auto& y) {
    return canonical_index_less(x.first, y.first);
  });
  // merge equal adjacent indices
  std::vector<std::pair<MultiIndex, int>> merged;
  for (auto& fp : f_) {
    if (!merged.empty() && merged.back().first == fp.first)
      merged.back().second += fp.second;
    else
      merged.push_back(std::move(fp));
  }
  f_ = std::move(merged);
}

int MonomialEntry::degree() const {
  int d = 0;
  for (const auto& [idx, p] : f_) {
    (void)idx;
    d += p;
  }
  return d;
}

MonomialEntry MonomialEntry::with_factor_replaced(size_t pos, const MultiIndex& replacement) const {
  std::vector<std::pair<MultiIndex, int>> f = f_;
  if (pos >= f.size()) throw std::out_of_range("factor position out of range");
  if (--f[pos].second == 0) f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
  f.emplace_back(replacement, 1);
  return MonomialEntry(std::move(f));
}

MonomialEntry MonomialEntry::times(const MonomialEntry& other) const {
  std::vector<std::pair<MultiIndex, int>> f = f_;
  f.insert(f.end(), other.f_.begin(), other.f_.end());
  return MonomialEntry(std::move(f));
}

MonomialEntry MonomialEntry::permuted(std::span<const int> perm) const {
  std::vector<std::pair<MultiIndex, int>> f;
  f.reserve(f_.size());
  for (const auto& [idx, p] : f_) f.emplace_back(idx.permuted(perm), p);
  return MonomialEntry(std::move(f));
}

std::string MonomialEntry::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < f_.size(); ++i) {
    if (i) os << ' ';
    os << f_[i].first.str() << '^' << f_[i].second;
  }
  return os.str();
}

bool monomial_entry_less(const MonomialEntry& a, const MonomialEntry& b) {
  long long ta = 0, tb = 0;  // total moment order, graded comparison first
  for (const auto& [idx, p] : a.factors()) ta += static_cast<long long>(idx.order()) * p;
  for (const auto& [idx, p] : b.factors()) tb += static_cast<long long>(idx.order()) * p;
  if (ta != tb) return ta < tb;
  // lexicographic walk over the expanded factor sequences
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t ia = 0, ib = 0;
  int ra = fa.empty() ? 0 : fa[0].second;
  int rb = fb.empty() ? 0 : fb[0].second;
  while (ia < fa.size() && ib < fb.size()) {
    const MultiIndex& xa = fa[ia].first;
    const MultiIndex& xb = fb[ib].first;
    if (!(xa == xb)) return canonical_index_less(xa, xb);
    const int step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0 && ++ia < fa.size()) ra = fa[ia].second;
    if (rb == 0 && ++ib < fb.size()) rb = fb[ib].second;
  }
  return ia == fa.size() && ib < fb.size();
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate_rec(int dim, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == dim - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int p = remaining; p >= 0; --p) {
    cur.push_back(p);
    enumerate_rec(dim, remaining - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_order(int dim, int order) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: dim must be >= 2");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>(binomial(order + dim - 1, dim - 1)));
  std::vector<int> cur;
  enumerate_rec(dim, order, cur, out);
  std::sort(out.begin(), out.end(), CanonicalIndexLess{});
  return out;
}

std::vector<MonomialEntry> monomial_basis(const std::vector<MultiIndex>& base, int degree) {
  if (degree < 1) throw std::invalid_argument("monomial degree must be >= 1");
  std::vector<MonomialEntry> out;
  out.reserve(static_cast<size_t>(binomial(static_cast<int>(base.size()) + degree - 1, degree)));
  // multisets of size `degree` over base positions, non-decreasing tuples
  std::vector<int> pick(static_cast<size_t>(degree), 0);
  const int m = static_cast<int>(base.size());
  if (m == 0) return out;
  while (true) {
    std::vector<std::pair<MultiIndex, int>> factors;
    for (int p : pick) factors.emplace_back(base[static_cast<size_t>(p)], 1);
    out.emplace_back(std::move(factors));
    int j = degree - 1;
    while (j >= 0 && pick[static_cast<size_t>(j)] == m - 1) --j;
    if (j < 0) break;
    const int v = ++pick[static_cast<size_t>(j)];
    for (int l = j + 1; l < degree; ++l) pick[static_cast<size_t>(l)] = v;
  }
  return out;
}

BasisDescriptor::BasisDescriptor(int dim, std::vector<std::pair<int, int>> parts) : dim_(dim) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: dim must be >= 2");
  if (parts.empty()) throw std::invalid_argument("descriptor needs at least one (order, degree) part");
  for (const auto& [p, k] : parts) {
    if (p < 0) throw std::invalid_argument("part order must be >= 0");
    if (k < 1) throw std::invalid_argument("part degree must be >= 1");
  }
  std::sort(parts.begin(), parts.end());
  parts_ = std::move(parts);

  std::vector<std::vector<MonomialEntry>> per_part;
  per_part.reserve(parts_.size());
  for (const auto& [p, k] : parts_) per_part.push_back(monomial_basis(enumerate_order(dim, p), k));

  // cross product, last component fastest; duplicates (possible when two
  // parts share an order) keep their first occurrence
  std::vector<size_t> at(per_part.size(), 0);
  std::set<MonomialEntry, MonomialEntryLess> seen;
  while (true) {
    MonomialEntry e = per_part[0][at[0]];
    for (size_t c = 1; c < per_part.size(); ++c) e = e.times(per_part[c][at[c]]);
    if (seen.insert(e).second) entries_.push_back(std::move(e));
    size_t c = per_part.size();
    while (c > 0) {
      --c;
      if (++at[c] < per_part[c].size()) break;
      at[c] = 0;
      if (c == 0) {
        c = per_part.size() + 1;  // done marker
        break;
      }
    }
    if (c == per_part.size() + 1) break;
  }
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i) pos_.emplace(entries_[static_cast<size_t>(i)], i);
}

std::optional<int> BasisDescriptor::position(const MonomialEntry& e) const {
  auto it = pos_.find(e);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

int BasisDescriptor::max_order() const {
  int m = 0;
  for (const auto& [p, k] : parts_) {
    (void)k;
    m = std::max(m, p);
  }
  return m;
}

std::string BasisDescriptor::signature() const {
  std::ostringstream os;
  os << 'n' << dim_ << parts_str();
  return os.str();
}

std::string BasisDescriptor::parts_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << '(' << parts_[i].first << ',' << parts_[i].second << ')';
  }
  return os.str();
}

BasisDescriptor product_basis(int dim, std::vector<std::pair<int, int>> parts) {
  return BasisDescriptor(dim, std::move(parts));
}

}  // namespace geoinv
