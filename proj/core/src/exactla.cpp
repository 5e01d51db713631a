#include "geoinv/exactla.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <stdexcept>

namespace geoinv {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int vector_gcd(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

std::vector<Int> clear_denominators(std::span<const Rat> v) {
  Int l = 1;
  for (const Rat& r : v) l = lcm(l, denominator(r));
  std::vector<Int> out;
  out.reserve(v.size());
  for (const Rat& r : v) out.push_back(numerator(r) * (l / denominator(r)));
  const Int g = vector_gcd(out);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

std::vector<Int> primitive_vector(std::vector<Int> v) {
  const Int g = vector_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

bool KernelBasis::contains(std::span<const Rat> v) const {
  if (static_cast<int>(v.size()) != width) return false;
  std::vector<Rat> residual(v.begin(), v.end());
  for (size_t k = 0; k < vectors.size(); ++k) {
    const auto& vec = vectors[k];
    const int f = leads[k];
    const Rat lam = residual[static_cast<size_t>(f)] / Rat(vec[static_cast<size_t>(f)]);
    if (lam == 0) continue;
    for (int j = 0; j < width; ++j) residual[static_cast<size_t>(j)] -= lam * Rat(vec[static_cast<size_t>(j)]);
  }
  for (const Rat& r : residual)
    if (r != 0) return false;
  return true;
}

bool KernelBasis::contains(std::span<const Int> v) const {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return contains(std::span<const Rat>(r));
}

SparseIntMatrix stack_transposed(std::span<const SparseIntMatrix> ops,
                                 const std::vector<std::vector<Rat>>& extra_rows) {
  int width = -1;
  for (const auto& op : ops) {
    if (width < 0) width = op.rows();
    if (op.rows() != width) throw std::invalid_argument("shape-mismatch: stacked operators differ in row count");
  }
  for (const auto& er : extra_rows) {
    if (width < 0) width = static_cast<int>(er.size());
    if (static_cast<int>(er.size()) != width) throw std::invalid_argument("shape-mismatch: extra row width");
  }
  if (width < 0) throw std::invalid_argument("shape-mismatch: nothing to stack");

  int total = static_cast<int>(extra_rows.size());
  for (const auto& op : ops) total += op.cols();

  SparseIntMatrix out(total, width);
  int at = 0;
  for (const auto& er : extra_rows) {
    const std::vector<Int> cleared = clear_denominators(er);
    for (int c = 0; c < width; ++c)
      if (cleared[static_cast<size_t>(c)] != 0) out.add(at, c, cleared[static_cast<size_t>(c)]);
    ++at;
  }
  for (const auto& op : ops) {
    for (int r = 0; r < op.rows(); ++r)
      for (const auto& [c, v] : op.row(r)) out.add(at + c, r, v);
    at += op.cols();
  }
  return out;
}

SparseIntMatrix prune_zero_rows(const SparseIntMatrix& m) {
  std::vector<int> keep;
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_empty(r)) keep.push_back(r);
  return select_rows(m, keep);
}

namespace {

using SparseRow = std::vector<std::pair<int, Int>>;

// pa * a - pb * b over sorted sparse rows, gcd-reduced
SparseRow combine(const Int& pa, const SparseRow& a, const Int& pb, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, pa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -pb * b[j].second);
      ++j;
    } else {
      Int v = pa * a[i].second - pb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  Int g = 0;
  for (const auto& [c, v] : out) {
    g = gcd(g, abs(v));
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : out) v /= g;
  return out;
}

}  // namespace

KernelBasis rational_kernel(const SparseIntMatrix& m) {
  const int cols = m.cols();
  std::vector<SparseRow> work;
  work.reserve(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_empty(r)) work.push_back(m.row(r));

  struct Pivot {
    int col;
    size_t row;
  };
  std::vector<Pivot> pivots;
  std::vector<bool> used(work.size(), false);

  for (int c = 0; c < cols; ++c) {
    size_t best = work.size();
    for (size_t i = 0; i < work.size(); ++i) {
      if (used[i] || work[i].empty() || work[i].front().first != c) continue;
      if (best == work.size() || abs(work[i].front().second) > abs(work[best].front().second)) best = i;
    }
    if (best == work.size()) continue;  // free column
    used[best] = true;
    pivots.push_back({c, best});
    const Int pv = work[best].front().second;
    for (size_t i = 0; i < work.size(); ++i) {
      if (used[i] || work[i].empty() || work[i].front().first != c) continue;
      work[i] = combine(pv, work[i], work[i].front().second, work[best]);
    }
  }

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (const auto& p : pivots) is_pivot[static_cast<size_t>(p.col)] = true;

  KernelBasis kb;
  kb.width = cols;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rat> x(static_cast<size_t>(cols), Rat(0));
    x[static_cast<size_t>(f)] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const SparseRow& row = work[it->row];
      Rat s = 0;
      for (size_t k = 1; k < row.size(); ++k) s += Rat(row[k].second) * x[static_cast<size_t>(row[k].first)];
      x[static_cast<size_t>(it->col)] = -s / Rat(row.front().second);
    }
    std::vector<Int> v = primitive_vector(clear_denominators(x));
    kb.vectors.push_back(std::move(v));
    kb.leads.push_back(f);
  }
  return kb;
}

bool same_span(const KernelBasis& a, const KernelBasis& b) {
  if (a.width != b.width || a.dimension() != b.dimension()) return false;
  for (const auto& v : b.vectors)
    if (!a.contains(std::span<const Int>(v))) return false;
  return true;
}

SparseIntMatrix collapse_columns(const SparseIntMatrix& m, const std::vector<std::vector<int>>& groups) {
  std::vector<int> owner(static_cast<size_t>(m.cols()), -1);
  for (size_t g = 0; g < groups.size(); ++g)
    for (int c : groups[g]) {
      if (c < 0 || c >= m.cols() || owner[static_cast<size_t>(c)] != -1)
        throw std::invalid_argument("column groups must partition the column range");
      owner[static_cast<size_t>(c)] = static_cast<int>(g);
    }
  for (int o : owner)
    if (o == -1) throw std::invalid_argument("column groups must cover every column");

  SparseIntMatrix out(m.rows(), static_cast<int>(groups.size()));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out.add(r, owner[static_cast<size_t>(c)], v);
  return out;
}

std::vector<Int> expand_collapsed(std::span<const Int> reduced,
                                  const std::vector<std::vector<int>>& groups, int width) {
  if (reduced.size() != groups.size()) throw std::invalid_argument("shape-mismatch in expand_collapsed");
  std::vector<Int> out(static_cast<size_t>(width), Int(0));
  for (size_t g = 0; g < groups.size(); ++g)
    for (int c : groups[g]) out.at(static_cast<size_t>(c)) = reduced[g];
  return out;
}

}  // namespace geoinv
