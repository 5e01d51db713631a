#include "geoinv/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace geoinv {

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix shape must be non-negative");
  data_.resize(static_cast<size_t>(rows));
}

long long SparseIntMatrix::nnz() const {
  long long n = 0;
  for (const auto& r : data_) n += static_cast<long long>(r.size());
  return n;
}

void SparseIntMatrix::add(int r, int c, const Int& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix entry out of range");
  if (v == 0) return;
  auto& row = data_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

const Int* SparseIntMatrix::find(int r, int c) const {
  const auto& row = this->row(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return &it->second;
  return nullptr;
}

const std::vector<std::pair<int, Int>>& SparseIntMatrix::row(int r) const {
  return data_.at(static_cast<size_t>(r));
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)])
      t.data_[static_cast<size_t>(c)].emplace_back(r, v);
  return t;  // per-row columns already ascending (r increases)
}

std::vector<std::vector<Int>> SparseIntMatrix::dense() const {
  std::vector<std::vector<Int>> d(static_cast<size_t>(rows_), std::vector<Int>(static_cast<size_t>(cols_), Int(0)));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)]) d[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
  return d;
}

std::vector<Rat> SparseIntMatrix::apply(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("shape-mismatch in matrix apply");
  std::vector<Rat> y(static_cast<size_t>(rows_), Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)]) y[static_cast<size_t>(r)] += Rat(v) * x[static_cast<size_t>(c)];
  return y;
}

std::vector<Int> SparseIntMatrix::apply(std::span<const Int> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("shape-mismatch in matrix apply");
  std::vector<Int> y(static_cast<size_t>(rows_), Int(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)]) y[static_cast<size_t>(r)] += v * x[static_cast<size_t>(c)];
  return y;
}

SparseIntMatrix select_rows(const SparseIntMatrix& m, std::span<const int> rows) {
  SparseIntMatrix out(static_cast<int>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : m.row(rows[i])) out.add(static_cast<int>(i), c, v);
  return out;
}

}  // namespace geoinv
