#include "geoinv/exactla.hpp"

#include "geoinv/generators.hpp"
#include "geoinv/invariants.hpp"
#include "geoinv/rng.hpp"

#include <doctest.h>

#include <Eigen/Dense>

using namespace geoinv;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& rows, int cols) {
  SparseIntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
        m.add(r, c, Int(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]));
  return m;
}

SparseIntMatrix random_sparse(int rows, int cols, uint64_t seed) {
  Rng rng(mix_seed(seed, 3));
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.uniform01() < 0.25) {
        const long long v = static_cast<long long>(rng.next() % 19) - 9;
        if (v != 0) m.add(r, c, Int(v));
      }
  return m;
}

int exact_rank(const SparseIntMatrix& m) { return m.cols() - rational_kernel(m).dimension(); }

// SVD-based null space oracle; spans compared through projector distance
double span_distance_to_svd(const SparseIntMatrix& m, const KernelBasis& kb) {
  using Eigen::MatrixXd;
  MatrixXd a = MatrixXd::Zero(m.rows() == 0 ? 1 : m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) a(r, c) = static_cast<double>(v);
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() ? sv(0) : 0.0) * 1e-10 + 1e-12;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  const int nullity = m.cols() - rank;
  if (nullity != kb.dimension()) return 1.0;  // treat as maximal disagreement
  if (nullity == 0) return 0.0;
  const MatrixXd v_null = svd.matrixV().rightCols(nullity);
  MatrixXd k(m.cols(), nullity);
  for (int j = 0; j < nullity; ++j)
    for (int i = 0; i < m.cols(); ++i) k(i, j) = static_cast<double>(kb.vectors[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(k).householderQ() * MatrixXd::Identity(m.cols(), nullity);
  const MatrixXd p1 = q * q.transpose();
  const MatrixXd p2 = v_null * v_null.transpose();
  return (p1 - p2).norm();
}

}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("stack_transposed shapes") {
  // the 2x6 rectangular operator stacks to 6x2
  const auto desc = product_basis(2, {{2, 2}});
  const auto sel = select_scale_invariant(desc);
  const auto op = operator_on_rows(desc, sel.selected, RotationPlane(1, 2));
  REQUIRE(op.rows() == 2);
  REQUIRE(op.cols() == 6);
  const auto stacked = stack_transposed(std::vector<SparseIntMatrix>{op});
  CHECK(stacked.rows() == 6);
  CHECK(stacked.cols() == 2);

  // extras only
  const std::vector<std::vector<Rat>> extras(3, std::vector<Rat>(5, Rat(1, 3)));
  const auto only_extras = stack_transposed(std::vector<SparseIntMatrix>{}, extras);
  CHECK(only_extras.rows() == 3);
  CHECK(only_extras.cols() == 5);
  CHECK(*only_extras.find(0, 0) == 1);  // common denominator cleared

  // three 25x715 operators stack to 2145x25
  const auto d43 = product_basis(3, {{3, 4}});
  const auto s43 = select_scale_invariant(d43);
  std::vector<SparseIntMatrix> ops;
  for (const auto& pl : rotation_planes(3)) ops.push_back(operator_on_rows(d43, s43.selected, pl));
  const auto big = stack_transposed(ops);
  CHECK(big.rows() == 2145);
  CHECK(big.cols() == 25);

  CHECK_THROWS_AS(stack_transposed(std::vector<SparseIntMatrix>{}), std::invalid_argument);
}

TEST_CASE("prune_zero_rows") {
  auto m = from_dense({{1, 0}, {0, 0}, {0, 2}, {0, 0}}, 2);
  const auto pruned = prune_zero_rows(m);
  CHECK(pruned.rows() == 2);
  CHECK(pruned.cols() == 2);
  CHECK(*pruned.find(0, 0) == 1);
  CHECK(*pruned.find(1, 1) == 2);

  const auto dense = from_dense({{1, 2}, {3, 4}}, 2);
  CHECK(prune_zero_rows(dense) == dense);

  const auto zero = prune_zero_rows(SparseIntMatrix(4, 3));
  CHECK(zero.rows() == 0);
  CHECK(zero.cols() == 3);
  CHECK(rational_kernel(zero).dimension() == 3);
}

TEST_CASE("kernel fixtures") {
  {
    const auto m = from_dense({{0, 1, 0}, {-2, 0, 2}, {0, -1, 0}}, 3);
    const auto kb = rational_kernel(m);
    REQUIRE(kb.dimension() == 1);
    CHECK(kb.vectors[0] == std::vector<Int>{1, 0, 1});
  }
  {
    const auto id = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(rational_kernel(id).dimension() == 0);
  }
  {
    // stacked rotation system of 2D v^1_3 has no kernel (odd order)
    const auto desc = product_basis(2, {{3, 1}});
    const auto op = operator_on_basis(desc, RotationPlane(1, 2));
    const auto kb = rational_kernel(prune_zero_rows(stack_transposed(std::vector<SparseIntMatrix>{op})));
    CHECK(kb.dimension() == 0);
  }
}

TEST_CASE("kernel vectors are canonical and exact") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = random_sparse(12, 18, seed);
    const auto kb = rational_kernel(m);
    CHECK(exact_rank(m) + kb.dimension() == m.cols());
    for (size_t k = 0; k < kb.vectors.size(); ++k) {
      const auto& v = kb.vectors[k];
      // exact annihilation of every row
      for (int r = 0; r < m.rows(); ++r) {
        Int dot = 0;
        for (const auto& [c, val] : m.row(r)) dot += val * v[static_cast<size_t>(c)];
        CHECK(dot == 0);
      }
      // primitive, sign-normalized, lead structure
      CHECK(vector_gcd(v) == 1);
      for (const Int& x : v) {
        if (x == 0) continue;
        CHECK(x > 0);
        break;
      }
      CHECK(v[static_cast<size_t>(kb.leads[k])] != 0);
      for (size_t l = 0; l < kb.vectors.size(); ++l)
        if (l != k) CHECK(v[static_cast<size_t>(kb.leads[l])] == 0);
      if (k) CHECK(kb.leads[k] > kb.leads[k - 1]);
    }
  }
}

TEST_CASE("kernel computation is deterministic") {
  const auto m = random_sparse(20, 26, 77);
  const auto a = rational_kernel(m);
  const auto b = rational_kernel(m);
  CHECK(a.vectors == b.vectors);
  CHECK(a.leads == b.leads);
}

TEST_CASE("agreement with a floating SVD null space") {
  for (uint64_t seed = 100; seed < 120; ++seed) {
    const auto m = random_sparse(14, 20, seed);
    CHECK(span_distance_to_svd(m, rational_kernel(m)) <= 1e-8);
  }
}

TEST_CASE("span membership and equality") {
  const auto m = from_dense({{1, -1, 0, 0}, {0, 0, 1, -1}}, 4);
  const auto kb = rational_kernel(m);
  REQUIRE(kb.dimension() == 2);
  CHECK(kb.contains(std::vector<Int>{3, 3, -2, -2}));
  CHECK_FALSE(kb.contains(std::vector<Int>{1, 2, 0, 0}));
  CHECK(same_span(kb, kb));

  const auto other = rational_kernel(from_dense({{1, -1, 0, 0}}, 4));
  CHECK_FALSE(same_span(kb, other));
}

TEST_CASE("column collapse for orbit reduction") {
  const auto m = from_dense({{1, 2, 3, 4}, {-2, 1, 0, 2}}, 4);
  const std::vector<std::vector<int>> groups{{0, 3}, {1, 2}};
  const auto collapsed = collapse_columns(m, groups);
  CHECK(collapsed.cols() == 2);
  CHECK(*collapsed.find(0, 0) == 5);
  CHECK(*collapsed.find(0, 1) == 5);
  CHECK(collapsed.find(1, 0) == nullptr);  // -2 + 2 cancels
  CHECK(*collapsed.find(1, 1) == 1);

  const auto expanded = expand_collapsed(std::vector<Int>{7, -2}, groups, 4);
  CHECK(expanded == std::vector<Int>{7, -2, -2, 7});

  CHECK_THROWS_AS(collapse_columns(m, {{0, 1}}), std::invalid_argument);
}

}  // TEST_SUITE
