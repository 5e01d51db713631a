#include "geoinv/harness.hpp"
#include "geoinv/invariants.hpp"
#include "geoinv/poly.hpp"

#include <benchmark/benchmark.h>

using namespace geoinv;

namespace {

void BM_CentralMoments(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const PointCloud cloud = random_cloud(3, points, 42);
  for (auto _ : state) {
    MomentTable t = central_moments(cloud, order);
    benchmark::DoNotOptimize(t.mu0());
  }
  state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_CentralMoments)->Args({10000, 4})->Args({100000, 4})->Args({100000, 6});

void BM_OperatorBuild_v43(benchmark::State& state) {
  const BasisDescriptor desc = product_basis(3, {{3, 4}});
  for (auto _ : state) {
    SparseIntMatrix op = operator_on_basis(desc, RotationPlane(1, 2));
    benchmark::DoNotOptimize(op.nnz());
  }
}
BENCHMARK(BM_OperatorBuild_v43);

void BM_RationalKernel_v43(benchmark::State& state) {
  const BasisDescriptor desc = product_basis(3, {{3, 4}});
  const ScaleSelection sel = select_scale_invariant(desc);
  std::vector<SparseIntMatrix> ops;
  for (const auto& pl : plane_fan(3)) ops.push_back(operator_on_rows(desc, sel.selected, pl));
  const SparseIntMatrix stacked = prune_zero_rows(stack_transposed(ops));
  for (auto _ : state) {
    KernelBasis kb = rational_kernel(stacked);
    benchmark::DoNotOptimize(kb.dimension());
  }
}
BENCHMARK(BM_RationalKernel_v43);

void BM_RationalKernel_4D_order3(benchmark::State& state) {
  const BasisDescriptor desc = product_basis(4, {{3, 2}});
  std::vector<SparseIntMatrix> ops;
  for (const auto& pl : plane_fan(4)) ops.push_back(operator_on_basis(desc, pl));
  const SparseIntMatrix stacked = prune_zero_rows(stack_transposed(ops));
  for (auto _ : state) {
    KernelBasis kb = rational_kernel(stacked);
    benchmark::DoNotOptimize(kb.dimension());
  }
}
BENCHMARK(BM_RationalKernel_4D_order3);

void BM_AffinePipeline_v43(benchmark::State& state) {
  for (auto _ : state) {
    // descriptor construction included; operators come from the cache
    const BasisDescriptor desc = product_basis(3, {{3, 4}});
    auto invs = affine_invariants(desc);
    benchmark::DoNotOptimize(invs.size());
  }
}
BENCHMARK(BM_AffinePipeline_v43);

void BM_Evaluate_v43(benchmark::State& state) {
  const BasisDescriptor desc = product_basis(3, {{3, 4}});
  const auto invs = affine_invariants(desc);
  const MomentTable table = central_moments(normalized_cloud(random_cloud(3, 500, 7)), 3);
  for (auto _ : state) {
    const double v = evaluate(invs[0], table);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Evaluate_v43);

void BM_VerifyTrial_2D(benchmark::State& state) {
  const BasisDescriptor desc = product_basis(2, {{2, 2}});
  const auto invs = affine_invariants(desc);
  const PointCloud cloud = random_cloud(2, 500, 11);
  uint64_t seed = 0;
  for (auto _ : state) {
    auto rep = check_invariance(invs, cloud, TransformClass::affine, 1, 1e-8, seed++);
    benchmark::DoNotOptimize(rep.all_passed());
  }
}
BENCHMARK(BM_VerifyTrial_2D);

}  // namespace

BENCHMARK_MAIN();
