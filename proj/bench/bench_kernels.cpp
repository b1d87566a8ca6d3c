// Serial vs OpenMP timings of the heavy kernels. Arg 0 = serial, 1 = parallel.

#include <random>

#include <benchmark/benchmark.h>

#include "wrb/complex.hpp"
#include "wrb/rb_assoc.hpp"

using namespace wrb;

namespace {

Algebra upper_triangular() {
  Algebra a(3);
  a.mu(0, 0, 0) = 1;
  a.mu(0, 1, 1) = 1;
  a.mu(1, 2, 1) = 1;
  a.mu(2, 2, 2) = 1;
  a.unit = Vec{1, 0, 1};
  return a;
}

RBOperator minus_identity() { return RBOperator(adjoint_bimodule(upper_triangular()), 1, Matrix::scalar(3, -1)); }

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

TensorMap random_cochain(std::size_t dim, std::size_t degree) {
  std::mt19937 rng(7);
  TensorMap f(dim, dim, degree);
  for (auto& c : f.coeffs()) c = Scalar(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
  return f;
}

void BM_d_T(benchmark::State& state) {
  const RBOperator T = minus_identity();
  const TensorMap f = random_cochain(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(d_T(f, T, exec_of(state)));
}

void BM_derived_bracket(benchmark::State& state) {
  const RBOperator T = minus_identity();
  const TensorMap p = random_cochain(3, 2), q = random_cochain(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(derived_bracket(p, q, T.action, exec_of(state)));
}

void BM_cohomology(benchmark::State& state) {
  const RBOperator T = minus_identity();
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(T, 3, AssocRoute::twisted, exec_of(state)));
}

void BM_rank(benchmark::State& state) {
  std::mt19937 rng(11);
  Matrix m(60, 60);
  for (std::size_t r = 0; r < 60; ++r)
    for (std::size_t c = 0; c < 60; ++c) m(r, c) = Scalar(static_cast<int>(rng() % 5) - 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_d_T)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_derived_bracket)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cohomology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
