#include <benchmark/benchmark.h>

#include <random>

#include "liegc/admissible.hpp"
#include "liegc/leftinv.hpp"

using namespace liegc;

namespace {

void BM_scalar_mul(benchmark::State& state) {
  auto spec = std::make_shared<const FieldSpec>(FieldSpec::product_closure({2, 3}));
  Scalar a = Scalar(3, 7) + Scalar::i() * Scalar::sqrt(6, spec) + Scalar(1, 2) * Scalar::sqrt(2, spec);
  Scalar b = Scalar(2, 5) + Scalar::sqrt(3, spec) - Scalar::i();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_mul);

void BM_scalar_div(benchmark::State& state) {
  auto spec = std::make_shared<const FieldSpec>(FieldSpec::product_closure({2, 3}));
  Scalar a = Scalar(3, 7) + Scalar::i() * Scalar::sqrt(6, spec);
  Scalar b = Scalar(1) + Scalar::sqrt(2, spec) + Scalar::sqrt(3, spec);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_scalar_div);

void BM_rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  SMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Scalar(coef(rng)) + Scalar::i() * Scalar(coef(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16);

void BM_weyl_build(benchmark::State& state) {
  const char* types[] = {"A2", "B2", "G2", "A3"};
  RootSystem rs = RootSystem::build(CartanType::parse(types[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(WeylAlgebra::build(rs));
}
BENCHMARK(BM_weyl_build)->DenseRange(0, 3);

void BM_oracle_su2(benchmark::State& state) {
  RootSystem rs = RootSystem::build(CartanType::parse("A1"));
  WeylAlgebra w = WeylAlgebra::build(rs);
  RealForm f = RealForm::build(w, VoganDiagram::plain(rs.type()));
  RealLieAlgebra l = RealLieAlgebra::from_real_form(f);
  Subalgebra borel = regular_subalgebra(f, SMatrix::identity(1), {0});
  EpsilonParams p;
  p.epsilon0 = SMatrix(1, 1);
  p.epsilon0.at(0, 0) = Scalar::i();
  SMatrix eps = build_epsilon(f, borel, p);
  HoloData h = holo_from_triple(f, borel, eps, Kind::symmetric);
  Connection d0 = d0_connection(f);
  for (auto _ : state) benchmark::DoNotOptimize(involutivity_oracle(l, h, d0));
}
BENCHMARK(BM_oracle_su2);

}  // namespace

BENCHMARK_MAIN();
