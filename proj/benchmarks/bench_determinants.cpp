#include <benchmark/benchmark.h>

#include <random>

#include "longknot/invariants.hpp"

using namespace longknot;

namespace {

const Switch<GaussianRational>& budapest() {
  static const auto s = std::get<Switch<GaussianRational>>(builtin_switch("budapest"));
  return s;
}

Matrix<Rational> random_matrix(std::size_t n, std::uint64_t seed) {
  const Variables vars{Var::t};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(-2, 2);
  Matrix<Rational> m(n, n, vars);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = 0; k < 2; ++k) {
        m(i, j) = m(i, j) + LaurentPoly<Rational>::variable(vars, Var::t, exp(rng)).scaled(Rational(coeff(rng)));
      }
    }
  }
  return m;
}

LongDiagram triple() {
  const auto fly = builtin_diagram("fly");
  return concat(concat(fly, transform(fly, Transform::reflect)), fly);
}

void BM_Bareiss(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m, DetAlgorithm::bareiss));
}
BENCHMARK(BM_Bareiss)->DenseRange(4, 12, 4);

void BM_Cofactor(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m, DetAlgorithm::cofactor));
}
BENCHMARK(BM_Cofactor)->DenseRange(4, 8, 2);

void BM_TripleProductCodim(benchmark::State& state) {
  const auto p = build_presentation(triple(), budapest(), Variant::M);
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(codim_det(p, budapest(), r, UnitMode::field));
}
BENCHMARK(BM_TripleProductCodim)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FlyProfile(benchmark::State& state) {
  const auto fly = builtin_diagram("fly");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_profile(fly, budapest(), 2));
}
BENCHMARK(BM_FlyProfile)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
