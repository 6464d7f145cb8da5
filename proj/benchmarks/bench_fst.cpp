#include <benchmark/benchmark.h>

#include "fst/conditions.hpp"
#include "fst/core.hpp"
#include "fst/decompose.hpp"
#include "fst/enumerate.hpp"
#include "fst/model.hpp"
#include "fst/relations.hpp"

namespace {

fst::Monomial dense_monomial() {
  fst::Rank rank(3);
  return fst::parse_monomial(
      "x[1,3](-4)*x[2,2](-3)*x[1,1](-3)*x[2,3](-2)*x[1,2](-2)*x[3,3](-1)*"
      "x[1,3](-1)*x[1,1](-1)",
      rank);
}

void BM_SatisfiesDc(benchmark::State& state) {
  fst::Monomial m = dense_monomial();
  int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fst::satisfies_dc(m, level));
}
BENCHMARK(BM_SatisfiesDc)->Arg(1)->Arg(3);

void BM_SatisfiesDcOracle(benchmark::State& state) {
  fst::Monomial m = dense_monomial();
  int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fst::satisfies_dc_oracle(m, level));
}
BENCHMARK(BM_SatisfiesDcOracle)->Arg(1)->Arg(3);

void BM_ChainCover(benchmark::State& state) {
  fst::Monomial m = dense_monomial();
  for (auto _ : state) benchmark::DoNotOptimize(fst::chain_cover(m, 4));
}
BENCHMARK(BM_ChainCover);

void BM_Factorize(benchmark::State& state) {
  fst::Monomial m = dense_monomial();
  fst::Weight w({2, 1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(fst::factorize(m, w));
}
BENCHMARK(BM_Factorize);

void BM_EnumerateBasis(benchmark::State& state) {
  fst::Rank rank(2);
  fst::Weight w({1, 0, 1});
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    fst::enumerate_basis(rank, w, degree, [&](const fst::Monomial&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateBasis)->Arg(6)->Arg(10);

void BM_GradedSeries(benchmark::State& state) {
  fst::Rank rank(2);
  fst::Weight w({2, 0, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fst::graded_series(rank, w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GradedSeries)->Arg(8);

void BM_RelationFamily(benchmark::State& state) {
  fst::Rank rank(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(fst::generate_relation_family(rank, 2));
}
BENCHMARK(BM_RelationFamily);

void BM_ExpandGraded(benchmark::State& state) {
  fst::Rank rank(3);
  auto family = fst::generate_relation_family(rank, 2);
  const fst::ColorPolynomial& poly = family.at(fst::RelationKey{2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(fst::expand_graded(poly, 9, rank));
}
BENCHMARK(BM_ExpandGraded);

void BM_BuildModelRational(benchmark::State& state) {
  fst::Rank rank(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fst::QuotientModel<fst::Rational>(rank, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildModelRational)->Arg(6)->Arg(8);

void BM_BuildModelPrime(benchmark::State& state) {
  fst::Rank rank(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fst::QuotientModel<fst::Fp>(rank, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildModelPrime)->Arg(6);

void BM_VerifyIndependence(benchmark::State& state) {
  fst::Rank rank(2);
  fst::Weight w({1, 1, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fst::verify_independence(rank, w, 4, fst::ScalarMode::Prime));
}
BENCHMARK(BM_VerifyIndependence);

}  // namespace

BENCHMARK_MAIN();
