#include <benchmark/benchmark.h>

#include <random>

#include "mfw/corpus.hpp"
#include "mfw/hom.hpp"
#include "mfw/module_oracle.hpp"
#include "mfw/verify.hpp"

using namespace mfw;

namespace {

ScalarMatrix random_matrix(const Field& f, std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::from_long(f, static_cast<long>(rng() % 9) - 4);
    return m;
}

void BM_nullspace_rational(benchmark::State& state) {
    ScalarMatrix m = random_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_nullspace_rational)->Arg(16)->Arg(48);

void BM_nullspace_prime(benchmark::State& state) {
    ScalarMatrix m = random_matrix(Field::prime(32003), static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_nullspace_prime)->Arg(16)->Arg(48)->Arg(96);

void BM_push_validate(benchmark::State& state) {
    CorpusInstance a3 = generate(FamilySpec{3, 2, 2}, Field::rationals());
    auto E = direct_sum(a3.objects[0], direct_sum(a3.objects[1], a3.objects[2]));
    for (auto _ : state) benchmark::DoNotOptimize(push(E, a3.section));
}
BENCHMARK(BM_push_validate);

void BM_end_of_pushed_a3(benchmark::State& state) {
    CorpusInstance a3 = generate(FamilySpec{3, 2, 2}, Field::rationals());
    auto P = push(a3.objects[1], a3.section);
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(P, P, 0).dim());
}
BENCHMARK(BM_end_of_pushed_a3);

void BM_stable_hom_oracle(benchmark::State& state) {
    CorpusInstance a3 = generate(FamilySpec{3, 2, 2}, Field::rationals());
    auto M = coker_presentation(push(a3.objects[1], a3.section));
    for (auto _ : state) benchmark::DoNotOptimize(stable_hom_dim(M, M, 0));
}
BENCHMARK(BM_stable_hom_oracle);

void BM_verify_theorem_a2(benchmark::State& state) {
    CorpusInstance a2 = generate(FamilySpec{2, 3, 1}, Field::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            verify_theorem(a2.objects[0], a2.objects[1], a2.section, -2, 2, -5, 5));
}
BENCHMARK(BM_verify_theorem_a2);

} // namespace

BENCHMARK_MAIN();
