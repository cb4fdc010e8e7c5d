#include <benchmark/benchmark.h>

#include "chow0/graded_ideal.hpp"
#include "chow0/localization.hpp"
#include "chow0/verify.hpp"
#include "chow0/weight_algebra.hpp"
#include "chow0/z1_relations.hpp"

using namespace chow0;

namespace {

void GenfunAlpha(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z1::genfun_alpha1(0, r, d));
    }
}
BENCHMARK(GenfunAlpha)->Args({4, 5})->Args({10, 15});

void LocalizationAlpha(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    const int d = static_cast<int>(state.range(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zi::alpha_i0(i, r, d));
    }
}
BENCHMARK(LocalizationAlpha)->Args({3, 2, 3})->Args({5, 3, 7})->Args({9, 4, 9});

void HadamardVector(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zi::hadamard_genfun_alpha0(r, d));
    }
}
BENCHMARK(HadamardVector)->Args({2, 5})->Args({4, 9});

void BuildAndSymmetrize(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            weight::symmetrize_to_chern(weight::specialize_H(weight::build_P(r, d), d)));
    }
}
BENCHMARK(BuildAndSymmetrize)->Args({1, 9})->Args({2, 15});

void SliceMembership(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const ZPoly probe = verify::production_alpha(d, d, r, d);
    for (auto _ : state) {
        // fresh ideal each pass so the slice cache does not short-circuit
        std::vector<ZPoly> gens;
        gens.push_back(z1::genfun_alpha1(0, r, d));
        gens.push_back(z1::genfun_alpha1(1, r, d));
        const ideal::ZIdeal first(gens);
        benchmark::DoNotOptimize(first.membership(probe).member);
    }
}
BENCHMARK(SliceMembership)->Args({2, 5})->Args({3, 9});

void ClaimIdentities(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z1::claim_R_coefficients(d));
    }
}
BENCHMARK(ClaimIdentities)->Arg(9)->Arg(21);

} // namespace

BENCHMARK_MAIN();
