#include <benchmark/benchmark.h>

#include "pyternary/analysis.hpp"
#include "pyternary/pfaffian.hpp"
#include "pyternary/witness.hpp"

using namespace pyternary;

namespace {

DegreeData degree_data(int d, const std::vector<int>& gens) {
    DegreeData dd;
    dd.socle = 2 * d;
    dd.k = gens.front();
    for (int q : gens) {
        dd.gens.push_back(q);
        dd.rels.push_back(2 * d + 3 - q);
        dd.diag.push_back(2 * d + 3 - 2 * q);
    }
    dd.minimal = true;
    return dd;
}

void BM_enumerate_candidates(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(d));
}
BENCHMARK(BM_enumerate_candidates)->Arg(5)->Arg(7)->Arg(9);

void BM_sieve(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sieve(d));
}
BENCHMARK(BM_sieve)->Arg(6)->Arg(7);

void BM_hilbert_from_degrees(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hilbert_from_degrees(12, {5, 6, 6, 6, 6, 8, 8}, {10, 9, 9, 9, 9, 7, 7}));
}
BENCHMARK(BM_hilbert_from_degrees);

void BM_ehrhart(benchmark::State& state) {
    const StackedPolytope p = build_polytope(6, {4, 5, 6});
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart(p));
}
BENCHMARK(BM_ehrhart);

void BM_idp_check(benchmark::State& state) {
    const StackedPolytope p = build_polytope(6, {5, 5, 5});
    for (auto _ : state) benchmark::DoNotOptimize(idp_check(p));
}
BENCHMARK(BM_idp_check);

void BM_pfaffian_instance(benchmark::State& state) {
    // draw + full Hilbert function validation, the witness-suite workhorse
    const DegreeData dd = degree_data(5, {4, 5, 5, 5, 7});
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian_generators(5, dd, seed++));
}
BENCHMARK(BM_pfaffian_instance);

void BM_graded_dim(benchmark::State& state) {
    const auto inst = pfaffian_generators(6, degree_data(6, {5, 6, 6, 6, 6, 8, 8}), 3);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_dim(inst.gens, t));
}
BENCHMARK(BM_graded_dim)->Arg(8)->Arg(10)->Arg(12);

void BM_quadratic_syzygies(benchmark::State& state) {
    const auto inst = pfaffian_generators(5, degree_data(5, {4, 5, 5, 5, 7}), 4);
    const GradedPiece j5 = graded_piece(inst.gens, 5);
    for (auto _ : state) benchmark::DoNotOptimize(quadratic_syzygies(j5.basis, 5));
}
BENCHMARK(BM_quadratic_syzygies);

void BM_reduce_length(benchmark::State& state) {
    const auto inst = pfaffian_generators(5, degree_data(5, {4, 5, 5, 5, 7}), 5);
    const GradedPiece j5 = graded_piece(inst.gens, 5);
    const auto syz = quadratic_syzygies(j5.basis, 5);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_length(j5.basis, syz.front()));
}
BENCHMARK(BM_reduce_length);

} // namespace

BENCHMARK_MAIN();
