#include "dendrex/drawing.hpp"
#include "dendrex/graphalg.hpp"
#include "dendrex/identities.hpp"

#include <benchmark/benchmark.h>

using namespace dendrex;

static void BM_EnumerateTrees(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_trees(n));
    }
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(3, 7);

static void BM_IdentitySuite(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_identities_up_to(n));
    }
}
BENCHMARK(BM_IdentitySuite)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_HomSetLinear(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Tree const s = linear_tree(n);
    Tree const t = linear_tree(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hom_set(s, t));
    }
}
BENCHMARK(BM_HomSetLinear)->DenseRange(1, 5);

// Induced homs of every arrow L_n -> L_n.
static void BM_InducedHoms(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const homs = hom_set(linear_tree(n), linear_tree(n));
    for (auto _ : state) {
        for (const auto& f : homs) {
            benchmark::DoNotOptimize(induced_hom(f));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * homs.size()));
}
BENCHMARK(BM_InducedHoms)->DenseRange(1, 4);

static void BM_Functoriality(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_functoriality(n));
    }
}
BENCHMARK(BM_Functoriality)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Representable(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    OmegaTruncation::get(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(representable(linear_tree(n), 4));
    }
}
BENCHMARK(BM_Representable)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_BoundaryNormality(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Tree const c = standard_tree({StandardShape::corolla, n});
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_normal_mono(boundary(c, n + 1)));
    }
}
BENCHMARK(BM_BoundaryNormality)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_DrawAndVerify(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto x = representable(linear_tree(n), 4);
    for (auto _ : state) {
        Drawing const d = draw(x);
        benchmark::DoNotOptimize(verify_drawing(d));
    }
}
BENCHMARK(BM_DrawAndVerify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CKMatrices(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    CKPresentation const p = ck_presentation(linear_graph(n));
    MatrixAssignment const m = linear_graph_ck_matrices(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_matrix_assignment(p, m));
    }
}
BENCHMARK(BM_CKMatrices)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMicrosecond);

static void BM_MatrixRepS(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    StarPresentation const p = dendrex_presentation(linear_graph_tree(n));
    MatrixAssignment const m = matrix_rep_s(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_matrix_assignment(p, m));
    }
}
BENCHMARK(BM_MatrixRepS)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
