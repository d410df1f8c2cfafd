#include <benchmark/benchmark.h>

#include "zakfiber/frames.hpp"
#include "zakfiber/instances.hpp"
#include "zakfiber/invariant.hpp"
#include "zakfiber/rep.hpp"

using namespace zakfiber;

static void BM_zak_transform(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    auto G = make_abelian({N});
    auto ctx = make_pair_context(G, subgroup_generate(G, {N / 8}));
    SplitMix64 rng(1);
    const GroupFunction f = instances::random_function(G, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zak(ctx, f).values.sum());
    }
}
BENCHMARK(BM_zak_transform)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_zak_roundtrip(benchmark::State& state) {
    auto G = make_abelian({96});
    auto ctx = make_pair_context(G, subgroup_generate(G, {8}));
    SplitMix64 rng(2);
    const GroupFunction f = instances::random_function(G, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zak_inverse(zak(ctx, f)).values.sum());
    }
}
BENCHMARK(BM_zak_roundtrip);

static void BM_fourier(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    auto G = make_abelian({N});
    const DualGroup D = characters(G);
    SplitMix64 rng(3);
    const GroupFunction f = instances::random_function(G, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier(D, f.values).sum());
    }
}
BENCHMARK(BM_fourier)->Arg(64)->Arg(256);

static void BM_frame_report(benchmark::State& state) {
    auto G = make_dihedral(static_cast<int>(state.range(0)));
    auto ctx = make_pair_context(G, subgroup_generate(G, {1}));
    SplitMix64 rng(4);
    const std::vector<GroupFunction> fam = instances::random_family(G, 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(translate_frame_report(ctx, fam).A_direct);
    }
}
BENCHMARK(BM_frame_report)->Arg(6)->Arg(12)->Arg(24);

static void BM_gabor_check(benchmark::State& state) {
    auto G = make_abelian({48});
    auto ctx = make_pair_context(G, subgroup_generate(G, {6}));
    SplitMix64 rng(5);
    const std::vector<GroupFunction> fam = instances::random_family(G, 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gabor_frame_check(ctx, fam).report.B_direct);
    }
}
BENCHMARK(BM_gabor_check);

static void BM_range_projection(benchmark::State& state) {
    auto G = make_abelian({64});
    auto ctx = make_pair_context(G, subgroup_generate(G, {4}));
    SplitMix64 rng(6);
    std::vector<ZakArray> zaks;
    for (const auto& f : instances::random_family(G, 3, rng))
        zaks.push_back(zak(ctx, f));
    const RangeFunction J = range_function(zaks);
    const GroupFunction g = instances::random_function(G, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ti_projection(g, J).values.sum());
    }
}
BENCHMARK(BM_range_projection);

static void BM_rep_bracket(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto G = make_abelian({12});
    SplitMix64 rng(7);
    const UnitaryRep rep = instances::random_rep(G, d, rng);
    Eigen::VectorXcd phi(d), psi(d);
    for (int i = 0; i < d; ++i) {
        phi[i] = cxd(instances::gaussian(rng), instances::gaussian(rng));
        psi[i] = cxd(instances::gaussian(rng), instances::gaussian(rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(bracket(rep, phi, psi).sum());
    }
}
BENCHMARK(BM_rep_bracket)->Arg(4)->Arg(8)->Arg(16);

static void BM_rep_frame_check(benchmark::State& state) {
    auto G = make_abelian({8});
    SplitMix64 rng(8);
    const UnitaryRep rep = instances::random_rep(G, 8, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    std::vector<Eigen::VectorXcd> fam;
    Eigen::VectorXcd v(8);
    for (int i = 0; i < 8; ++i) v[i] = cxd(instances::gaussian(rng), instances::gaussian(rng));
    fam.push_back(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rep_frame_check(rep, gens, fam).A_fiber);
    }
}
BENCHMARK(BM_rep_frame_check);

BENCHMARK_MAIN();
