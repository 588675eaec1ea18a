#include <benchmark/benchmark.h>

#include <random>

#include "spectra/approx.hpp"
#include "spectra/mspec.hpp"
#include "spectra/profinite.hpp"
#include "spectra/rings.hpp"

namespace {

using namespace spectra;

RingPtr scrambled_ring(std::size_t n) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
    auto ring = mk_function_ring(pts, FieldTag::Q);
    Matrix<GQ> p = Matrix<GQ>::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = GQ(1);
    return scramble(ring, p).algebra;
}

void bm_split_characters(benchmark::State& state) {
    auto ring = scrambled_ring(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(split_characters(ring));
}
BENCHMARK(bm_split_characters)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void bm_refine_covering(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    auto sys = cantor_system(depth);
    Covering u;
    std::mt19937_64 rng(5);
    ClopenSet acc = empty_clopen(sys);
    for (int p = 0; p < 4; ++p) {
        std::vector<int> members;
        for (int z = 0; z < sys.level_sizes[depth]; ++z)
            if (rng() % 2) members.push_back(z);
        auto c = make_clopen(sys, depth, members);
        u.parts.push_back(c);
        acc = clopen_boolean(sys, acc, c, ClopenOp::Union);
    }
    auto rest = clopen_boolean(sys, acc, acc, ClopenOp::Complement);
    if (!rest.members.empty()) u.parts.push_back(rest);
    for (auto _ : state) benchmark::DoNotOptimize(refine_covering(sys, u));
}
BENCHMARK(bm_refine_covering)->Arg(6)->Arg(10)->Arg(14);

void bm_density_certificate(benchmark::State& state) {
    int depth = static_cast<int>(state.range(0));
    auto sys = cantor_system(depth);
    auto f = cantor_binary_fn(sys, depth);
    double eps = std::ldexp(4.0, -depth);
    for (auto _ : state) benchmark::DoNotOptimize(density_certificate(sys, f, eps));
}
BENCHMARK(bm_density_certificate)->Arg(10)->Arg(14)->Arg(18);

void bm_zmod_units(benchmark::State& state) {
    auto ring = make_zmod(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 0; a < ring->zmod().n; ++a)
            if (is_unit(zmod_elt(ring, a)).invertible) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_zmod_units)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
