#include <benchmark/benchmark.h>

#include "arboreal/certify.hpp"
#include "arboreal/tree_group.hpp"

using namespace arboreal;

namespace {

BForm<Rat> dense_form(unsigned m) {
    std::vector<Rat> c;
    for (unsigned i = 0; i <= m; ++i) c.emplace_back(static_cast<long>((i * 7 + 3) % 11) - 5);
    return BForm<Rat>(c);
}

void BM_Resultant(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const BForm<Rat> p = dense_form(m);
    const BForm<Rat> q = dense_form(m + 1);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Discriminant(benchmark::State& state) {
    const BForm<Rat> p = dense_form(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(discriminant(p));
}
BENCHMARK(BM_Discriminant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateM(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_M(2, n));
}
BENCHMARK(BM_EnumerateM)->Arg(3)->Arg(4);

void BM_Closure(benchmark::State& state) {
    std::vector<TreeAut> gens;
    for (unsigned k = 0; k < 4; ++k) {
        TreeAut g(4);
        g.set_bit(NodeLabel{k, 0}, true);
        gens.push_back(g);
    }
    for (auto _ : state) benchmark::DoNotOptimize(closure(gens));
}
BENCHMARK(BM_Closure);

void BM_Kappa(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    QuadMap f = build_map(std::vector<Rat>{2, 0, -6}, std::vector<Rat>{1, 0, 3});
    const auto coll = *detect_collision(f);
    for (auto _ : state) benchmark::DoNotOptimize(kappa_list(f, coll, {Rat(3), Rat(1)}, N));
}
BENCHMARK(BM_Kappa)->Arg(4)->Arg(6)->Arg(8);

void BM_Certify(benchmark::State& state) {
    const QuadMap f = build_map(std::vector<Rat>{-2, -2, -2}, std::vector<Rat>{1, -2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(certify_max(f, {Rat(1), Rat(1)}, 5));
}
BENCHMARK(BM_Certify);

}  // namespace

BENCHMARK_MAIN();
