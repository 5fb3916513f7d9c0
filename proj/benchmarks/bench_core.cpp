#include <benchmark/benchmark.h>

#include "mor/attack.hpp"
#include "mor/polyfactor.hpp"

using namespace mor;

namespace {

const GroupParams& params_4() {
    static const GroupParams p = GroupParams::create(4, 10007);
    return p;
}

void BM_UTMultiply(benchmark::State& state) {
    const GroupParams params = GroupParams::create(state.range(0), 10007);
    Rng rng(1);
    UTElement a = UTElement::random(params, rng);
    UTElement b = UTElement::random(params, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_UTMultiply)->Arg(3)->Arg(5)->Arg(8);

void BM_Collect(benchmark::State& state) {
    const GroupParams params = GroupParams::create(state.range(0), 10007);
    Rng rng(2);
    UTElement a = UTElement::random(params, rng);
    for (auto _ : state) benchmark::DoNotOptimize(collect(a));
}
BENCHMARK(BM_Collect)->Arg(3)->Arg(5)->Arg(8);

void BM_ApplyAutomorphismPublic(benchmark::State& state) {
    Rng rng(3);
    auto [pk, sk] = keygen(params_4(), 7);
    UTElement a = UTElement::random(params_4(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(pk.phi.apply(a));
}
BENCHMARK(BM_ApplyAutomorphismPublic);

void BM_CharPoly(benchmark::State& state) {
    Rng rng(4);
    MatrixFp m(state.range(0), 10007);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) m.set(i, j, rng.below(10007));
    }
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(3)->Arg(6);

void BM_FactorPoly(benchmark::State& state) {
    Rng rng(5);
    std::vector<std::uint64_t> c(7, 0);
    for (auto& x : c) x = rng.below(10007);
    c.back() = 1;
    PolyFp f(10007, c);
    for (auto _ : state) {
        Rng local(6);
        benchmark::DoNotOptimize(factor_poly(f, local));
    }
}
BENCHMARK(BM_FactorPoly);

void BM_KeyGen(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(keygen(params_4(), seed++));
}
BENCHMARK(BM_KeyGen);

void BM_Encrypt(benchmark::State& state) {
    auto [pk, sk] = keygen(params_4(), 7);
    Rng rng(8);
    UTElement msg = UTElement::random(params_4(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(encrypt(pk, msg, rng));
}
BENCHMARK(BM_Encrypt);

void BM_Decrypt(benchmark::State& state) {
    auto [pk, sk] = keygen(params_4(), 7);
    Rng rng(9);
    Ciphertext ct = encrypt(pk, UTElement::random(params_4(), rng), rng);
    for (auto _ : state) benchmark::DoNotOptimize(decrypt(sk, ct));
}
BENCHMARK(BM_Decrypt);

void BM_Attack(benchmark::State& state) {
    auto [pk, sk] = keygen(params_4(), 7);
    for (auto _ : state) benchmark::DoNotOptimize(break_mor(pk, {}));
}
BENCHMARK(BM_Attack);

void BM_PohligHellman(benchmark::State& state) {
    FpUnitGroup zp{10007};
    const FactoredInteger ord = factor_integer(10006);
    Rng rng(10);
    for (auto _ : state) {
        std::uint64_t base = 2 + rng.below(10004);
        std::uint64_t target = group_pow(zp, base, rng.below(10006));
        benchmark::DoNotOptimize(
            pohlig_hellman(zp, base, target, FactoredInteger::of_divisor(
                                                 ord, element_order(zp, base, ord))));
    }
}
BENCHMARK(BM_PohligHellman);

}  // namespace

BENCHMARK_MAIN();
