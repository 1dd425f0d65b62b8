#include "a1/laurent.hpp"
#include "a1/transition.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace {

using namespace a1;

LaurentPoly random_poly(std::mt19937_64& rng, long long elo, long long ehi) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    LaurentPoly p;
    for (long long e = elo; e <= ehi; ++e) p.add_term(e, coeff(rng));
    return p;
}

// Permuted unit-triangular matrix: unimodular over the chart ring whose
// variable the entry exponents live in.
LaurentMatrix random_unimodular(std::mt19937_64& rng, long long n, bool lower,
                                long long elo, long long ehi) {
    std::vector<LaurentPoly> a(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = LaurentPoly::monomial(1, 0);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (lower ? i > j : i < j)
                a[static_cast<std::size_t>(i * n + j)] = random_poly(rng, elo, ehi);
    std::vector<long long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0LL);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LaurentPoly> b(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i * n + j)] = a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n + j)];
    return LaurentMatrix(n, std::move(b));
}

void bench_splitting_type(benchmark::State& state) {
    const long long n = state.range(0);
    std::mt19937_64 rng(0x5b1d5eedULL + static_cast<unsigned long long>(n));
    std::uniform_int_distribution<long long> deg(-3, 3);

    std::vector<LaurentMatrix> cases;
    for (int i = 0; i < 16; ++i) {
        std::vector<long long> degrees(static_cast<std::size_t>(n));
        for (auto& d : degrees) d = deg(rng);
        const LaurentMatrix u = random_unimodular(rng, n, true, 0, 2);
        const LaurentMatrix v = random_unimodular(rng, n, false, -2, 0);
        cases.push_back(u * LaurentMatrix::diagonal(degrees) * v);
    }

    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(splitting_type(cases[i % cases.size()]));
        ++i;
    }
}

BENCHMARK(bench_splitting_type)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bench_section_dim(benchmark::State& state) {
    const long long n = state.range(0);
    std::mt19937_64 rng(0xd1a60ca1ULL);
    std::uniform_int_distribution<long long> deg(-3, 3);
    std::vector<long long> degrees(static_cast<std::size_t>(n));
    for (auto& d : degrees) d = deg(rng);
    const LaurentMatrix m =
        random_unimodular(rng, n, true, 0, 2) * LaurentMatrix::diagonal(degrees) * random_unimodular(rng, n, false, -2, 0);

    for (auto _ : state) {
        benchmark::DoNotOptimize(section_dim(m, 3));
    }
}

BENCHMARK(bench_section_dim)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
