#include "a1/concordance.hpp"
#include "a1/split_bundle.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace a1;

std::vector<SplitBundle> random_bundles(long long rank, int count) {
    std::mt19937_64 rng(0xcafe0000ULL + static_cast<unsigned long long>(rank));
    std::uniform_int_distribution<Deg> deg(-3, 3);
    std::vector<SplitBundle> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Deg> degrees(static_cast<std::size_t>(rank));
        for (auto& d : degrees) d = deg(rng);
        out.emplace_back(std::move(degrees));
    }
    return out;
}

void bench_generate_certificate(benchmark::State& state) {
    const auto bundles = random_bundles(state.range(0), 32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_certificate(bundles[i % bundles.size()]));
        ++i;
    }
}

BENCHMARK(bench_generate_certificate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bench_verify_certificate(benchmark::State& state) {
    const auto bundles = random_bundles(state.range(0), 32);
    std::vector<ConcordanceCertificate> certs;
    for (const auto& e : bundles) certs.push_back(generate_certificate(e));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_certificate(certs[i % certs.size()]));
        ++i;
    }
}

BENCHMARK(bench_verify_certificate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void bench_json_round_trip(benchmark::State& state) {
    const auto bundles = random_bundles(4, 8);
    std::vector<std::string> docs;
    for (const auto& e : bundles) docs.push_back(certificate_to_json(generate_certificate(e)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(certificate_from_json(docs[i % docs.size()]));
        ++i;
    }
}

BENCHMARK(bench_json_round_trip)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
