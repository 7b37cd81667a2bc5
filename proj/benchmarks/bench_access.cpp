// Microbenchmarks for the core query paths: sampled LCP access across h,
// RMQ queries, forward search and matching statistics.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "wheeler_lcp/generator.hpp"
#include "wheeler_lcp/lcp_oracle.hpp"
#include "wheeler_lcp/matching_stats.hpp"
#include "wheeler_lcp/sampled_lcp.hpp"

namespace {

struct setup {
    wlcp::wheeler_dfa d;
    wlcp::lcp_array full;

    static const setup& instance(uint32_t n) {
        static std::map<uint32_t, setup> cache;
        auto it = cache.find(n);
        if (it == cache.end()) {
            std::mt19937_64 rng(42);
            setup s{wlcp::random_wheeler_dfa(rng, n), {}};
            s.full = wlcp::build_full_lcp_fast(s.d);
            it = cache.emplace(n, std::move(s)).first;
        }
        return it->second;
    }
};

void bm_access(benchmark::State& state) {
    const setup& s = setup::instance(static_cast<uint32_t>(state.range(0)));
    auto idx = wlcp::sampled_lcp::build(s.d, s.full, static_cast<uint64_t>(state.range(1)));
    std::mt19937_64 rng(7);
    const uint64_t n = s.d.num_states();
    for (auto _ : state) {
        uint64_t i = 2 + rng() % (2 * n - 1);
        benchmark::DoNotOptimize(idx.access(s.d, i));
    }
    state.counters["bits_aux"] = static_cast<double>(idx.size_bits());
}

void bm_rmq(benchmark::State& state) {
    const setup& s = setup::instance(static_cast<uint32_t>(state.range(0)));
    wlcp::rmq_index r(std::span<const uint64_t>(s.full.values.data(), s.full.values.size()), 2);
    std::mt19937_64 rng(8);
    const uint64_t m = s.full.values.size();
    for (auto _ : state) {
        uint64_t i = 2 + rng() % m, j = 2 + rng() % m;
        if (i > j) std::swap(i, j);
        benchmark::DoNotOptimize(r.query(i, j));
    }
}

void bm_forward_search(benchmark::State& state) {
    const setup& s = setup::instance(static_cast<uint32_t>(state.range(0)));
    std::mt19937_64 rng(9);
    const uint32_t n = s.d.num_states();
    const std::string& syms = s.d.symbols();
    for (auto _ : state) {
        uint32_t a = 1 + rng() % n, b = 1 + rng() % n;
        if (a > b) std::swap(a, b);
        benchmark::DoNotOptimize(s.d.forward_search(a, b, syms[rng() % syms.size()]));
    }
}

void bm_matching_stats(benchmark::State& state) {
    const setup& s = setup::instance(static_cast<uint32_t>(state.range(0)));
    auto idx = wlcp::sampled_lcp::build(s.d, s.full, wlcp::pick_h_linear(s.d.num_states()));
    std::mt19937_64 rng(10);
    std::string syms = s.d.symbols().substr(1);
    std::string pat(200, 'a');
    for (auto& c : pat) c = syms[rng() % syms.size()];
    for (auto _ : state) benchmark::DoNotOptimize(wlcp::matching_statistics(idx, s.d, pat));
}

}  // namespace

BENCHMARK(bm_access)->ArgsProduct({{1 << 10, 1 << 13}, {1, 4, 16}});
BENCHMARK(bm_rmq)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(bm_forward_search)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(bm_matching_stats)->Arg(1 << 10)->Arg(1 << 13);

BENCHMARK_MAIN();
