#include "wheeler_lcp/bench.hpp"

#include <chrono>
#include <sstream>

namespace wlcp {

bench_row measure_index(const wheeler_dfa& d, const sampled_lcp& s) {
    bench_row r;
    r.n = s.n();
    r.sigma = d.sigma();
    r.h = s.h();
    r.bits_aux = s.size_bits();
    r.bits_total = r.bits_aux + d.nav_size_bits();
    r.bits_samples = s.sample_bits();
    r.popcount_c = s.num_samples();

    uint64_t total_hops = 0;
    const uint64_t lo = s.lo(), hi = s.hi();
    auto t0 = std::chrono::steady_clock::now();
    for (uint64_t i = lo; i <= hi; ++i) {
        uint64_t hops = 0;
        volatile ext_nat v = s.access(d, i, &hops);
        (void)v;
        total_hops += hops;
    }
    auto t1 = std::chrono::steady_clock::now();
    const double m = static_cast<double>(hi - lo + 1);
    r.mean_access_hops = static_cast<double>(total_hops) / m;
    r.mean_access_ns =
        std::chrono::duration_cast<std::chrono::duration<double, std::nano>>(t1 - t0).count() / m;
    return r;
}

std::string bench_csv_header() {
    return "n,sigma,h,bits_total,bits_samples,popcount_C,mean_access_hops,mean_access_ns";
}

std::string bench_csv_row(const bench_row& r) {
    std::ostringstream os;
    os << r.n << ',' << r.sigma << ',' << r.h << ',' << r.bits_total << ',' << r.bits_samples << ','
       << r.popcount_c << ',' << r.mean_access_hops << ',' << r.mean_access_ns;
    return os.str();
}

}  // namespace wlcp
