#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wheeler_lcp/sampled_lcp.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// One measurement row of the space/time sweep; written as CSV by the CLI and
/// asserted against the size/hop bounds in the tests.
struct bench_row {
    uint64_t n = 0;
    uint64_t sigma = 0;
    uint64_t h = 0;
    uint64_t bits_total = 0;    // navigation index + auxiliary LCP structure
    uint64_t bits_samples = 0;  // stored sampled values only
    uint64_t bits_aux = 0;      // C + rank directory + RMQ + samples
    uint64_t popcount_c = 0;
    double mean_access_hops = 0.0;
    double mean_access_ns = 0.0;
};

/// Accesses every entry once, recording hop counts and wall time.
bench_row measure_index(const wheeler_dfa& d, const sampled_lcp& s);

std::string bench_csv_header();
std::string bench_csv_row(const bench_row& r);

}  // namespace wlcp
