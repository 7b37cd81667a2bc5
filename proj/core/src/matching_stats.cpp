#include "wheeler_lcp/matching_stats.hpp"

#include <algorithm>
#include <optional>

namespace wlcp {

namespace {

// Interval of states reading `s` as a path label, by forward search from the
// full range; empty optional if the string is not readable.
std::optional<state_interval> read_string(const wheeler_dfa& d, const std::string& s,
                                          size_t from, size_t to) {
    state_interval iv{1, d.num_states()};
    for (size_t p = from; p < to; ++p) {
        auto next = d.forward_search(iv.first, iv.second, s[p]);
        if (!next) return std::nullopt;
        iv = *next;
    }
    return iv;
}

}  // namespace

ms_result ms_oracle(const wheeler_dfa& d, const std::string& pattern) {
    ms_result out;
    out.lengths.reserve(pattern.size());
    state_interval iv{1, d.num_states()};
    uint64_t len = 0;
    for (size_t i = 0; i < pattern.size(); ++i) {
        auto next = d.forward_search(iv.first, iv.second, pattern[i]);
        if (next) {
            iv = *next;
            ++len;
        } else {
            // Longest readable suffix ending at i is at most len; recompute
            // shorter suffixes from scratch until one reads through.
            uint64_t t = len;
            std::optional<state_interval> got;
            for (; t >= 1; --t) {
                got = read_string(d, pattern, i + 1 - t, i + 1);
                if (got) break;
            }
            if (got) {
                iv = *got;
                len = t;
            } else {
                iv = {1, d.num_states()};
                len = 0;
            }
        }
        out.lengths.push_back(len);
    }
    return out;
}

state_interval expand_to_depth(const sampled_lcp& s, const wheeler_dfa& d, state_interval iv,
                               uint64_t t) {
    const uint32_t n = d.num_states();
    auto range_min = [&](uint64_t a, uint64_t b) {
        return s.access(d, s.rmq().query(a, b));
    };
    // smallest l' with every entry in (2l'..2l-1] at least t
    uint32_t lo = 1, hi = iv.first;
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (range_min(2 * uint64_t(mid) + 1, 2 * uint64_t(iv.first) - 1) >= t)
            hi = mid;
        else
            lo = mid + 1;
    }
    uint32_t lp = lo;
    // largest r' with every entry in [2r+1..2r'-1) at least t
    lo = iv.second, hi = n;
    while (lo < hi) {
        uint32_t mid = hi - (hi - lo) / 2;
        if (range_min(2 * uint64_t(iv.second) + 1, 2 * uint64_t(mid) - 1) >= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    return {lp, lo};
}

ms_result matching_statistics(const sampled_lcp& s, const wheeler_dfa& d,
                              const std::string& pattern) {
    const uint32_t n = d.num_states();
    ms_result out;
    out.lengths.reserve(pattern.size());
    state_interval iv{1, n};
    uint64_t len = 0;
    for (size_t i = 0; i < pattern.size(); ++i) {
        const char c = pattern[i];
        if (d.symbols().find(c) == std::string::npos) {  // unknown symbol: hard reset
            iv = {1, n};
            len = 0;
            out.lengths.push_back(0);
            continue;
        }
        while (true) {
            auto next = d.forward_search(iv.first, iv.second, c);
            if (next) {
                iv = *next;
                ++len;
                break;
            }
            if (len == 0) break;  // nothing matches; record 0 at [1, n]
            // Upper bound on the depth at which the nearest outside state joins
            // the interval; capping at len-1 guarantees progress.
            uint64_t t = 0;
            if (iv.first > 1) t = std::max(t, s.access(d, 2 * uint64_t(iv.first) - 1));
            if (iv.second < n) t = std::max(t, s.access(d, 2 * uint64_t(iv.second) + 1));
            t = std::min(t, len - 1);
            if (t == 0) {
                iv = {1, n};
                len = 0;
                continue;
            }
            // The boundary LCP values never under-estimate the longest useful
            // suffix, but they can over-estimate: a neighbor may share a
            // t-suffix with the boundary state's extremal string without being
            // reachable by the matched suffix itself. Re-reading the suffix
            // keeps the interval exactly equal to its forward-search image.
            len = t;
            iv = *read_string(d, pattern, i - t, i);
        }
        out.lengths.push_back(len);
    }
    return out;
}

}  // namespace wlcp
