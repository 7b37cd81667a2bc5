#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// Extended natural: a plain integer whose "infinity" is an agreed sentinel
/// value (3n for full LCP arrays, k for de Bruijn suffix-LCP arrays). Finite
/// values are always strictly below the sentinel, so ordinary comparison is
/// the right order and addition saturates at the sentinel.
using ext_nat = uint64_t;

inline ext_nat sat_add1(ext_nat v, ext_nat inf) { return v >= inf ? inf : v + 1; }

/// The full LCP array of a Wheeler DFA: 2n-1 values indexed 2..2n. Even entry
/// 2i holds lcp(min_i, max_i); odd entry 2i-1 holds lcp(max_{i-1}, min_i).
struct lcp_array {
    uint64_t n = 0;
    ext_nat inf = 0;               // sentinel (3n); also the comparison cap
    std::vector<ext_nat> values;   // values[i - 2] = entry i

    uint64_t lo() const { return 2; }
    uint64_t hi() const { return 2 * n; }
    ext_nat at(uint64_t i) const {
        if (i < 2 || i > 2 * n) throw std::out_of_range("lcp_array::at: entry out of range");
        return values[i - 2];
    }
};

namespace detail {
struct pred_table {
    std::string labels;           // 1-based; labels[i] = λ(u_i)
    std::vector<uint32_t> pmin;   // 1-based
    std::vector<uint32_t> pmax;
};
}  // namespace detail

/// Lazily yields the lexicographically smallest (or largest) backward string
/// of a state: λ(u_i), λ(p(i)), λ(p²(i)), ... where p is pred_min (pred_max).
/// Predecessors come from a table computed once from the plain edge list, so
/// the stream is independent of the compact navigation index.
class backward_stream {
public:
    char next() {
        char c = tab_->labels[cur_];
        cur_ = use_max_ ? tab_->pmax[cur_] : tab_->pmin[cur_];
        return c;
    }
    /// State whose label the next call to next() will yield.
    uint32_t state() const { return cur_; }

private:
    friend class stream_source;
    backward_stream(std::shared_ptr<const detail::pred_table> tab, uint32_t start, bool use_max)
        : tab_(std::move(tab)), cur_(start), use_max_(use_max) {}
    std::shared_ptr<const detail::pred_table> tab_;
    uint32_t cur_;
    bool use_max_;
};

/// Factory for backward streams of one automaton.
class stream_source {
public:
    explicit stream_source(const wheeler_dfa& d);
    backward_stream min_stream(uint32_t i) const;
    backward_stream max_stream(uint32_t i) const;

private:
    std::shared_ptr<const detail::pred_table> tab_;
    uint32_t n_;
};

/// Length of the longest common prefix of two streams, or `cap` (the infinity
/// sentinel) once cap characters have matched.
ext_nat lcp_pair(backward_stream a, backward_stream b, uint64_t cap);

/// Reference construction: every entry via lcp_pair with cap 3n. Quadratic by
/// design; this is the ground-truth oracle for the sampled structure.
lcp_array build_full_lcp(const wheeler_dfa& d);

/// Same output as build_full_lcp, computed by walking predecessor chains with
/// memoization on state meetings. Used by the build pipeline for large inputs;
/// cross-checked against build_full_lcp in the tests.
lcp_array build_full_lcp_fast(const wheeler_dfa& d);

/// Checks min_1 ⪯ max_1 ⪯ min_2 ⪯ ... ⪯ min_n ⪯ max_n with streams compared
/// up to 3n characters.
bool verify_min_max_chain(const wheeler_dfa& d);

}  // namespace wlcp
