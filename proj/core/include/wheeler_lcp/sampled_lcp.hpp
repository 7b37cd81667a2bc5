#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wheeler_lcp/bit_vector.hpp"
#include "wheeler_lcp/lcp_oracle.hpp"
#include "wheeler_lcp/rmq.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// Which array the structure simulates: the full interleaved LCP array
/// (entries 2..2n of a Wheeler DFA), or the odd-entry suffix-LCP array of a
/// de Bruijn Wheeler graph (entries 2..n, one per adjacent node pair).
enum class lcp_domain : uint8_t { full = 0, dbg_odd = 1 };

/// Entry-dependency map: parent(i) is the entry whose value is one less than
/// entry i (located by a range minimum query over the predecessor window), or
/// 0 when entry i is a zero (odd entry with differing labels).
struct r_graph {
    uint64_t lo = 2, hi = 0;
    std::vector<uint64_t> parent;  // parent[i - lo]; 0 = undefined

    uint64_t parent_of(uint64_t i) const { return parent[i - lo]; }
};

/// parent entry of entry i in the full domain, or 0 when undefined.
uint64_t r_map(const wheeler_dfa& d, const rmq_index& rmq, uint64_t i);
/// parent entry of entry i (2..n) in the dbg_odd domain, or 0 when undefined.
uint64_t r_map_dbg(const wheeler_dfa& d, const rmq_index& rmq_bar, uint64_t i);

r_graph build_r_graph(const wheeler_dfa& d, const rmq_index& rmq, lcp_domain dom);

/// Greedy chain sampling: scans candidates in increasing entry order and
/// picks every v whose h ancestors v(0..h-1) are defined, distinct and
/// unmarked, adding v(h-1) to the result and marking the chain. A restart
/// after each pick, as one would read the construction, is equivalent to a
/// single forward pass: marking only ever shrinks eligibility. Returns the
/// sampled entries in increasing order; the result has at most
/// (hi-lo+1)/h elements and every node reaches a sampled, parentless or
/// repeated ancestor within 2h-2 steps.
std::vector<uint64_t> build_sampling(const r_graph& g, uint64_t h);

/// The sampled LCP structure: bitvector C over the entry range, the sampled
/// values LCP*, and a range-minimum structure built from the (then
/// discarded) value array. Supports exact entry access in at most 2h-1
/// recursive steps.
///
/// Immutable after build; access() uses only per-call scratch, so concurrent
/// queries are safe.
class sampled_lcp {
public:
    sampled_lcp() = default;

    /// Builds from the full value array (which is not retained). When
    /// `external_sampling` is given it is validated against the sampling
    /// properties and used verbatim instead of running the greedy pass.
    static sampled_lcp build(const wheeler_dfa& d, const lcp_array& full, uint64_t h,
                             lcp_domain dom = lcp_domain::full,
                             const std::vector<uint64_t>* external_sampling = nullptr);

    /// Entry value, computed per the sampled-access recursion. `hops`, when
    /// given, receives the number of recursive calls (bounded by 2h-1).
    ext_nat access(const wheeler_dfa& d, uint64_t i, uint64_t* hops = nullptr) const;

    uint64_t h() const { return h_; }
    uint64_t n() const { return n_; }
    ext_nat inf() const { return inf_; }
    lcp_domain domain() const { return dom_; }
    uint64_t lo() const { return 2; }
    uint64_t hi() const { return dom_ == lcp_domain::full ? 2 * n_ : n_; }
    uint64_t num_samples() const { return star_.size(); }
    const std::vector<ext_nat>& star() const { return star_; }
    const bit_vector& marks() const { return c_; }
    const rmq_index& rmq() const { return rmq_; }

    uint64_t sample_bits() const { return star_.size() * 64; }
    uint64_t marks_bits() const { return c_.data_bits() + c_.overhead_bits(); }
    uint64_t size_bits() const { return sample_bits() + marks_bits() + rmq_.size_bits(); }

    static sampled_lcp from_parts(lcp_domain dom, uint64_t n, uint64_t h, ext_nat inf,
                                  bit_vector c, std::vector<ext_nat> star, rmq_index rmq);

private:
    uint64_t parent_entry(const wheeler_dfa& d, uint64_t i) const;

    lcp_domain dom_ = lcp_domain::full;
    uint64_t n_ = 0;
    uint64_t h_ = 1;
    ext_nat inf_ = 0;
    bit_vector c_;                // position p marks entry lo()+p-1
    std::vector<ext_nat> star_;   // sampled values, increasing entry order
    rmq_index rmq_;
};

/// Sampling parameter policies: h = ⌈log₂ n⌉ for the linear-space variant,
/// h = ⌈log₂ n / log₂ log₂ σ⌉ for the smaller-time variant; both at least 1.
uint64_t pick_h_linear(uint64_t n);
uint64_t pick_h_loglog(uint64_t n, uint64_t sigma);

}  // namespace wlcp
