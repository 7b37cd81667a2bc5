#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wheeler_lcp/bit_vector.hpp"

namespace wlcp {

/// Edge of a Wheeler DFA; the label is implied by the target state.
struct edge {
    uint32_t src = 0;
    uint32_t dst = 0;
    bool operator==(const edge&) const = default;
    auto operator<=>(const edge&) const = default;
};

/// Thrown by wheeler_dfa::validate; carries one message per violated
/// condition, each with witness states/edges.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

using state_interval = std::pair<uint32_t, uint32_t>;

/// A validated Wheeler DFA with states 1..n in Wheeler order, plus the
/// compact navigation index (unary degree sequences, edge-label sequence,
/// label-boundary bitvector). The plain edge list is retained as the oracle
/// for the navigation queries and for (de)serialization tests.
///
/// Immutable after validation; queries are const and thread-safe.
class wheeler_dfa {
public:
    wheeler_dfa() = default;

    /// Validates the claimed Wheeler order and builds the navigation index.
    /// The sentinel self-loop (1,1) is added if absent. Reports every violated
    /// condition at once. `require_reachable` is relaxed for de Bruijn graphs,
    /// which need no initial state.
    static wheeler_dfa validate(uint32_t n, std::vector<edge> edges, std::string lambda,
                                const std::vector<uint32_t>& finals, char sentinel = '#',
                                bool require_reachable = true);

    uint32_t num_states() const { return n_; }
    uint32_t num_edges() const { return e_; }
    uint32_t sigma() const { return static_cast<uint32_t>(symbols_.size()); }
    char sentinel() const { return sentinel_; }
    const std::string& symbols() const { return symbols_; }  // sorted, sentinel first

    /// λ(u_i) via the label-boundary bitvector and one rank query.
    char label(uint32_t i) const;

    /// Smallest / largest i' with (u_i', u_i) in E.
    uint32_t pred_min(uint32_t i) const;
    uint32_t pred_max(uint32_t i) const;
    uint32_t in_degree(uint32_t i) const;
    uint32_t out_degree(uint32_t i) const;

    /// E_{r,s,c}: interval of c-labeled states with a predecessor in [r,s].
    /// Unknown symbols yield an empty result.
    std::optional<state_interval> forward_search(uint32_t r, uint32_t s, char c) const;

    bool is_final(uint32_t i) const { return finals_.get(i); }
    const bit_vector& finals() const { return finals_; }

    /// Plain edges sorted by (src, dst); the non-succinct oracle representation.
    const std::vector<edge>& edges() const { return edges_; }
    const std::string& lambda() const { return lambda_; }

    /// Bits used by the compact navigation index (degree sequences, label
    /// sequence, boundary bitvector, per-symbol select directories).
    uint64_t nav_size_bits() const;

    // Serialization building blocks; everything else is rebuilt on load.
    const bit_vector& out_bits() const { return out_; }
    const bit_vector& in_bits() const { return in_; }
    const std::string& edge_labels() const { return edge_labels_; }
    static wheeler_dfa from_parts(uint32_t n, uint32_t e, char sentinel, std::string symbols,
                                  std::string lambda, bit_vector out, bit_vector in,
                                  std::string edge_labels, bit_vector finals);

private:
    void build_nav_index();
    void rebuild_edges_from_nav();
    int symbol_index(char c) const;  // -1 if absent
    // global in-slot index range of state i's incoming edges (1-based, slots
    // ordered by (label, source))
    std::pair<uint64_t, uint64_t> in_slot_range(uint32_t i) const;
    uint32_t source_of_out_slot(uint64_t t) const;
    uint32_t state_of_in_slot(uint64_t t) const;

    uint32_t n_ = 0;
    uint32_t e_ = 0;
    char sentinel_ = '#';
    std::string symbols_;
    std::string lambda_;  // 1-based; lambda_[0] unused
    std::vector<edge> edges_;
    bit_vector finals_;

    // compact navigation index
    bit_vector label_bounds_;  // 1 where λ(u_i) != λ(u_{i-1}); position 1 set
    bit_vector out_;           // per state: 1, then out-degree zeros
    bit_vector in_;            // per state: 1, then in-degree zeros
    std::string edge_labels_;  // λ(dst) of out-slots sorted by (src, dst)
    std::vector<std::vector<uint32_t>> label_pos_;  // per symbol: out-slot positions
    std::vector<uint64_t> in_base_;                 // per symbol: in-slots before its states
    std::vector<uint32_t> first_state_;             // per symbol: first state with that label
};

}  // namespace wlcp
