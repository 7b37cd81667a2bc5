#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wheeler_lcp/sampled_lcp.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// A node of a variable-order traversal: the colex interval of order-k nodes
/// sharing their last `order` characters, maximal for that suffix.
struct vo_node {
    uint32_t a = 0, b = 0;
    uint32_t order = 0;
    bool operator==(const vo_node&) const = default;
};

enum class dbg_mode : uint8_t { baseline = 0, sampled = 1 };

/// BOSS-style k-th order de Bruijn graph over {A,C,G,T} with '$' padding,
/// nodes in colex order, plus the suffix-LCP array of adjacent node labels
/// (stored plainly in baseline mode, sampled with h = ⌈log₂ k⌉ otherwise).
class debruijn_index {
public:
    /// `strings` one sequence per line semantics are handled by the caller;
    /// here: distinct k-mers of every string plus '$'-padded prefixes of each
    /// string's first k-mer and the all-'$' root. Edges come from (k+1)-mers
    /// and the padding chains. Throws on invalid characters or when no string
    /// contributes a k-mer.
    static debruijn_index build(const std::vector<std::string>& strings, uint32_t k,
                                dbg_mode mode = dbg_mode::sampled,
                                const std::vector<uint64_t>* external_sampling = nullptr);

    uint32_t k() const { return k_; }
    dbg_mode mode() const { return mode_; }
    const wheeler_dfa& dfa() const { return dfa_; }
    uint32_t num_nodes() const { return dfa_.num_states(); }
    /// Padded label of node i (length k, '$'-padded on the left).
    const std::string& node_label(uint32_t i) const { return labels_.at(i - 1); }
    const std::vector<std::string>& node_labels() const { return labels_; }

    /// Longest common suffix length of the labels of nodes i-1 and i.
    uint64_t lcp_bar(uint32_t i, uint64_t* hops = nullptr) const;
    const std::vector<uint64_t>& lcp_bar_plain() const { return bar_; }
    const sampled_lcp& sampled() const { return sampled_; }

    vo_node root() const { return {1, num_nodes(), 0}; }
    /// Nodes whose labels end with `suffix` (length ≤ k), at order |suffix|.
    std::optional<vo_node> vo_start(const std::string& suffix) const;
    vo_node vo_shorter(vo_node v, uint32_t order) const;
    std::vector<vo_node> vo_longer(vo_node v, uint32_t order) const;
    std::optional<vo_node> vo_forward(vo_node v, char c) const;
    vo_node vo_backward(vo_node v) const;

    static debruijn_index from_parts(uint32_t k, dbg_mode mode, wheeler_dfa dfa,
                                     std::vector<uint64_t> bar, sampled_lcp sampled);

private:
    // minimum of lcp_bar over entries [a, b] (1-based node entries, a ≥ 2)
    uint64_t range_min(uint64_t a, uint64_t b) const;
    // maximal interval around [a, b] with internal lcp_bar ≥ t
    state_interval maximalize(uint32_t a, uint32_t b, uint64_t t) const;
    void rebuild_labels();

    uint32_t k_ = 0;
    dbg_mode mode_ = dbg_mode::sampled;
    wheeler_dfa dfa_;
    std::vector<std::string> labels_;  // colex-sorted padded k-mers
    std::vector<uint64_t> bar_;        // bar_[i-2] = entry i (baseline; kept for tests)
    sampled_lcp sampled_;              // dbg_odd domain (sampled mode)
};

}  // namespace wlcp
