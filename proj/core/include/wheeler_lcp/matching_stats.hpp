#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wheeler_lcp/sampled_lcp.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// lengths[i] = longest suffix of pattern[0..i] readable as a path label.
struct ms_result {
    std::vector<uint64_t> lengths;
    bool operator==(const ms_result&) const = default;
};

/// Reference computation by forward search with recompute-on-failure:
/// quadratic, independent of the LCP machinery.
ms_result ms_oracle(const wheeler_dfa& d, const std::string& pattern);

/// Maximal [l', r'] ⊇ [l, r] whose internal entries between l' and l
/// (resp. r and r') all have LCP value ≥ t. Boundaries by binary search;
/// each probe is one range-minimum query plus one sampled access.
state_interval expand_to_depth(const sampled_lcp& s, const wheeler_dfa& d, state_interval iv,
                               uint64_t t);

/// Matching statistics via forward search plus LCP-guided suffix shrinking.
/// Equals ms_oracle; unknown symbols contribute 0.
ms_result matching_statistics(const sampled_lcp& s, const wheeler_dfa& d,
                              const std::string& pattern);

}  // namespace wlcp
