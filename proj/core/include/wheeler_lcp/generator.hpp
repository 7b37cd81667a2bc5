#pragma once

#include <cstdint>
#include <random>

#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// Random Wheeler DFA with at most max_n states (at least 1 after pruning)
/// and at most max_sigma labels beyond '#'. Correct by construction: state
/// labels are assigned in nondecreasing order (Axiom 1) and, per label, a
/// sorted source set is split into consecutive predecessor groups (Axiom 2 and
/// determinism); unreachable states are pruned and the order renumbered.
wheeler_dfa random_wheeler_dfa(std::mt19937_64& rng, uint32_t max_n, uint32_t max_sigma = 8);

}  // namespace wlcp
