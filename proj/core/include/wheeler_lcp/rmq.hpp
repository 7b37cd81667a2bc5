#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wlcp {

/// Range-minimum structure over a value sequence indexed lo..hi. Queries
/// return the position of the RIGHTMOST minimum of the range. After
/// construction the source values are not needed (and not kept): the structure
/// stores the balanced-parentheses encoding of the sequence's min-tree
/// (built with a stack sweep, ties resolved toward the right) plus small
/// per-64-bit-block excess directories, so a query reduces to excess
/// arithmetic on 2m bits.
///
/// Immutable after construction; concurrent queries are safe.
class rmq_index {
public:
    rmq_index() = default;

    /// Builds from `values[0..m)`, externally addressed as lo..lo+m-1.
    rmq_index(std::span<const uint64_t> values, uint64_t lo);

    /// Rightmost index k in [i, j] with value[k] minimal. Throws on bad range.
    uint64_t query(uint64_t i, uint64_t j) const;

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return lo_ + m_ - 1; }
    uint64_t length() const { return m_; }

    uint64_t size_bits() const;

    // Serialization: the BP sequence fully determines the structure.
    const std::vector<uint64_t>& bp_words() const { return bp_; }
    static rmq_index from_bp(uint64_t m, uint64_t lo, std::vector<uint64_t> bp_words);

    bool operator==(const rmq_index& o) const {
        return m_ == o.m_ && lo_ == o.lo_ && bp_ == o.bp_;
    }

private:
    void build_directories();

    // bp positions are 0-based, 0..2m-1; bit 1 = '(' (+1), 0 = ')' (-1)
    bool bp_bit(uint64_t p) const { return (bp_[p >> 6] >> (p & 63)) & 1; }
    int64_t excess(uint64_t p) const;              // excess after position p
    uint64_t rank_open(uint64_t p) const;          // '(' count in [0, p]
    uint64_t select_open(uint64_t k) const;        // position of k-th '(' (k >= 1)
    uint64_t find_close(uint64_t x) const;         // matching ')' of '(' at x
    // rightmost position of minimum excess in bp positions [a, b]
    uint64_t min_excess_pos(uint64_t a, uint64_t b) const;
    // scan of one range inside a single 64-bit word; candidates favor the right
    void scan_range(uint64_t a, uint64_t b, int64_t base, int64_t& best, uint64_t& pos) const;
    // first block index >= from whose internal min excess is <= target; nblocks if none
    uint64_t first_block_min_le(uint64_t from, int64_t target) const;
    int64_t block_range_min(uint64_t b1, uint64_t b2) const;

    uint64_t m_ = 0;
    uint64_t lo_ = 0;
    std::vector<uint64_t> bp_;
    std::vector<int32_t> blk_min_;    // min excess inside block (absolute)
    std::vector<uint32_t> blk_open_;  // '(' count before block
    std::vector<std::vector<uint32_t>> st_;  // sparse table: rightmost min block
};

}  // namespace wlcp
