#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wlcp {

/// Plain bitvector with a rank directory. Positions are 1-based, matching the
/// state/entry numbering used everywhere else in this library.
///
/// Immutable once finalize() has been called; all queries are const and safe
/// to run concurrently.
class bit_vector {
public:
    bit_vector() = default;

    explicit bit_vector(uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

    uint64_t size() const { return n_; }

    void set(uint64_t i, bool v = true) {
        check_pos(i);
        uint64_t w = (i - 1) >> 6, b = (i - 1) & 63;
        if (v)
            words_[w] |= uint64_t(1) << b;
        else
            words_[w] &= ~(uint64_t(1) << b);
    }

    bool get(uint64_t i) const {
        check_pos(i);
        return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
    }

    /// Builds the rank directory. Must be called before rank/select queries.
    void finalize() {
        prefix_.assign(words_.size() + 1, 0);
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); ++w) {
            prefix_[w] = static_cast<uint32_t>(acc);
            acc += std::popcount(words_[w]);
        }
        prefix_[words_.size()] = static_cast<uint32_t>(acc);
        ones_ = acc;
        finalized_ = true;
    }

    uint64_t ones() const { return ones_; }

    /// Number of set bits among positions 1..i; rank1(0) = 0.
    uint64_t rank1(uint64_t i) const {
        if (i > n_) throw std::out_of_range("bit_vector::rank1: position out of range");
        if (i == 0) return 0;
        uint64_t w = (i - 1) >> 6, b = (i - 1) & 63;
        uint64_t mask = (b == 63) ? ~uint64_t(0) : ((uint64_t(1) << (b + 1)) - 1);
        return prefix_[w] + std::popcount(words_[w] & mask);
    }

    uint64_t rank0(uint64_t i) const { return i - rank1(i); }

    /// Position of the k-th set bit, 1 <= k <= ones().
    uint64_t select1(uint64_t k) const {
        if (k == 0 || k > ones_) throw std::out_of_range("bit_vector::select1: k out of range");
        size_t lo = 0, hi = words_.size();  // first word with prefix_[w+1] >= k
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (prefix_[mid] >= k)
                hi = mid;
            else
                lo = mid;
        }
        uint64_t word = words_[lo];
        uint64_t want = k - prefix_[lo];  // 1-based within word
        return lo * 64 + select_in_word(word, want);
    }

    /// Position of the k-th zero bit, 1 <= k <= size() - ones().
    uint64_t select0(uint64_t k) const {
        if (k == 0 || k > n_ - ones_) throw std::out_of_range("bit_vector::select0: k out of range");
        size_t lo = 0, hi = words_.size();  // zeros before word w = 64*w - prefix_[w]
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (64 * mid - prefix_[mid] >= k)
                hi = mid;
            else
                lo = mid;
        }
        uint64_t word = ~words_[lo];
        uint64_t want = k - (64 * lo - prefix_[lo]);
        return lo * 64 + select_in_word(word, want);
    }

    uint64_t data_bits() const { return n_; }
    uint64_t overhead_bits() const { return prefix_.size() * 32; }

    const std::vector<uint64_t>& words() const { return words_; }

    static bit_vector from_words(uint64_t n, std::vector<uint64_t> words) {
        bit_vector b;
        b.n_ = n;
        b.words_ = std::move(words);
        if (b.words_.size() != (n + 63) / 64)
            throw std::invalid_argument("bit_vector::from_words: word count mismatch");
        b.finalize();
        return b;
    }

    bool operator==(const bit_vector& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    void check_pos(uint64_t i) const {
        if (i == 0 || i > n_) throw std::out_of_range("bit_vector: position out of range");
    }

    // 1-based position of the `want`-th set bit inside `word`.
    static uint64_t select_in_word(uint64_t word, uint64_t want) {
        for (uint64_t j = 1; j < want; ++j) word &= word - 1;
        return static_cast<uint64_t>(std::countr_zero(word)) + 1;
    }

    uint64_t n_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint32_t> prefix_;
    uint64_t ones_ = 0;
    bool finalized_ = false;
};

}  // namespace wlcp
