#include "wheeler_lcp/rmq.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace wlcp {

namespace {
constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
}

rmq_index::rmq_index(std::span<const uint64_t> values, uint64_t lo) : m_(values.size()), lo_(lo) {
    if (values.empty()) throw std::invalid_argument("rmq_index: empty value sequence");
    bp_.assign((2 * m_ + 63) / 64, 0);
    // Stack sweep; popping on >= makes later equal values win, which yields
    // rightmost-minimum query results.
    std::vector<uint64_t> stack;
    uint64_t p = 0;
    auto emit = [&](bool open) {
        if (open) bp_[p >> 6] |= uint64_t(1) << (p & 63);
        ++p;
    };
    for (uint64_t v : values) {
        while (!stack.empty() && stack.back() >= v) {
            stack.pop_back();
            emit(false);
        }
        stack.push_back(v);
        emit(true);
    }
    while (!stack.empty()) {
        stack.pop_back();
        emit(false);
    }
    build_directories();
}

rmq_index rmq_index::from_bp(uint64_t m, uint64_t lo, std::vector<uint64_t> bp_words) {
    if (m == 0 || bp_words.size() != (2 * m + 63) / 64)
        throw std::invalid_argument("rmq_index::from_bp: bad shape");
    rmq_index r;
    r.m_ = m;
    r.lo_ = lo;
    r.bp_ = std::move(bp_words);
    r.build_directories();
    return r;
}

void rmq_index::build_directories() {
    uint64_t len = 2 * m_;
    uint64_t nblocks = bp_.size();
    blk_min_.assign(nblocks, 0);
    blk_open_.assign(nblocks + 1, 0);
    int64_t exc = 0;
    uint64_t opens = 0;
    for (uint64_t w = 0; w < nblocks; ++w) {
        blk_open_[w] = static_cast<uint32_t>(opens);
        int64_t mn = kInf;
        uint64_t end = std::min<uint64_t>(64, len - 64 * w);
        uint64_t word = bp_[w];
        for (uint64_t b = 0; b < end; ++b) {
            if ((word >> b) & 1) {
                ++exc;
                ++opens;
            } else {
                --exc;
            }
            if (exc < mn) mn = exc;
        }
        blk_min_[w] = static_cast<int32_t>(mn);
    }
    blk_open_[nblocks] = static_cast<uint32_t>(opens);

    // Sparse table of rightmost-min block indices.
    st_.clear();
    st_.emplace_back(nblocks);
    for (uint64_t i = 0; i < nblocks; ++i) st_[0][i] = static_cast<uint32_t>(i);
    for (uint64_t span = 2; span <= nblocks; span *= 2) {
        const auto& prev = st_.back();
        std::vector<uint32_t> row(nblocks - span + 1);
        for (uint64_t i = 0; i + span <= nblocks; ++i) {
            uint32_t a = prev[i], b = prev[i + span / 2];
            row[i] = (blk_min_[b] <= blk_min_[a]) ? b : a;
        }
        st_.push_back(std::move(row));
    }
}

uint64_t rmq_index::rank_open(uint64_t p) const {
    uint64_t w = p >> 6, b = p & 63;
    uint64_t mask = (b == 63) ? ~uint64_t(0) : ((uint64_t(1) << (b + 1)) - 1);
    return blk_open_[w] + std::popcount(bp_[w] & mask);
}

int64_t rmq_index::excess(uint64_t p) const {
    return 2 * static_cast<int64_t>(rank_open(p)) - static_cast<int64_t>(p + 1);
}

uint64_t rmq_index::select_open(uint64_t k) const {
    size_t lo = 0, hi = bp_.size();
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (blk_open_[mid] >= k)
            hi = mid;
        else
            lo = mid;
    }
    uint64_t word = bp_[lo];
    uint64_t want = k - blk_open_[lo];
    for (uint64_t j = 1; j < want; ++j) word &= word - 1;
    return lo * 64 + std::countr_zero(word);
}

int64_t rmq_index::block_range_min(uint64_t b1, uint64_t b2) const {
    uint64_t len = b2 - b1 + 1;
    uint64_t k = std::bit_width(len) - 1;
    uint32_t a = st_[k][b1], b = st_[k][b2 - (uint64_t(1) << k) + 1];
    return std::min(blk_min_[a], blk_min_[b]);
}

uint64_t rmq_index::first_block_min_le(uint64_t from, int64_t target) const {
    uint64_t nblocks = bp_.size();
    if (from >= nblocks || block_range_min(from, nblocks - 1) > target) return nblocks;
    uint64_t lo = from, hi = nblocks - 1;
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (block_range_min(from, mid) <= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

uint64_t rmq_index::find_close(uint64_t x) const {
    int64_t target = excess(x) - 1;
    uint64_t len = 2 * m_;
    // rest of x's word
    int64_t exc = excess(x);
    uint64_t word_end = std::min(len - 1, (x | 63));
    for (uint64_t p = x + 1; p <= word_end; ++p) {
        exc += bp_bit(p) ? 1 : -1;
        if (exc == target) return p;
    }
    uint64_t w = first_block_min_le((x >> 6) + 1, target);
    // a matching close always exists, so w is a valid block
    uint64_t start = 64 * w;
    exc = excess(start - 1);
    uint64_t end = std::min(len - 1, start + 63);
    for (uint64_t p = start; p <= end; ++p) {
        exc += bp_bit(p) ? 1 : -1;
        if (exc == target) return p;
    }
    throw std::logic_error("rmq_index::find_close: unbalanced sequence");
}

void rmq_index::scan_range(uint64_t a, uint64_t b, int64_t base, int64_t& best,
                           uint64_t& pos) const {
    for (uint64_t p = a; p <= b; ++p) {
        base += bp_bit(p) ? 1 : -1;
        if (base <= best) {
            best = base;
            pos = p;
        }
    }
}

uint64_t rmq_index::min_excess_pos(uint64_t a, uint64_t b) const {
    int64_t best = kInf;
    uint64_t pos = a;
    uint64_t wa = a >> 6, wb = b >> 6;
    int64_t base_a = (a == 0) ? 0 : excess(a - 1);
    if (wa == wb) {
        scan_range(a, b, base_a, best, pos);
        return pos;
    }
    scan_range(a, wa * 64 + 63, base_a, best, pos);
    if (wa + 1 <= wb - 1) {
        uint64_t len = wb - 1 - (wa + 1) + 1;
        uint64_t k = std::bit_width(len) - 1;
        uint32_t c1 = st_[k][wa + 1], c2 = st_[k][wb - 1 - (uint64_t(1) << k) + 1];
        uint32_t bi = (blk_min_[c2] <= blk_min_[c1]) ? c2 : c1;
        if (blk_min_[bi] <= best)
            scan_range(uint64_t(bi) * 64, uint64_t(bi) * 64 + 63, excess(uint64_t(bi) * 64 - 1),
                       best, pos);
    }
    scan_range(wb * 64, b, excess(wb * 64 - 1), best, pos);
    return pos;
}

uint64_t rmq_index::query(uint64_t i, uint64_t j) const {
    if (i < lo_ || j > hi() || i > j) throw std::out_of_range("rmq_index::query: bad range");
    uint64_t l = i - lo_ + 1, r = j - lo_ + 1;
    if (l == r) return i;
    uint64_t x = select_open(l);
    uint64_t y = select_open(r);
    uint64_t c = find_close(x);
    if (c > y) return i;  // element l's pair encloses r's open: l is the range minimum
    uint64_t mu = min_excess_pos(c, y - 1);
    // mu+1 is the open parenthesis of the rightmost minimum
    return lo_ + rank_open(mu + 1) - 1;
}

uint64_t rmq_index::size_bits() const {
    uint64_t bits = 2 * m_;
    bits += blk_min_.size() * 32 + blk_open_.size() * 32;
    for (const auto& row : st_) bits += row.size() * 32;
    return bits;
}

}  // namespace wlcp
