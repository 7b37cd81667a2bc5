#include "wheeler_lcp/lcp_oracle.hpp"

#include <stdexcept>

namespace wlcp {

stream_source::stream_source(const wheeler_dfa& d) : n_(d.num_states()) {
    auto tab = std::make_shared<detail::pred_table>();
    tab->labels = d.lambda();  // already 1-based padded
    tab->pmin.assign(n_ + 1, 0);
    tab->pmax.assign(n_ + 1, 0);
    for (const edge& ed : d.edges()) {
        uint32_t& lo = tab->pmin[ed.dst];
        uint32_t& hi = tab->pmax[ed.dst];
        if (lo == 0 || ed.src < lo) lo = ed.src;
        if (ed.src > hi) hi = ed.src;
    }
    tab_ = std::move(tab);
}

backward_stream stream_source::min_stream(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("stream_source::min_stream: state out of range");
    return backward_stream(tab_, i, false);
}

backward_stream stream_source::max_stream(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("stream_source::max_stream: state out of range");
    return backward_stream(tab_, i, true);
}

ext_nat lcp_pair(backward_stream a, backward_stream b, uint64_t cap) {
    for (uint64_t t = 0; t < cap; ++t)
        if (a.next() != b.next()) return t;
    return cap;
}

lcp_array build_full_lcp(const wheeler_dfa& d) {
    const uint64_t n = d.num_states();
    lcp_array out;
    out.n = n;
    out.inf = 3 * n;
    out.values.resize(2 * n - 1);
    stream_source src(d);
    for (uint64_t i = 1; i <= n; ++i) {
        if (i >= 2)
            out.values[2 * i - 1 - 2] = lcp_pair(src.max_stream(i - 1), src.min_stream(i), out.inf);
        out.values[2 * i - 2] = lcp_pair(src.min_stream(i), src.max_stream(i), out.inf);
    }
    return out;
}

namespace {

/// Memoized walker for the fast construction. Compares a pred_min chain
/// against a pred_max chain character by character; when the two chains meet
/// in the same state z, the remainder is lcp(min_z, max_z), i.e. even entry
/// 2z, which is memoized. A meeting that is already being resolved higher up
/// the recursion means the comparison is periodic, hence infinite.
class fast_builder {
public:
    explicit fast_builder(const wheeler_dfa& d)
        : n_(d.num_states()), inf_(3 * n_), even_(n_ + 1, kUnset) {
        labels_.assign(n_ + 1, 0);
        pmin_.assign(n_ + 1, 0);
        pmax_.assign(n_ + 1, 0);
        for (uint32_t i = 1; i <= n_; ++i) labels_[i] = d.lambda()[i];
        for (const edge& ed : d.edges()) {
            if (pmin_[ed.dst] == 0 || ed.src < pmin_[ed.dst]) pmin_[ed.dst] = ed.src;
            if (ed.src > pmax_[ed.dst]) pmax_[ed.dst] = ed.src;
        }
    }

    lcp_array run() {
        lcp_array out;
        out.n = n_;
        out.inf = inf_;
        out.values.resize(2 * n_ - 1);
        for (uint32_t i = 1; i <= n_; ++i) {
            if (i >= 2) {
                ext_nat v;
                if (labels_[i - 1] != labels_[i])
                    v = 0;
                else
                    v = walk(pmax_[i - 1], pmin_[i], 1);
                out.values[2 * i - 1 - 2] = v;
            }
            out.values[2 * i - 2] = even_value(i);
        }
        return out;
    }

private:
    static constexpr ext_nat kUnset = ~ext_nat(0);
    static constexpr ext_nat kInProgress = ~ext_nat(0) - 1;

    // lcp of (max-chain string from x) vs (min-chain string from y), with t
    // characters already matched.
    ext_nat walk(uint32_t x, uint32_t y, uint64_t t) {
        while (true) {
            if (t >= inf_) return inf_;
            if (x == y) {
                ext_nat rest = even_value(x);
                return rest >= inf_ - t ? inf_ : t + rest;
            }
            if (labels_[x] != labels_[y]) return t;
            ++t;
            x = pmax_[x];
            y = pmin_[y];
        }
    }

    ext_nat even_value(uint32_t z) {
        ext_nat& slot = even_[z];
        if (slot == kInProgress) return inf_;  // periodic: value is infinite
        if (slot != kUnset) return slot;
        slot = kInProgress;
        ext_nat v = walk(pmax_[z], pmin_[z], 1);
        slot = v;
        return v;
    }

    uint32_t n_;
    ext_nat inf_;
    std::vector<char> labels_;
    std::vector<uint32_t> pmin_, pmax_;
    std::vector<ext_nat> even_;
};

}  // namespace

lcp_array build_full_lcp_fast(const wheeler_dfa& d) { return fast_builder(d).run(); }

bool verify_min_max_chain(const wheeler_dfa& d) {
    const uint64_t n = d.num_states();
    const uint64_t cap = 3 * n;
    stream_source src(d);
    auto leq = [&](backward_stream a, backward_stream b) {
        for (uint64_t t = 0; t < cap; ++t) {
            char ca = a.next(), cb = b.next();
            if (ca != cb) return ca < cb;
        }
        return true;  // equal within the cap
    };
    for (uint64_t i = 1; i <= n; ++i) {
        if (!leq(src.min_stream(i), src.max_stream(i))) return false;
        if (i < n && !leq(src.max_stream(i), src.min_stream(i + 1))) return false;
    }
    return true;
}

}  // namespace wlcp
