#include "wheeler_lcp/sampled_lcp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlcp {

uint64_t r_map(const wheeler_dfa& d, const rmq_index& rmq, uint64_t i) {
    const uint64_t n = d.num_states();
    if (i < 2 || i > 2 * n) throw std::out_of_range("r_map: entry out of range");
    if (i % 2 == 1) {
        const uint32_t t = static_cast<uint32_t>((i + 1) / 2);
        if (d.label(t - 1) != d.label(t)) return 0;
        return rmq.query(2 * uint64_t(d.pred_max(t - 1)) + 1, 2 * uint64_t(d.pred_min(t)) - 1);
    }
    const uint32_t t = static_cast<uint32_t>(i / 2);
    return rmq.query(2 * uint64_t(d.pred_min(t)), 2 * uint64_t(d.pred_max(t)));
}

uint64_t r_map_dbg(const wheeler_dfa& d, const rmq_index& rmq_bar, uint64_t i) {
    const uint64_t n = d.num_states();
    if (i < 2 || i > n) throw std::out_of_range("r_map_dbg: entry out of range");
    if (d.label(static_cast<uint32_t>(i - 1)) != d.label(static_cast<uint32_t>(i))) return 0;
    return rmq_bar.query(uint64_t(d.pred_max(static_cast<uint32_t>(i - 1))) + 1,
                         uint64_t(d.pred_min(static_cast<uint32_t>(i))));
}

r_graph build_r_graph(const wheeler_dfa& d, const rmq_index& rmq, lcp_domain dom) {
    r_graph g;
    g.lo = 2;
    g.hi = dom == lcp_domain::full ? 2 * uint64_t(d.num_states()) : d.num_states();
    g.parent.resize(g.hi - g.lo + 1);
    for (uint64_t i = g.lo; i <= g.hi; ++i)
        g.parent[i - g.lo] = dom == lcp_domain::full ? r_map(d, rmq, i) : r_map_dbg(d, rmq, i);
    return g;
}

std::vector<uint64_t> build_sampling(const r_graph& g, uint64_t h) {
    if (h == 0) throw std::invalid_argument("build_sampling: h must be positive");
    std::vector<uint64_t> picked;
    if (g.hi < g.lo) return picked;
    std::vector<bool> marked(g.hi - g.lo + 1, false);
    std::vector<uint64_t> chain;
    chain.reserve(h);
    for (uint64_t v = g.lo; v <= g.hi; ++v) {
        chain.clear();
        uint64_t cur = v;
        bool ok = true;
        for (uint64_t step = 0; step < h; ++step) {
            if (cur == 0 || marked[cur - g.lo] ||
                std::find(chain.begin(), chain.end(), cur) != chain.end()) {
                ok = false;
                break;
            }
            chain.push_back(cur);
            if (step + 1 < h) cur = g.parent_of(cur);
        }
        if (!ok) continue;
        picked.push_back(chain.back());
        for (uint64_t u : chain) marked[u - g.lo] = true;
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

namespace {

// Checks the two properties the access bound relies on: the sampling is small
// enough, and every entry reaches a sampled or parentless entry, or repeats
// one, within 2h-2 parent steps.
void check_sampling(const r_graph& g, uint64_t h, const std::vector<uint64_t>& s) {
    const uint64_t m = g.hi - g.lo + 1;
    if (s.size() > m / std::max<uint64_t>(h, 1))
        throw std::invalid_argument("external sampling too large for h");
    std::vector<bool> in_s(m, false);
    for (uint64_t v : s) {
        if (v < g.lo || v > g.hi) throw std::invalid_argument("external sampling entry out of range");
        in_s[v - g.lo] = true;
    }
    std::vector<uint64_t> seen;
    for (uint64_t v = g.lo; v <= g.hi; ++v) {
        seen.clear();
        uint64_t cur = v;
        bool ok = false;
        for (uint64_t step = 0; step + 1 <= 2 * h - 1; ++step) {
            if (cur == 0 || in_s[cur - g.lo] ||
                std::find(seen.begin(), seen.end(), cur) != seen.end()) {
                ok = true;
                break;
            }
            seen.push_back(cur);
            cur = g.parent_of(cur);
        }
        if (!ok) throw std::invalid_argument("external sampling violates the coverage bound");
    }
}

}  // namespace

sampled_lcp sampled_lcp::build(const wheeler_dfa& d, const lcp_array& full, uint64_t h,
                               lcp_domain dom, const std::vector<uint64_t>* external_sampling) {
    if (h == 0) throw std::invalid_argument("sampled_lcp::build: h must be positive");
    sampled_lcp s;
    s.dom_ = dom;
    s.n_ = d.num_states();
    s.h_ = std::min<uint64_t>(h, s.hi() - 1);  // clamp to the entry count
    h = s.h_;
    s.inf_ = full.inf;
    const uint64_t lo = 2, hi = s.hi();
    if (full.values.size() != hi - lo + 1)
        throw std::invalid_argument("sampled_lcp::build: value array does not match the domain");

    rmq_index rmq(std::span<const ext_nat>(full.values.data(), full.values.size()), lo);
    r_graph g = build_r_graph(d, rmq, dom);

    std::vector<uint64_t> picks;
    if (external_sampling) {
        check_sampling(g, h, *external_sampling);
        picks = *external_sampling;
        std::sort(picks.begin(), picks.end());
    } else {
        picks = build_sampling(g, h);
    }

    bit_vector c(hi - lo + 1);
    for (uint64_t v : picks) c.set(v - lo + 1, true);
    c.finalize();
    std::vector<ext_nat> star;
    star.reserve(picks.size());
    for (uint64_t v : picks) star.push_back(full.values[v - lo]);

    s.c_ = std::move(c);
    s.star_ = std::move(star);
    s.rmq_ = std::move(rmq);
    return s;
}

sampled_lcp sampled_lcp::from_parts(lcp_domain dom, uint64_t n, uint64_t h, ext_nat inf,
                                    bit_vector c, std::vector<ext_nat> star, rmq_index rmq) {
    sampled_lcp s;
    s.dom_ = dom;
    s.n_ = n;
    s.h_ = h;
    s.inf_ = inf;
    s.c_ = std::move(c);
    s.star_ = std::move(star);
    s.rmq_ = std::move(rmq);
    return s;
}

uint64_t sampled_lcp::parent_entry(const wheeler_dfa& d, uint64_t i) const {
    return dom_ == lcp_domain::full ? r_map(d, rmq_, i) : r_map_dbg(d, rmq_, i);
}

ext_nat sampled_lcp::access(const wheeler_dfa& d, uint64_t i, uint64_t* hops) const {
    if (i < lo() || i > hi()) throw std::out_of_range("sampled_lcp::access: entry out of range");
    uint64_t calls = 0;
    std::vector<uint64_t> visited;
    ext_nat result = 0;
    ext_nat pending = 0;  // +1s accumulated down the recursion
    uint64_t cur = i;
    while (true) {
        ++calls;
        if (c_.get(cur - lo() + 1)) {
            result = star_[c_.rank1(cur - lo() + 1) - 1];
            break;
        }
        uint64_t next = parent_entry(d, cur);
        if (next == 0) {  // odd entry with differing labels
            result = 0;
            break;
        }
        if (std::find(visited.begin(), visited.end(), cur) != visited.end()) {
            result = inf_;
            break;
        }
        visited.push_back(cur);
        ++pending;
        cur = next;
    }
    if (hops) *hops = calls;
    ext_nat v = result;
    for (ext_nat t = 0; t < pending; ++t) v = sat_add1(v, inf_);
    return v;
}

uint64_t pick_h_linear(uint64_t n) {
    uint64_t h = static_cast<uint64_t>(std::ceil(std::log2(static_cast<double>(std::max<uint64_t>(n, 2)))));
    return std::max<uint64_t>(h, 1);
}

uint64_t pick_h_loglog(uint64_t n, uint64_t sigma) {
    double num = std::log2(static_cast<double>(std::max<uint64_t>(n, 2)));
    double den = std::max(std::log2(std::log2(static_cast<double>(std::max<uint64_t>(sigma, 2)))), 1.0);
    uint64_t h = static_cast<uint64_t>(std::ceil(num / den));
    return std::max<uint64_t>(h, 1);
}

}  // namespace wlcp
