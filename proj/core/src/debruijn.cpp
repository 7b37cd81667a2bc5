#include "wheeler_lcp/debruijn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace wlcp {

namespace {

constexpr char kPad = '$';

bool colex_less(const std::string& a, const std::string& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

uint64_t common_suffix(const std::string& a, const std::string& b) {
    uint64_t t = 0;
    while (t < a.size() && t < b.size() && a[a.size() - 1 - t] == b[b.size() - 1 - t]) ++t;
    return t;
}

uint64_t dbg_h(uint32_t k) {
    uint64_t h = static_cast<uint64_t>(std::ceil(std::log2(static_cast<double>(std::max<uint32_t>(k, 2)))));
    return std::max<uint64_t>(k >= 2 ? h : 1, 1);
}

}  // namespace

debruijn_index debruijn_index::build(const std::vector<std::string>& strings, uint32_t k,
                                     dbg_mode mode,
                                     const std::vector<uint64_t>* external_sampling) {
    if (k < 1) throw std::invalid_argument("debruijn_index::build: k must be at least 1");
    for (const std::string& s : strings)
        for (char c : s)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                throw std::invalid_argument(std::string("debruijn_index::build: invalid character '") +
                                            c + "' (expected A/C/G/T)");

    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> raw_edges;
    nodes.insert(std::string(k, kPad));
    for (const std::string& s : strings) {
        if (s.size() < k) continue;
        for (size_t i = 0; i + k <= s.size(); ++i) nodes.insert(s.substr(i, k));
        for (size_t i = 0; i + k + 1 <= s.size(); ++i)
            raw_edges.emplace(s.substr(i, k), s.substr(i + 1, k));
    }
    if (nodes.size() == 1) throw std::invalid_argument("debruijn_index::build: no k-mers in input");
    // '$'-padded chain from the root to every sourceless k-mer
    std::set<std::string> with_source;
    for (const auto& [a, b] : raw_edges) with_source.insert(b);
    std::vector<std::string> sourceless;
    for (const std::string& kmer : nodes)
        if (kmer[0] != kPad && !with_source.count(kmer)) sourceless.push_back(kmer);
    for (const std::string& kmer : sourceless) {
        for (uint32_t i = k; i >= 1; --i) {
            std::string src = std::string(i, kPad) + kmer.substr(0, k - i);
            std::string dst = std::string(i - 1, kPad) + kmer.substr(0, k - i + 1);
            nodes.insert(src);
            nodes.insert(dst);
            raw_edges.emplace(std::move(src), std::move(dst));
        }
    }

    std::vector<std::string> order(nodes.begin(), nodes.end());
    std::sort(order.begin(), order.end(), colex_less);
    std::map<std::string, uint32_t> idx;
    for (uint32_t i = 0; i < order.size(); ++i) idx[order[i]] = i + 1;

    const uint32_t n = static_cast<uint32_t>(order.size());
    std::vector<edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) edges.push_back({idx.at(a), idx.at(b)});
    std::string lambda(n, ' ');
    for (uint32_t i = 1; i <= n; ++i) lambda[i - 1] = order[i - 1].back();

    debruijn_index x;
    x.k_ = k;
    x.mode_ = mode;
    x.dfa_ = wheeler_dfa::validate(n, std::move(edges), std::move(lambda), {}, kPad,
                                   /*require_reachable=*/false);
    x.labels_ = std::move(order);

    std::vector<uint64_t> bar(n >= 2 ? n - 1 : 0);
    for (uint32_t i = 2; i <= n; ++i) bar[i - 2] = common_suffix(x.labels_[i - 2], x.labels_[i - 1]);

    if (mode == dbg_mode::sampled) {
        lcp_array arr;
        arr.n = n;
        arr.inf = k;  // suffix lcps are at most k-1
        arr.values = bar;
        x.sampled_ = sampled_lcp::build(x.dfa_, arr, dbg_h(k), lcp_domain::dbg_odd,
                                        external_sampling);
    } else {
        x.bar_ = std::move(bar);
    }
    return x;
}

debruijn_index debruijn_index::from_parts(uint32_t k, dbg_mode mode, wheeler_dfa dfa,
                                          std::vector<uint64_t> bar, sampled_lcp sampled) {
    debruijn_index x;
    x.k_ = k;
    x.mode_ = mode;
    x.dfa_ = std::move(dfa);
    x.bar_ = std::move(bar);
    x.sampled_ = std::move(sampled);
    x.rebuild_labels();
    return x;
}

void debruijn_index::rebuild_labels() {
    // All length-k backward paths of a node spell the same string, so walking
    // pred_min and reading labels reconstructs the padded k-mer.
    const uint32_t n = dfa_.num_states();
    labels_.assign(n, std::string());
    for (uint32_t i = 1; i <= n; ++i) {
        std::string s(k_, kPad);
        uint32_t cur = i;
        for (uint32_t t = 0; t < k_; ++t) {
            s[k_ - 1 - t] = dfa_.label(cur);
            cur = dfa_.pred_min(cur);
        }
        labels_[i - 1] = std::move(s);
    }
}

uint64_t debruijn_index::lcp_bar(uint32_t i, uint64_t* hops) const {
    if (i < 2 || i > num_nodes()) throw std::out_of_range("debruijn_index::lcp_bar: out of range");
    if (mode_ == dbg_mode::sampled) return sampled_.access(dfa_, i, hops);
    if (hops) *hops = 0;
    return bar_[i - 2];
}

uint64_t debruijn_index::range_min(uint64_t a, uint64_t b) const {
    if (mode_ == dbg_mode::sampled) return sampled_.access(dfa_, sampled_.rmq().query(a, b));
    uint64_t m = bar_[a - 2];
    for (uint64_t p = a + 1; p <= b; ++p) m = std::min(m, bar_[p - 2]);
    return m;
}

state_interval debruijn_index::maximalize(uint32_t a, uint32_t b, uint64_t t) const {
    const uint32_t n = num_nodes();
    if (t == 0) return {1, n};
    uint32_t lo = 1, hi = a;
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (range_min(uint64_t(mid) + 1, a) >= t)
            hi = mid;
        else
            lo = mid + 1;
    }
    uint32_t lp = lo;
    lo = b, hi = n;
    while (lo < hi) {
        uint32_t mid = hi - (hi - lo) / 2;
        if (range_min(uint64_t(b) + 1, mid) >= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    return {lp, lo};
}

std::optional<vo_node> debruijn_index::vo_start(const std::string& suffix) const {
    if (suffix.size() > k_) throw std::invalid_argument("vo_start: suffix longer than k");
    state_interval iv{1, num_nodes()};
    for (char c : suffix) {
        auto next = dfa_.forward_search(iv.first, iv.second, c);
        if (!next) return std::nullopt;
        iv = *next;
    }
    return vo_node{iv.first, iv.second, static_cast<uint32_t>(suffix.size())};
}

vo_node debruijn_index::vo_shorter(vo_node v, uint32_t order) const {
    if (order > v.order) throw std::invalid_argument("vo_shorter: order must not increase");
    auto iv = maximalize(v.a, v.b, order);
    return {iv.first, iv.second, order};
}

std::vector<vo_node> debruijn_index::vo_longer(vo_node v, uint32_t order) const {
    if (order < v.order) throw std::invalid_argument("vo_longer: order must not decrease");
    if (order > k_) throw std::invalid_argument("vo_longer: order exceeds k");
    std::vector<vo_node> out;
    // split [lo, hi] at every internal entry with value < order, splitting on
    // the (rightmost) range minimum first
    auto split = [&](auto&& self, uint32_t lo, uint32_t hi) -> void {
        if (lo == hi) {
            out.push_back({lo, hi, order});
            return;
        }
        uint64_t j;
        if (mode_ == dbg_mode::sampled) {
            j = sampled_.rmq().query(uint64_t(lo) + 1, hi);
            if (sampled_.access(dfa_, j) >= order) {
                out.push_back({lo, hi, order});
                return;
            }
        } else {
            j = lo + 1;
            for (uint64_t p = lo + 1; p <= hi; ++p)
                if (bar_[p - 2] <= bar_[j - 2]) j = p;
            if (bar_[j - 2] >= order) {
                out.push_back({lo, hi, order});
                return;
            }
        }
        self(self, lo, static_cast<uint32_t>(j) - 1);
        self(self, static_cast<uint32_t>(j), hi);
    };
    split(split, v.a, v.b);
    return out;
}

std::optional<vo_node> debruijn_index::vo_forward(vo_node v, char c) const {
    auto e = dfa_.forward_search(v.a, v.b, c);
    if (!e) return std::nullopt;
    uint32_t order = std::min(v.order + 1, k_);
    auto iv = maximalize(e->first, e->second, order);
    return vo_node{iv.first, iv.second, order};
}

vo_node debruijn_index::vo_backward(vo_node v) const {
    if (v.order == 0) throw std::invalid_argument("vo_backward: order is already 0");
    uint32_t a = dfa_.pred_min(v.a), b = dfa_.pred_max(v.b);
    uint32_t order = v.order - 1;
    auto iv = maximalize(a, b, order);
    return {iv.first, iv.second, order};
}

}  // namespace wlcp
