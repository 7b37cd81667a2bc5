#include "wheeler_lcp/wheeler.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace wlcp {

namespace {
std::string join_issues(const std::vector<std::string>& issues) {
    std::string s = "invalid Wheeler DFA:";
    for (const auto& i : issues) s += "\n  - " + i;
    return s;
}
}  // namespace

validation_error::validation_error(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

wheeler_dfa wheeler_dfa::validate(uint32_t n, std::vector<edge> edges, std::string lambda,
                                  const std::vector<uint32_t>& finals, char sentinel,
                                  bool require_reachable) {
    std::vector<std::string> issues;
    if (n < 1) throw validation_error({"state count must be at least 1"});
    if (lambda.size() != n) throw validation_error({"lambda must have one label per state"});

    for (const edge& ed : edges)
        if (ed.src < 1 || ed.src > n || ed.dst < 1 || ed.dst > n)
            throw validation_error({"edge (" + std::to_string(ed.src) + "," +
                                    std::to_string(ed.dst) + ") out of state range"});
    for (uint32_t f : finals)
        if (f < 1 || f > n) throw validation_error({"final state " + std::to_string(f) + " out of range"});

    // The sentinel self-loop on the initial state is part of the convention.
    if (std::find(edges.begin(), edges.end(), edge{1, 1}) == edges.end())
        edges.push_back(edge{1, 1});

    if (lambda[0] != sentinel)
        issues.push_back(std::string("state 1 must carry the sentinel label '") + sentinel + "'");
    for (uint32_t i = 2; i <= n; ++i)
        if (lambda[i - 1] == sentinel)
            issues.push_back("sentinel label on state " + std::to_string(i) +
                             "; only state 1 may carry it");
        else if (lambda[i - 1] < sentinel)
            issues.push_back(std::string("label '") + lambda[i - 1] + "' of state " +
                             std::to_string(i) + " precedes the sentinel");

    // Axiom 1: labels nondecreasing along the claimed order.
    for (uint32_t i = 2; i <= n; ++i)
        if (lambda[i - 2] > lambda[i - 1]) {
            std::ostringstream os;
            os << "axiom 1 violated: lambda(u" << i - 1 << ")='" << lambda[i - 2]
               << "' > lambda(u" << i << ")='" << lambda[i - 1] << "'";
            issues.push_back(os.str());
        }

    std::sort(edges.begin(), edges.end());
    for (size_t t = 1; t < edges.size(); ++t)
        if (edges[t] == edges[t - 1])
            issues.push_back("duplicate edge (" + std::to_string(edges[t].src) + "," +
                             std::to_string(edges[t].dst) + ")");
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Determinism: at most one outgoing edge per (source, label).
    for (size_t t = 1; t < edges.size(); ++t) {
        const edge &a = edges[t - 1], &b = edges[t];
        if (a.src == b.src && lambda[a.dst - 1] == lambda[b.dst - 1]) {
            std::ostringstream os;
            os << "determinism violated: state " << a.src << " has edges to " << a.dst << " and "
               << b.dst << " both labeled '" << lambda[a.dst - 1] << "'";
            issues.push_back(os.str());
        }
    }

    // Edges into state 1 may only be its own self-loop.
    for (const edge& ed : edges)
        if (ed.dst == 1 && ed.src != 1)
            issues.push_back("state 1 has an incoming edge from state " + std::to_string(ed.src));

    // In-degrees and axiom 2: for same-label states i < j, every predecessor
    // of i must precede every predecessor of j.
    std::vector<uint32_t> indeg(n + 1, 0), pmin(n + 1, 0), pmax(n + 1, 0);
    for (const edge& ed : edges) {
        if (indeg[ed.dst] == 0) {
            pmin[ed.dst] = pmax[ed.dst] = ed.src;
        } else {
            pmin[ed.dst] = std::min(pmin[ed.dst], ed.src);
            pmax[ed.dst] = std::max(pmax[ed.dst], ed.src);
        }
        ++indeg[ed.dst];
    }
    for (uint32_t i = 1; i <= n; ++i)
        if (indeg[i] == 0)
            issues.push_back("state " + std::to_string(i) + " has no incoming edge");
    uint32_t prev = 0;  // previous state with the same label and >=1 incoming edge
    for (uint32_t i = 1; i <= n; ++i) {
        if (indeg[i] == 0) continue;
        if (prev != 0 && lambda[prev - 1] == lambda[i - 1] && pmax[prev] >= pmin[i]) {
            std::ostringstream os;
            os << "axiom 2 violated: edges (" << pmax[prev] << "," << prev << ") and (" << pmin[i]
               << "," << i << ") share label '" << lambda[i - 1] << "' but sources are not ordered";
            issues.push_back(os.str());
        }
        prev = i;
    }

    if (require_reachable) {
        std::vector<std::vector<uint32_t>> adj(n + 1);
        for (const edge& ed : edges) adj[ed.src].push_back(ed.dst);
        std::vector<bool> seen(n + 1, false);
        std::vector<uint32_t> queue{1};
        seen[1] = true;
        while (!queue.empty()) {
            uint32_t u = queue.back();
            queue.pop_back();
            for (uint32_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        for (uint32_t i = 1; i <= n; ++i)
            if (!seen[i]) issues.push_back("state " + std::to_string(i) + " unreachable from state 1");
    }

    if (!issues.empty()) throw validation_error(std::move(issues));

    wheeler_dfa d;
    d.n_ = n;
    d.e_ = static_cast<uint32_t>(edges.size());
    d.sentinel_ = sentinel;
    d.lambda_ = " " + lambda;
    d.edges_ = std::move(edges);
    std::string syms(lambda);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    d.symbols_ = std::move(syms);
    d.finals_ = bit_vector(n);
    for (uint32_t f : finals) d.finals_.set(f);
    d.finals_.finalize();
    d.build_nav_index();
    return d;
}

void wheeler_dfa::build_nav_index() {
    label_bounds_ = bit_vector(n_);
    for (uint32_t i = 1; i <= n_; ++i)
        if (i == 1 || lambda_[i] != lambda_[i - 1]) label_bounds_.set(i);
    label_bounds_.finalize();

    std::vector<uint32_t> outdeg(n_ + 1, 0), indeg(n_ + 1, 0);
    for (const edge& ed : edges_) {
        ++outdeg[ed.src];
        ++indeg[ed.dst];
    }
    auto unary = [&](const std::vector<uint32_t>& deg) {
        bit_vector b(uint64_t(n_) + e_);
        uint64_t p = 0;
        for (uint32_t i = 1; i <= n_; ++i) {
            b.set(++p);
            p += deg[i];
        }
        b.finalize();
        return b;
    };
    out_ = unary(outdeg);
    in_ = unary(indeg);

    // edges_ is sorted by (src, dst); that is exactly the out-slot order
    edge_labels_.clear();
    edge_labels_.reserve(e_);
    for (const edge& ed : edges_) edge_labels_.push_back(lambda_[ed.dst]);

    label_pos_.assign(symbols_.size(), {});
    for (uint32_t t = 1; t <= e_; ++t)
        label_pos_[symbol_index(edge_labels_[t - 1])].push_back(t);

    first_state_.assign(symbols_.size(), 0);
    in_base_.assign(symbols_.size(), 0);
    uint64_t slots = 0;
    size_t sym = 0;
    for (uint32_t i = 1; i <= n_; ++i) {
        if (sym < symbols_.size() && lambda_[i] == symbols_[sym]) {
            first_state_[sym] = i;
            in_base_[sym] = slots;
            ++sym;
        }
        slots += indeg[i];
    }
}

int wheeler_dfa::symbol_index(char c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) return -1;
    return static_cast<int>(it - symbols_.begin());
}

char wheeler_dfa::label(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wheeler_dfa::label: state out of range");
    return symbols_[label_bounds_.rank1(i) - 1];
}

uint32_t wheeler_dfa::in_degree(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wheeler_dfa::in_degree: state out of range");
    uint64_t a = in_.select1(i);
    uint64_t b = (i < n_) ? in_.select1(i + 1) : uint64_t(n_) + e_ + 1;
    return static_cast<uint32_t>(b - a - 1);
}

uint32_t wheeler_dfa::out_degree(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wheeler_dfa::out_degree: state out of range");
    uint64_t a = out_.select1(i);
    uint64_t b = (i < n_) ? out_.select1(i + 1) : uint64_t(n_) + e_ + 1;
    return static_cast<uint32_t>(b - a - 1);
}

std::pair<uint64_t, uint64_t> wheeler_dfa::in_slot_range(uint32_t i) const {
    uint64_t before = in_.select1(i) - i;
    return {before + 1, before + in_degree(i)};
}

uint32_t wheeler_dfa::source_of_out_slot(uint64_t t) const {
    return static_cast<uint32_t>(out_.rank1(out_.select0(t)));
}

uint32_t wheeler_dfa::state_of_in_slot(uint64_t t) const {
    return static_cast<uint32_t>(in_.rank1(in_.select0(t)));
}

uint32_t wheeler_dfa::pred_min(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wheeler_dfa::pred_min: state out of range");
    int ci = symbol_index(label(i));
    uint64_t r = in_slot_range(i).first - in_base_[ci];
    return source_of_out_slot(label_pos_[ci][r - 1]);
}

uint32_t wheeler_dfa::pred_max(uint32_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("wheeler_dfa::pred_max: state out of range");
    int ci = symbol_index(label(i));
    uint64_t r = in_slot_range(i).second - in_base_[ci];
    return source_of_out_slot(label_pos_[ci][r - 1]);
}

std::optional<state_interval> wheeler_dfa::forward_search(uint32_t r, uint32_t s, char c) const {
    if (r < 1 || s > n_ || r > s) throw std::out_of_range("wheeler_dfa::forward_search: bad range");
    int ci = symbol_index(c);
    if (ci < 0) return std::nullopt;
    auto slots_before = [&](uint32_t state) -> uint64_t {
        return (state <= n_) ? out_.select1(state) - state : e_;
    };
    const auto& pos = label_pos_[ci];
    uint64_t a = std::upper_bound(pos.begin(), pos.end(), slots_before(r)) - pos.begin();
    uint64_t b = std::upper_bound(pos.begin(), pos.end(), slots_before(s + 1)) - pos.begin();
    if (a == b) return std::nullopt;
    uint32_t lo = state_of_in_slot(in_base_[ci] + a + 1);
    uint32_t hi = state_of_in_slot(in_base_[ci] + b);
    return state_interval{lo, hi};
}

uint64_t wheeler_dfa::nav_size_bits() const {
    uint64_t bits = out_.data_bits() + out_.overhead_bits();
    bits += in_.data_bits() + in_.overhead_bits();
    bits += label_bounds_.data_bits() + label_bounds_.overhead_bits();
    uint64_t w = std::bit_width(sigma() > 1 ? sigma() - 1 : 1u);
    bits += uint64_t(e_) * w;  // edge-label sequence at its packed width
    for (const auto& v : label_pos_) bits += v.size() * 32;
    bits += symbols_.size() * (8 + 64 + 32);  // symbol table + in_base + first_state
    return bits;
}

wheeler_dfa wheeler_dfa::from_parts(uint32_t n, uint32_t e, char sentinel, std::string symbols,
                                    std::string lambda, bit_vector out, bit_vector in,
                                    std::string edge_labels, bit_vector finals) {
    wheeler_dfa d;
    d.n_ = n;
    d.e_ = e;
    d.sentinel_ = sentinel;
    d.symbols_ = std::move(symbols);
    d.lambda_ = " " + lambda;
    d.out_ = std::move(out);
    d.in_ = std::move(in);
    d.edge_labels_ = std::move(edge_labels);
    d.finals_ = std::move(finals);

    d.label_bounds_ = bit_vector(n);
    for (uint32_t i = 1; i <= n; ++i)
        if (i == 1 || d.lambda_[i] != d.lambda_[i - 1]) d.label_bounds_.set(i);
    d.label_bounds_.finalize();

    d.label_pos_.assign(d.symbols_.size(), {});
    for (uint32_t t = 1; t <= e; ++t)
        d.label_pos_[d.symbol_index(d.edge_labels_[t - 1])].push_back(t);

    std::vector<uint32_t> indeg(n + 1, 0);
    for (uint32_t i = 1; i <= n; ++i) indeg[i] = d.in_degree(i);
    d.first_state_.assign(d.symbols_.size(), 0);
    d.in_base_.assign(d.symbols_.size(), 0);
    uint64_t slots = 0;
    size_t sym = 0;
    for (uint32_t i = 1; i <= n; ++i) {
        if (sym < d.symbols_.size() && d.lambda_[i] == d.symbols_[sym]) {
            d.first_state_[sym] = i;
            d.in_base_[sym] = slots;
            ++sym;
        }
        slots += indeg[i];
    }
    d.rebuild_edges_from_nav();
    return d;
}

void wheeler_dfa::rebuild_edges_from_nav() {
    edges_.clear();
    edges_.reserve(e_);
    for (uint64_t t = 1; t <= e_; ++t) {
        uint32_t dst = state_of_in_slot(t);
        int ci = symbol_index(label(dst));
        uint64_t r = t - in_base_[ci];
        uint32_t src = source_of_out_slot(label_pos_[ci][r - 1]);
        edges_.push_back(edge{src, dst});
    }
    std::sort(edges_.begin(), edges_.end());
}

}  // namespace wlcp
