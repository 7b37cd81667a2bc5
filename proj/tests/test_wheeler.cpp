#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "wheeler_lcp/generator.hpp"
#include "wheeler_lcp/wheeler.hpp"

using wlcp::edge;
using wlcp::wheeler_dfa;

namespace {

// navigation answers recomputed from the plain edge list
void check_nav_against_edges(const wheeler_dfa& d) {
    const uint32_t n = d.num_states();
    for (uint32_t i = 1; i <= n; ++i) {
        uint32_t pmin = 0, pmax = 0, indeg = 0, outdeg = 0;
        char lab = 0;
        for (const edge& e : d.edges()) {
            if (e.dst == i) {
                ++indeg;
                if (pmin == 0 || e.src < pmin) pmin = e.src;
                pmax = std::max(pmax, e.src);
            }
            if (e.src == i) ++outdeg;
        }
        lab = i == 1 ? d.sentinel() : d.lambda()[i];
        CHECK(d.label(i) == lab);
        CHECK(d.pred_min(i) == pmin);
        CHECK(d.pred_max(i) == pmax);
        CHECK(d.in_degree(i) == indeg);
        CHECK(d.out_degree(i) == outdeg);
    }
}

void check_forward_search(const wheeler_dfa& d, std::mt19937_64& rng, int queries) {
    const uint32_t n = d.num_states();
    std::string syms = d.symbols() + "z";  // also probe an unknown symbol
    for (int q = 0; q < queries; ++q) {
        uint32_t r = 1 + rng() % n, s = 1 + rng() % n;
        if (r > s) std::swap(r, s);
        char c = syms[rng() % syms.size()];
        std::vector<uint32_t> hits;
        for (const edge& e : d.edges())
            if (e.src >= r && e.src <= s && d.label(e.dst) == c) hits.push_back(e.dst);
        auto got = d.forward_search(r, s, c);
        if (hits.empty()) {
            CHECK(!got.has_value());
        } else {
            auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
            REQUIRE(got.has_value());
            CHECK(got->first == *lo);
            CHECK(got->second == *hi);
            // the hit set must be the full interval (Wheeler consecutiveness)
            std::sort(hits.begin(), hits.end());
            hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
            CHECK(hits.size() == *hi - *lo + 1);
        }
    }
}

}  // namespace

TEST_CASE("fixture automaton validates and navigates") {
    wheeler_dfa d = fixtures::wdfa_dfa();
    CHECK(d.num_states() == 16);
    CHECK(d.num_edges() == 20);
    CHECK(d.sigma() == 13);
    CHECK(d.label(1) == '#');
    CHECK(d.label(6) == 'e');
    CHECK(d.is_final(9));
    CHECK(d.is_final(16));
    CHECK(!d.is_final(1));
    check_nav_against_edges(d);
    std::mt19937_64 rng(6);
    check_forward_search(d, rng, 2000);

    // the sentinel self-loop is implied when absent
    auto edges = fixtures::wdfa_edges();
    std::erase(edges, edge{1, 1});
    wheeler_dfa d2 = wheeler_dfa::validate(16, edges, fixtures::wdfa_lambda(), fixtures::wdfa_finals());
    CHECK(d2.num_edges() == 20);
}

TEST_CASE("axiom violations are reported with witnesses, all at once") {
    // swap labels of states 2 and 3: breaks Axiom 1 monotonicity
    std::string lam = fixtures::wdfa_lambda();
    std::swap(lam[1], lam[2]);
    CHECK_THROWS_AS(wheeler_dfa::validate(16, fixtures::wdfa_edges(), lam, {}),
                    wlcp::validation_error);

    // Axiom 2 violation: cross the predecessor order of same-label states 6, 7
    auto edges = fixtures::wdfa_edges();
    for (auto& e : edges) {
        if (e == edge{2, 6}) e = edge{5, 6};
    }
    try {
        wheeler_dfa::validate(16, edges, fixtures::wdfa_lambda(), {});
        FAIL("expected validation_error");
    } catch (const wlcp::validation_error& ex) {
        CHECK(!ex.issues().empty());
    }

    // multiple independent problems reported together
    auto bad = fixtures::wdfa_edges();
    bad.push_back({3, 1});  // edge into the initial state
    bad.push_back({6, 8});  // duplicate edge
    try {
        wheeler_dfa::validate(16, bad, fixtures::wdfa_lambda(), {});
        FAIL("expected validation_error");
    } catch (const wlcp::validation_error& ex) {
        CHECK(ex.issues().size() >= 2);
    }
}

TEST_CASE("unreachable states are rejected unless relaxed") {
    // two-state automaton where state 2 is never reached
    std::vector<edge> edges{{1, 1}, {2, 2}};
    std::string lam = "#a";
    CHECK_THROWS_AS(wheeler_dfa::validate(2, edges, lam, {}), wlcp::validation_error);
    wheeler_dfa d = wheeler_dfa::validate(2, edges, lam, {}, '#', false);
    CHECK(d.num_states() == 2);
}

TEST_CASE("random automata: generator output validates and navigation matches edges") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        wheeler_dfa d = wlcp::random_wheeler_dfa(rng, 120);
        check_nav_against_edges(d);
        check_forward_search(d, rng, 200);
    }
}

TEST_CASE("from_parts reconstructs an identical automaton") {
    wheeler_dfa d = fixtures::wdfa_dfa();
    wheeler_dfa d2 = wheeler_dfa::from_parts(d.num_states(), d.num_edges(), d.sentinel(),
                                             d.symbols(), d.lambda().substr(1), d.out_bits(),
                                             d.in_bits(),
                                             d.edge_labels(), d.finals());
    CHECK(d2.edges() == d.edges());
    check_nav_against_edges(d2);
    CHECK(d2.nav_size_bits() == d.nav_size_bits());
}
