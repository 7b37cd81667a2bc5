// Hand-checked fixtures: a 16-state Wheeler DFA and a k=3 de Bruijn graph,
// with their full LCP data, dependency (R) tables and known-valid samplings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wheeler_lcp/debruijn.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace fixtures {

// ---- 16-state Wheeler DFA -------------------------------------------------

inline std::vector<wlcp::edge> wdfa_edges() {
    return {{1, 1},  {1, 2},  {1, 3},   {1, 4},   {1, 5},   {2, 2},   {5, 5},
            {2, 6},  {3, 6},  {4, 7},   {5, 7},   {6, 8},   {7, 9},   {6, 10},
            {7, 11}, {8, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}};
}

inline std::string wdfa_lambda() { return "#abcdeeffgghijkl"; }

inline std::vector<uint32_t> wdfa_finals() { return {9, 10, 11, 16}; }

inline wlcp::wheeler_dfa wdfa_dfa() {
    return wlcp::wheeler_dfa::validate(16, wdfa_edges(), wdfa_lambda(), wdfa_finals());
}

constexpr uint64_t wdfa_inf = 48;  // 3n with n = 16

// entries 2..32
inline std::vector<uint64_t> wdfa_lcp() {
    const uint64_t I = wdfa_inf;
    return {I, 0, 1, 0, I, 0, I, 0, 1, 0, 1, 1, 1, 0, 2,
            2, 2, 0, 2, 2, 2, 0, 3, 0, 4, 0, 5, 0, 6, 0, 7};
}

struct r_row {
    uint64_t i;        // entry
    uint64_t k, kp;    // RMQ range endpoints in state terms
    uint64_t r;        // R(i)
};

// Every entry with a defined parent; odd entries with value 0 are absent.
inline std::vector<r_row> wdfa_r_rows() {
    return {{2, 1, 1, 2},    {4, 1, 2, 3},    {6, 1, 1, 2},    {8, 1, 1, 2},
            {10, 1, 5, 9},   {12, 2, 3, 5},   {13, 3, 4, 7},   {14, 4, 5, 9},
            {16, 6, 6, 12},  {17, 6, 7, 13},  {18, 7, 7, 14},  {20, 6, 6, 12},
            {21, 6, 7, 13},  {22, 7, 7, 14},  {24, 8, 8, 16},  {26, 12, 12, 24},
            {28, 13, 13, 26}, {30, 14, 14, 28}, {32, 15, 15, 30}};
}

inline std::vector<uint64_t> wdfa_sampling() { return {24, 32}; }
inline std::vector<uint64_t> wdfa_star() { return {3, 7}; }
constexpr uint64_t wdfa_h = 4;

// ---- k=3 de Bruijn graph --------------------------------------------------

inline std::vector<std::string> dbg_strings() {
    return {"CGAC", "GACG", "GACT", "TACG", "GTCG", "ACGA", "ACGT", "TCGA", "CGTC"};
}

constexpr uint32_t dbg_k = 3;

inline std::vector<std::string> dbg_nodes() {
    return {"$$$", "CGA", "$TA", "GAC", "TAC", "GTC", "ACG", "TCG", "$$T", "ACT", "CGT"};
}

// entries 2..11
inline std::vector<uint64_t> dbg_lcp_bar() { return {0, 1, 0, 2, 1, 0, 2, 0, 1, 1}; }

// entry -> (range in entry space, parent); entries with value 0 are absent
inline std::vector<r_row> dbg_r_rows() {
    return {{3, 9, 9, 9}, {5, 3, 3, 3}, {6, 4, 11, 9}, {8, 6, 6, 6}, {10, 2, 4, 4}, {11, 5, 7, 7}};
}

inline std::vector<uint64_t> dbg_sampling() { return {3, 8, 10, 11}; }
inline std::vector<uint64_t> dbg_star() { return {1, 2, 1, 1}; }
constexpr uint64_t dbg_h = 2;

inline wlcp::debruijn_index dbg_index(wlcp::dbg_mode mode = wlcp::dbg_mode::sampled) {
    return wlcp::debruijn_index::build(dbg_strings(), dbg_k, mode);
}

}  // namespace fixtures
