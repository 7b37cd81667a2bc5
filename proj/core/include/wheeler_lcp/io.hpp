#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wheeler_lcp/debruijn.hpp"
#include "wheeler_lcp/sampled_lcp.hpp"
#include "wheeler_lcp/wheeler.hpp"

namespace wlcp {

/// Thrown on malformed text input; the message carries the line number.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed edge-list file: header "n e sigma", e lines "src dst label", then
/// "finals: i1 i2 ...". Labels are per-edge in the file; input-consistency
/// (all edges into a state share one label) is checked here with line numbers,
/// the Wheeler axioms by wheeler_dfa::validate.
struct edge_list {
    uint32_t n = 0;
    uint32_t sigma = 0;
    std::vector<edge> edges;
    std::string lambda;  // 1-based, derived from edge labels; λ(u_1) = '#'
    std::vector<uint32_t> finals;

    wheeler_dfa validate() const;
};

edge_list parse_edge_list(std::istream& in);
edge_list parse_edge_list_file(const std::string& path);

/// One DNA sequence per line; blank lines ignored.
std::vector<std::string> parse_sequences(std::istream& in);
std::vector<std::string> parse_sequences_file(const std::string& path);

/// Serialized index: a Wheeler-DFA LCP index or a de Bruijn variable-order
/// index. Magic "WGLCP1"; integers little-endian; each section is
/// length-prefixed so unknown trailing sections can be skipped.
struct index_container {
    enum class kind_t : uint8_t { wdfa = 0, dbg = 1 };

    kind_t kind = kind_t::wdfa;
    wheeler_dfa dfa;     // wdfa kind
    sampled_lcp lcp;     // wdfa kind
    debruijn_index dbg;  // dbg kind

    const wheeler_dfa& graph() const { return kind == kind_t::wdfa ? dfa : dbg.dfa(); }
};

void save_index(const index_container& x, const std::string& path);
index_container load_index(const std::string& path);

std::vector<uint8_t> serialize_index(const index_container& x);
index_container deserialize_index(const std::vector<uint8_t>& bytes);

}  // namespace wlcp
