// wlcp: build, query and benchmark LCP-augmented Wheeler graph indexes.
//
// Exit codes: 0 success, 2 input validation failure, 3 query error, 4 I/O.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wheeler_lcp/bench.hpp"
#include "wheeler_lcp/debruijn.hpp"
#include "wheeler_lcp/io.hpp"
#include "wheeler_lcp/lcp_oracle.hpp"
#include "wheeler_lcp/matching_stats.hpp"
#include "wheeler_lcp/sampled_lcp.hpp"

namespace {

constexpr int kOk = 0, kValidation = 2, kQuery = 3, kIo = 4;

uint64_t resolve_h(const std::string& spec, uint64_t n, uint64_t sigma) {
    if (spec == "auto-linear") return wlcp::pick_h_linear(n);
    if (spec == "auto-loglog") return wlcp::pick_h_loglog(n, sigma);
    uint64_t h = 0;
    std::istringstream is(spec);
    if (!(is >> h) || !is.eof() || h < 1)
        throw CLI::ValidationError("--h", "expected a positive integer, auto-linear or auto-loglog");
    return h;
}

void print_build_stats(const wlcp::wheeler_dfa& d, const wlcp::sampled_lcp& s) {
    std::cout << "n " << d.num_states() << "\n"
              << "e " << d.num_edges() << "\n"
              << "sigma " << d.sigma() << "\n"
              << "h " << s.h() << "\n"
              << "popcount_C " << s.num_samples() << "\n"
              << "bits_nav " << d.nav_size_bits() << "\n"
              << "bits_marks " << s.marks_bits() << "\n"
              << "bits_samples " << s.sample_bits() << "\n"
              << "bits_rmq " << s.rmq().size_bits() << "\n"
              << "bits_total " << d.nav_size_bits() + s.size_bits() << "\n";
}

std::string render(const wlcp::sampled_lcp& s, wlcp::ext_nat v) {
    return v >= s.inf() ? "inf" : std::to_string(v);
}

int cmd_build_wdfa(const std::string& input, const std::string& out, const std::string& hspec) {
    wlcp::edge_list el = wlcp::parse_edge_list_file(input);
    wlcp::wheeler_dfa d = el.validate();
    wlcp::lcp_array full = wlcp::build_full_lcp_fast(d);
    uint64_t h = resolve_h(hspec, d.num_states(), d.sigma());
    wlcp::index_container x;
    x.kind = wlcp::index_container::kind_t::wdfa;
    x.lcp = wlcp::sampled_lcp::build(d, full, h);
    x.dfa = std::move(d);
    print_build_stats(x.dfa, x.lcp);
    wlcp::save_index(x, out);
    return kOk;
}

int cmd_build_dbg(const std::string& input, const std::string& out, uint32_t k,
                  const std::string& mode) {
    auto strings = wlcp::parse_sequences_file(input);
    auto m = mode == "baseline" ? wlcp::dbg_mode::baseline : wlcp::dbg_mode::sampled;
    wlcp::index_container x;
    x.kind = wlcp::index_container::kind_t::dbg;
    x.dbg = wlcp::debruijn_index::build(strings, k, m);
    std::cout << "n " << x.dbg.num_nodes() << "\n"
              << "e " << x.dbg.dfa().num_edges() << "\n"
              << "k " << k << "\n"
              << "mode " << (m == wlcp::dbg_mode::sampled ? "sampled" : "baseline") << "\n";
    if (m == wlcp::dbg_mode::sampled) {
        std::cout << "h " << x.dbg.sampled().h() << "\n"
                  << "popcount_C " << x.dbg.sampled().num_samples() << "\n"
                  << "bits_total " << x.dbg.dfa().nav_size_bits() + x.dbg.sampled().size_bits()
                  << "\n";
    } else {
        std::cout << "bits_total "
                  << x.dbg.dfa().nav_size_bits() + x.dbg.lcp_bar_plain().size() * 64 << "\n";
    }
    wlcp::save_index(x, out);
    return kOk;
}

int cmd_query_lcp(const wlcp::index_container& x, int64_t i, bool all) {
    const bool dbg = x.kind == wlcp::index_container::kind_t::dbg;
    auto value = [&](uint64_t e) -> std::string {
        if (dbg) {
            uint64_t v = x.dbg.lcp_bar(static_cast<uint32_t>(e));
            return v >= x.dbg.k() ? "inf" : std::to_string(v);
        }
        return render(x.lcp, x.lcp.access(x.dfa, e));
    };
    const uint64_t hi = dbg ? x.dbg.num_nodes() : 2 * uint64_t(x.dfa.num_states());
    if (all) {
        for (uint64_t e = 2; e <= hi; ++e) std::cout << (e > 2 ? " " : "") << value(e);
        std::cout << "\n";
        return kOk;
    }
    if (i < 2 || static_cast<uint64_t>(i) > hi) {
        std::cerr << "error: entry " << i << " out of range [2, " << hi << "]\n";
        return kQuery;
    }
    std::cout << value(static_cast<uint64_t>(i)) << "\n";
    return kOk;
}

int cmd_query_ms(const wlcp::index_container& x, const std::string& pattern) {
    if (x.kind != wlcp::index_container::kind_t::wdfa) {
        std::cerr << "error: ms requires a Wheeler-DFA index\n";
        return kQuery;
    }
    auto r = wlcp::matching_statistics(x.lcp, x.dfa, pattern);
    for (size_t i = 0; i < r.lengths.size(); ++i) std::cout << (i ? " " : "") << r.lengths[i];
    std::cout << "\n";
    return kOk;
}

int cmd_query_vo(const wlcp::index_container& x, std::istream& in) {
    if (x.kind != wlcp::index_container::kind_t::dbg) {
        std::cerr << "error: vo requires a de Bruijn index\n";
        return kQuery;
    }
    auto print = [](const wlcp::vo_node& v) {
        std::cout << "[" << v.a << "," << v.b << "]@" << v.order;
    };
    wlcp::vo_node cur = x.dbg.root();
    std::string line;
    size_t ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        try {
            if (cmd == "start") {
                std::string suffix;
                if (!(ls >> suffix)) throw std::invalid_argument("start needs a suffix");
                auto v = x.dbg.vo_start(suffix);
                if (!v) {
                    std::cout << "none\n";
                    continue;
                }
                cur = *v;
            } else if (cmd == "shorter" || cmd == "longer") {
                uint32_t k = 0;
                if (!(ls >> k)) throw std::invalid_argument(cmd + " needs an order");
                if (cmd == "shorter") {
                    cur = x.dbg.vo_shorter(cur, k);
                } else {
                    auto parts = x.dbg.vo_longer(cur, k);
                    for (size_t i = 0; i < parts.size(); ++i) {
                        if (i) std::cout << " ";
                        print(parts[i]);
                    }
                    std::cout << "\n";
                    cur = parts.front();
                    continue;
                }
            } else if (cmd == "forward") {
                std::string sym;
                if (!(ls >> sym) || sym.size() != 1)
                    throw std::invalid_argument("forward needs one symbol");
                auto v = x.dbg.vo_forward(cur, sym[0]);
                if (!v) {
                    std::cout << "none\n";
                    continue;
                }
                cur = *v;
            } else if (cmd == "backward") {
                cur = x.dbg.vo_backward(cur);
            } else {
                throw std::invalid_argument("unknown command \"" + cmd + "\"");
            }
        } catch (const std::exception& ex) {
            std::cerr << "error: line " << ln << ": " << ex.what() << "\n";
            return kQuery;
        }
        print(cur);
        std::cout << "\n";
    }
    return kOk;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::vector<uint64_t>& sweep) {
    std::cout << wlcp::bench_csv_header() << "\n";
    for (const std::string& path : inputs) {
        wlcp::edge_list el = wlcp::parse_edge_list_file(path);
        wlcp::wheeler_dfa d = el.validate();
        wlcp::lcp_array full = wlcp::build_full_lcp_fast(d);
        for (uint64_t h : sweep) {
            auto s = wlcp::sampled_lcp::build(d, full, h);
            std::cout << wlcp::bench_csv_row(wlcp::measure_index(d, s)) << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCP-augmented Wheeler graph indexing"};
    app.require_subcommand(1);

    std::string input, out, hspec = "auto-linear", mode = "sampled", pattern, script;
    uint32_t k = 0;
    int64_t entry = -1;
    bool all = false;
    std::vector<std::string> bench_inputs;
    std::vector<uint64_t> sweep{1, 2, 4, 8, 16, 32};

    auto* bw = app.add_subcommand("build-wdfa", "Build an index from an edge-list file");
    bw->set_help_flag("--help", "print help");  // frees -h so --h can name the sample rate
    bw->add_option("input", input, "edge-list file")->required();
    bw->add_option("-o,--out", out, "output index path")->required();
    bw->add_option("--h", hspec, "sampling parameter: integer, auto-linear or auto-loglog");

    auto* bd = app.add_subcommand("build-dbg", "Build a de Bruijn index from sequences");
    bd->add_option("input", input, "sequence file, one string per line")->required();
    bd->add_option("-o,--out", out, "output index path")->required();
    bd->add_option("-k,--order", k, "de Bruijn order")->required();
    bd->add_option("--mode", mode, "sampled or baseline")
        ->check(CLI::IsMember({"sampled", "baseline"}));

    auto* q = app.add_subcommand("query", "Query a built index");
    q->add_option("index", input, "index file")->required();
    q->require_subcommand(1);
    auto* ql = q->add_subcommand("lcp", "LCP entry access");
    ql->add_option("--i", entry, "entry index");
    ql->add_flag("--all", all, "print every entry");
    auto* qm = q->add_subcommand("ms", "matching statistics");
    qm->add_option("--pattern", pattern, "pattern string")->required();
    auto* qv = q->add_subcommand("vo", "variable-order navigation script");
    qv->add_option("--script", script, "script file (default: stdin)");

    auto* be = app.add_subcommand("bench", "Space/time sweep over h, CSV on stdout");
    be->add_option("inputs", bench_inputs, "edge-list files")->required();
    be->add_option("--h-sweep", sweep, "h values")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (bw->parsed()) return cmd_build_wdfa(input, out, hspec);
        if (bd->parsed()) return cmd_build_dbg(input, out, k, mode);
        if (be->parsed()) return cmd_bench(bench_inputs, sweep);
        // query
        wlcp::index_container x = wlcp::load_index(input);
        if (ql->parsed()) {
            if (!all && entry < 0) {
                std::cerr << "error: lcp needs --i or --all\n";
                return kQuery;
            }
            return cmd_query_lcp(x, entry, all);
        }
        if (qm->parsed()) return cmd_query_ms(x, pattern);
        if (qv->parsed()) {
            if (script.empty()) return cmd_query_vo(x, std::cin);
            std::ifstream sf(script);
            if (!sf) {
                std::cerr << "error: cannot open " << script << "\n";
                return kIo;
            }
            return cmd_query_vo(x, sf);
        }
    } catch (const wlcp::validation_error& ex) {
        std::cerr << "validation error:\n" << ex.what() << "\n";
        return kValidation;
    } catch (const wlcp::parse_error& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kValidation;
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "i/o error: " << ex.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kValidation;
    } catch (const std::out_of_range& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kQuery;
    }
    return kOk;
}
