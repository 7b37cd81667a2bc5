#include "wheeler_lcp/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace wlcp {

namespace {

constexpr char kMagic[6] = {'W', 'G', 'L', 'C', 'P', '1'};

[[noreturn]] void fail(const std::vector<std::string>& issues) {
    std::string msg;
    for (const std::string& s : issues) {
        if (!msg.empty()) msg += '\n';
        msg += s;
    }
    throw parse_error(msg);
}

std::string at_line(size_t ln, const std::string& what) {
    return "line " + std::to_string(ln) + ": " + what;
}

}  // namespace

wheeler_dfa edge_list::validate() const {
    return wheeler_dfa::validate(n, edges, lambda.substr(1), finals);
}

edge_list parse_edge_list(std::istream& in) {
    std::vector<std::string> issues;
    edge_list out;
    std::string line;
    size_t ln = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++ln;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) fail({"line 1: missing header \"n e sigma\""});
    uint64_t n = 0, e = 0, sigma = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> e >> sigma) || (hs >> extra))
            fail({at_line(ln, "malformed header, expected \"n e sigma\"")});
        if (n < 1) fail({at_line(ln, "n must be at least 1")});
    }
    out.n = static_cast<uint32_t>(n);
    out.sigma = static_cast<uint32_t>(sigma);
    out.lambda.assign(n + 1, '\0');
    out.lambda[1] = '#';

    for (uint64_t i = 0; i < e; ++i) {
        if (!next_line()) {
            issues.push_back(at_line(ln, "unexpected end of file, expected " +
                                             std::to_string(e) + " edge lines"));
            break;
        }
        std::istringstream es(line);
        uint64_t src = 0, dst = 0;
        std::string lab, extra;
        if (!(es >> src >> dst >> lab) || (es >> extra) || lab.size() != 1 ||
            !std::isgraph(static_cast<unsigned char>(lab[0]))) {
            issues.push_back(at_line(ln, "malformed edge, expected \"src dst label\""));
            continue;
        }
        if (src < 1 || src > n || dst < 1 || dst > n) {
            issues.push_back(at_line(ln, "state index out of range [1, " + std::to_string(n) + "]"));
            continue;
        }
        char c = lab[0];
        if (out.lambda[dst] != '\0' && out.lambda[dst] != c)
            issues.push_back(at_line(ln, "conflicting label '" + std::string(1, c) + "' for state " +
                                             std::to_string(dst) + ", previously '" +
                                             std::string(1, out.lambda[dst]) + "'"));
        else
            out.lambda[dst] = c;
        out.edges.push_back({static_cast<uint32_t>(src), static_cast<uint32_t>(dst)});
    }

    if (next_line()) {
        std::istringstream fs(line);
        std::string tag;
        fs >> tag;
        if (tag != "finals:") {
            issues.push_back(at_line(ln, "expected \"finals: i1 i2 ...\""));
        } else {
            uint64_t f;
            while (fs >> f) {
                if (f < 1 || f > n)
                    issues.push_back(at_line(ln, "final state " + std::to_string(f) + " out of range"));
                else
                    out.finals.push_back(static_cast<uint32_t>(f));
            }
            if (!fs.eof()) issues.push_back(at_line(ln, "non-numeric final state index"));
        }
    } else {
        issues.push_back(at_line(ln, "missing \"finals:\" line"));
    }
    if (next_line()) issues.push_back(at_line(ln, "trailing content after finals line"));

    std::string distinct;
    for (uint64_t i = 1; i <= n; ++i)
        if (out.lambda[i] != '\0' && distinct.find(out.lambda[i]) == std::string::npos)
            distinct += out.lambda[i];
    if (issues.empty() && distinct.size() != sigma)
        issues.push_back("line 1: header declares sigma=" + std::to_string(sigma) + " but " +
                         std::to_string(distinct.size()) + " distinct labels occur");

    if (!issues.empty()) fail(issues);
    // unlabeled states (no incoming edge) are reported by validate(); give
    // them a visible placeholder so label comparisons stay well-defined
    for (uint64_t i = 1; i <= n; ++i)
        if (out.lambda[i] == '\0') out.lambda[i] = '#';
    return out;
}

edge_list parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_edge_list(in);
}

std::vector<std::string> parse_sequences(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    size_t ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        for (char c : line)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                fail({at_line(ln, std::string("invalid character '") + c + "' (expected A/C/G/T)")});
        out.push_back(line);
    }
    if (out.empty()) fail({"empty input: no sequences"});
    return out;
}

std::vector<std::string> parse_sequences_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_sequences(in);
}

namespace {

struct byte_writer {
    std::vector<uint8_t> buf;

    void u8(uint8_t v) { buf.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void str(const std::string& s) {
        u64(s.size());
        buf.insert(buf.end(), s.begin(), s.end());
    }
    void vec64(const std::vector<uint64_t>& v) {
        u64(v.size());
        for (uint64_t x : v) u64(x);
    }
    void bv(const bit_vector& b) {
        u64(b.size());
        vec64(b.words());
    }
    // nested length-prefixed section
    void section(const byte_writer& w) {
        u64(w.buf.size());
        buf.insert(buf.end(), w.buf.begin(), w.buf.end());
    }
};

struct byte_reader {
    const std::vector<uint8_t>& buf;
    size_t pos = 0;

    void need(size_t k) const {
        if (pos + k > buf.size()) throw parse_error("truncated index container");
    }
    uint8_t u8() {
        need(1);
        return buf[pos++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(buf[pos++]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(buf[pos++]) << (8 * i);
        return v;
    }
    std::string str() {
        uint64_t k = u64();
        need(k);
        std::string s(buf.begin() + pos, buf.begin() + pos + k);
        pos += k;
        return s;
    }
    std::vector<uint64_t> vec64() {
        uint64_t k = u64();
        std::vector<uint64_t> v(k);
        for (uint64_t i = 0; i < k; ++i) v[i] = u64();
        return v;
    }
    bit_vector bv() {
        uint64_t n = u64();
        return bit_vector::from_words(n, vec64());
    }
    byte_reader section() {
        uint64_t k = u64();
        need(k);
        // sub-reader over the section payload; caller may stop early and
        // unread trailing content is skipped
        size_t start = pos;
        pos += k;
        return byte_reader{buf, start};
    }
};

void write_graph(byte_writer& w, const wheeler_dfa& d) {
    w.u32(d.num_states());
    w.u32(d.num_edges());
    w.u8(static_cast<uint8_t>(d.sentinel()));
    w.str(d.symbols());
    w.str(d.lambda().substr(1));  // drop the 1-based padding slot
    w.bv(d.out_bits());
    w.bv(d.in_bits());
    w.str(d.edge_labels());
    w.bv(d.finals());
}

wheeler_dfa read_graph(byte_reader& r) {
    uint32_t n = r.u32();
    uint32_t e = r.u32();
    char sentinel = static_cast<char>(r.u8());
    std::string symbols = r.str();
    std::string lambda = r.str();
    bit_vector out = r.bv();
    bit_vector in = r.bv();
    std::string edge_labels = r.str();
    bit_vector finals = r.bv();
    return wheeler_dfa::from_parts(n, e, sentinel, std::move(symbols), std::move(lambda),
                                   std::move(out), std::move(in), std::move(edge_labels),
                                   std::move(finals));
}

void write_lcp(byte_writer& w, const sampled_lcp& s) {
    w.u8(static_cast<uint8_t>(s.domain()));
    w.u64(s.n());
    w.u64(s.h());
    w.u64(s.inf());
    w.bv(s.marks());
    w.vec64(s.star());
    w.u64(s.rmq().length());
    w.u64(s.rmq().lo());
    w.vec64(s.rmq().bp_words());
}

sampled_lcp read_lcp(byte_reader& r) {
    auto dom = static_cast<lcp_domain>(r.u8());
    uint64_t n = r.u64();
    uint64_t h = r.u64();
    uint64_t inf = r.u64();
    bit_vector c = r.bv();
    std::vector<uint64_t> star = r.vec64();
    uint64_t m = r.u64();
    uint64_t lo = r.u64();
    rmq_index rmq = rmq_index::from_bp(m, lo, r.vec64());
    return sampled_lcp::from_parts(dom, n, h, inf, std::move(c), std::move(star), std::move(rmq));
}

}  // namespace

std::vector<uint8_t> serialize_index(const index_container& x) {
    byte_writer w;
    w.buf.insert(w.buf.end(), kMagic, kMagic + sizeof(kMagic));
    w.u8(static_cast<uint8_t>(x.kind));

    byte_writer graph;
    write_graph(graph, x.graph());
    w.section(graph);

    byte_writer body;
    if (x.kind == index_container::kind_t::wdfa) {
        write_lcp(body, x.lcp);
    } else {
        body.u32(x.dbg.k());
        body.u8(static_cast<uint8_t>(x.dbg.mode()));
        if (x.dbg.mode() == dbg_mode::sampled)
            write_lcp(body, x.dbg.sampled());
        else
            body.vec64(x.dbg.lcp_bar_plain());
    }
    w.section(body);
    return w.buf;
}

index_container deserialize_index(const std::vector<uint8_t>& bytes) {
    byte_reader r{bytes};
    r.need(sizeof(kMagic));
    if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
        throw parse_error("bad magic: not an index container");
    r.pos += sizeof(kMagic);

    index_container x;
    x.kind = static_cast<index_container::kind_t>(r.u8());
    byte_reader graph = r.section();
    wheeler_dfa d = read_graph(graph);
    byte_reader body = r.section();
    if (x.kind == index_container::kind_t::wdfa) {
        x.dfa = std::move(d);
        x.lcp = read_lcp(body);
    } else {
        uint32_t k = body.u32();
        auto mode = static_cast<dbg_mode>(body.u8());
        std::vector<uint64_t> bar;
        sampled_lcp s;
        if (mode == dbg_mode::sampled)
            s = read_lcp(body);
        else
            bar = body.vec64();
        x.dbg = debruijn_index::from_parts(k, mode, std::move(d), std::move(bar), std::move(s));
    }
    return x;
}

void save_index(const index_container& x, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    auto bytes = serialize_index(x);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

index_container load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_index(bytes);
}

}  // namespace wlcp
