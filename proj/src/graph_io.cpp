#include "hermspec/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace hermspec {

namespace {

constexpr int bias = 63;

void append_size(std::string& out, long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    }
}

long read_size(std::string_view s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> long {
        if (i >= s.size()) throw ParseError("digraph6: truncated vertex count");
        const int c = static_cast<unsigned char>(s[i]);
        if (c < bias || c > bias + 63) throw ParseError("digraph6: invalid character");
        return c - bias;
    };
    if (pos < s.size() && s[pos] != '~') return byte(pos++);
    if (pos + 1 < s.size() && s[pos + 1] == '~') {
        long n = 0;
        for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte(pos + 2 + i);
        pos += 8;
        return n;
    }
    long n = 0;
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte(pos + 1 + i);
    pos += 4;
    return n;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(std::string_view tok, int line_no) {
    int v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

// Splits "3>4" style compact tokens as well as "3 > 4".
std::vector<std::string_view> tokenize_relation(std::string_view line) {
    std::vector<std::string_view> out;
    for (auto tok : split_ws(line)) {
        std::size_t i = 0;
        while (i < tok.size()) {
            if (tok[i] == '>' || tok[i] == '+' || tok[i] == '-') {
                out.push_back(tok.substr(i, 1));
                ++i;
                continue;
            }
            const std::size_t b = i;
            while (i < tok.size() && tok[i] != '>' && tok[i] != '+' && tok[i] != '-') ++i;
            out.push_back(tok.substr(b, i - b));
        }
    }
    return out;
}

}  // namespace

std::string to_digraph6(const OrientedGraph& d) {
    const int n = d.order();
    std::string out = "&";
    append_size(out, n);
    int acc = 0, bits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            acc = (acc << 1) | (d.mixed().relation(i, j) == Relation::out ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + bias));
    return out;
}

OrientedGraph from_digraph6(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.front() != '&') throw ParseError("digraph6: missing '&' prefix");
    std::size_t pos = 1;
    const long n = read_size(text, pos);
    if (n > 1 << 15) throw ParseError("digraph6: graph too large");
    const long nbits = n * n;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != nbytes) throw ParseError("digraph6: wrong body length");
    std::vector<VertexPair> arcs;
    for (long b = 0; b < nbits; ++b) {
        const int c = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(b / 6)]) - bias;
        if (c < 0 || c > 63) throw ParseError("digraph6: invalid character");
        if ((c >> (5 - b % 6)) & 1) {
            const int i = static_cast<int>(b / n), j = static_cast<int>(b % n);
            if (i == j) throw ParseError("digraph6: loop at vertex " + std::to_string(i));
            arcs.emplace_back(i, j);
        }
    }
    try {
        return OrientedGraph(static_cast<int>(n), std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("digraph6: not an oriented graph: ") + e.what());
    }
}

std::string to_mixed_text(const MixedGraph& d) {
    std::ostringstream os;
    os << "mixed " << d.order() << '\n';
    for (const auto& [u, v] : d.arcs()) os << u << " > " << v << '\n';
    for (const auto& [u, v] : d.edges()) os << u << " - " << v << '\n';
    return os.str();
}

std::string to_signed_text(const SignedGraph& s) {
    std::ostringstream os;
    os << "signed " << s.order() << '\n';
    for (const auto& e : s.edges()) os << e.u << (e.sign > 0 ? " + " : " - ") << e.v << '\n';
    return os.str();
}

std::string encode(const MixedGraph& d) {
    if (d.is_oriented()) return to_digraph6(OrientedGraph(d));
    return to_mixed_text(d);
}

std::string encode(const SignedGraph& s) { return to_signed_text(s); }

std::vector<AnyGraph> read_graphs(std::string_view text) {
    std::vector<AnyGraph> out;
    enum class Block { none, mixed, signed_ } block = Block::none;
    int n = 0;
    std::vector<VertexPair> arcs, edges;
    std::vector<SignedEdge> signed_edges;

    auto flush = [&] {
        try {
            if (block == Block::mixed) out.emplace_back(MixedGraph(n, std::move(arcs), std::move(edges)));
            if (block == Block::signed_) out.emplace_back(SignedGraph(n, std::move(signed_edges)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        arcs.clear();
        edges.clear();
        signed_edges.clear();
        block = Block::none;
    };

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        // '#' starts a comment; it never occurs in digraph6 text (bytes 63..126).
        const auto line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;

        if (line.front() == '&') {
            flush();
            out.emplace_back(from_digraph6(line).mixed());
            continue;
        }
        const auto words = split_ws(line);
        if (words[0] == "mixed" || words[0] == "signed") {
            flush();
            if (words.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected '" + std::string(words[0]) + " <n>'");
            n = parse_int(words[1], line_no);
            if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
            block = words[0] == "mixed" ? Block::mixed : Block::signed_;
            continue;
        }
        if (block == Block::none) throw ParseError("line " + std::to_string(line_no) + ": relation outside a 'mixed' or 'signed' block");

        const auto tok = tokenize_relation(line);
        if (tok.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected 'u <op> v'");
        const int u = parse_int(tok[0], line_no);
        const int v = parse_int(tok[2], line_no);
        const auto op = tok[1];
        if (block == Block::mixed) {
            if (op == ">") arcs.emplace_back(u, v);
            else if (op == "-") edges.emplace_back(u, v);
            else throw ParseError("line " + std::to_string(line_no) + ": mixed graphs use '>' or '-'");
        } else {
            if (op == "+") signed_edges.push_back({u, v, 1});
            else if (op == "-") signed_edges.push_back({u, v, -1});
            else throw ParseError("line " + std::to_string(line_no) + ": signed graphs use '+' or '-'");
        }
    }
    flush();
    return out;
}

AnyGraph read_graph(std::string_view text) {
    auto all = read_graphs(text);
    if (all.size() != 1) throw ParseError("expected exactly one graph, found " + std::to_string(all.size()));
    return std::move(all.front());
}

}  // namespace hermspec
