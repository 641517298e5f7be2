#include "hermspec/constructions.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hermspec {

// ---------------------------------------------------------------------------------------------
// Skew-Hadamard matrices

std::optional<std::string> skew_hadamard_violation(const std::vector<std::vector<int>>& rows) {
    const auto n = rows.size();
    if (n == 0) return "empty matrix";
    for (const auto& row : rows) {
        if (row.size() != n) return "matrix is not square";
        for (int x : row)
            if (x != 1 && x != -1) return "entries must be +1 or -1";
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] + rows[j][i] != (i == j ? 2 : 0)) return "A + A^T != 2I (A - I is not skew-symmetric)";
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            long dot = 0;
            for (std::size_t c = 0; c < n; ++c) dot += rows[i][c] * rows[j][c];
            if (dot != (i == j ? static_cast<long>(n) : 0)) return "A A^T != nI";
        }
    }
    return std::nullopt;
}

SkewHadamard::SkewHadamard(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (auto why = skew_hadamard_violation(rows_)) throw std::invalid_argument("not a skew-Hadamard matrix: " + *why);
}

std::string to_sign_text(const SkewHadamard& a) {
    std::string out;
    for (const auto& row : a.rows()) {
        for (int x : row) out.push_back(x > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

SkewHadamard skew_hadamard_from_text(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> row;
        for (char c : line) {
            if (c == '+') row.push_back(1);
            else if (c == '-') row.push_back(-1);
            else if (c != ' ' && c != '\t' && c != '\r') throw std::invalid_argument(std::string("unexpected character '") + c + "' in sign matrix");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return SkewHadamard(std::move(rows));
}

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

SkewHadamard paley_skew_hadamard(long q) {
    if (!is_prime(q)) throw std::invalid_argument("Paley construction needs a prime, got " + std::to_string(q));
    if (q % 4 != 3) throw std::invalid_argument("Paley skew-Hadamard construction needs q = 3 (mod 4), got " + std::to_string(q));
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (long x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;

    const auto n = static_cast<std::size_t>(q + 1);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) a[0][j] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        a[i][0] = -1;
        for (std::size_t j = 1; j < n; ++j) {
            const long diff = ((static_cast<long>(j) - static_cast<long>(i)) % q + q) % q;
            a[i][j] = i == j ? 1 : chi[static_cast<std::size_t>(diff)];
        }
    }
    return SkewHadamard(std::move(a));
}

OrientedGraph tournament_from_skew_hadamard(const SkewHadamard& a) {
    const int n = a.order();
    // D A D with D = diag(1, sign(A_{0j})) keeps A skew-Hadamard and makes the first row all ones.
    std::vector<int> flip(static_cast<std::size_t>(n), 1);
    for (int j = 1; j < n; ++j) flip[static_cast<std::size_t>(j)] = a(0, j);
    std::vector<VertexPair> arcs;
    for (int u = 1; u < n; ++u) {
        for (int v = 1; v < n; ++v) {
            if (u == v) continue;
            if (flip[static_cast<std::size_t>(u)] * a(u, v) * flip[static_cast<std::size_t>(v)] == 1) arcs.emplace_back(u - 1, v - 1);
        }
    }
    return OrientedGraph(n - 1, std::move(arcs));
}

SkewHadamard skew_hadamard_from_tournament(const OrientedGraph& t) {
    if (!is_tournament(t)) throw std::invalid_argument("precondition failed: input is not a tournament");
    if (!is_regular(t)) throw std::invalid_argument("precondition failed: tournament is not regular");
    const auto report = certify_three_ev_tournament(t);
    if (!report.verdict) {
        throw std::invalid_argument("precondition failed: spectrum is not the three-eigenvalue pattern (" + report.failure_reason + ")");
    }
    const int m = t.order();
    const auto n = static_cast<std::size_t>(m + 1);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 1));
    for (std::size_t i = 1; i < n; ++i) a[i][0] = -1;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            int entry = 1;  // diagonal of B
            if (u != v) entry = t.mixed().relation(u, v) == Relation::out ? 1 : -1;
            a[static_cast<std::size_t>(u + 1)][static_cast<std::size_t>(v + 1)] = entry;
        }
    }
    return SkewHadamard(std::move(a));
}

// ---------------------------------------------------------------------------------------------
// Signed graphs and the k = 4 transform

OrientedGraph signed_to_oriented(const SignedGraph& s) {
    const auto color = two_coloring(s.underlying());
    if (s.order() > 0 && color.empty()) throw std::invalid_argument("signed_to_oriented needs a bipartite underlying graph");
    std::vector<VertexPair> arcs;
    for (const auto& e : s.edges()) {
        const bool u_first = color[static_cast<std::size_t>(e.u)] == 0;
        const Vertex x = u_first ? e.u : e.v;
        const Vertex y = u_first ? e.v : e.u;
        if (e.sign > 0) arcs.emplace_back(x, y);
        else arcs.emplace_back(y, x);
    }
    return OrientedGraph(s.order(), std::move(arcs));
}

SignedGraph oriented_to_signed(const OrientedGraph& d) {
    const auto color = two_coloring(underlying(d));
    if (d.order() > 0 && color.empty()) throw std::invalid_argument("oriented_to_signed needs a bipartite underlying graph");
    std::vector<SignedEdge> edges;
    for (const auto& [u, v] : d.arcs()) {
        edges.push_back({u, v, color[static_cast<std::size_t>(u)] == 0 ? 1 : -1});
    }
    return SignedGraph(d.order(), std::move(edges));
}

SignedGraph signed_hypercube(int n) {
    if (n < 1) throw std::invalid_argument("hypercube dimension must be at least 1");
    if (n > 16) throw std::invalid_argument("hypercube dimension too large");
    std::vector<SignedEdge> edges{{0, 1, 1}};
    int size = 2;
    for (int m = 1; m < n; ++m) {
        std::vector<SignedEdge> next = edges;
        for (const auto& e : edges) next.push_back({e.u + size, e.v + size, -e.sign});
        for (int v = 0; v < size; ++v) next.push_back({v, v + size, 1});
        edges = std::move(next);
        size *= 2;
    }
    SignedGraph s(size, std::move(edges));

    // S^2 = nI, using the sparse rows of S.
    std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(size));
    for (const auto& e : s.edges()) {
        rows[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign});
        rows[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign});
    }
    for (int u = 0; u < size; ++u) {
        std::map<int, long> sq;
        for (auto [x, s1] : rows[static_cast<std::size_t>(u)])
            for (auto [w, s2] : rows[static_cast<std::size_t>(x)]) sq[w] += s1 * s2;
        for (auto [w, val] : sq) {
            if (val != (w == u ? n : 0)) throw std::logic_error("signed hypercube failed S^2 = nI");
        }
    }
    return s;
}

// ---------------------------------------------------------------------------------------------
// Named graphs

namespace {

MixedGraph oriented_k33() {
    // Parts {u, v, w} = {0, 1, 2} and {x, y, z} = {3, 4, 5}.
    enum { u, v, w, x, y, z };
    return MixedGraph(6, {{u, x}, {x, v}, {v, z}, {z, u}, {u, y}, {v, y}, {w, z}, {w, x}, {y, w}});
}

MixedGraph oriented_k55_minus_matching() {
    // a1 = 0..4 and a2 = 5..9 for a in {v, w, x, y, z}; a1 and a2 are not adjacent.
    // Only two of the four directions of the pair of 4-cycles give H^2 = 4I; this is one of them.
    enum { v1, w1, x1, y1, z1, v2, w2, x2, y2, z2 };
    return MixedGraph(10, {
        {v1, w2}, {v1, x2}, {y2, v1}, {z2, v1},
        {x2, w1}, {w2, x1}, {y1, z2}, {z1, y2},
        {w2, y1}, {y1, x2}, {x2, z1}, {z1, w2},  // directed 4-cycle (w2, y1, x2, z1)
        {v2, y1}, {v2, z1},
        {y2, w1}, {w1, z2}, {z2, x1}, {x1, y2},  // directed 4-cycle (w1, z2, x1, y2)
        {w1, v2}, {x1, v2},
    });
}

std::optional<int> parse_suffix(std::string_view s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto rest = s.substr(prefix.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
    return value;
}

SimpleGraph complete_graph(int n) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph complete_bipartite(int a, int b) {
    std::vector<VertexPair> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return SimpleGraph(a + b, std::move(e));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<VertexPair> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph path_graph(int n) {
    std::vector<VertexPair> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph hypercube_graph(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("hypercube dimension out of range");
    const int size = 1 << n;
    std::vector<VertexPair> e;
    for (int v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b)
            if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
    return SimpleGraph(size, std::move(e));
}

SimpleGraph k55_minus_matching() {
    std::vector<VertexPair> e;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) e.emplace_back(i, 5 + j);
    return SimpleGraph(10, std::move(e));
}

MixedGraph build_named(std::string_view name) {
    if (name == "directed-edge") return MixedGraph(2, {{0, 1}});
    if (name == "directed-triangle") return MixedGraph(3, {{0, 1}, {1, 2}, {2, 0}});
    if (name == "oriented-K33") return oriented_k33();
    if (name == "oriented-K55-M") return oriented_k55_minus_matching();
    if (name == "mixed-C4") return MixedGraph(4, {{0, 1}, {1, 2}, {2, 3}}, {{3, 0}});
    if (name == "regular-tournament-5") {
        std::vector<VertexPair> arcs;
        for (int v = 0; v < 5; ++v) {
            arcs.emplace_back(v, (v + 1) % 5);
            arcs.emplace_back(v, (v + 2) % 5);
        }
        return MixedGraph(5, std::move(arcs));
    }
    if (name == "cube") return as_undirected(hypercube_graph(3));
    if (auto n = parse_suffix(name, "complete-K")) {
        if (*n < 1 || *n > 64) throw std::invalid_argument("complete graph order out of range");
        return as_undirected(complete_graph(*n));
    }
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> named_graph_names() {
    return {"directed-edge", "directed-triangle", "oriented-K33", "oriented-K55-M", "mixed-C4",
            "regular-tournament-5", "cube", "complete-K<n>"};
}

std::optional<ExpectedCertificate> expected_certificate(std::string_view name) {
    using Q = QuadraticValue;
    if (name == "directed-edge") return ExpectedCertificate{Q::integer(1), Q::integer(-1), 1, 1};
    if (name == "directed-triangle") return ExpectedCertificate{Q::integer(1), Q::integer(-2), 2, 1};
    if (name == "oriented-K33") return ExpectedCertificate{Q::root(3, 1), Q::root(3, -1), 3, 3};
    if (name == "oriented-K55-M") return ExpectedCertificate{Q::integer(2), Q::integer(-2), 5, 5};
    if (name == "mixed-C4") return ExpectedCertificate{Q::root(2, 1), Q::root(2, -1), 2, 2};
    if (auto n = parse_suffix(name, "complete-K"); n && *n >= 2) {
        return ExpectedCertificate{Q::integer(*n - 1), Q::integer(-1), 1, *n - 1};
    }
    return std::nullopt;
}

MixedGraph named_graph(std::string_view name) {
    MixedGraph g = build_named(name);
    if (const auto expected = expected_certificate(name)) {
        const auto cert = certify_two_ev(g, 6);
        if (!cert.verdict || cert.r_exact != expected->r || cert.s_exact != expected->s ||
            cert.multiplicity_r != expected->multiplicity_r || cert.multiplicity_s != expected->multiplicity_s) {
            throw std::logic_error("fixture '" + std::string(name) + "' does not reproduce its expected certificate");
        }
    }
    return g;
}

SimpleGraph named_underlying(std::string_view name) {
    if (name == "cube") return hypercube_graph(3);
    if (name == "K55-M" || name == "K5,5-M") return k55_minus_matching();
    if (name == "K33") return complete_bipartite(3, 3);
    const auto comma = name.find(',');
    if (name.size() > 1 && name[0] == 'K' && comma != std::string_view::npos) {
        int a = 0, b = 0;
        const auto sa = name.substr(1, comma - 1);
        const auto sb = name.substr(comma + 1);
        const auto ra = std::from_chars(sa.data(), sa.data() + sa.size(), a);
        const auto rb = std::from_chars(sb.data(), sb.data() + sb.size(), b);
        if (ra.ec == std::errc{} && rb.ec == std::errc{} && ra.ptr == sa.data() + sa.size() &&
            rb.ptr == sb.data() + sb.size() && a >= 1 && b >= 1 && a + b <= 64) {
            return complete_bipartite(a, b);
        }
    }
    if (auto n = parse_suffix(name, "K"); n && *n >= 1 && *n <= 64) return complete_graph(*n);
    if (auto n = parse_suffix(name, "C"); n && *n >= 3 && *n <= 64) return cycle_graph(*n);
    if (auto n = parse_suffix(name, "P"); n && *n >= 1 && *n <= 64) return path_graph(*n);
    if (auto n = parse_suffix(name, "Q"); n && *n >= 0 && *n <= 6) return hypercube_graph(*n);
    throw std::invalid_argument("unknown underlying graph '" + std::string(name) + "'");
}

}  // namespace hermspec
