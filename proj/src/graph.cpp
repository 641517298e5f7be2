#include "hermspec/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace hermspec {

namespace {

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    }
}

std::string pair_text(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n, std::vector<VertexPair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        matrix_[static_cast<std::size_t>(u * n + v)] = 1;
        matrix_[static_cast<std::size_t>(v * n + u)] = 1;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u * n_ + v)] != 0;
}

// ---------------------------------------------------------------------------------------------
// MixedGraph

MixedGraph::MixedGraph(int n, std::vector<VertexPair> arcs, std::vector<VertexPair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    rel_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto claim = [&](Vertex u, Vertex v, Relation forward, Relation backward) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        auto& f = rel_[static_cast<std::size_t>(u * n + v)];
        auto& b = rel_[static_cast<std::size_t>(v * n + u)];
        if (f != 0 || b != 0) throw std::invalid_argument("more than one relation on pair " + pair_text(u, v));
        f = static_cast<std::uint8_t>(forward);
        b = static_cast<std::uint8_t>(backward);
    };
    for (const auto& [u, v] : arcs) claim(u, v, Relation::out, Relation::in);
    for (auto& [u, v] : edges) {
        claim(u, v, Relation::edge, Relation::edge);
        if (u > v) std::swap(u, v);
    }
    std::sort(arcs.begin(), arcs.end());
    std::sort(edges.begin(), edges.end());
    arcs_ = std::move(arcs);
    edges_ = std::move(edges);
}

MixedGraph MixedGraph::reversed() const {
    std::vector<VertexPair> rev;
    rev.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_) rev.emplace_back(v, u);
    return MixedGraph(n_, std::move(rev), edges_);
}

OrientedGraph::OrientedGraph(MixedGraph g) : g_(std::move(g)) {
    if (!g_.is_oriented()) throw std::invalid_argument("graph has undirected edges; an oriented graph is required");
}

// ---------------------------------------------------------------------------------------------
// SignedGraph

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    sign_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto& e : edges) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
        auto& s = sign_[static_cast<std::size_t>(e.u * n + e.v)];
        if (s != 0) throw std::invalid_argument("more than one signed edge on pair " + pair_text(e.u, e.v));
        s = static_cast<std::int8_t>(e.sign);
        sign_[static_cast<std::size_t>(e.v * n + e.u)] = s;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

SimpleGraph SignedGraph::underlying() const {
    std::vector<VertexPair> e;
    e.reserve(edges_.size());
    for (const auto& se : edges_) e.emplace_back(se.u, se.v);
    return SimpleGraph(n_, std::move(e));
}

// ---------------------------------------------------------------------------------------------
// Structural predicates

DegreeProfile degree_profile(const MixedGraph& d) {
    DegreeProfile p(static_cast<std::size_t>(d.order()));
    for (const auto& [u, v] : d.arcs()) {
        ++p[static_cast<std::size_t>(u)].out;
        ++p[static_cast<std::size_t>(v)].in;
    }
    for (const auto& [u, v] : d.edges()) {
        ++p[static_cast<std::size_t>(u)].undirected;
        ++p[static_cast<std::size_t>(v)].undirected;
    }
    return p;
}

SimpleGraph underlying(const MixedGraph& d) {
    std::vector<VertexPair> e;
    e.reserve(d.arcs().size() + d.edges().size());
    for (const auto& [u, v] : d.arcs()) e.emplace_back(std::min(u, v), std::max(u, v));
    for (const auto& uv : d.edges()) e.push_back(uv);
    return SimpleGraph(d.order(), std::move(e));
}

MixedGraph as_undirected(const SimpleGraph& g) {
    return MixedGraph(g.order(), {}, g.edges());
}

bool is_regular(const MixedGraph& d) {
    const auto p = degree_profile(d);
    return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>{}) == p.end();
}

int regular_degree(const SimpleGraph& g) {
    if (g.order() == 0) return 0;
    const int d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) return -1;
    }
    return d;
}

int common_neighbors(const SimpleGraph& g, Vertex u, Vertex v) {
    check_vertex(g.order(), u);
    check_vertex(g.order(), v);
    if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool is_triangle_free(const SimpleGraph& g) {
    for (const auto& [u, v] : g.edges()) {
        if (common_neighbors(g, u, v) > 0) return false;
    }
    return true;
}

bool is_connected(const SimpleGraph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

bool is_connected(const MixedGraph& d) { return is_connected(underlying(d)); }

std::vector<int> two_coloring(const SimpleGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const SimpleGraph& g) { return g.order() == 0 || !two_coloring(g).empty(); }

namespace {

std::vector<int> relabel_map(int n, std::span<const Vertex> vertices) {
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(n, vertices[i]);
        auto& slot = index[static_cast<std::size_t>(vertices[i])];
        if (slot != -1) throw std::invalid_argument("repeated vertex in subset");
        slot = static_cast<int>(i);
    }
    return index;
}

}  // namespace

MixedGraph induced_subgraph(const MixedGraph& d, std::span<const Vertex> vertices) {
    const auto index = relabel_map(d.order(), vertices);
    std::vector<VertexPair> arcs, edges;
    for (const auto& [u, v] : d.arcs()) {
        const int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) arcs.emplace_back(a, b);
    }
    for (const auto& [u, v] : d.edges()) {
        const int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return MixedGraph(static_cast<int>(vertices.size()), std::move(arcs), std::move(edges));
}

SignedGraph induced_subgraph(const SignedGraph& s, std::span<const Vertex> vertices) {
    const auto index = relabel_map(s.order(), vertices);
    std::vector<SignedEdge> edges;
    for (const auto& e : s.edges()) {
        const int a = index[static_cast<std::size_t>(e.u)], b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b, e.sign});
    }
    return SignedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

OrientedGraph bipartite_double(const OrientedGraph& d) {
    const int n = d.order();
    std::vector<VertexPair> arcs;
    arcs.reserve(2 * d.arcs().size());
    for (const auto& [u, v] : d.arcs()) {
        arcs.emplace_back(u, v + n);
        arcs.emplace_back(u + n, v);
    }
    return OrientedGraph(2 * n, std::move(arcs));
}

bool is_tournament(const MixedGraph& d) {
    const auto n = static_cast<std::size_t>(d.order());
    return d.is_oriented() && d.arcs().size() == n * (n - 1) / 2 && n >= 1;
}

// ---------------------------------------------------------------------------------------------
// Isomorphism: colour refinement followed by backtracking over refined classes.

namespace {

struct CodeMatrix {
    int n = 0;
    std::vector<std::uint8_t> code;  // code(u,v); 0 means non-adjacent
    std::uint8_t at(int u, int v) const { return code[static_cast<std::size_t>(u * n + v)]; }
};

CodeMatrix codes_of(const MixedGraph& d) {
    CodeMatrix m{d.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(d.order() * d.order()))};
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v) m.code[static_cast<std::size_t>(u * m.n + v)] = static_cast<std::uint8_t>(d.relation(u, v));
    return m;
}

CodeMatrix codes_of(const SignedGraph& s) {
    CodeMatrix m{s.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(s.order() * s.order()))};
    for (int u = 0; u < s.order(); ++u)
        for (int v = 0; v < s.order(); ++v) {
            const int sg = s.sign(u, v);
            m.code[static_cast<std::size_t>(u * m.n + v)] = sg == 0 ? 0 : (sg > 0 ? 1 : 2);
        }
    return m;
}

CodeMatrix codes_of(const SimpleGraph& g) {
    CodeMatrix m{g.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(g.order() * g.order()))};
    for (const auto& [u, v] : g.edges()) {
        m.code[static_cast<std::size_t>(u * m.n + v)] = 1;
        m.code[static_cast<std::size_t>(v * m.n + u)] = 1;
    }
    return m;
}

// Refines both graphs jointly so that colour ids are comparable across them.
void refine(const CodeMatrix& a, const CodeMatrix& b, std::vector<int>& ca, std::vector<int>& cb) {
    const int n = a.n;
    ca.assign(static_cast<std::size_t>(n), 0);
    cb.assign(static_cast<std::size_t>(n), 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::map<std::vector<int>, int> ids;
        auto signature = [&](const CodeMatrix& m, const std::vector<int>& col, int v) {
            std::vector<int> sig;
            for (int w = 0; w < n; ++w) {
                if (w != v && m.at(v, w) != 0) sig.push_back(m.at(v, w) * (2 * n + 1) + col[static_cast<std::size_t>(w)]);
            }
            std::sort(sig.begin(), sig.end());
            sig.push_back(-1 - col[static_cast<std::size_t>(v)]);
            return sig;
        };
        std::vector<std::vector<int>> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sa[static_cast<std::size_t>(v)] = signature(a, ca, v);
            sb[static_cast<std::size_t>(v)] = signature(b, cb, v);
            ids.emplace(sa[static_cast<std::size_t>(v)], 0);
            ids.emplace(sb[static_cast<std::size_t>(v)], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) {
            ca[static_cast<std::size_t>(v)] = ids[sa[static_cast<std::size_t>(v)]];
            cb[static_cast<std::size_t>(v)] = ids[sb[static_cast<std::size_t>(v)]];
        }
        if (next == classes) break;
        classes = next;
    }
}

bool isomorphic(const CodeMatrix& a, const CodeMatrix& b) {
    if (a.n != b.n) return false;
    const int n = a.n;
    if (n == 0) return true;
    {
        auto ka = a.code, kb = b.code;
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return false;
    }
    std::vector<int> ca, cb;
    refine(a, b, ca, cb);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }

    // Map vertices of `a` in order of increasing class size, preferring ones adjacent to mapped vertices.
    std::vector<int> class_size(static_cast<std::size_t>(n + 1), 0);
    for (int c : ca) ++class_size[static_cast<std::size_t>(c)];
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::pair<int, int> best_key{0, 0};
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int w : order) links += a.at(v, w) != 0;
            const std::pair<int, int> key{class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])], -links};
            if (best == -1 || key < best_key) {
                best = v;
                best_key = key;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                const int x = order[static_cast<std::size_t>(i)];
                const int fx = image[static_cast<std::size_t>(x)];
                ok = a.at(v, x) == b.at(w, fx) && a.at(x, v) == b.at(fx, w);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace

bool are_isomorphic(const MixedGraph& a, const MixedGraph& b) { return isomorphic(codes_of(a), codes_of(b)); }
bool are_isomorphic(const SignedGraph& a, const SignedGraph& b) { return isomorphic(codes_of(a), codes_of(b)); }
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) { return isomorphic(codes_of(a), codes_of(b)); }

}  // namespace hermspec
