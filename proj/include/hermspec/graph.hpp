#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hermspec {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Relation between an ordered vertex pair (u, v), as seen from u.
enum class Relation : std::uint8_t {
    none = 0,
    out = 1,   // u -> v
    in = 2,    // u <- v
    edge = 3,  // {u, v} undirected
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v, sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<VertexPair> edges);

    int order() const { return n_; }
    const std::vector<VertexPair>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Mixed graph D = (V, A, E): arcs are ordered pairs, edges are unordered pairs with u < v.
/// Each vertex pair carries at most one relation. Immutable after construction.
class MixedGraph {
public:
    MixedGraph() = default;
    MixedGraph(int n, std::vector<VertexPair> arcs, std::vector<VertexPair> edges = {});

    int order() const { return n_; }
    const std::vector<VertexPair>& arcs() const { return arcs_; }
    const std::vector<VertexPair>& edges() const { return edges_; }
    bool is_oriented() const { return edges_.empty(); }

    Relation relation(Vertex u, Vertex v) const {
        return static_cast<Relation>(rel_[static_cast<std::size_t>(u * n_ + v)]);
    }

    /// Same graph with every arc reversed; edges are unchanged.
    MixedGraph reversed() const;

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.edges_ == b.edges_;
    }
    friend auto operator<=>(const MixedGraph& a, const MixedGraph& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.arcs_ <=> b.arcs_; c != 0) return c;
        return a.edges_ <=> b.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexPair> arcs_;
    std::vector<VertexPair> edges_;
    std::vector<std::uint8_t> rel_;
};

/// A mixed graph without undirected edges.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(int n, std::vector<VertexPair> arcs) : g_(n, std::move(arcs)) {}
    /// Throws std::invalid_argument if `g` has undirected edges.
    explicit OrientedGraph(MixedGraph g);

    int order() const { return g_.order(); }
    const std::vector<VertexPair>& arcs() const { return g_.arcs(); }
    const MixedGraph& mixed() const { return g_; }
    operator const MixedGraph&() const { return g_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    MixedGraph g_;
};

struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    int sign = 1;

    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Signed graph (G, phi): unordered edges with u < v, each carrying a sign in {+1, -1}.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, std::vector<SignedEdge> edges);

    int order() const { return n_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    /// Sign of {u, v}, or 0 when u and v are not adjacent.
    int sign(Vertex u, Vertex v) const { return sign_[static_cast<std::size_t>(u * n_ + v)]; }
    SimpleGraph underlying() const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend auto operator<=>(const SignedGraph& a, const SignedGraph& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.edges_ <=> b.edges_;
    }

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::int8_t> sign_;
};

struct VertexDegrees {
    int out = 0;
    int in = 0;
    int undirected = 0;
    int total() const { return out + in + undirected; }

    friend auto operator<=>(const VertexDegrees&, const VertexDegrees&) = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

DegreeProfile degree_profile(const MixedGraph& d);

SimpleGraph underlying(const MixedGraph& d);
MixedGraph as_undirected(const SimpleGraph& g);

/// All out-degrees equal, all in-degrees equal and all undirected degrees equal.
/// For an oriented graph this is the usual notion of a regular digraph.
bool is_regular(const MixedGraph& d);
/// Degree of the regular graph `g`, or -1 if `g` is not regular.
int regular_degree(const SimpleGraph& g);

int common_neighbors(const SimpleGraph& g, Vertex u, Vertex v);
bool is_triangle_free(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_connected(const MixedGraph& d);

/// Lexicographically least proper 2-colouring (each component starts at its least vertex
/// with colour 0), or an empty vector if `g` is not bipartite.
std::vector<int> two_coloring(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

/// Induced subgraph on `vertices`, relabelled 0..|S|-1 in the given order.
MixedGraph induced_subgraph(const MixedGraph& d, std::span<const Vertex> vertices);
SignedGraph induced_subgraph(const SignedGraph& s, std::span<const Vertex> vertices);

/// Oriented two-fold cover: vertex v becomes v and v' = v + n; arc u->v becomes u->v' and u'->v.
OrientedGraph bipartite_double(const OrientedGraph& d);

bool is_tournament(const MixedGraph& d);

bool are_isomorphic(const MixedGraph& a, const MixedGraph& b);
bool are_isomorphic(const SignedGraph& a, const SignedGraph& b);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace hermspec
