#pragma once

#include "hermspec/certify.hpp"
#include "hermspec/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermspec {

/// Square (+1, -1) matrix A with A A^T = nI and A + A^T = 2I.
class SkewHadamard {
public:
    /// Validates both invariants exactly; throws std::invalid_argument naming the failed one.
    explicit SkewHadamard(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    friend bool operator==(const SkewHadamard&, const SkewHadamard&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Reason the rows fail to form a skew-Hadamard matrix, or nullopt if they do.
std::optional<std::string> skew_hadamard_violation(const std::vector<std::vector<int>>& rows);

/// Rows rendered as '+' / '-' characters, one row per line.
std::string to_sign_text(const SkewHadamard& a);
SkewHadamard skew_hadamard_from_text(std::string_view text);

/// Names accepted by named_graph.
std::vector<std::string> named_graph_names();

/// Fixtures: directed-edge, directed-triangle, oriented-K33, oriented-K55-M, mixed-C4,
/// regular-tournament-5, cube (undirected 3-cube), complete-K<n> (undirected K_n, e.g. complete-K5).
/// Throws std::invalid_argument for unknown names.
MixedGraph named_graph(std::string_view name);

/// Certificate each two-eigenvalue fixture is expected to produce at k = 6.
struct ExpectedCertificate {
    QuadraticValue r;
    QuadraticValue s;
    int multiplicity_r = 0;
    int multiplicity_s = 0;
};
std::optional<ExpectedCertificate> expected_certificate(std::string_view name);

/// Undirected graphs used as search inputs: K<n>, K<a>,<b>, C<n>, Q<n> (hypercube), cube, K55-M.
SimpleGraph named_underlying(std::string_view name);

bool is_prime(long q);

/// Paley construction of order q + 1 from the quadratic character of GF(q).
/// Requires q prime with q = 3 (mod 4).
SkewHadamard paley_skew_hadamard(long q);

/// Normalises A so its first row is all ones (negating row j and column j together), deletes
/// the first row and column to get B, and orients u->v iff (B - I)_{uv} = +1.
OrientedGraph tournament_from_skew_hadamard(const SkewHadamard& a);

/// Borders B = (B - I) + I with a column of -1 and a row of +1. Requires a regular tournament
/// whose H_omega spectrum matches the skew-Hadamard pattern (three values, or the collapsed
/// two-value case of the directed triangle).
SkewHadamard skew_hadamard_from_tournament(const OrientedGraph& t);

/// Signed bipartite graph -> oriented graph with H_i(D) = U S U^*, U = diag(iI, I) on the
/// lexicographically least 2-colouring. Edge {x, y} with x in colour class 0 becomes x->y when
/// positive and y->x when negative. Throws std::invalid_argument if the graph is not bipartite.
OrientedGraph signed_to_oriented(const SignedGraph& s);
SignedGraph oriented_to_signed(const OrientedGraph& d);

/// Signed n-cube from S_1 = [[0,1],[1,0]], S_{m+1} = [[S_m, I], [I, -S_m]]; S^2 = nI is verified
/// over the integers.
SignedGraph signed_hypercube(int n);

}  // namespace hermspec
