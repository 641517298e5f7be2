#pragma once

#include "hermspec/cyclotomic.hpp"
#include "hermspec/graph.hpp"
#include "hermspec/spectra.hpp"

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace hermspec {

/// Exact eigenvalue of the form sign * n (integer) or sign * sqrt(n).
struct QuadraticValue {
    std::int64_t radicand = 0;  // |value| itself when !is_sqrt
    bool is_sqrt = false;
    int sign = 1;

    static QuadraticValue integer(std::int64_t v) { return {v < 0 ? -v : v, false, v < 0 ? -1 : 1}; }
    static QuadraticValue root(std::int64_t radicand, int sign = 1) { return {radicand, true, sign}; }

    double value() const;
    std::string to_string() const;

    friend bool operator==(const QuadraticValue&, const QuadraticValue&) = default;
};

enum class CertifyMethod { exact_identity, float_cluster };

/// Which route certify_two_ev takes. `automatic` uses exact arithmetic whenever k allows it.
enum class MethodChoice { automatic, force_float };

/// Verdict of the "exactly two distinct eigenvalues" test, with r > s.
struct Certificate {
    bool verdict = false;
    int k = 6;
    CertifyMethod method = CertifyMethod::exact_identity;
    std::optional<QuadraticValue> r_exact;
    std::optional<QuadraticValue> s_exact;
    double r = 0.0;
    double s = 0.0;
    int multiplicity_r = 0;
    int multiplicity_s = 0;
    double tol = 0.0;  // clustering tolerance on the float route; 0 for exact certificates
    int distinct = 0;  // float route: observed number of distinct eigenvalues
    std::string failure_reason;
};

/// Decides whether H_sigma(D) has exactly two distinct eigenvalues.
///
/// Exact route (k in {3, 4, 6}): the underlying graph must be d-regular; the candidates are
/// (sqrt d, -sqrt d) and (r, -d/r) for every positive divisor r of d, and a candidate is accepted
/// when H^2 - (r+s)H + rsI = 0 holds in Z[zeta_k] and H is not scalar. Multiplicities follow
/// from trace zero. Float route: the clustered spectrum has exactly two values.
///
/// Throws std::invalid_argument for k < 3, fewer than two vertices, or a disconnected graph.
Certificate certify_two_ev(const MixedGraph& d, int k, MethodChoice choice = MethodChoice::automatic,
                           double tol = default_cluster_tol);

/// Expected regular-tournament spectrum from a skew-Hadamard matrix of order n = |T| + 1:
/// (n-2)/2 once and -1/2 +- sqrt(3(n-1))/2, each (n-2)/2 times.
struct ThreeEvReport {
    bool verdict = false;
    int tournament_order = 0;
    double expected_top = 0.0;
    double expected_plus = 0.0;
    double expected_minus = 0.0;
    int expected_multiplicity = 0;
    /// The top value coincides with -1/2 + sqrt(3(n-1))/2 (only for n = 4, the directed triangle).
    bool collapsed = false;
    Spectrum observed;
    std::string failure_reason;
};

/// Throws std::invalid_argument unless `t` is a regular tournament.
ThreeEvReport certify_three_ev_tournament(const OrientedGraph& t, double tol = default_cluster_tol);

/// Every pair of distinct vertices has a multiple of 3 common neighbours.
bool check_common_neighbor_rule(const SimpleGraph& g);

/// s >= -1/Re(sigma), with equality exactly when D is an oriented regular graph.
/// Throws std::invalid_argument if the certificate is negative or Re(sigma) <= 0.
bool check_s_bound(const Certificate& cert, const MixedGraph& d, const RootOfUnity& sigma);

/// Counts of 2-walks u-x-v at k = 6 by value: 1 (absorbing or repelling), omega^2 (u->x->v),
/// omega^4 (u<-x<-v).
struct WalkValueCensus {
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const WalkValueCensus&, const WalkValueCensus&) = default;
};

WalkValueCensus walk_value_census(const OrientedGraph& d, Vertex u, Vertex v);

/// H_omega(D) has spectrum {n-1, -1 (n-1 times)}, like the undirected complete graph.
bool cospectral_with_complete_graph(const MixedGraph& d, double tol = 1e-8);

void to_json(nlohmann::json& j, const QuadraticValue& v);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const ThreeEvReport& r);

}  // namespace hermspec
