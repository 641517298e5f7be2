#include "hermspec/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hermspec {

double QuadraticValue::value() const {
    const double mag = is_sqrt ? std::sqrt(static_cast<double>(radicand)) : static_cast<double>(radicand);
    return sign * mag;
}

std::string QuadraticValue::to_string() const {
    std::string out = sign < 0 ? "-" : "";
    return is_sqrt ? out + "sqrt(" + std::to_string(radicand) + ")" : out + std::to_string(radicand);
}

namespace {

std::int64_t exact_sqrt(std::int64_t d) {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    while (r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    return r * r == d ? r : -1;
}

struct Candidate {
    QuadraticValue r;
    QuadraticValue s;
    std::int64_t p;  // r + s
    std::int64_t q;  // r * s
};

std::vector<Candidate> candidate_pairs(std::int64_t d) {
    std::vector<Candidate> out;
    const std::int64_t root = exact_sqrt(d);
    if (root < 0) out.push_back({QuadraticValue::root(d, 1), QuadraticValue::root(d, -1), 0, -d});
    for (std::int64_t r = 1; r <= d; ++r) {
        if (d % r != 0) continue;
        const std::int64_t s = -d / r;
        out.push_back({QuadraticValue::integer(r), QuadraticValue::integer(s), r + s, -d});
    }
    return out;
}

void require_certifiable(const MixedGraph& d, int k) {
    if (k < 3) throw std::invalid_argument("root of unity order must be at least 3");
    if (d.order() < 2) throw std::invalid_argument("certification needs at least two vertices");
    if (!is_connected(d)) throw std::invalid_argument("certification needs a connected graph");
}

Certificate certify_exact(const MixedGraph& d, int k) {
    Certificate cert;
    cert.k = k;
    cert.method = CertifyMethod::exact_identity;
    const int n = d.order();
    const int deg = regular_degree(underlying(d));
    if (deg <= 0) {
        cert.failure_reason = "underlying graph is not regular";
        return cert;
    }
    const ExactMatrix h = build_exact_H(d, k);
    if (h.is_scalar()) {
        cert.failure_reason = "H is a scalar matrix";
        return cert;
    }
    for (const auto& c : candidate_pairs(deg)) {
        if (!exact_quadratic_check(h, c.p, c.q)) continue;
        std::int64_t m = 0;
        if (c.r.is_sqrt) {
            if (n % 2 != 0) {
                cert.failure_reason = "quadratic identity holds but trace zero forces an odd order to split evenly";
                return cert;
            }
            m = n / 2;
        } else {
            const std::int64_t rv = c.r.sign * c.r.radicand;
            const std::int64_t sv = c.s.sign * c.s.radicand;
            const std::int64_t num = static_cast<std::int64_t>(n) * (-sv);
            const std::int64_t den = rv - sv;
            if (num % den != 0 || num / den <= 0 || num / den >= n) {
                cert.failure_reason = "quadratic identity holds but multiplicities are not integral";
                return cert;
            }
            m = num / den;
        }
        cert.verdict = true;
        cert.r_exact = c.r;
        cert.s_exact = c.s;
        cert.r = c.r.value();
        cert.s = c.s.value();
        cert.multiplicity_r = static_cast<int>(m);
        cert.multiplicity_s = n - static_cast<int>(m);
        cert.distinct = 2;
        return cert;
    }
    cert.failure_reason = "no candidate pair satisfies H^2 - (r+s)H + rsI = 0";
    return cert;
}

Certificate certify_float(const MixedGraph& d, int k, double tol) {
    Certificate cert;
    cert.k = k;
    cert.method = CertifyMethod::float_cluster;
    cert.tol = tol;
    const Spectrum sp = spectrum_of(d, RootOfUnity(k), tol);
    cert.distinct = sp.distinct();
    if (sp.distinct() != 2) {
        cert.failure_reason = std::to_string(sp.distinct()) + " distinct eigenvalues";
        return cert;
    }
    cert.verdict = true;
    cert.r = sp.clusters[0].value;
    cert.s = sp.clusters[1].value;
    cert.multiplicity_r = sp.clusters[0].multiplicity;
    cert.multiplicity_s = sp.clusters[1].multiplicity;
    return cert;
}

}  // namespace

Certificate certify_two_ev(const MixedGraph& d, int k, MethodChoice choice, double tol) {
    require_certifiable(d, k);
    if (has_exact_arithmetic(k) && choice == MethodChoice::automatic) return certify_exact(d, k);
    return certify_float(d, k, tol);
}

ThreeEvReport certify_three_ev_tournament(const OrientedGraph& t, double tol) {
    if (!is_tournament(t)) throw std::invalid_argument("input is not a tournament");
    if (!is_regular(t)) throw std::invalid_argument("tournament is not regular");
    ThreeEvReport rep;
    const int order = t.order();
    const double n = order + 1.0;
    rep.tournament_order = order;
    rep.expected_top = (n - 2.0) / 2.0;
    rep.expected_plus = -0.5 + std::sqrt(3.0 * (n - 1.0)) / 2.0;
    rep.expected_minus = -0.5 - std::sqrt(3.0 * (n - 1.0)) / 2.0;
    rep.expected_multiplicity = (order - 1) / 2;
    rep.collapsed = std::abs(rep.expected_top - rep.expected_plus) <= tol;
    rep.observed = spectrum_of(t, RootOfUnity(6), tol);

    std::vector<double> expected;
    expected.push_back(rep.expected_top);
    for (int i = 0; i < rep.expected_multiplicity; ++i) {
        expected.push_back(rep.expected_plus);
        expected.push_back(rep.expected_minus);
    }
    std::sort(expected.begin(), expected.end(), std::greater<>{});
    const int expected_distinct = rep.collapsed ? 2 : 3;

    if (rep.observed.distinct() != expected_distinct) {
        rep.failure_reason = std::to_string(rep.observed.distinct()) + " distinct eigenvalues, expected " + std::to_string(expected_distinct);
        return rep;
    }
    if (!same_spectrum(rep.observed.eigenvalues, expected, tol)) {
        rep.failure_reason = "eigenvalues do not match (n-2)/2 and -1/2 +- sqrt(3(n-1))/2";
        return rep;
    }
    rep.verdict = true;
    return rep;
}

bool check_common_neighbor_rule(const SimpleGraph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (common_neighbors(g, u, v) % 3 != 0) return false;
    return true;
}

bool check_s_bound(const Certificate& cert, const MixedGraph& d, const RootOfUnity& sigma) {
    if (!cert.verdict) throw std::invalid_argument("s-bound check needs a positive certificate");
    if (sigma.real_part() <= 0.0) throw std::invalid_argument("s-bound needs Re(sigma) > 0");
    constexpr double eps = 1e-9;
    const double bound = -1.0 / sigma.real_part();
    const bool above = cert.s >= bound - eps;
    const bool equality = std::abs(cert.s - bound) < eps;
    const bool regular = d.is_oriented() && is_regular(d);
    return above && equality == regular;
}

WalkValueCensus walk_value_census(const OrientedGraph& d, Vertex u, Vertex v) {
    const int n = d.order();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("walk census needs distinct end points");
    const MixedGraph& g = d.mixed();
    WalkValueCensus census;
    for (Vertex x = 0; x < n; ++x) {
        const Relation first = g.relation(u, x);
        const Relation second = g.relation(x, v);
        if (first == Relation::none || second == Relation::none) continue;
        if (first == Relation::out && second == Relation::out) {
            ++census.b;
        } else if (first == Relation::in && second == Relation::in) {
            ++census.c;
        } else {
            ++census.a;
        }
    }
    return census;
}

bool cospectral_with_complete_graph(const MixedGraph& d, double tol) {
    const int n = d.order();
    const auto eigs = spectrum_of(d, RootOfUnity(6), tol).eigenvalues;
    std::vector<double> expected(static_cast<std::size_t>(n), -1.0);
    if (n > 0) expected[0] = n - 1.0;
    return same_spectrum(eigs, expected, tol);
}

// ---------------------------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const QuadraticValue& v) {
    if (v.is_sqrt) {
        j = {{"sqrt", v.radicand}};
        if (v.sign < 0) j["sign"] = -1;
    } else {
        j = {{"int", v.sign * v.radicand}};
    }
}

void to_json(nlohmann::json& j, const Certificate& c) {
    j = {{"verdict", c.verdict ? "yes" : "no"},
         {"k", c.k},
         {"method", c.method == CertifyMethod::exact_identity ? "exact-identity" : "float-cluster"}};
    if (c.verdict) {
        if (c.r_exact && c.s_exact) {
            j["pair"] = {*c.r_exact, *c.s_exact};
        } else {
            j["pair"] = {c.r, c.s};
        }
        j["values"] = {c.r, c.s};
        j["multiplicities"] = {c.multiplicity_r, c.multiplicity_s};
    } else {
        j["failure_reason"] = c.failure_reason;
    }
    if (c.method == CertifyMethod::float_cluster) {
        j["tol"] = c.tol;
        j["distinct"] = c.distinct;
    }
}

void to_json(nlohmann::json& j, const ThreeEvReport& r) {
    j = {{"verdict", r.verdict ? "yes" : "no"},
         {"tournament_order", r.tournament_order},
         {"expected", {{"top", r.expected_top}, {"plus", r.expected_plus}, {"minus", r.expected_minus},
                       {"multiplicity", r.expected_multiplicity}}},
         {"collapsed", r.collapsed},
         {"observed", r.observed}};
    if (!r.verdict) j["failure_reason"] = r.failure_reason;
}

}  // namespace hermspec
