#include "hermspec/constructions.hpp"
#include "hermspec/reproduction.hpp"
#include "hermspec/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hermspec;

namespace {

bool gram_is_scalar(const SkewHadamard& a) {
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dot = 0;
            for (int x = 0; x < n; ++x) dot += a(i, x) * a(j, x);
            if (dot != (i == j ? n : 0)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("named fixtures") {
    for (const auto& name : named_graph_names())
        if (name.find('<') == std::string::npos) CHECK_NOTHROW(named_graph(name));  // skip the complete-K<n> family
    CHECK_THROWS_AS(named_graph("petersen"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("complete-K1x"), std::invalid_argument);

    const MixedGraph k33 = named_graph("oriented-K33");
    CHECK(k33.is_oriented());
    CHECK(are_isomorphic(underlying(k33), named_underlying("K3,3")));
    CHECK(exact_quadratic_check(build_exact_H(k33, 6), 0, -3));

    const MixedGraph k55 = named_graph("oriented-K55-M");
    CHECK(k55.is_oriented());
    CHECK(exact_quadratic_check(build_exact_H(k55, 6), 0, -4));

    const Spectrum c4 = spectrum_of(named_graph("mixed-C4"), RootOfUnity(6));
    REQUIRE(c4.clusters.size() == 2);
    CHECK(c4.clusters[0].value == doctest::Approx(std::sqrt(2.0)));
    CHECK(c4.clusters[0].multiplicity == 2);

    const MixedGraph t5 = named_graph("regular-tournament-5");
    CHECK(is_tournament(t5));
    CHECK(is_regular(t5));
    CHECK(named_graph("cube").edges().size() == 12);
    CHECK(named_graph("complete-K5").edges().size() == 10);
}

TEST_CASE("underlying graph names") {
    CHECK(named_underlying("K6").edges().size() == 15);
    CHECK(named_underlying("K3,3").edges().size() == 9);
    CHECK(named_underlying("K2,4").edges().size() == 8);
    CHECK(named_underlying("C5").edges().size() == 5);
    CHECK(named_underlying("P4").edges().size() == 3);
    CHECK(named_underlying("Q3").edges().size() == 12);
    CHECK(are_isomorphic(named_underlying("cube"), named_underlying("Q3")));
    CHECK(named_underlying("K5,5-M").edges().size() == 20);
    CHECK_THROWS_AS(named_underlying("X9"), std::invalid_argument);
}

TEST_CASE("Paley skew-Hadamard matrices") {
    for (long q : {3L, 7L, 11L, 19L, 23L, 31L}) {
        const SkewHadamard a = paley_skew_hadamard(q);
        CHECK(a.order() == q + 1);
        CHECK(gram_is_scalar(a));
        for (int i = 0; i < a.order(); ++i)
            for (int j = 0; j < a.order(); ++j) CHECK(a(i, j) + a(j, i) == (i == j ? 2 : 0));
    }
    CHECK_THROWS_AS(paley_skew_hadamard(5), std::invalid_argument);
    CHECK_THROWS_AS(paley_skew_hadamard(15), std::invalid_argument);
    CHECK_THROWS_AS(paley_skew_hadamard(2), std::invalid_argument);
    CHECK(is_prime(19));
    CHECK_FALSE(is_prime(21));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("skew-Hadamard validation and text") {
    CHECK(skew_hadamard_violation({{1, 1}, {-1, 1}}) == std::nullopt);
    CHECK(skew_hadamard_violation({{1, 1}, {1, 1}}).has_value());
    CHECK(skew_hadamard_violation({{1, 1}, {-1, -1}}).has_value());
    CHECK(skew_hadamard_violation({{1, 2}, {-2, 1}}).has_value());
    CHECK(skew_hadamard_violation({{1, 1}}).has_value());
    CHECK_THROWS_AS(SkewHadamard({{1, 1}, {1, 1}}), std::invalid_argument);

    const SkewHadamard a = paley_skew_hadamard(7);
    const std::string text = to_sign_text(a);
    CHECK(text.substr(0, 9) == "++++++++\n");
    CHECK(skew_hadamard_from_text(text) == a);
    CHECK_THROWS(skew_hadamard_from_text("+x\n-+\n"));
}

TEST_CASE("tournaments from skew-Hadamard matrices") {
    CHECK(are_isomorphic(tournament_from_skew_hadamard(paley_skew_hadamard(3)).mixed(), named_graph("directed-triangle")));
    for (long q : {7L, 11L, 19L}) {
        const OrientedGraph t = tournament_from_skew_hadamard(paley_skew_hadamard(q));
        CHECK(t.order() == q);
        CHECK(is_tournament(t));
        for (const auto& v : degree_profile(t)) {
            CHECK(v.out == (q - 1) / 2);
            CHECK(v.in == (q - 1) / 2);
        }
        CHECK(spectrum_of(t, RootOfUnity(6)).distinct() == 3);
    }
}

TEST_CASE("normalisation handles matrices whose first row is not all ones") {
    SkewHadamard a = paley_skew_hadamard(7);
    // Conjugate by a diagonal sign matrix: still skew-Hadamard, first row no longer all ones.
    std::vector<std::vector<int>> rows = a.rows();
    const int flip[] = {1, -1, 1, 1, -1, -1, 1, 1};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rows[i][j] *= flip[i] * flip[j];
    const OrientedGraph t = tournament_from_skew_hadamard(SkewHadamard(rows));
    CHECK(is_tournament(t));
    CHECK(certify_three_ev_tournament(t).verdict);
}

TEST_CASE("skew-Hadamard from tournaments and the round trip") {
    for (long q : {3L, 7L, 11L, 19L}) {
        const SkewHadamard a = paley_skew_hadamard(q);
        const SkewHadamard b = skew_hadamard_from_tournament(tournament_from_skew_hadamard(a));
        CHECK(b.order() == a.order());
        CHECK(gram_is_scalar(b));
        // Equal to A after the normalisation that makes the first row all ones.
        for (int i = 0; i < a.order(); ++i)
            for (int j = 0; j < a.order(); ++j) CHECK(b(i, j) == a(0, i) * a(i, j) * a(0, j));
    }
    CHECK(skew_hadamard_from_tournament(OrientedGraph(named_graph("directed-triangle"))).order() == 4);
    CHECK_THROWS_AS(skew_hadamard_from_tournament(OrientedGraph(named_graph("regular-tournament-5"))), std::invalid_argument);
    CHECK_THROWS_AS(skew_hadamard_from_tournament(OrientedGraph(named_graph("oriented-K33"))), std::invalid_argument);
}

TEST_CASE("signed to oriented examples") {
    const SignedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    const OrientedGraph d = signed_to_oriented(c4);
    CHECK(same_spectrum(spectrum_of(d, RootOfUnity(4)).eigenvalues, std::vector<double>{2, 0, 0, -2}, 1e-12));

    const SignedGraph c4neg(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}});
    const double r2 = std::sqrt(2.0);
    CHECK(same_spectrum(spectrum_of(c4neg).eigenvalues, std::vector<double>{r2, r2, -r2, -r2}, 1e-12));
    CHECK(certify_two_ev(signed_to_oriented(c4neg), 4).verdict);

    std::vector<SignedEdge> k6;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.push_back({u, v, 1});
    CHECK_THROWS_AS(signed_to_oriented(SignedGraph(6, k6)), std::invalid_argument);
    CHECK_THROWS_AS(oriented_to_signed(OrientedGraph(named_graph("directed-triangle"))), std::invalid_argument);
}

TEST_CASE("signed to oriented on random bipartite graphs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const SignedGraph s = random_bipartite_signed_graph(std::uniform_int_distribution<int>(1, 10)(rng), rng);
        const OrientedGraph d = signed_to_oriented(s);
        CHECK(underlying(d).edges() == s.underlying().edges());
        CHECK(same_spectrum(spectrum_of(s).eigenvalues, spectrum_of(d, RootOfUnity(4)).eigenvalues, 1e-9));
        CHECK(oriented_to_signed(d) == s);
    }
}

TEST_CASE("signed hypercubes") {
    const SignedGraph q1 = signed_hypercube(1);
    CHECK(same_spectrum(spectrum_of(q1).eigenvalues, std::vector<double>{1, -1}, 1e-12));
    for (int n = 1; n <= 6; ++n) {
        const SignedGraph s = signed_hypercube(n);
        CHECK(s.order() == (1 << n));
        CHECK(are_isomorphic(s.underlying(), named_underlying("Q" + std::to_string(n))));
        // S^2 = nI over the integers
        const int m = s.order();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int sum = 0;
                for (int x = 0; x < m; ++x) sum += s.sign(i, x) * s.sign(x, j);
                CHECK(sum == (i == j ? n : 0));
            }
    }
    const Certificate c = certify_two_ev(signed_to_oriented(signed_hypercube(4)), 4);
    CHECK(c.verdict);
    CHECK(c.r_exact == QuadraticValue::integer(2));
    CHECK(c.s_exact == QuadraticValue::integer(-2));
    CHECK_THROWS_AS(signed_hypercube(0), std::invalid_argument);
}
