#include "hermspec/constructions.hpp"
#include "hermspec/cyclotomic.hpp"
#include "hermspec/reproduction.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace hermspec;

TEST_CASE("roots of unity") {
    CHECK_THROWS_AS(RootOfUnity(2), std::invalid_argument);
    CHECK(RootOfUnity(6).value() == Complex(0.5, std::sqrt(3.0) / 2));
    CHECK(RootOfUnity(4).value() == Complex(0, 1));
    CHECK(RootOfUnity(6).exact());
    CHECK_FALSE(RootOfUnity(10).exact());
    CHECK(std::abs(RootOfUnity(10).value() - std::polar(1.0, M_PI / 5)) < 1e-15);
}

TEST_CASE("ring identities at k = 6") {
    const CycInt w = CycInt::zeta(6);
    CHECK(w.conj() == CycInt(1, -1, 6));
    CHECK(w * w.conj() == CycInt::one(6));
    CHECK(w * w * w == CycInt(-1, 0, 6));
    const CycInt w2 = w * w, w4 = w2 * w2;
    CHECK(w2 == CycInt(-1, 1, 6));
    CHECK(w4 == CycInt(0, -1, 6));
    CHECK((CycInt::one(6) + w2 + w4).is_zero());
}

TEST_CASE("conjugation rules") {
    CHECK(CycInt::zeta(6).conj() == CycInt(1, -1, 6));
    CHECK(CycInt::zeta(4).conj() == CycInt(0, -1, 4));
    CHECK(CycInt::zeta(3).conj() == CycInt(-1, -1, 3));
    CHECK(CycInt::zeta(4) * CycInt::zeta(4) == CycInt(-1, 0, 4));
    CHECK(CycInt::zeta(3) * CycInt::zeta(3) == CycInt(-1, -1, 3));
}

TEST_CASE("mixed orders and overflow are rejected") {
    CHECK_THROWS_AS(CycInt(1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::one(6) + CycInt::one(4), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::one(6) * CycInt::one(3), std::invalid_argument);
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(CycInt(big, 0, 6) + CycInt::one(6), std::overflow_error);
    CHECK_THROWS_AS(CycInt(big / 2, 0, 6) * CycInt(3, 0, 6), std::overflow_error);
}

TEST_CASE("ring laws and embedding on random elements") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-50, 50);
    for (int k : {3, 4, 6}) {
        for (int trial = 0; trial < 500; ++trial) {
            const CycInt x(c(rng), c(rng), k), y(c(rng), c(rng), k), z(c(rng), c(rng), k);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            const CycInt norm = x * x.conj();
            CHECK(norm.is_integer());
            CHECK(norm.a() >= 0);
            CHECK(std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-12 * (1 + std::abs(x.embed() * y.embed())));
            CHECK(std::abs(x.conj().embed() - std::conj(x.embed())) < 1e-12);
        }
    }
}

TEST_CASE("exact adjacency matrices") {
    const ExactMatrix e = build_exact_H(named_graph("directed-edge"), 6);
    CHECK(e(0, 1) == CycInt(0, 1, 6));
    CHECK(e(1, 0) == CycInt(1, -1, 6));
    CHECK(e(0, 0).is_zero());
    CHECK(e.is_hermitian());

    const ExactMatrix t = build_exact_H(named_graph("directed-triangle"), 6);
    CHECK(t(0, 1) == CycInt::zeta(6));
    CHECK(t(1, 2) == CycInt::zeta(6));
    CHECK(t(2, 0) == CycInt::zeta(6));

    const ExactMatrix m = build_exact_H(MixedGraph(2, {}, {{0, 1}}), 6);
    CHECK(m(0, 1) == CycInt::one(6));
    CHECK(m(1, 0) == CycInt::one(6));
    CHECK_THROWS_AS(build_exact_H(named_graph("directed-edge"), 5), std::invalid_argument);
}

TEST_CASE("float adjacency matrices") {
    const ComplexMatrix h = build_float_H(named_graph("directed-edge"), RootOfUnity(10));
    CHECK(std::abs(h(0, 1) - Complex(std::cos(M_PI / 5), std::sin(M_PI / 5))) < 1e-15);
    CHECK(std::abs(h(1, 0) - Complex(std::cos(M_PI / 5), -std::sin(M_PI / 5))) < 1e-15);
    const ComplexMatrix z = build_float_H(MixedGraph(3, {}), RootOfUnity(7));
    for (const auto& x : z.data()) CHECK(x == Complex(0, 0));
}

TEST_CASE("exact and float matrices agree, and H over zeta_3 is -H over zeta_6") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const MixedGraph d = random_mixed_graph(std::uniform_int_distribution<int>(1, 8)(rng), rng);
        for (int k : {4, 6}) {
            const ComplexMatrix a = embed(build_exact_H(d, k)), b = build_float_H(d, RootOfUnity(k));
            for (std::size_t i = 0; i < a.data().size(); ++i) CHECK(std::abs(a.data()[i] - b.data()[i]) < 1e-15);
        }
        const OrientedGraph o(d.order(), d.arcs());
        const ExactMatrix h3 = build_exact_H(o, 3), h6 = build_exact_H(o, 6);
        const ComplexMatrix e3 = embed(h3), e6 = embed(h6);
        for (std::size_t i = 0; i < e3.data().size(); ++i) CHECK(std::abs(e3.data()[i] + e6.data()[i]) < 1e-15);
    }
}

TEST_CASE("quadratic identity examples") {
    CHECK(exact_quadratic_check(build_exact_H(named_graph("directed-triangle"), 6), -1, -2));
    CHECK(exact_quadratic_check(build_exact_H(named_graph("oriented-K33"), 6), 0, -3));
    CHECK(exact_quadratic_check(build_exact_H(named_graph("oriented-K55-M"), 6), 0, -4));
    CHECK_FALSE(exact_quadratic_check(build_exact_H(MixedGraph(3, {{0, 1}, {1, 2}}), 6), 0, -2));
}

TEST_CASE("quadratic identity agrees with float evaluation") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    int positives = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const MixedGraph d = random_mixed_graph(std::uniform_int_distribution<int>(1, 5)(rng), rng);
        for (int k : {3, 4, 6}) {
            const ExactMatrix h = build_exact_H(d, k);
            // Small coefficients with q <= 0 so that both outcomes occur.
            const int p = coef(rng), q = -std::abs(coef(rng));
            const ComplexMatrix f = embed(h);
            const int n = d.order();
            double worst = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Complex sq = 0;
                    for (int x = 0; x < n; ++x) sq += f(i, x) * f(x, j);
                    worst = std::max(worst, std::abs(sq - double(p) * f(i, j) + (i == j ? double(q) : 0.0)));
                }
            const bool exact = exact_quadratic_check(h, p, q);
            CHECK(exact == (worst < 1e-8));
            positives += exact ? 1 : 0;
        }
    }
    CHECK(positives > 0);
}

TEST_CASE("exact matrix product") {
    const ExactMatrix h = build_exact_H(named_graph("oriented-K33"), 6);
    const ExactMatrix sq = exact_matmul(h, h);
    CHECK(sq.is_scalar());
    CHECK(sq(0, 0) == CycInt::integer(3, 6));
    CHECK(exact_matmul(ExactMatrix::identity(3, 6), ExactMatrix::ones(3, 6)) == ExactMatrix::ones(3, 6));
    CHECK_THROWS_AS(exact_matmul(ExactMatrix(2, 6), ExactMatrix(3, 6)), std::invalid_argument);
    CHECK_THROWS_AS(exact_matmul(ExactMatrix(2, 6), ExactMatrix(2, 4)), std::invalid_argument);
    const ExactMatrix big = build_exact_H(as_undirected(named_underlying("Q6")), 6);
    const ExactMatrix big_sq = exact_matmul(big, big);
    CHECK(big_sq(0, 0) == CycInt::integer(6, 6));
}

TEST_CASE("exact matrix JSON round trip") {
    const ExactMatrix h = build_exact_H(named_graph("oriented-K33"), 6);
    const nlohmann::json j = h;
    CHECK(j["k"] == 6);
    CHECK(j["entries"][0][3] == nlohmann::json::array({0, 1}));
    CHECK(exact_matrix_from_json(j) == h);
}
