#include "hermspec/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hermspec {

namespace {

struct QuadraticRule {
    std::int64_t trace;  // zeta + conj(zeta)
    std::int64_t constant;  // zeta^2 = trace*zeta + constant
};

QuadraticRule rule_for(int k) {
    switch (k) {
    case 3: return {-1, -1};
    case 4: return {0, -1};
    case 6: return {1, -1};
    default: throw std::invalid_argument("no exact arithmetic for k = " + std::to_string(k) + "; use k in {3, 4, 6}");
    }
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("cyclotomic integer overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("cyclotomic integer overflow");
    return r;
}

void require_same_order(int k1, int k2) {
    if (k1 != k2) {
        throw std::invalid_argument("mixed cyclotomic orders " + std::to_string(k1) + " and " + std::to_string(k2));
    }
}

Complex zeta_embedding(int k) {
    const double h = std::numbers::sqrt3 / 2.0;
    switch (k) {
    case 3: return {-0.5, -h};
    case 4: return {0.0, 1.0};
    case 6: return {0.5, h};
    default: throw std::invalid_argument("no exact arithmetic for k = " + std::to_string(k));
    }
}

}  // namespace

RootOfUnity::RootOfUnity(int k) : k_(k) {
    if (k < 3) throw std::invalid_argument("root of unity order must be at least 3, got " + std::to_string(k));
    const double angle = 2.0 * std::numbers::pi / k;
    value_ = {std::cos(angle), std::sin(angle)};
    // Snap the exactly representable cases so float matrices match the exact embedding bit for bit.
    if (k == 4) value_ = {0.0, 1.0};
    if (k == 6) value_ = zeta_embedding(6);
}

// ---------------------------------------------------------------------------------------------
// CycInt

CycInt::CycInt(std::int64_t a, std::int64_t b, int k) : a_(a), b_(b), k_(k) { rule_for(k); }

CycInt CycInt::conj() const {
    const auto r = rule_for(k_);
    return {checked_add(a_, checked_mul(b_, r.trace)), -b_, k_};
}

Complex CycInt::embed() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * zeta_embedding(k_);
}

CycInt CycInt::operator-() const {
    if (a_ == INT64_MIN || b_ == INT64_MIN) throw std::overflow_error("cyclotomic integer overflow");
    return {-a_, -b_, k_};
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require_same_order(k_, o.k_);
    a_ = checked_add(a_, o.a_);
    b_ = checked_add(b_, o.b_);
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const CycInt& o) {
    require_same_order(k_, o.k_);
    const auto r = rule_for(k_);
    const std::int64_t bf = checked_mul(b_, o.b_);
    const std::int64_t a = checked_add(checked_mul(a_, o.a_), checked_mul(r.constant, bf));
    const std::int64_t b = checked_add(checked_add(checked_mul(a_, o.b_), checked_mul(b_, o.a_)), checked_mul(r.trace, bf));
    a_ = a;
    b_ = b;
    return *this;
}

// ---------------------------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(int n, int k) : n_(n), k_(k) {
    if (n < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CycInt::zero(k));
}

ExactMatrix ExactMatrix::identity(int n, int k) {
    ExactMatrix m(n, k);
    for (int i = 0; i < n; ++i) m(i, i) = CycInt::one(k);
    return m;
}

ExactMatrix ExactMatrix::ones(int n, int k) {
    ExactMatrix m(n, k);
    for (auto& x : m.data_) x = CycInt::one(k);
    return m;
}

bool ExactMatrix::is_hermitian() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if ((*this)(j, i) != (*this)(i, j).conj()) return false;
    return true;
}

bool ExactMatrix::is_scalar() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
            if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
        }
    return true;
}

ExactMatrix build_exact_H(const MixedGraph& d, int k) {
    ExactMatrix h(d.order(), k);
    const CycInt z = CycInt::zeta(k);
    const CycInt zbar = z.conj();
    for (const auto& [u, v] : d.arcs()) {
        h(u, v) = z;
        h(v, u) = zbar;
    }
    for (const auto& [u, v] : d.edges()) {
        h(u, v) = CycInt::one(k);
        h(v, u) = CycInt::one(k);
    }
    return h;
}

// ---------------------------------------------------------------------------------------------
// Floating point matrices

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix build_float_H(const MixedGraph& d, const RootOfUnity& sigma) {
    ComplexMatrix h(d.order());
    const Complex s = sigma.value();
    for (const auto& [u, v] : d.arcs()) {
        h(u, v) = s;
        h(v, u) = std::conj(s);
    }
    for (const auto& [u, v] : d.edges()) {
        h(u, v) = 1.0;
        h(v, u) = 1.0;
    }
    return h;
}

ComplexMatrix embed(const ExactMatrix& m) {
    ComplexMatrix out(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out(i, j) = m(i, j).embed();
    return out;
}

ComplexMatrix signed_adjacency(const SignedGraph& s) {
    ComplexMatrix m(s.order());
    for (const auto& e : s.edges()) {
        m(e.u, e.v) = static_cast<double>(e.sign);
        m(e.v, e.u) = static_cast<double>(e.sign);
    }
    return m;
}

// ---------------------------------------------------------------------------------------------
// Exact products

ExactMatrix exact_matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exact_matmul: dimension mismatch");
    require_same_order(a.order(), b.order());
    const int n = a.size();
    const int k = a.order();
    ExactMatrix c(n, k);
#pragma omp parallel for schedule(static) if (n >= 64)
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            const CycInt& x = a(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
            }
        }
    }
    return c;
}

bool exact_quadratic_check(const ExactMatrix& h, std::int64_t p, std::int64_t q) {
    const int n = h.size();
    const int k = h.order();
    const CycInt pk = CycInt::integer(p, k);
    const CycInt qk = CycInt::integer(q, k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            CycInt entry = CycInt::zero(k);
            for (int l = 0; l < n; ++l) {
                if (!h(i, l).is_zero() && !h(l, j).is_zero()) entry += h(i, l) * h(l, j);
            }
            entry -= pk * h(i, j);
            if (i == j) entry += qk;
            if (!entry.is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const CycInt& x) { j = nlohmann::json::array({x.a(), x.b()}); }

void to_json(nlohmann::json& j, const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    j = {{"k", m.order()}, {"entries", std::move(rows)}};
}

ExactMatrix exact_matrix_from_json(const nlohmann::json& j) {
    const int k = j.at("k").get<int>();
    const auto& rows = j.at("entries");
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n, k);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("exact matrix JSON is not square");
        }
        for (int c = 0; c < n; ++c) {
            const auto& e = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            m(i, c) = CycInt(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(), k);
        }
    }
    return m;
}

}  // namespace hermspec
