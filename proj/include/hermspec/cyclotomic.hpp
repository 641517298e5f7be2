#pragma once

#include "hermspec/graph.hpp"

#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

namespace hermspec {

using Complex = std::complex<double>;

/// True for the orders whose primitive root satisfies an integer quadratic, i.e. where
/// Z[zeta_k] = Z + Z*zeta_k and exact arithmetic is available.
constexpr bool has_exact_arithmetic(int k) { return k == 3 || k == 4 || k == 6; }

/// Primitive k-th root of unity sigma_1 = cos(2 pi / k) + i sin(2 pi / k), k >= 3.
class RootOfUnity {
public:
    explicit RootOfUnity(int k);

    int order() const { return k_; }
    double real_part() const { return value_.real(); }
    Complex value() const { return value_; }
    bool exact() const { return has_exact_arithmetic(k_); }

private:
    int k_;
    Complex value_;
};

/// Element a + b*zeta of Z[zeta_k] for k in {3, 4, 6}.
///
/// Reduction rules: zeta^2 = zeta - 1 (k = 6), zeta^2 = -1 (k = 4), zeta^2 = -zeta - 1 (k = 3).
/// Complex embedding: zeta_6 = (1 + i sqrt 3)/2, zeta_4 = i, and zeta_3 = -zeta_6 = (-1 - i sqrt 3)/2,
/// the cube root for which H(D) over zeta_3 is the negative of H(D) over zeta_6.
/// Arithmetic is checked: overflow throws std::overflow_error instead of wrapping.
class CycInt {
public:
    CycInt() = default;
    CycInt(std::int64_t a, std::int64_t b, int k);

    static CycInt zero(int k) { return {0, 0, k}; }
    static CycInt one(int k) { return {1, 0, k}; }
    static CycInt zeta(int k) { return {0, 1, k}; }
    static CycInt integer(std::int64_t a, int k) { return {a, 0, k}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    int order() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integer() const { return b_ == 0; }

    CycInt conj() const;
    Complex embed() const;

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
    friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }
    friend CycInt operator*(CycInt x, const CycInt& y) { return x *= y; }

    friend bool operator==(const CycInt&, const CycInt&) = default;

private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    int k_ = 6;
};

/// Square matrix over Z[zeta_k]. Adjacency matrices built here are Hermitian with zero diagonal.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int n, int k);

    static ExactMatrix identity(int n, int k);
    /// All-ones matrix J.
    static ExactMatrix ones(int n, int k);

    int size() const { return n_; }
    int order() const { return k_; }
    const CycInt& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    CycInt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }

    bool is_hermitian() const;
    /// True if the matrix equals c*I for some c.
    bool is_scalar() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    int n_ = 0;
    int k_ = 6;
    std::vector<CycInt> data_;
};

using ExactHermitianMatrix = ExactMatrix;

/// H_zeta(D): zeta for u->v, conj(zeta) for u<-v, 1 for an undirected edge, 0 otherwise.
ExactMatrix build_exact_H(const MixedGraph& d, int k);

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    Complex operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<Complex>& data() const { return data_; }

    double frobenius_norm() const;
    Complex trace() const;

private:
    int n_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix build_float_H(const MixedGraph& d, const RootOfUnity& sigma);
ComplexMatrix embed(const ExactMatrix& m);
/// Real symmetric signed adjacency matrix of `s`.
ComplexMatrix signed_adjacency(const SignedGraph& s);

/// Exact product; throws std::invalid_argument on dimension or order mismatch.
ExactMatrix exact_matmul(const ExactMatrix& a, const ExactMatrix& b);

/// True iff H^2 - p*H + q*I = 0 exactly.
bool exact_quadratic_check(const ExactMatrix& h, std::int64_t p, std::int64_t q);

void to_json(nlohmann::json& j, const CycInt& x);
void to_json(nlohmann::json& j, const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const nlohmann::json& j);

}  // namespace hermspec
