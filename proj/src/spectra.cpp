#include "hermspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hermspec {

namespace {

constexpr int max_sweeps = 100;
constexpr double sweep_threshold = 1e-13;
constexpr double hermitian_tol = 1e-12;

void require_hermitian(const ComplexMatrix& h) {
    const double scale = std::max(1.0, h.frobenius_norm());
    for (int i = 0; i < h.size(); ++i)
        for (int j = i; j < h.size(); ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > hermitian_tol * scale) {
                throw std::invalid_argument("matrix is not Hermitian");
            }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Runs cyclic Jacobi on `a` in place; if `v` is non-null the rotations are accumulated into it.
void jacobi(ComplexMatrix& a, ComplexMatrix* v) {
    const int n = a.size();
    const double norm = a.frobenius_norm();
    if (n <= 1 || norm == 0.0) return;
    const double target = sweep_threshold * norm;

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) >= target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // J = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                for (int k = 0; k < n; ++k) {  // A <- A J
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (int k = 0; k < n; ++k) {  // A <- J^* A
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (v != nullptr) {
                    for (int k = 0; k < n; ++k) {
                        const Complex vkp = (*v)(k, p);
                        const Complex vkq = (*v)(k, q);
                        (*v)(k, p) = vkp * jpp + vkq * jqp;
                        (*v)(k, q) = vkp * jpq + vkq * jqq;
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    require_hermitian(h);
    ComplexMatrix a = h;
    jacobi(a, nullptr);
    std::vector<double> eigs(static_cast<std::size_t>(h.size()));
    for (int i = 0; i < h.size(); ++i) eigs[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(eigs.begin(), eigs.end(), std::greater<>{});
    return eigs;
}

namespace detail {

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
    require_hermitian(h);
    const int n = h.size();
    ComplexMatrix a = h;
    ComplexMatrix v(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
    jacobi(a, &v);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });
    EigenSystem out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<std::size_t>(c)];
        out.values[static_cast<std::size_t>(c)] = a(src, src).real();
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, src);
    }
    return out;
}

}  // namespace detail

std::vector<Cluster> cluster(std::span<const double> eigs, double tol) {
    std::vector<Cluster> out;
    double sum = 0.0;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (i == 0 || eigs[i - 1] - eigs[i] > tol) {
            if (!out.empty()) out.back().value = sum / out.back().multiplicity;
            out.push_back({eigs[i], 0});
            sum = 0.0;
        }
        ++out.back().multiplicity;
        sum += eigs[i];
    }
    if (!out.empty()) out.back().value = sum / out.back().multiplicity;
    return out;
}

Spectrum spectrum_of(const ComplexMatrix& h, double tol) {
    Spectrum s;
    s.eigenvalues = hermitian_eigenvalues(h);
    s.clusters = cluster(s.eigenvalues, tol);
    s.tol = tol;
    return s;
}

Spectrum spectrum_of(const MixedGraph& d, const RootOfUnity& sigma, double tol) {
    return spectrum_of(build_float_H(d, sigma), tol);
}

Spectrum spectrum_of(const SignedGraph& s, double tol) { return spectrum_of(signed_adjacency(s), tol); }

bool interlaces(const Spectrum& parent, const Spectrum& child, double tol) {
    const auto n = parent.eigenvalues.size();
    const auto m = child.eigenvalues.size();
    if (m > n) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const double upper = parent.eigenvalues[i];
        const double lower = parent.eigenvalues[i + n - m];
        const double theta = child.eigenvalues[i];
        if (theta > upper + tol || theta < lower - tol) return false;
    }
    return true;
}

bool same_spectrum(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

void to_json(nlohmann::json& j, const Spectrum& s) {
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : s.clusters) clusters.push_back({c.value, c.multiplicity});
    j = {{"eigenvalues", s.eigenvalues}, {"clusters", std::move(clusters)}, {"tol", s.tol}};
}

}  // namespace hermspec
