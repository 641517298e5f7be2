#pragma once

#include "hermspec/cyclotomic.hpp"

#include <span>
#include <vector>

#include <json.hpp>

namespace hermspec {

inline constexpr double default_cluster_tol = 1e-6;

struct Cluster {
    double value = 0.0;
    int multiplicity = 0;
};

/// Eigenvalues of a Hermitian matrix, descending, with their clustering into distinct values.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<Cluster> clusters;
    double tol = default_cluster_tol;

    int dimension() const { return static_cast<int>(eigenvalues.size()); }
    int distinct() const { return static_cast<int>(clusters.size()); }
};

/// Eigenvalues of `h` in descending order, by cyclic complex Jacobi rotations.
/// Throws std::invalid_argument if `h` is not Hermitian within 1e-12 (relative to its size).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Greedy single-linkage merge of a descending list: a value joins the current cluster when it is
/// within `tol` of the previous value. Cluster value is the mean of its members.
std::vector<Cluster> cluster(std::span<const double> eigs, double tol = default_cluster_tol);

Spectrum spectrum_of(const ComplexMatrix& h, double tol = default_cluster_tol);
Spectrum spectrum_of(const MixedGraph& d, const RootOfUnity& sigma, double tol = default_cluster_tol);
Spectrum spectrum_of(const SignedGraph& s, double tol = default_cluster_tol);

/// Cauchy interlacing: theta_{i+n-m}(parent) <= theta_i(child) <= theta_i(parent) for 1 <= i <= m.
bool interlaces(const Spectrum& parent, const Spectrum& child, double tol = 1e-9);

/// Multiset equality of two descending eigenvalue lists within `tol`.
bool same_spectrum(std::span<const double> a, std::span<const double> b, double tol);

void to_json(nlohmann::json& j, const Spectrum& s);

namespace detail {

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column i is the eigenvector of values[i]
};

/// Jacobi iteration with accumulated rotations; used to audit residuals.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

}  // namespace detail

}  // namespace hermspec
