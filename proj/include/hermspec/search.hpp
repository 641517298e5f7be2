#pragma once

#include "hermspec/certify.hpp"
#include "hermspec/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hermspec {

enum class SearchMode { oriented, mixed, signings };

/// Predicate applied to each connected assignment in place of the two-eigenvalue filter.
using MixedFilter = std::function<bool(const MixedGraph&)>;
using SignedFilter = std::function<bool(const SignedGraph&)>;

struct SearchOptions {
    int k = 6;
    double tol = default_cluster_tol;
    MethodChoice method = MethodChoice::automatic;
    /// 1 runs the serial reference scan; n > 1 splits the space into prefix units over n OpenMP
    /// threads; 0 uses the OpenMP default.
    int threads = 1;
    /// Number of leading assignment digits fixed per work unit; -1 picks a value from the space size.
    int prefix_digits = -1;
    MixedFilter mixed_filter;    // empty: two-eigenvalue filter
    SignedFilter signed_filter;  // empty: two-eigenvalue filter
};

template <class Graph>
struct BasicSearchReport {
    std::string underlying_id;
    SearchMode mode = SearchMode::oriented;
    int k = 6;
    std::uint64_t space_size = 0;
    /// Assignments (or, for the desk check, underlying graphs) skipped as disconnected.
    std::uint64_t skipped_disconnected = 0;
    /// Sorted by the graph ordering, so identical inputs give identical reports.
    std::vector<Graph> hits;
    /// First hit of each isomorphism class, in hit order.
    std::vector<Graph> hits_up_to_iso;
    double elapsed_seconds = 0.0;
};

using SearchReport = BasicSearchReport<MixedGraph>;
using SigningReport = BasicSearchReport<SignedGraph>;

inline constexpr std::uint64_t max_search_space = std::uint64_t{1} << 24;

/// All 2^|E| orientations of `g`. Edge i of g.edges() = {u, v} (u < v) is u->v when bit i of the
/// assignment index is 0 and v->u when it is 1. Throws std::invalid_argument above 2^24 points.
SearchReport search_orientations(const SimpleGraph& g, const SearchOptions& opt = {}, std::string id = {});

/// All 3^|E| mixed orientations: base-3 digit i is 0 (u->v), 1 (v->u) or 2 (undirected).
SearchReport search_mixed_orientations(const SimpleGraph& g, const SearchOptions& opt = {}, std::string id = {});

/// All 2^|E| signings (bit i set means edge i is negative), filtered by float clustering of the
/// signed adjacency matrix.
SigningReport search_signings(const SimpleGraph& g, const SearchOptions& opt = {}, std::string id = {});

/// Every connected oriented graph on 2..n_max vertices (orientations of every connected labelled
/// graph) certified at sigma_1 = e^{2 pi i / k}. Intended for k > 8, where the directed edge is
/// the only hit; other k need `allow_any_k`. Throws std::invalid_argument for n_max > 6.
SearchReport desk_check_large_k(int k, int n_max, bool allow_any_k = false, int threads = 1);

/// Every hit's arc reversal is also a hit (reversal transposes H, so it is cospectral).
bool reversal_closed(const std::vector<MixedGraph>& sorted_hits);

/// Representatives of the isomorphism classes of `graphs`, first occurrence wins.
std::vector<MixedGraph> dedup_isomorphic(const std::vector<MixedGraph>& graphs);
std::vector<SignedGraph> dedup_isomorphic(const std::vector<SignedGraph>& graphs);

std::string to_string(SearchMode mode);

void to_json(nlohmann::json& j, const SearchReport& r);
void to_json(nlohmann::json& j, const SigningReport& r);

}  // namespace hermspec
