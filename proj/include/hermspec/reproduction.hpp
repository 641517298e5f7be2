#pragma once

#include "hermspec/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace hermspec {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    int criterion = 0;  // acceptance criterion the check belongs to (1..11)
    std::string id;     // e.g. "2b"
    std::string claim;  // the mathematical statement being checked
    CheckStatus status = CheckStatus::skipped;
    double elapsed_seconds = 0.0;
    std::string detail;
    std::vector<std::string> artifacts;
};

struct ReproductionReport {
    std::vector<CheckResult> checks;

    /// No check failed (skipped checks do not count against the verdict).
    bool passed() const;
    /// Worst status among the checks of one criterion: fail > skipped > pass.
    CheckStatus criterion_status(int criterion) const;
};

enum class Scale { full, quick };

struct ReproductionOptions {
    /// Quick scale skips the two scans above 10^6 points (the 2^20 orientation scan and the
    /// exact-vs-float sweep over all connected mixed graphs on 5 vertices).
    Scale scale = Scale::full;
    /// Threads for the bulk sweeps; the timed orientation scans always run single-threaded.
    int threads = 1;
    /// When set, search hits are written here, one file per scan.
    std::optional<std::filesystem::path> artifact_dir;
    /// Replaces named fixtures; lets tests feed a corrupted fixture as a negative control.
    std::map<std::string, MixedGraph, std::less<>> fixture_overrides;
    /// Restricts the run to these criteria (empty: all).
    std::vector<int> only;
};

ReproductionReport run_reproduction(const ReproductionOptions& opt = {});

std::string to_string(CheckStatus s);
std::optional<Scale> parse_scale(std::string_view s);

void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const ReproductionReport& r);

/// Number of labelled mixed graphs on n vertices: each of the n(n-1)/2 pairs is absent, u->v,
/// v->u or undirected (u < v).
std::uint64_t mixed_graph_count(int n);
/// Graph number `index` in that enumeration; base-4 digit i describes pair i in lexicographic order.
MixedGraph mixed_graph_from_index(int n, std::uint64_t index);

/// Each pair independently absent or one of the three relations, uniformly.
MixedGraph random_mixed_graph(int n, std::mt19937_64& rng);
/// Random bipartite signed graph on n vertices (random part sizes, edge density and signs).
SignedGraph random_bipartite_signed_graph(int n, std::mt19937_64& rng);

}  // namespace hermspec
