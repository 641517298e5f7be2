#include "hermspec/search.hpp"

#include "hermspec/graph_io.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hermspec {

namespace {

std::uint64_t checked_space(int base, std::size_t digits) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        space *= static_cast<std::uint64_t>(base);
        if (space > max_search_space) {
            throw std::invalid_argument("search space " + std::to_string(base) + "^" + std::to_string(digits) + " exceeds 2^24 points");
        }
    }
    return space;
}

std::uint64_t ipow(int base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(base);
    return r;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads <= 0 ? omp_get_max_threads() : threads;
#else
    (void)threads;
    return 1;
#endif
}

/// Fixed-length digit vector that counts through an index range like an odometer.
/// Digit i is the coefficient of base^i.
class Odometer {
public:
    Odometer(int base, std::size_t length, std::uint64_t start) : base_(base), digits_(length, 0) {
        for (auto& d : digits_) {
            d = static_cast<int>(start % static_cast<std::uint64_t>(base));
            start /= static_cast<std::uint64_t>(base);
        }
    }
    const std::vector<int>& digits() const { return digits_; }
    void next() {
        for (auto& d : digits_) {
            if (++d < base_) return;
            d = 0;
        }
    }

private:
    int base_;
    std::vector<int> digits_;
};

MixedGraph assignment_graph(const SimpleGraph& g, const std::vector<int>& digits) {
    std::vector<VertexPair> arcs, edges;
    const auto& e = g.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto [u, v] = e[i];
        switch (digits[i]) {
        case 0: arcs.emplace_back(u, v); break;
        case 1: arcs.emplace_back(v, u); break;
        default: edges.emplace_back(u, v); break;
        }
    }
    return MixedGraph(g.order(), std::move(arcs), std::move(edges));
}

SignedGraph signing_graph(const SimpleGraph& g, const std::vector<int>& digits) {
    std::vector<SignedEdge> edges;
    const auto& e = g.edges();
    edges.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) edges.push_back({e[i].first, e[i].second, digits[i] == 0 ? 1 : -1});
    return SignedGraph(g.order(), std::move(edges));
}

/// Exact two-eigenvalue test on the fixed underlying graph: with the graph d-regular,
/// H^2 - pH - dI = 0 reduces to (H^2)_{uv} = p H_{uv} off the diagonal, where p must be r + s
/// for one of the candidate pairs.
class ExactTwoEvKernel {
public:
    ExactTwoEvKernel(const SimpleGraph& g, int k) : g_(g), k_(k), n_(g.order()) {
        degree_ = regular_degree(g);
        if (degree_ <= 0) return;
        for (std::int64_t r = 1; r <= degree_; ++r)
            if (degree_ % r == 0) candidate_p_.push_back(r - degree_ / r);
        candidate_p_.push_back(0);  // r = -s = sqrt(d)
        std::sort(candidate_p_.begin(), candidate_p_.end());
        candidate_p_.erase(std::unique(candidate_p_.begin(), candidate_p_.end()), candidate_p_.end());
        zeta_ = CycInt::zeta(k);
        zeta_bar_ = zeta_.conj();
    }

    bool viable() const { return degree_ > 0; }

    bool accepts(const std::vector<int>& digits, std::vector<CycInt>& h) const {
        const auto n = static_cast<std::size_t>(n_);
        h.assign(n * n, CycInt::zero(k_));
        const auto& e = g_.edges();
        for (std::size_t i = 0; i < e.size(); ++i) {
            const auto u = static_cast<std::size_t>(e[i].first), v = static_cast<std::size_t>(e[i].second);
            switch (digits[i]) {
            case 0: h[u * n + v] = zeta_; h[v * n + u] = zeta_bar_; break;
            case 1: h[u * n + v] = zeta_bar_; h[v * n + u] = zeta_; break;
            default: h[u * n + v] = h[v * n + u] = CycInt::one(k_); break;
            }
        }
        bool have_p = false;
        CycInt p = CycInt::zero(k_);
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                CycInt sq = CycInt::zero(k_);
                for (Vertex x : g_.neighbors(u)) {
                    const CycInt& xv = h[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(v)];
                    if (!xv.is_zero()) sq += h[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(x)] * xv;
                }
                const CycInt& uv = h[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
                if (uv.is_zero()) {
                    if (!sq.is_zero()) return false;
                    continue;
                }
                if (!have_p) {
                    const CycInt ratio = sq * uv.conj();  // |H_uv| = 1
                    if (!ratio.is_integer() || !std::binary_search(candidate_p_.begin(), candidate_p_.end(), ratio.a())) return false;
                    p = ratio;
                    have_p = true;
                } else if (sq != p * uv) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    const SimpleGraph& g_;
    int k_;
    int n_;
    int degree_ = -1;
    std::vector<std::int64_t> candidate_p_;
    CycInt zeta_;
    CycInt zeta_bar_;
};

/// Runs `unit(begin, end)` over the whole space, either in one serial pass or in base^p
/// contiguous prefix units distributed over OpenMP threads. Results are concatenated in unit order.
template <class Graph, class Unit>
std::vector<Graph> scan_space(std::uint64_t space, int base, int length, const SearchOptions& opt, Unit&& unit) {
    const int threads = resolve_threads(opt.threads);
    if (threads == 1 && opt.prefix_digits < 0) return unit(0, space);

    int prefix = opt.prefix_digits;
    if (prefix < 0) {
        prefix = 0;
        while (prefix < length && ipow(base, prefix) < 64) ++prefix;
    }
    prefix = std::clamp(prefix, 0, length);
    const std::uint64_t units = ipow(base, prefix);
    const std::uint64_t unit_size = space / units;

    std::vector<std::vector<Graph>> found(units);
    // Exceptions may not leave an OpenMP region; capture the first one and rethrow.
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(units); ++i) {
        try {
            const auto begin = static_cast<std::uint64_t>(i) * unit_size;
            found[static_cast<std::size_t>(i)] = unit(begin, begin + unit_size);
        } catch (...) {
#pragma omp critical(hermspec_scan_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    std::vector<Graph> all;
    for (auto& f : found) {
        all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    }
    return all;
}

template <class Graph>
std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
    std::vector<Graph> reps;
    for (const auto& g : graphs) {
        const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) { return are_isomorphic(r, g); });
        if (!seen) reps.push_back(g);
    }
    return reps;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SearchReport search_assignments(const SimpleGraph& g, int base, SearchMode mode, const SearchOptions& opt, std::string id) {
    const auto t0 = std::chrono::steady_clock::now();
    if (opt.k < 3) throw std::invalid_argument("root of unity order must be at least 3");
    SearchReport rep;
    rep.underlying_id = std::move(id);
    rep.mode = mode;
    rep.k = opt.k;
    const auto length = g.edges().size();
    rep.space_size = checked_space(base, length);

    if (g.order() < 2 || !is_connected(g)) {
        rep.skipped_disconnected = rep.space_size;
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }

    const bool custom = static_cast<bool>(opt.mixed_filter);
    const bool exact = !custom && has_exact_arithmetic(opt.k) && opt.method == MethodChoice::automatic;
    std::optional<ExactTwoEvKernel> kernel;
    if (exact) kernel.emplace(g, opt.k);
    if (exact && !kernel->viable()) {
        // Two eigenvalues force a regular underlying graph, so no assignment can pass.
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }

    auto unit = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<MixedGraph> hits;
        std::vector<CycInt> scratch;
        Odometer odo(base, length, begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, odo.next()) {
            if (exact) {
                if (!kernel->accepts(odo.digits(), scratch)) continue;
                MixedGraph d = assignment_graph(g, odo.digits());
                if (!certify_two_ev(d, opt.k).verdict) throw std::logic_error("exact search kernel disagrees with certify_two_ev");
                hits.push_back(std::move(d));
                continue;
            }
            MixedGraph d = assignment_graph(g, odo.digits());
            const bool pass = custom ? opt.mixed_filter(d) : certify_two_ev(d, opt.k, MethodChoice::force_float, opt.tol).verdict;
            if (pass) hits.push_back(std::move(d));
        }
        return hits;
    };
    rep.hits = scan_space<MixedGraph>(rep.space_size, base, static_cast<int>(length), opt, unit);
    std::sort(rep.hits.begin(), rep.hits.end());
    rep.hits_up_to_iso = dedup(rep.hits);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

}  // namespace

SearchReport search_orientations(const SimpleGraph& g, const SearchOptions& opt, std::string id) {
    return search_assignments(g, 2, SearchMode::oriented, opt, std::move(id));
}

SearchReport search_mixed_orientations(const SimpleGraph& g, const SearchOptions& opt, std::string id) {
    return search_assignments(g, 3, SearchMode::mixed, opt, std::move(id));
}

SigningReport search_signings(const SimpleGraph& g, const SearchOptions& opt, std::string id) {
    const auto t0 = std::chrono::steady_clock::now();
    SigningReport rep;
    rep.underlying_id = std::move(id);
    rep.mode = SearchMode::signings;
    rep.k = 2;
    const auto length = g.edges().size();
    rep.space_size = checked_space(2, length);
    if (g.order() < 2 || !is_connected(g)) {
        rep.skipped_disconnected = rep.space_size;
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }
    auto unit = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<SignedGraph> hits;
        Odometer odo(2, length, begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, odo.next()) {
            SignedGraph s = signing_graph(g, odo.digits());
            const bool pass = opt.signed_filter ? opt.signed_filter(s) : spectrum_of(s, opt.tol).distinct() == 2;
            if (pass) hits.push_back(std::move(s));
        }
        return hits;
    };
    rep.hits = scan_space<SignedGraph>(rep.space_size, 2, static_cast<int>(length), opt, unit);
    std::sort(rep.hits.begin(), rep.hits.end());
    rep.hits_up_to_iso = dedup(rep.hits);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

SearchReport desk_check_large_k(int k, int n_max, bool allow_any_k, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k <= 8 && !allow_any_k) throw std::invalid_argument("desk check is stated for k > 8; pass the override to run other k");
    if (k < 3) throw std::invalid_argument("root of unity order must be at least 3");
    if (n_max > 6) throw std::invalid_argument("desk check supports at most 6 vertices");

    SearchReport rep;
    rep.underlying_id = "connected graphs on <= " + std::to_string(n_max) + " vertices";
    rep.mode = SearchMode::oriented;
    rep.k = k;
    SearchOptions inner;
    inner.k = k;

    for (int n = 2; n <= n_max; ++n) {
        std::vector<VertexPair> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const auto subsets = std::int64_t{1} << pairs.size();
        std::vector<std::vector<MixedGraph>> found(static_cast<std::size_t>(subsets));
        std::uint64_t space = 0, skipped = 0;
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_threads(threads)) reduction(+ : space, skipped)
        for (std::int64_t mask = 0; mask < subsets; ++mask) {
            try {
                std::vector<VertexPair> e;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1) e.push_back(pairs[i]);
                const SimpleGraph g(n, std::move(e));
                if (!is_connected(g)) {
                    ++skipped;
                    continue;
                }
                auto sub = search_orientations(g, inner);
                space += sub.space_size;
                found[static_cast<std::size_t>(mask)] = std::move(sub.hits);
            } catch (...) {
#pragma omp critical(hermspec_desk_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        rep.space_size += space;
        rep.skipped_disconnected += skipped;
        for (auto& f : found) rep.hits.insert(rep.hits.end(), f.begin(), f.end());
    }
    std::sort(rep.hits.begin(), rep.hits.end());
    rep.hits_up_to_iso = dedup(rep.hits);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

bool reversal_closed(const std::vector<MixedGraph>& sorted_hits) {
    return std::all_of(sorted_hits.begin(), sorted_hits.end(), [&](const MixedGraph& d) {
        return std::binary_search(sorted_hits.begin(), sorted_hits.end(), d.reversed());
    });
}

std::vector<MixedGraph> dedup_isomorphic(const std::vector<MixedGraph>& graphs) { return dedup(graphs); }
std::vector<SignedGraph> dedup_isomorphic(const std::vector<SignedGraph>& graphs) { return dedup(graphs); }

std::string to_string(SearchMode mode) {
    switch (mode) {
    case SearchMode::oriented: return "oriented";
    case SearchMode::mixed: return "mixed";
    case SearchMode::signings: return "signed";
    }
    return "?";
}

namespace {

template <class Graph>
void report_json(nlohmann::json& j, const BasicSearchReport<Graph>& r) {
    nlohmann::json hits = nlohmann::json::array(), reps = nlohmann::json::array();
    for (const auto& h : r.hits) hits.push_back(encode(h));
    for (const auto& h : r.hits_up_to_iso) reps.push_back(encode(h));
    j = {{"underlying", r.underlying_id},
         {"mode", to_string(r.mode)},
         {"space_size", r.space_size},
         {"skipped_disconnected", r.skipped_disconnected},
         {"hit_count", r.hits.size()},
         {"class_count", r.hits_up_to_iso.size()},
         {"hits", std::move(hits)},
         {"hits_up_to_iso", std::move(reps)},
         {"elapsed_seconds", r.elapsed_seconds}};
    if (r.mode != SearchMode::signings) j["k"] = r.k;
}

}  // namespace

void to_json(nlohmann::json& j, const SearchReport& r) { report_json(j, r); }
void to_json(nlohmann::json& j, const SigningReport& r) { report_json(j, r); }

}  // namespace hermspec
