#include "hermspec/reproduction.hpp"

#include "hermspec/certify.hpp"
#include "hermspec/constructions.hpp"
#include "hermspec/graph_io.hpp"
#include "hermspec/search.hpp"
#include "hermspec/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace hermspec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

/// Collects expectation failures and notes for one check.
struct Probe {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    std::vector<std::string> artifacts;

    void expect(bool ok, std::string what) {
        if (!ok) failures.push_back(std::move(what));
    }
    void note(std::string s) { notes.push_back(std::move(s)); }
};

/// Graph encoding on one line, for messages.
template <class Graph>
std::string inline_text(const Graph& g) {
    std::string t = encode(g);
    while (!t.empty() && t.back() == '\n') t.pop_back();
    std::replace(t.begin(), t.end(), '\n', ',');
    return t;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

class Runner {
public:
    explicit Runner(const ReproductionOptions& opt) : opt_(opt) {
        for (int c : opt.only) wanted_.insert(c);
        // The s-bound check consumes the hit sets of criteria 1-4.
        if (wanted_.contains(9)) wanted_.insert({1, 2, 3, 4});
    }

    ReproductionReport run() {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
        criterion_11();
        return std::move(report_);
    }

private:
    const ReproductionOptions& opt_;
    std::set<int> wanted_;
    ReproductionReport report_;
    std::vector<std::pair<std::string, MixedGraph>> k6_hits_;

    bool quick() const { return opt_.scale == Scale::quick; }
    bool wanted(int criterion) const { return wanted_.empty() || wanted_.contains(criterion); }

    MixedGraph fixture(std::string_view name) const {
        if (auto it = opt_.fixture_overrides.find(name); it != opt_.fixture_overrides.end()) return it->second;
        return named_graph(name);
    }

    template <class Body>
    void check(int criterion, std::string id, std::string claim, Body&& body) {
        if (!wanted(criterion)) return;
        CheckResult r{criterion, std::move(id), std::move(claim), CheckStatus::pass, 0.0, {}, {}};
        Probe probe;
        const auto t0 = Clock::now();
        try {
            body(probe);
        } catch (const std::exception& e) {
            probe.failures.push_back(std::string("exception: ") + e.what());
        }
        r.elapsed_seconds = seconds_since(t0);
        r.status = probe.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
        r.detail = join(probe.failures.empty() ? probe.notes : probe.failures);
        r.artifacts = std::move(probe.artifacts);
        report_.checks.push_back(std::move(r));
    }

    void skip(int criterion, std::string id, std::string claim, std::string why) {
        if (!wanted(criterion)) return;
        report_.checks.push_back({criterion, std::move(id), std::move(claim), CheckStatus::skipped, 0.0, std::move(why), {}});
    }

    template <class Graph>
    void write_hits(Probe& p, const std::string& slug, const std::vector<Graph>& hits) const {
        if (!opt_.artifact_dir) return;
        std::filesystem::create_directories(*opt_.artifact_dir);
        const auto path = *opt_.artifact_dir / (slug + ".txt");
        std::ofstream out(path);
        for (const auto& h : hits) {
            const std::string text = encode(h);
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
        }
        if (!out) throw std::runtime_error("cannot write " + path.string());
        p.artifacts.push_back(path.string());
    }

    static SearchOptions serial_k(int k) {
        SearchOptions o;
        o.k = k;
        o.threads = 1;
        return o;
    }

    void collect(const std::string& label, const std::vector<MixedGraph>& hits) {
        for (const auto& h : hits) k6_hits_.emplace_back(label, h);
    }

    // --- criteria -----------------------------------------------------------------------------

    void criterion_1() {
        check(1, "1", "directed edge, directed triangle, oriented K3,3 and oriented K5,5-M have exactly two H_omega-eigenvalues (exact identity)",
              [&](Probe& p) {
                  struct Row {
                      const char* name;
                      QuadraticValue r, s;
                      int mr, ms;
                  };
                  const Row rows[] = {
                      {"directed-edge", QuadraticValue::integer(1), QuadraticValue::integer(-1), 1, 1},
                      {"directed-triangle", QuadraticValue::integer(1), QuadraticValue::integer(-2), 2, 1},
                      {"oriented-K33", QuadraticValue::root(3), QuadraticValue::root(3, -1), 3, 3},
                      {"oriented-K55-M", QuadraticValue::integer(2), QuadraticValue::integer(-2), 5, 5},
                  };
                  const auto t0 = Clock::now();
                  for (const auto& row : rows) {
                      const MixedGraph d = fixture(row.name);
                      const Certificate c = certify_two_ev(d, 6);
                      const std::string n = row.name;
                      p.expect(c.verdict, n + ": verdict no (" + c.failure_reason + ")");
                      if (!c.verdict) continue;
                      p.expect(c.method == CertifyMethod::exact_identity, n + ": not certified by the exact identity");
                      p.expect(c.r_exact == row.r && c.s_exact == row.s,
                               n + ": pair (" + (c.r_exact ? c.r_exact->to_string() : "?") + ", " +
                                   (c.s_exact ? c.s_exact->to_string() : "?") + "), expected (" + row.r.to_string() + ", " +
                                   row.s.to_string() + ")");
                      p.expect(c.multiplicity_r == row.mr && c.multiplicity_s == row.ms,
                               n + ": multiplicities (" + std::to_string(c.multiplicity_r) + ", " + std::to_string(c.multiplicity_s) + ")");
                      p.expect(c.tol == 0.0, n + ": nonzero tolerance on the exact route");
                      k6_hits_.emplace_back(n, d);
                  }
                  const double t = seconds_since(t0);
                  p.expect(t < 1.0, "took " + fmt(t) + " s, budget 1 s");
                  p.note("4 fixtures certified in " + fmt(t) + " s");
              });
    }

    void orientation_uniqueness(Probe& p, const char* underlying_name, const char* fixture_name, std::uint64_t space,
                                double budget, const std::string& slug) {
        const SearchReport rep = search_orientations(named_underlying(underlying_name), serial_k(6), underlying_name);
        p.expect(rep.space_size == space, "space " + std::to_string(rep.space_size) + ", expected " + std::to_string(space));
        p.expect(rep.hits_up_to_iso.size() == 1, std::to_string(rep.hits_up_to_iso.size()) + " isomorphism classes, expected 1");
        if (!rep.hits_up_to_iso.empty())
            p.expect(are_isomorphic(rep.hits_up_to_iso.front(), fixture(fixture_name)), std::string("hit class is not isomorphic to the ") + fixture_name + " fixture");
        p.expect(reversal_closed(rep.hits), "hit list is not closed under arc reversal");
        p.expect(rep.elapsed_seconds < budget, "scan took " + fmt(rep.elapsed_seconds) + " s, budget " + fmt(budget) + " s");
        p.note(std::to_string(rep.hits.size()) + " labelled hits, 1 class, " + fmt(rep.elapsed_seconds) + " s single-threaded");
        write_hits(p, slug, rep.hits);
        collect(std::string("orientation of ") + underlying_name, rep.hits);
    }

    void criterion_2() {
        const std::string claim_a = "the two-eigenvalue orientations of K3,3 form one isomorphism class";
        const std::string claim_b = "the two-eigenvalue orientations of K5,5 minus a perfect matching form one isomorphism class";
        check(2, "2a", claim_a, [&](Probe& p) { orientation_uniqueness(p, "K33", "oriented-K33", 512, 60.0, "k33-orientation-hits"); });
        if (quick()) {
            skip(2, "2b", claim_b, "quick scale: 2^20-point scan");
        } else {
            check(2, "2b", claim_b, [&](Probe& p) {
                orientation_uniqueness(p, "K55-M", "oriented-K55-M", std::uint64_t{1} << 20, 60.0, "k55m-orientation-hits");
            });
        }
    }

    void criterion_3() {
        check(3, "3", "the regular tournament of order 5 has five distinct H_omega-eigenvalues", [&](Probe& p) {
            const MixedGraph t = fixture("regular-tournament-5");
            const Certificate c = certify_two_ev(t, 6);
            p.expect(!c.verdict, "certified yes");
            const Spectrum s = spectrum_of(t, RootOfUnity(6));
            p.expect(s.eigenvalues.size() == 5, "order is not 5");
            double min_gap = INFINITY;
            for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) min_gap = std::min(min_gap, s.eigenvalues[i - 1] - s.eigenvalues[i]);
            p.expect(min_gap > 1e-6, "eigenvalue gap " + fmt(min_gap) + " <= 1e-6");
            p.expect(s.distinct() == 5, std::to_string(s.distinct()) + " clusters");
            p.note("minimum eigenvalue gap " + fmt(min_gap));
        });
    }

    void criterion_4() {
        check(4, "4a", "mixed orientations of C4 with two eigenvalues are exactly the directed 3-path plus one edge", [&](Probe& p) {
            const SearchReport rep = search_mixed_orientations(named_underlying("C4"), serial_k(6), "C4");
            p.expect(rep.space_size == 81, "space " + std::to_string(rep.space_size));
            p.expect(rep.hits_up_to_iso.size() == 1, std::to_string(rep.hits_up_to_iso.size()) + " classes, expected 1");
            if (!rep.hits_up_to_iso.empty())
                p.expect(are_isomorphic(rep.hits_up_to_iso.front(), fixture("mixed-C4")), "hit class differs from the mixed-C4 fixture");
            p.expect(std::none_of(rep.hits.begin(), rep.hits.end(), [](const MixedGraph& d) { return d.is_oriented(); }),
                     "a fully directed orientation of C4 passed");
            p.note(std::to_string(rep.hits.size()) + " labelled hits");
            write_hits(p, "c4-mixed-hits", rep.hits);
            collect("mixed orientation of C4", rep.hits);
        });
        check(4, "4b", "no mixed orientation of the cube has two eigenvalues", [&](Probe& p) {
            const SearchReport rep = search_mixed_orientations(named_underlying("cube"), serial_k(6), "cube");
            p.expect(rep.space_size == 531441, "space " + std::to_string(rep.space_size));
            p.expect(rep.hits.empty(), std::to_string(rep.hits.size()) + " hits, expected 0");
            p.note("0 hits among " + std::to_string(rep.space_size) + " in " + fmt(rep.elapsed_seconds) + " s");
            collect("mixed orientation of the cube", rep.hits);
        });
        check(4, "4c", "the undirected K_n has spectrum {n-1, -1 (n-1 times)} for n = 2..6", [&](Probe& p) {
            for (int n = 2; n <= 6; ++n) {
                const std::string name = "complete-K" + std::to_string(n);
                const MixedGraph d = fixture(name);
                const Certificate c = certify_two_ev(d, 6);
                p.expect(c.verdict, name + ": verdict no");
                p.expect(cospectral_with_complete_graph(d, 1e-8), name + ": spectrum differs from {n-1, -1^(n-1)}");
                if (!c.verdict) continue;
                p.expect(near(c.r, n - 1, 1e-8) && near(c.s, -1, 1e-8) && c.multiplicity_r == 1 && c.multiplicity_s == n - 1,
                         name + ": certificate (" + fmt(c.r) + ", " + fmt(c.s) + ")");
                k6_hits_.emplace_back(name, d);
            }
            p.note("K2..K6 certified with pairs (n-1, -1)");
        });
    }

    void criterion_5() {
        check(5, "5", "Paley tournaments have three H_omega-eigenvalues (n-2)/2 and -1/2 +- sqrt(3(n-1))/2", [&](Probe& p) {
            for (long q : {7L, 11L, 19L}) {
                const OrientedGraph t = tournament_from_skew_hadamard(paley_skew_hadamard(q));
                const ThreeEvReport rep = certify_three_ev_tournament(t);
                const std::string tag = "q=" + std::to_string(q);
                p.expect(rep.verdict, tag + ": " + rep.failure_reason);
                p.expect(!rep.collapsed, tag + ": reported collapsed");
                const auto& cl = rep.observed.clusters;
                p.expect(cl.size() == 3, tag + ": " + std::to_string(cl.size()) + " distinct eigenvalues");
                if (cl.size() != 3) continue;
                const double n = static_cast<double>(q + 1);
                const int m = static_cast<int>(q - 1) / 2;
                const double root = std::sqrt(3.0 * (n - 1.0)) / 2.0;
                // Descending order: -1/2 + root > (n-2)/2 only when 3(n-1) > (n-1)^2, i.e. n < 4.
                const Cluster want[] = {{(n - 2) / 2, 1}, {-0.5 + root, m}, {-0.5 - root, m}};
                for (const auto& w : want) {
                    const bool found = std::any_of(cl.begin(), cl.end(), [&](const Cluster& c) {
                        return near(c.value, w.value, 1e-8) && c.multiplicity == w.multiplicity;
                    });
                    p.expect(found, tag + ": no cluster " + fmt(w.value) + " x" + std::to_string(w.multiplicity));
                }
            }
            const OrientedGraph t3 = tournament_from_skew_hadamard(paley_skew_hadamard(3));
            p.expect(are_isomorphic(t3.mixed(), fixture("directed-triangle")), "q=3 does not give the directed triangle");
            const ThreeEvReport rep3 = certify_three_ev_tournament(t3);
            p.expect(rep3.verdict && rep3.collapsed && rep3.observed.distinct() == 2, "q=3: collapse to two values not reproduced");
            p.note("q = 7, 11, 19 match; q = 3 collapses to the directed triangle");
        });
    }

    void criterion_6() {
        check(6, "6", "bordering a Paley tournament gives a skew-Hadamard matrix", [&](Probe& p) {
            for (long q : {7L, 11L, 19L}) {
                const SkewHadamard a = skew_hadamard_from_tournament(tournament_from_skew_hadamard(paley_skew_hadamard(q)));
                const int n = a.order();
                const std::string tag = "q=" + std::to_string(q);
                p.expect(n == q + 1, tag + ": order " + std::to_string(n));
                bool gram = true, skew = true;
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        long dot = 0;
                        for (int x = 0; x < n; ++x) dot += a(i, x) * a(j, x);
                        gram = gram && dot == (i == j ? n : 0);
                        skew = skew && a(i, j) + a(j, i) == (i == j ? 2 : 0);
                    }
                }
                p.expect(gram, tag + ": A A^T != nI");
                p.expect(skew, tag + ": A + A^T != 2I");
            }
            p.note("orders 8, 12, 20 verified in integer arithmetic");
        });
    }

    void criterion_7() {
        check(7, "7a", "no orientation of K6 has two H_i-eigenvalues", [&](Probe& p) {
            const SearchReport rep = search_orientations(named_underlying("K6"), serial_k(4), "K6");
            p.expect(rep.space_size == 32768, "space " + std::to_string(rep.space_size));
            p.expect(rep.hits.empty(), std::to_string(rep.hits.size()) + " hits, expected 0");
            p.expect(rep.elapsed_seconds < 10.0, "took " + fmt(rep.elapsed_seconds) + " s, budget 10 s");
            p.note("0 hits among 32768 in " + fmt(rep.elapsed_seconds) + " s");
        });
        check(7, "7b", "some signing of K6 has eigenvalues +-sqrt 5, each three times", [&](Probe& p) {
            const SigningReport rep = search_signings(named_underlying("K6"), serial_k(6), "K6");
            p.expect(rep.space_size == 32768, "space " + std::to_string(rep.space_size));
            p.expect(!rep.hits.empty(), "no hits");
            // Other two-eigenvalue signings exist (e.g. all edges negative: {1 x5, -5}); the claim
            // is about those with spectrum +-sqrt 5.
            const double r5 = std::sqrt(5.0);
            std::size_t matching = 0;
            for (const auto& s : rep.hits) {
                const auto e = spectrum_of(s).eigenvalues;
                bool ok = e.size() == 6;
                for (std::size_t i = 0; ok && i < 6; ++i) ok = near(e[i], i < 3 ? r5 : -r5, 1e-8);
                matching += ok ? 1 : 0;
            }
            p.expect(matching > 0, "no hit with spectrum +-sqrt 5 (x3 each)");
            p.expect(rep.elapsed_seconds < 10.0, "took " + fmt(rep.elapsed_seconds) + " s, budget 10 s");
            p.note(std::to_string(matching) + " of " + std::to_string(rep.hits.size()) + " labelled two-eigenvalue hits have spectrum +-sqrt 5; " +
                   fmt(rep.elapsed_seconds) + " s");
            write_hits(p, "k6-signing-hits", rep.hits);
        });
    }

    void criterion_8() {
        check(8, "8a", "the signed-to-oriented map preserves the spectrum of bipartite signed graphs", [&](Probe& p) {
            std::mt19937_64 rng(20240801);
            std::uniform_int_distribution<int> order(2, 10);
            double worst = 0.0;
            for (int trial = 0; trial < 200; ++trial) {
                const SignedGraph s = random_bipartite_signed_graph(order(rng), rng);
                const OrientedGraph d = signed_to_oriented(s);
                const auto a = spectrum_of(s).eigenvalues;
                const auto b = spectrum_of(d.mixed(), RootOfUnity(4)).eigenvalues;
                for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
                p.expect(same_spectrum(a, b, 1e-9), "spectra differ for " + inline_text(s));
                if (!p.failures.empty()) break;
            }
            p.note("200 graphs, worst eigenvalue difference " + fmt(worst));
        });
        check(8, "8b", "the oriented n-cubes from the signed hypercube have H_i-eigenvalues +-sqrt n", [&](Probe& p) {
            for (int n = 1; n <= 5; ++n) {
                const OrientedGraph d = signed_to_oriented(signed_hypercube(n));
                const Certificate c = certify_two_ev(d.mixed(), 4);
                const std::string tag = "n=" + std::to_string(n);
                p.expect(c.verdict, tag + ": verdict no");
                const double rn = std::sqrt(static_cast<double>(n));
                p.expect(near(c.r, rn, 1e-9) && near(c.s, -rn, 1e-9), tag + ": pair (" + fmt(c.r) + ", " + fmt(c.s) + ")");
                p.expect(c.multiplicity_r == (1 << (n - 1)) && c.multiplicity_s == (1 << (n - 1)), tag + ": multiplicities");
            }
            p.note("n = 1..5 certified at k = 4");
        });
    }

    void criterion_9() {
        check(9, "9", "every two-eigenvalue hit at k = 6 has s >= -2, with equality exactly on regular oriented hits", [&](Probe& p) {
            p.expect(!k6_hits_.empty(), "no hits collected from criteria 1-4");
            int equality = 0;
            for (const auto& [label, d] : k6_hits_) {
                const Certificate c = certify_two_ev(d, 6);
                p.expect(c.verdict, label + ": not a two-eigenvalue graph");
                if (!c.verdict) continue;
                p.expect(check_s_bound(c, d, RootOfUnity(6)), label + ": s = " + fmt(c.s) + " violates the bound for " + inline_text(d));
                if (near(c.s, -2.0, 1e-9)) ++equality;
            }
            p.note(std::to_string(k6_hits_.size()) + " hits checked, " + std::to_string(equality) + " at equality");
        });
    }

    void criterion_10() {
        check(10, "10", "for k = 10 and 12 the directed edge is the only connected oriented graph on <= 5 vertices with two eigenvalues",
              [&](Probe& p) {
                  const auto t0 = Clock::now();
                  const MixedGraph edge = fixture("directed-edge");
                  for (int k : {10, 12}) {
                      const SearchReport rep = desk_check_large_k(k, 5, false, opt_.threads);
                      const std::string tag = "k=" + std::to_string(k);
                      p.expect(rep.hits_up_to_iso.size() == 1, tag + ": " + std::to_string(rep.hits_up_to_iso.size()) + " classes");
                      if (!rep.hits_up_to_iso.empty())
                          p.expect(are_isomorphic(rep.hits_up_to_iso.front(), edge), tag + ": the class is not the directed edge");
                      p.note(tag + ": " + std::to_string(rep.space_size) + " oriented graphs");
                  }
                  const double t = seconds_since(t0);
                  p.expect(t < 120.0, "took " + fmt(t) + " s, budget 120 s");
              });
    }

    void agreement_sweep(Probe& p, int n_lo, int n_hi) {
        std::uint64_t graphs = 0, disagreements = 0;
        std::vector<std::string> examples;
        for (int n = n_lo; n <= n_hi; ++n) {
            const auto total = static_cast<std::int64_t>(mixed_graph_count(n));
            std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 256) num_threads(std::max(1, opt_.threads)) reduction(+ : graphs, disagreements)
            for (std::int64_t idx = 0; idx < total; ++idx) {
                try {
                    const MixedGraph d = mixed_graph_from_index(n, static_cast<std::uint64_t>(idx));
                    if (!is_connected(d)) continue;
                    ++graphs;
                    for (int k : {3, 4, 6}) {
                        const Certificate e = certify_two_ev(d, k);
                        const Certificate f = certify_two_ev(d, k, MethodChoice::force_float);
                        bool agree = e.verdict == f.verdict;
                        if (agree && e.verdict)
                            agree = near(e.r, f.r, 1e-6) && near(e.s, f.s, 1e-6) && e.multiplicity_r == f.multiplicity_r;
                        if (!agree) {
                            ++disagreements;
#pragma omp critical(hermspec_agreement)
                            if (examples.size() < 3) examples.push_back("k=" + std::to_string(k) + " " + inline_text(d));
                        }
                    }
                } catch (...) {
#pragma omp critical(hermspec_agreement_error)
                    if (!error) error = std::current_exception();
                }
            }
            if (error) std::rethrow_exception(error);
        }
        p.expect(disagreements == 0, std::to_string(disagreements) + " disagreements, e.g. " + join(examples));
        p.note(std::to_string(graphs) + " connected mixed graphs x 3 orders agree");
    }

    void criterion_11() {
        check(11, "11a", "eigenvalues of induced subgraphs interlace", [&](Probe& p) {
            std::mt19937_64 rng(7001);
            const int orders[] = {3, 4, 5, 6, 8, 10, 12};
            for (int trial = 0; trial < 1000; ++trial) {
                const int n = std::uniform_int_distribution<int>(2, 9)(rng);
                const MixedGraph d = random_mixed_graph(n, rng);
                std::vector<Vertex> keep(static_cast<std::size_t>(n));
                std::iota(keep.begin(), keep.end(), 0);
                std::shuffle(keep.begin(), keep.end(), rng);
                keep.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, n)(rng)));
                const RootOfUnity sigma(orders[std::uniform_int_distribution<int>(0, 6)(rng)]);
                const bool ok = interlaces(spectrum_of(d, sigma), spectrum_of(induced_subgraph(d, keep), sigma));
                p.expect(ok, "interlacing fails for " + inline_text(d) + " at k=" + std::to_string(sigma.order()));
                if (!ok) break;
            }
            p.note("1000 random pairs");
        });
        check(11, "11b", "eigensolver trace, Frobenius and residual identities", [&](Probe& p) {
            std::mt19937_64 rng(7002);
            const int orders[] = {3, 4, 5, 6, 7, 8, 10, 12};
            double worst_trace = 0, worst_frob = 0, worst_residual = 0;
            for (int trial = 0; trial < 500; ++trial) {
                const int n = std::uniform_int_distribution<int>(1, 12)(rng);
                const MixedGraph d = random_mixed_graph(n, rng);
                const ComplexMatrix h = build_float_H(d, RootOfUnity(orders[std::uniform_int_distribution<int>(0, 7)(rng)]));
                const auto sys = detail::hermitian_eigensystem(h);
                const double fro = h.frobenius_norm();
                double sum = 0, sq = 0;
                for (double x : sys.values) {
                    sum += x;
                    sq += x * x;
                }
                const double pairs = 2.0 * static_cast<double>(d.arcs().size() + d.edges().size());
                worst_trace = std::max(worst_trace, std::abs(sum - h.trace().real()));
                worst_frob = std::max(worst_frob, std::abs(sq - fro * fro));
                p.expect(near(fro * fro, pairs, 1e-9), "tr(H^2) != 2(|A| + |E|)");
                for (int c = 0; c < n; ++c) {
                    double res = 0;
                    for (int i = 0; i < n; ++i) {
                        Complex hv = 0;
                        for (int j = 0; j < n; ++j) hv += h(i, j) * sys.vectors(j, c);
                        res += std::norm(hv - sys.values[static_cast<std::size_t>(c)] * sys.vectors(i, c));
                    }
                    worst_residual = std::max(worst_residual, std::sqrt(res) / std::max(fro, 1.0));
                }
            }
            p.expect(worst_trace < 1e-9, "trace error " + fmt(worst_trace));
            p.expect(worst_frob < 1e-8, "Frobenius error " + fmt(worst_frob));
            p.expect(worst_residual < 1e-10, "relative residual " + fmt(worst_residual));
            p.note("500 matrices; worst trace " + fmt(worst_trace) + ", Frobenius " + fmt(worst_frob) + ", residual " + fmt(worst_residual));
        });
        check(11, "11c", "exact and float certification agree on all connected mixed graphs on <= 4 vertices, k = 3, 4, 6",
              [&](Probe& p) { agreement_sweep(p, 2, 4); });
        const std::string claim_d = "exact and float certification agree on all connected mixed graphs on 5 vertices, k = 3, 4, 6";
        if (quick()) {
            skip(11, "11d", claim_d, "quick scale: sweep over 4^10 labelled graphs");
        } else {
            check(11, "11d", claim_d, [&](Probe& p) { agreement_sweep(p, 5, 5); });
        }
    }
};

}  // namespace

bool ReproductionReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

CheckStatus ReproductionReport::criterion_status(int criterion) const {
    bool any = false, skipped = false;
    for (const auto& c : checks) {
        if (c.criterion != criterion) continue;
        any = true;
        if (c.status == CheckStatus::fail) return CheckStatus::fail;
        skipped = skipped || c.status == CheckStatus::skipped;
    }
    return !any || skipped ? CheckStatus::skipped : CheckStatus::pass;
}

ReproductionReport run_reproduction(const ReproductionOptions& opt) { return Runner(opt).run(); }

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

std::optional<Scale> parse_scale(std::string_view s) {
    if (s == "full") return Scale::full;
    if (s == "quick") return Scale::quick;
    return std::nullopt;
}

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = {{"criterion", c.criterion}, {"id", c.id}, {"claim", c.claim}, {"status", to_string(c.status)},
         {"elapsed_seconds", c.elapsed_seconds}, {"detail", c.detail}, {"artifacts", c.artifacts}};
}

void to_json(nlohmann::json& j, const ReproductionReport& r) {
    j = {{"passed", r.passed()}, {"checks", r.checks}};
}

std::uint64_t mixed_graph_count(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("mixed graph enumeration supports 0..7 vertices");
    return std::uint64_t{1} << (n * (n - 1));  // 4^(n(n-1)/2)
}

MixedGraph mixed_graph_from_index(int n, std::uint64_t index) {
    if (index >= mixed_graph_count(n)) throw std::out_of_range("mixed graph index out of range");
    std::vector<VertexPair> arcs, edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, index >>= 2) {
            switch (index & 3) {
            case 1: arcs.emplace_back(u, v); break;
            case 2: arcs.emplace_back(v, u); break;
            case 3: edges.emplace_back(u, v); break;
            default: break;
            }
        }
    }
    return MixedGraph(n, std::move(arcs), std::move(edges));
}

MixedGraph random_mixed_graph(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> state(0, 3);
    std::vector<VertexPair> arcs, edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            switch (state(rng)) {
            case 1: arcs.emplace_back(u, v); break;
            case 2: arcs.emplace_back(v, u); break;
            case 3: edges.emplace_back(u, v); break;
            default: break;
            }
        }
    }
    return MixedGraph(n, std::move(arcs), std::move(edges));
}

SignedGraph random_bipartite_signed_graph(int n, std::mt19937_64& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int left = std::uniform_int_distribution<int>(1, std::max(1, n - 1))(rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::bernoulli_distribution present(density), negative(0.5);
    std::vector<SignedEdge> edges;
    for (int i = 0; i < left; ++i) {
        for (int j = left; j < n; ++j) {
            if (present(rng)) edges.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)], negative(rng) ? -1 : 1});
        }
    }
    return SignedGraph(n, std::move(edges));
}

}  // namespace hermspec
