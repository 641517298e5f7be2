#include "hermspec/cli.hpp"

#include "hermspec/certify.hpp"
#include "hermspec/constructions.hpp"
#include "hermspec/graph_io.hpp"
#include "hermspec/reproduction.hpp"
#include "hermspec/search.hpp"
#include "hermspec/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hermspec {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Bad arguments that CLI11 cannot detect on its own; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::string> read_file(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (!fs::is_regular_file(arg, ec)) return std::nullopt;
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in) throw std::runtime_error("cannot read " + arg);
    return ss.str();
}

/// A graph file (or "-" for stdin); otherwise a named fixture.
AnyGraph load_graph(const std::string& arg) {
    if (auto text = read_file(arg)) return read_graph(*text);
    return named_graph(arg);
}

SimpleGraph load_underlying(const std::string& arg) {
    if (auto text = read_file(arg)) {
        const AnyGraph g = read_graph(*text);
        if (const auto* s = std::get_if<SignedGraph>(&g)) return s->underlying();
        return underlying(std::get<MixedGraph>(g));
    }
    return named_underlying(arg);
}

OrientedGraph require_oriented(const AnyGraph& g, const char* what) {
    const auto* d = std::get_if<MixedGraph>(&g);
    if (d == nullptr || !d->is_oriented()) throw UsageError(std::string(what) + " expects an oriented graph");
    return OrientedGraph(*d);
}

const MixedGraph& require_mixed(const AnyGraph& g, const char* what) {
    const auto* d = std::get_if<MixedGraph>(&g);
    if (d == nullptr) throw UsageError(std::string(what) + " expects a mixed or oriented graph, not a signed graph");
    return *d;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << (std::abs(x) < 1e-12 ? 0.0 : x);
    return os.str();
}

void print_spectrum(std::ostream& out, const Spectrum& s) {
    out << "eigenvalues:";
    for (double e : s.eigenvalues) out << ' ' << fmt(e);
    out << "\nclusters:";
    for (std::size_t i = 0; i < s.clusters.size(); ++i)
        out << (i ? ", " : " ") << fmt(s.clusters[i].value) << " (x" << s.clusters[i].multiplicity << ')';
    out << '\n';
}

std::string method_name(CertifyMethod m) { return m == CertifyMethod::exact_identity ? "exact-identity" : "float-cluster"; }

void print_certificate(std::ostream& out, const Certificate& c) {
    if (!c.verdict) {
        out << "no: " << c.failure_reason << " (" << method_name(c.method) << ", k = " << c.k << ")\n";
        return;
    }
    const std::string r = c.r_exact ? c.r_exact->to_string() : fmt(c.r);
    const std::string s = c.s_exact ? c.s_exact->to_string() : fmt(c.s);
    out << "yes: r = " << r << " (x" << c.multiplicity_r << "), s = " << s << " (x" << c.multiplicity_s << ") ("
        << method_name(c.method) << ", k = " << c.k << ")\n";
}

void print_three_ev(std::ostream& out, const ThreeEvReport& r) {
    out << (r.verdict ? "yes" : "no") << ": tournament of order " << r.tournament_order << ", expected " << fmt(r.expected_top)
        << " (x1), " << fmt(r.expected_plus) << " (x" << r.expected_multiplicity << "), " << fmt(r.expected_minus) << " (x"
        << r.expected_multiplicity << ")";
    if (r.collapsed) out << " [collapsed to two values]";
    if (!r.verdict) out << "; " << r.failure_reason;
    out << '\n';
    print_spectrum(out, r.observed);
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream f(*path);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + *path);
}

template <class Graph>
void write_graph_list(const fs::path& path, const std::vector<Graph>& graphs) {
    std::ofstream f(path);
    for (const auto& g : graphs) {
        const std::string t = encode(g);
        f << t;
        if (t.empty() || t.back() != '\n') f << '\n';
    }
    if (!f) throw std::runtime_error("cannot write " + path.string());
}

template <class Report>
void print_search(std::ostream& out, const Report& r) {
    out << "underlying " << r.underlying_id << ", mode " << to_string(r.mode);
    if (r.mode != SearchMode::signings) out << ", k = " << r.k;
    out << "\nspace " << r.space_size << ", skipped (disconnected) " << r.skipped_disconnected << ", hits " << r.hits.size()
        << ", classes " << r.hits_up_to_iso.size() << ", " << fmt(r.elapsed_seconds) << " s\n";
    for (const auto& h : r.hits_up_to_iso) {
        const std::string t = encode(h);
        out << "# class\n" << t << (t.empty() || t.back() != '\n' ? "\n" : "");
    }
}

/// --threads when given, else HERMSPEC_THREADS, else 1.
int thread_count(const CLI::Option* flag, int value) {
    if (flag->count() > 0) return value;
    const char* env = std::getenv("HERMSPEC_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    int n = -1;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || end != text.data() + text.size() || n < 0)
        throw UsageError("HERMSPEC_THREADS must be a non-negative integer, got '" + std::string(text) + "'");
    return n;
}

struct Common {
    int k = 6;
    double tol = default_cluster_tol;
    bool json = false;
};

void add_k_tol(CLI::App* sub, Common& c) {
    sub->add_option("--k", c.k, "order of the root of unity sigma = e^{2 pi i / k}")->check(CLI::Range(3, 1000000));
    sub->add_option("--tol", c.tol, "eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "JSON output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermitian adjacency spectra of oriented, mixed and signed graphs", "hermspec"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    std::function<int()> action;

    // spectrum
    Common spec_opt;
    std::string spec_input;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and clusters of H_sigma (or of a signed adjacency matrix)");
    spectrum->add_option("input", spec_input, "graph file, '-' for stdin, or a named graph")->required();
    add_k_tol(spectrum, spec_opt);
    spectrum->callback([&] {
        action = [&] {
            const AnyGraph g = load_graph(spec_input);
            const Spectrum s = std::holds_alternative<SignedGraph>(g)
                                   ? spectrum_of(std::get<SignedGraph>(g), spec_opt.tol)
                                   : spectrum_of(std::get<MixedGraph>(g), RootOfUnity(spec_opt.k), spec_opt.tol);
            if (spec_opt.json) out << json(s).dump(2) << '\n';
            else print_spectrum(out, s);
            return 0;
        };
    });

    // certify
    Common cert_opt;
    std::string cert_input;
    bool three_ev = false, expect_yes = false, force_float = false;
    auto* certify = app.add_subcommand("certify", "decide whether H_sigma has exactly two (or, for tournaments, three) eigenvalues");
    certify->add_option("input", cert_input, "graph file, '-' for stdin, or a named graph")->required();
    add_k_tol(certify, cert_opt);
    certify->add_flag("--three-ev", three_ev, "check a regular tournament against the skew-Hadamard three-eigenvalue pattern (k = 6)");
    certify->add_flag("--expect-yes", expect_yes, "exit 1 when the verdict is no");
    certify->add_flag("--float", force_float, "use float clustering even when exact arithmetic is available");
    certify->callback([&] {
        action = [&] {
            const AnyGraph g = load_graph(cert_input);
            bool verdict = false;
            if (three_ev) {
                if (cert_opt.k != 6) throw UsageError("--three-ev is defined for k = 6");
                const ThreeEvReport r = certify_three_ev_tournament(require_oriented(g, "certify --three-ev"), cert_opt.tol);
                verdict = r.verdict;
                if (cert_opt.json) out << json(r).dump(2) << '\n';
                else print_three_ev(out, r);
            } else {
                const Certificate c = certify_two_ev(require_mixed(g, "certify"), cert_opt.k,
                                                     force_float ? MethodChoice::force_float : MethodChoice::automatic, cert_opt.tol);
                verdict = c.verdict;
                if (cert_opt.json) out << json(c).dump(2) << '\n';
                else print_certificate(out, c);
            }
            return expect_yes && !verdict ? 1 : 0;
        };
    });

    // construct
    std::vector<std::string> what;
    std::optional<std::string> construct_output;
    bool construct_signed = false, construct_json = false;
    auto* construct = app.add_subcommand(
        "construct",
        "print a construction: <name> | paley <q> | tournament <q> | hypercube <n> | skew-hadamard <tournament>");
    construct->add_option("what", what, "construction and its argument")->required()->expected(1, 2);
    construct->add_option("-o,--output", construct_output, "write to a file instead of stdout");
    construct->add_flag("--signed", construct_signed, "hypercube: print the signed n-cube instead of the oriented one");
    construct->add_flag("--json", construct_json, "JSON output");
    construct->callback([&] {
        action = [&] {
            auto number = [&](const char* kind) -> long {
                if (what.size() != 2) throw UsageError(std::string("construct ") + kind + " needs one numeric argument");
                try {
                    std::size_t used = 0;
                    const long v = std::stol(what[1], &used);
                    if (used != what[1].size()) throw std::invalid_argument("trailing characters");
                    return v;
                } catch (const std::logic_error&) {
                    throw UsageError(std::string("construct ") + kind + ": not an integer: " + what[1]);
                }
            };
            std::string kind = what[0], text;
            if (kind == "paley") {
                text = to_sign_text(paley_skew_hadamard(number("paley")));
            } else if (kind == "tournament") {
                text = encode(tournament_from_skew_hadamard(paley_skew_hadamard(number("tournament"))).mixed());
            } else if (kind == "hypercube") {
                const long n = number("hypercube");
                if (n < 1 || n > 16) throw UsageError("hypercube dimension must be in 1..16");
                const SignedGraph s = signed_hypercube(static_cast<int>(n));
                text = construct_signed ? encode(s) : encode(signed_to_oriented(s).mixed());
            } else if (kind == "skew-hadamard") {
                if (what.size() != 2) throw UsageError("construct skew-hadamard needs a tournament");
                text = to_sign_text(skew_hadamard_from_tournament(require_oriented(load_graph(what[1]), "construct skew-hadamard")));
            } else {
                if (what.size() != 1) throw UsageError("unknown construction: " + kind);
                text = encode(named_graph(kind));
                kind = "named";
            }
            if (!text.empty() && text.back() != '\n') text += '\n';
            if (construct_json) text = json{{"construction", kind}, {"argument", what.back()}, {"text", text}}.dump(2) + "\n";
            emit(out, construct_output, text);
            return 0;
        };
    });

    // search
    Common search_opt;
    std::string search_input, mode = "oriented", filter = "two-ev";
    std::optional<std::string> export_dir;
    int threads = 1, prefix_digits = -1;
    bool search_float = false;
    auto* search = app.add_subcommand("search", "exhaustive scan of the orientations, mixed orientations or signings of a graph");
    search->add_option("underlying", search_input, "named underlying graph (K6, K3,3, C4, Q3, cube, K55-M, ...) or a graph file")->required();
    add_k_tol(search, search_opt);
    search->add_option("--mode", mode, "assignment space")->check(CLI::IsMember({"oriented", "mixed", "signed"}));
    search->add_option("--filter", filter, "hit predicate")->check(CLI::IsMember({"two-ev", "three-ev", "complete-spectrum"}));
    auto* threads_flag = search->add_option("--threads", threads, "worker threads (1: serial reference scan, 0: OpenMP default; default $HERMSPEC_THREADS or 1)")
                             ->check(CLI::NonNegativeNumber);
    search->add_option("--prefix-digits", prefix_digits, "assignment digits fixed per parallel work unit");
    search->add_flag("--float", search_float, "float clustering even for k in {3, 4, 6}");
    search->add_option("--export", export_dir, "directory for hits.txt, classes.txt and report.json");
    search->callback([&] {
        action = [&] {
            const SimpleGraph g = load_underlying(search_input);
            SearchOptions o;
            o.k = search_opt.k;
            o.tol = search_opt.tol;
            o.threads = thread_count(threads_flag, threads);
            o.prefix_digits = prefix_digits;
            o.method = search_float ? MethodChoice::force_float : MethodChoice::automatic;
            const RootOfUnity sigma(o.k);
            const double tol = o.tol;
            if (filter == "three-ev") {
                o.mixed_filter = [sigma, tol](const MixedGraph& d) { return spectrum_of(d, sigma, tol).distinct() == 3; };
                o.signed_filter = [tol](const SignedGraph& s) { return spectrum_of(s, tol).distinct() == 3; };
            } else if (filter == "complete-spectrum") {
                if (mode == "signed") throw UsageError("--filter complete-spectrum applies to oriented and mixed scans");
                if (o.k != 6) throw UsageError("--filter complete-spectrum is defined for k = 6");
                o.mixed_filter = [](const MixedGraph& d) { return cospectral_with_complete_graph(d); };
            }
            json j;
            auto finish = [&](const auto& rep) {
                j = rep;
                if (search_opt.json) out << j.dump(2) << '\n';
                else print_search(out, rep);
                if (export_dir) {
                    fs::create_directories(*export_dir);
                    write_graph_list(fs::path(*export_dir) / "hits.txt", rep.hits);
                    write_graph_list(fs::path(*export_dir) / "classes.txt", rep.hits_up_to_iso);
                    std::ofstream(fs::path(*export_dir) / "report.json") << j.dump(2) << '\n';
                }
            };
            if (mode == "signed") finish(search_signings(g, o, search_input));
            else if (mode == "mixed") finish(search_mixed_orientations(g, o, search_input));
            else finish(search_orientations(g, o, search_input));
            return 0;
        };
    });

    // desk-check
    int desk_k = 10, desk_n = 5, desk_threads = 1;
    bool allow_any_k = false, desk_json = false;
    auto* desk = app.add_subcommand("desk-check", "all connected oriented graphs on <= n vertices with two eigenvalues at sigma = e^{2 pi i / k}");
    desk->add_option("--k", desk_k, "root order (k > 8 unless --allow-any-k)")->check(CLI::Range(3, 1000000));
    desk->add_option("--n-max", desk_n, "largest vertex count (<= 6)")->check(CLI::Range(2, 6));
    desk->add_flag("--allow-any-k", allow_any_k, "permit k <= 8 (control runs)");
    auto* desk_threads_flag = desk->add_option("--threads", desk_threads, "worker threads (default $HERMSPEC_THREADS or 1)")->check(CLI::NonNegativeNumber);
    desk->add_flag("--json", desk_json, "JSON output");
    desk->callback([&] {
        action = [&] {
            const SearchReport r = desk_check_large_k(desk_k, desk_n, allow_any_k, thread_count(desk_threads_flag, desk_threads));
            if (desk_json) out << json(r).dump(2) << '\n';
            else print_search(out, r);
            return 0;
        };
    });

    // convert
    std::string convert_input;
    std::optional<std::string> convert_output;
    auto* convert = app.add_subcommand("convert", "signed bipartite graph <-> oriented graph with H_i = U S U*");
    convert->add_option("input", convert_input, "graph file, '-' for stdin, or a named graph")->required();
    convert->add_option("-o,--output", convert_output, "write to a file instead of stdout");
    convert->callback([&] {
        action = [&] {
            const AnyGraph g = load_graph(convert_input);
            std::string text = std::holds_alternative<SignedGraph>(g)
                                   ? encode(signed_to_oriented(std::get<SignedGraph>(g)).mixed())
                                   : encode(oriented_to_signed(require_oriented(g, "convert")));
            if (!text.empty() && text.back() != '\n') text += '\n';
            emit(out, convert_output, text);
            return 0;
        };
    });

    // verify-paper
    std::string scale = "full";
    std::optional<std::string> artifacts;
    std::vector<int> only;
    int verify_threads = 1;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify-paper", "run every reproduction check and report pass/fail per check");
    verify->add_option("--scale", scale, "quick skips the two scans above 10^6 points")->check(CLI::IsMember({"full", "quick"}));
    verify->add_option("--artifacts", artifacts, "directory for search hit files");
    verify->add_option("--only", only, "restrict to these criterion numbers")->check(CLI::Range(1, 11));
    auto* verify_threads_flag =
        verify->add_option("--threads", verify_threads, "threads for the bulk sweeps (default $HERMSPEC_THREADS or 1)")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", verify_json, "JSON output");
    verify->callback([&] {
        action = [&] {
            ReproductionOptions o;
            o.scale = *parse_scale(scale);
            o.threads = thread_count(verify_threads_flag, verify_threads);
            o.only = only;
            if (artifacts) o.artifact_dir = fs::path(*artifacts);
            const ReproductionReport r = run_reproduction(o);
            if (verify_json) {
                out << json(r).dump(2) << '\n';
            } else {
                for (const auto& c : r.checks) {
                    out << '[' << to_string(c.status) << "] " << c.id << "  " << c.claim << " (" << fmt(c.elapsed_seconds) << " s)";
                    if (!c.detail.empty()) out << "\n        " << c.detail;
                    out << '\n';
                }
                out << (r.passed() ? "all checks passed" : "some checks FAILED") << '\n';
            }
            return r.passed() ? 0 : 1;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        err << "hermspec: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hermspec
