#include "hermspec/constructions.hpp"
#include "hermspec/graph_io.hpp"
#include "hermspec/search.hpp"

#include <doctest.h>

#include <cmath>

using namespace hermspec;

namespace {

SearchOptions with_k(int k) {
    SearchOptions o;
    o.k = k;
    return o;
}

}  // namespace

TEST_CASE("orientations of K3") {
    const SearchReport r = search_orientations(named_underlying("K3"), {}, "K3");
    CHECK(r.space_size == 8);
    CHECK(r.hits.size() == 2);
    CHECK(r.hits_up_to_iso.size() == 1);
    for (const auto& h : r.hits) CHECK(are_isomorphic(h, named_graph("directed-triangle")));
    CHECK(r.underlying_id == "K3");
}

TEST_CASE("orientations of K3,3 form the fixture's class") {
    const SearchReport r = search_orientations(named_underlying("K3,3"));
    CHECK(r.space_size == 512);
    REQUIRE_FALSE(r.hits.empty());
    for (const auto& h : r.hits) CHECK(are_isomorphic(h, named_graph("oriented-K33")));
    CHECK(r.hits_up_to_iso.size() == 1);
    CHECK(reversal_closed(r.hits));
}

TEST_CASE("no orientation of K6 has two H_i-eigenvalues") {
    const SearchReport r = search_orientations(named_underlying("K6"), with_k(4));
    CHECK(r.space_size == 32768);
    CHECK(r.hits.empty());
}

TEST_CASE("mixed orientations") {
    const SearchReport c4 = search_mixed_orientations(named_underlying("C4"));
    CHECK(c4.space_size == 81);
    CHECK(c4.hits.size() == 8);
    for (const auto& h : c4.hits) {
        CHECK_FALSE(h.is_oriented());
        CHECK(are_isomorphic(h, named_graph("mixed-C4")));
    }

    const SearchReport k3 = search_mixed_orientations(named_underlying("K3"));
    CHECK(k3.space_size == 27);
    CHECK(std::find(k3.hits.begin(), k3.hits.end(), named_graph("complete-K3")) != k3.hits.end());
    CHECK(reversal_closed(k3.hits));

    const SearchReport cube = search_mixed_orientations(named_underlying("cube"));
    CHECK(cube.space_size == 531441);
    CHECK(cube.hits.empty());
}

TEST_CASE("signings") {
    const SigningReport k6 = search_signings(named_underlying("K6"));
    CHECK(k6.space_size == 32768);
    const double r5 = std::sqrt(5.0);
    int pm_sqrt5 = 0;
    for (const auto& s : k6.hits) {
        const Spectrum sp = spectrum_of(s);
        CHECK(sp.distinct() == 2);
        if (sp.clusters[0].multiplicity == 3 && std::abs(sp.clusters[0].value - r5) < 1e-8 && std::abs(sp.clusters[1].value + r5) < 1e-8) ++pm_sqrt5;
    }
    CHECK(pm_sqrt5 > 0);

    const SigningReport c4 = search_signings(named_underlying("C4"));
    CHECK(c4.space_size == 16);
    CHECK(c4.hits.size() == 8);
    for (const auto& s : c4.hits) {
        int negative = 0;
        for (const auto& e : s.edges()) negative += e.sign < 0 ? 1 : 0;
        CHECK(negative % 2 == 1);
    }

    CHECK(search_signings(named_underlying("K2")).hits.size() == 2);
}

TEST_CASE("desk check for large k") {
    const SearchReport k10 = desk_check_large_k(10, 4);
    REQUIRE(k10.hits_up_to_iso.size() == 1);
    CHECK(are_isomorphic(k10.hits_up_to_iso[0], named_graph("directed-edge")));
    CHECK(desk_check_large_k(12, 5).hits_up_to_iso.size() == 1);

    const SearchReport control = desk_check_large_k(6, 3, true);
    const bool has_triangle = std::any_of(control.hits_up_to_iso.begin(), control.hits_up_to_iso.end(),
                                          [](const MixedGraph& d) { return are_isomorphic(d, named_graph("directed-triangle")); });
    CHECK(has_triangle);
    // connected graphs on 2 and 3 vertices: K2 (2 orientations), three paths (4 each), K3 (8)
    CHECK(control.space_size == 2 + 3 * 4 + 8);
    CHECK(control.skipped_disconnected == 1 + 4);

    CHECK_THROWS_AS(desk_check_large_k(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(desk_check_large_k(10, 7), std::invalid_argument);
}

TEST_CASE("space limits and disconnected inputs") {
    CHECK_THROWS_AS(search_orientations(named_underlying("K8")), std::invalid_argument);
    CHECK_THROWS_AS(search_mixed_orientations(named_underlying("Q4")), std::invalid_argument);
    const SearchReport r = search_orientations(SimpleGraph(4, {{0, 1}, {2, 3}}));
    CHECK(r.space_size == 4);
    CHECK(r.skipped_disconnected == 4);
    CHECK(r.hits.empty());
}

TEST_CASE("irregular underlying graphs have no hits on either route") {
    for (const char* g : {"P3", "K2,3", "P5"}) {
        CHECK(search_orientations(named_underlying(g)).hits.empty());
        SearchOptions f;
        f.method = MethodChoice::force_float;
        CHECK(search_orientations(named_underlying(g), f).hits.empty());
    }
}

TEST_CASE("exact kernel agrees with float clustering") {
    struct Case {
        const char* g;
        bool mixed;
        int k;
    };
    for (const Case& c : {Case{"K3,3", false, 6}, Case{"K3,3", false, 3}, Case{"K3,3", false, 4}, Case{"K4", false, 6},
                          Case{"Q3", false, 4}, Case{"C4", true, 6}, Case{"K4", true, 6}, Case{"K4", true, 4}, Case{"K4", true, 3},
                          Case{"C6", true, 6}}) {
        SearchOptions exact = with_k(c.k), fl = with_k(c.k);
        fl.method = MethodChoice::force_float;
        const SimpleGraph g = named_underlying(c.g);
        const auto a = c.mixed ? search_mixed_orientations(g, exact) : search_orientations(g, exact);
        const auto b = c.mixed ? search_mixed_orientations(g, fl) : search_orientations(g, fl);
        CHECK_MESSAGE(a.hits == b.hits, c.g << " k=" << c.k);
    }
}

TEST_CASE("partition soundness and determinism") {
    const SimpleGraph k33 = named_underlying("K3,3");
    const SearchReport serial = search_orientations(k33);
    CHECK(search_orientations(k33).hits == serial.hits);
    for (int threads : {0, 2, 3}) {
        for (int prefix : {-1, 0, 1, 4, 9}) {
            SearchOptions o;
            o.threads = threads;
            o.prefix_digits = prefix;
            const SearchReport p = search_orientations(k33, o);
            CHECK(p.hits == serial.hits);
            CHECK(p.hits_up_to_iso == serial.hits_up_to_iso);
            CHECK(p.space_size == serial.space_size);
        }
    }

    const SearchReport mixed = search_mixed_orientations(named_underlying("C4"));
    SearchOptions o;
    o.threads = 4;
    o.prefix_digits = 2;
    CHECK(search_mixed_orientations(named_underlying("C4"), o).hits == mixed.hits);

    const SigningReport signs = search_signings(named_underlying("K5"));
    CHECK(search_signings(named_underlying("K5"), o).hits == signs.hits);

    // A predicate that accepts everything enumerates each assignment exactly once.
    SearchOptions all = o;
    all.mixed_filter = [](const MixedGraph&) { return true; };
    const SearchReport every = search_mixed_orientations(named_underlying("K4"), all);
    CHECK(every.hits.size() == 729);
    CHECK(std::adjacent_find(every.hits.begin(), every.hits.end()) == every.hits.end());
    CHECK(std::is_sorted(every.hits.begin(), every.hits.end()));
}

TEST_CASE("assignment encoding") {
    SearchOptions all;
    all.mixed_filter = [](const MixedGraph&) { return true; };
    const SearchReport r = search_mixed_orientations(SimpleGraph(2, {{0, 1}}), all);
    REQUIRE(r.hits.size() == 3);
    CHECK(std::find(r.hits.begin(), r.hits.end(), MixedGraph(2, {{0, 1}})) != r.hits.end());
    CHECK(std::find(r.hits.begin(), r.hits.end(), MixedGraph(2, {{1, 0}})) != r.hits.end());
    CHECK(std::find(r.hits.begin(), r.hits.end(), MixedGraph(2, {}, {{0, 1}})) != r.hits.end());
}

TEST_CASE("deduplication and reversal closure") {
    const MixedGraph t(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(dedup_isomorphic(std::vector<MixedGraph>{t, t.reversed(), named_graph("directed-edge")}).size() == 2);
    std::vector<MixedGraph> one{t};
    CHECK_FALSE(reversal_closed(one));
    std::vector<MixedGraph> both{t, t.reversed()};
    std::sort(both.begin(), both.end());
    CHECK(reversal_closed(both));
}

TEST_CASE("report JSON") {
    const SearchReport r = search_orientations(named_underlying("K3"), {}, "K3");
    const nlohmann::json j = r;
    CHECK(j["underlying"] == "K3");
    CHECK(j["mode"] == "oriented");
    CHECK(j["k"] == 6);
    CHECK(j["space_size"] == 8);
    CHECK(j["hit_count"] == 2);
    CHECK(j["class_count"] == 1);
    CHECK(j["hits"][0] == encode(r.hits[0]));
    CHECK(j["hits"][0].get<std::string>().front() == '&');
    const nlohmann::json s = search_signings(named_underlying("K2"));
    CHECK(s["mode"] == "signed");
    CHECK_FALSE(s.contains("k"));
}
