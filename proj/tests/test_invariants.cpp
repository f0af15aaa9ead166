#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/invariants.hpp"

#include <algorithm>
#include <set>

using namespace toric;

TEST_CASE("comb graph structure") {
    CombGraph g = comb_graph(3);
    CHECK(g.spine == std::vector<int>({3, 5, 7, 9}));
    CHECK(g.tines == std::vector<int>({2, 4, 6, 8}));
    // path edges between consecutive spine labels plus one tine per vertex
    std::vector<std::array<int, 2>> want = {{2, 3}, {3, 5}, {4, 5}, {5, 7},
                                            {6, 7}, {7, 9}, {8, 9}};
    CHECK(g.edges == want);

    // edges are exactly the lead ideal generators read as products, after the
    // even tine labels stand in for the squares (x_{2i+3}^2 -> tine x_{2i+2})
    for (int n = 0; n <= 8; ++n) {
        CombGraph c = comb_graph(n);
        CHECK(c.edges.size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(c.spine.size() == static_cast<std::size_t>(n + 1));
        CHECK(c.tines.size() == static_cast<std::size_t>(n + 1));
        std::set<std::array<int, 2>> uniq(c.edges.begin(), c.edges.end());
        CHECK(uniq.size() == c.edges.size());
    }
}

TEST_CASE("induced matching size and witness") {
    for (int n = 0; n <= 10; ++n) {
        CombGraph g = comb_graph(n);
        MatchingResult m = max_induced_matching(g);
        CHECK(m.size == n / 2 + 1);
        CHECK(static_cast<int>(m.witness.size()) == m.size);
        CHECK(is_induced_matching(g, m.witness));
    }
}

TEST_CASE("induced matching rejects adjacency and bridges") {
    CombGraph g = comb_graph(2);
    // edges: {2,3} {3,5} {4,5} {5,7} {6,7}
    CHECK(is_induced_matching(g, {{{2, 3}}}));
    CHECK(is_induced_matching(g, {{{2, 3}, {6, 7}}}));
    // shares vertex 5
    CHECK(!is_induced_matching(g, {{{3, 5}, {4, 5}}}));
    // {2,3} and {4,5} joined by the edge {3,5}
    CHECK(!is_induced_matching(g, {{{2, 3}, {4, 5}}}));
    // not an edge at all
    CHECK(!is_induced_matching(g, {{{2, 7}}}));
}

TEST_CASE("regularity bounds pin the same value") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& tv : TypeVector::enumerate(n)) {
            auto [lo, hi] = reg_bounds(n, tv);
            CHECK(lo == n / 2 + 2);
            CHECK(hi == n / 2 + 2);
        }
    }
}

TEST_CASE("regular sequence certificate holds across types") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& tv : TypeVector::enumerate(n)) {
            CHECK(regular_sequence_certificate(n, tv));
        }
    }
}

TEST_CASE("full report for the worked example") {
    TypeVector tv = TypeVector::parse(5, "111110");
    InvariantReport r = full_report(5, tv);
    CHECK(r.n == 5);
    CHECK(r.dim == 8);
    CHECK(r.pdim == 6);
    CHECK(r.reg_ring == 3);
    CHECK(r.reg_ideal == 4);
    CHECK(r.multiplicity == 21);
    CHECK(r.fibonacci_index == 8);
    CHECK(r.koszul);
    CHECK(r.cm_certified);
    CHECK(r.induced_matching_witness.size() == 3);
    CHECK(is_induced_matching(comb_graph(5), r.induced_matching_witness));
}

TEST_CASE("full report scales with n") {
    for (int n = 0; n <= 6; ++n) {
        TypeVector tv = TypeVector::parse(n, std::string(n + 1, '1'));
        InvariantReport r = full_report(n, tv);
        CHECK(r.dim == n + 3);
        CHECK(r.pdim == n + 1);
        CHECK(r.reg_ring == n / 2 + 1);
        CHECK(r.reg_ideal == n / 2 + 2);
        CHECK(r.multiplicity == fibonacci(n + 3));
        CHECK(r.fibonacci_index == n + 3);
        CHECK(r.koszul);
        CHECK(r.cm_certified);
    }
}

TEST_CASE("report json schema") {
    TypeVector tv = TypeVector::parse(5, "111110");
    nlohmann::ordered_json j = report_to_json(full_report(5, tv));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>({"n", "t", "dim", "pdim", "reg_ring", "reg_ideal",
                                            "multiplicity", "fibonacci_index", "koszul",
                                            "cm_certified", "witnesses"}));
    CHECK(j["n"] == 5);
    CHECK(j["t"] == "111110");
    CHECK(j["dim"] == 8);
    CHECK(j["pdim"] == 6);
    CHECK(j["reg_ring"] == 3);
    CHECK(j["reg_ideal"] == 4);
    CHECK(j["multiplicity"] == 21);
    CHECK(j["fibonacci_index"] == 8);
    CHECK(j["koszul"] == true);
    CHECK(j["cm_certified"] == true);
    REQUIRE(j["witnesses"].contains("induced_matching"));
    auto& im = j["witnesses"]["induced_matching"];
    REQUIRE(im.is_array());
    CHECK(im.size() == 3);
    CHECK(im[0].size() == 2);

    // uncertified values serialize as null
    InvariantReport r = full_report(2, TypeVector::parse(2, "000"));
    r.pdim = -1;
    r.multiplicity = -1;
    r.cm_certified = false;
    nlohmann::ordered_json u = report_to_json(r);
    CHECK(u["pdim"].is_null());
    CHECK(u["multiplicity"].is_null());
    CHECK(u["cm_certified"] == false);
}
