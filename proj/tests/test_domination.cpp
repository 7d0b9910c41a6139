#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "test_oracles.hpp"
#include "tokendom/domination.hpp"

using namespace tokendom;

TEST_CASE("the full vertex set dominates anything") {
    TokenGraph tg(BaseGraph::star(4), 2, Mode::Explicit);
    std::vector<std::uint32_t> all(tg.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_dominating(tg, all).dominating);
}

TEST_CASE("empty set fails with the colex-least witness") {
    TokenGraph tg(BaseGraph::star(4), 2, Mode::Explicit);
    auto check = is_dominating(tg, std::vector<std::uint32_t>{});
    CHECK_FALSE(check.dominating);
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness == 0);
}

TEST_CASE("D_12 dominates F_2(S_4)") {
    TokenGraph tg(BaseGraph::star(4), 2, Mode::Explicit);
    std::vector<std::uint32_t> d = {tg.rank_of_labels({0, 3}), tg.rank_of_labels({0, 4}),
                                    tg.rank_of_labels({1, 2})};
    CHECK(is_dominating(tg, d).dominating);
}

TEST_CASE("alien members are rejected") {
    TokenGraph tg(BaseGraph::star(4), 2, Mode::Explicit);
    CHECK_THROWS_AS(is_dominating(tg, std::vector<std::uint32_t>{1000}), invalid_parameter);
}

TEST_CASE("greedy on the star base graph picks the center") {
    TokenGraph tg(BaseGraph::star(5), 1, Mode::Explicit);
    auto d = greedy_dominating(tg);
    REQUIRE(d.size() == 1);
    CHECK(tg.labels_of(tg.mask_of(d[0])) == std::vector<int>{0});
    CHECK(is_dominating(tg, d).dominating);
}

TEST_CASE("greedy is dominating and at least gamma on F_2(K_6)") {
    TokenGraph tg(BaseGraph::complete(6), 2, Mode::Explicit);
    auto d = greedy_dominating(tg);
    CHECK(is_dominating(tg, d).dominating);
    CHECK(d.size() >= 3); // gamma(F_2(K_6)) = 3
}

TEST_CASE("greedy respects the log upper bound whenever min degree > 1") {
    std::vector<TokenGraph> graphs;
    graphs.emplace_back(BaseGraph::complete(6), 2, Mode::Explicit);
    graphs.emplace_back(BaseGraph::complete(7), 3, Mode::Explicit);
    graphs.emplace_back(BaseGraph::star(6), 2, Mode::Explicit);
    graphs.emplace_back(BaseGraph::star(7), 3, Mode::Explicit);
    graphs.emplace_back(oracle::random_base_graph(12, 0.6, 21), 1, Mode::Explicit);
    for (const auto& tg : graphs) {
        auto bounds = degree_bounds<TokenGraph>(tg);
        if (!bounds.min_degree_log_upper) continue;
        auto d = greedy_dominating(tg);
        CHECK(d.size() <= *bounds.min_degree_log_upper);
    }
}

TEST_CASE("degree bounds on token graphs") {
    // F_3(K_7): ceil(C(7,3) / (1 + 3*4)) = ceil(35/13) = 3
    TokenGraph f3k7(BaseGraph::complete(7), 3, Mode::Explicit);
    CHECK(degree_bounds(f3k7).max_degree_lower == 3);
    // F_2(S_6): 21 vertices, max degree n-k+1 = 5, so ceil(21/6) = 4
    TokenGraph f2s6(BaseGraph::star(6), 2, Mode::Explicit);
    CHECK(f2s6.max_degree() == 5);
    CHECK(degree_bounds(f2s6).max_degree_lower == 4);
}

TEST_CASE("log upper bound is absent when min degree is 1") {
    TokenGraph k2(BaseGraph::complete(2), 1, Mode::Explicit);
    auto b = degree_bounds(k2);
    CHECK_FALSE(b.min_degree_log_upper.has_value());
    TokenGraph k4(BaseGraph::complete(4), 1, Mode::Explicit);
    CHECK(degree_bounds(k4).min_degree_log_upper.has_value());
}

TEST_CASE("token-graph bounds report fills the family fields") {
    TokenGraph f3k6(BaseGraph::complete(6), 3, Mode::Explicit);
    auto b = degree_bounds(f3k6);
    REQUIRE(b.mantel_lower.has_value());
    CHECK(*b.mantel_lower == 2);
    REQUIRE(b.independence_upper_formula.has_value());
    CHECK(*b.independence_upper_formula == 5); // floor(C(6,2)/3)
}

TEST_CASE("maximal independent set: independent, maximal, dominating") {
    std::vector<TokenGraph> graphs;
    graphs.emplace_back(BaseGraph::complete(5), 2, Mode::Explicit);
    graphs.emplace_back(BaseGraph::complete(6), 3, Mode::Explicit);
    graphs.emplace_back(BaseGraph::star(6), 2, Mode::Explicit);
    graphs.emplace_back(oracle::random_base_graph(10, 0.4, 5), 1, Mode::Explicit);
    for (const auto& tg : graphs) {
        auto mis = greedy_maximal_independent(tg);
        std::vector<bool> in_set(tg.vertex_count(), false);
        for (auto v : mis) in_set[v] = true;
        for (auto v : mis)
            for (auto w : tg.neighbors_of(v)) CHECK_FALSE(in_set[w]); // independent
        for (std::uint64_t v = 0; v < tg.vertex_count(); ++v) {
            if (in_set[v]) continue;
            bool has_neighbor_inside = false;
            for (auto w : tg.neighbors_of(static_cast<std::uint32_t>(v)))
                if (in_set[w]) has_neighbor_inside = true;
            CHECK(has_neighbor_inside); // maximal, hence dominating
        }
        CHECK(is_dominating(tg, mis).dominating);
    }
}

TEST_CASE("MIS on complete graphs is a single vertex") {
    TokenGraph kn(BaseGraph::complete(7), 1, Mode::Explicit);
    CHECK(greedy_maximal_independent(kn).size() == 1);
}

TEST_CASE("MIS size in F_2(K_5) is within the independence formula") {
    TokenGraph tg(BaseGraph::complete(5), 2, Mode::Explicit);
    auto mis = greedy_maximal_independent(tg);
    CHECK(mis.size() <= 2); // floor((1/2) C(5,1))
}

TEST_CASE("mantel lower bound values") {
    CHECK(mantel_lower_bound_f3(14) == 14);
    CHECK(mantel_lower_bound_f3(6) == 2);
    CHECK(mantel_lower_bound_f3(7) == 3);
    CHECK(mantel_lower_bound_f3(18) == 24);
    CHECK_THROWS_AS(mantel_lower_bound_f3(2), invalid_parameter);
}

TEST_CASE("certify wraps a set with verification") {
    TokenGraph tg(BaseGraph::star(4), 2, Mode::Explicit);
    std::vector<std::uint32_t> d = {tg.rank_of_labels({0, 3}), tg.rank_of_labels({0, 4}),
                                    tg.rank_of_labels({1, 2})};
    auto cert = certify(tg, d, "star-f2-Dij", 3, false);
    CHECK(cert.verified);
    CHECK(cert.optimal); // size == lower bound
    CHECK(cert.size == 3);
    CHECK(cert.family == "star");
    CHECK(cert.set.size() == 3);
}
