#include <doctest.h>

#include <algorithm>
#include <vector>

#include "tokendom/base_graph.hpp"

using namespace tokendom;

TEST_CASE("star S_5: 6 vertices, 5 edges, center degree 5") {
    BaseGraph g = BaseGraph::star(5);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(0) == 5);
    for (int leaf = 1; leaf <= 5; ++leaf) {
        CHECK(g.degree(leaf) == 1);
        CHECK(g.adjacent(0, leaf));
    }
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("smallest star is a single edge") {
    BaseGraph g = BaseGraph::star(1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("star S_8 degree sequence") {
    BaseGraph g = BaseGraph::star(8);
    std::vector<int> degrees;
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    CHECK(degrees == std::vector<int>{8, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("complete graph edge counts") {
    CHECK(BaseGraph::complete(4).edge_count() == 6);
    CHECK(BaseGraph::complete(10).edge_count() == 45);
    BaseGraph k1 = BaseGraph::complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    for (int v = 0; v < 10; ++v) CHECK(BaseGraph::complete(10).degree(v) == 9);
}

TEST_CASE("labels: star is {0..n}, complete is {1..n}") {
    BaseGraph s = BaseGraph::star(3);
    CHECK(s.labels() == std::vector<int>{0, 1, 2, 3});
    BaseGraph k = BaseGraph::complete(3);
    CHECK(k.labels() == std::vector<int>{1, 2, 3});
    CHECK(k.index_of_label(1) == 0);
    CHECK_THROWS_AS(k.index_of_label(0), invalid_parameter);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(BaseGraph::star(0), invalid_parameter);
    CHECK_THROWS_AS(BaseGraph::complete(0), invalid_parameter);
    CHECK_THROWS_AS(BaseGraph::complete(65), resource_limit);
    CHECK_THROWS_AS(BaseGraph::custom({0, 1}, {{0, 0}}), invalid_parameter);
    CHECK_THROWS_AS(BaseGraph::custom({1, 0}, {}), invalid_parameter);
}

TEST_CASE("custom graph adjacency is symmetric") {
    BaseGraph g = BaseGraph::custom({0, 1, 2, 3}, {{0, 2}, {2, 3}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edge_count() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 0);
}
