#include <catch2/catch_amalgamated.hpp>

#include "diskscale/graph.hpp"

using namespace diskscale;

namespace {

Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("recognize classifies the textbook shapes") {
    Graph p3 = path(3);
    CHECK_FALSE(recognize(p3, GraphClass::Cluster));
    CHECK(recognize(p3, GraphClass::Connected));
    CHECK_FALSE(recognize(p3, GraphClass::Complete));
    CHECK_FALSE(recognize(p3, GraphClass::Edgeless));

    Graph k4 = complete(4);
    CHECK(recognize(k4, GraphClass::Cluster));
    CHECK(recognize(k4, GraphClass::Complete));
    CHECK(recognize(k4, GraphClass::Connected));

    Graph g(4); // triangle plus an isolated vertex
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) g.set_edge(i, j);
    CHECK(recognize(g, GraphClass::Cluster));
    CHECK_FALSE(recognize(g, GraphClass::Connected));

    Graph empty(3);
    CHECK(recognize(empty, GraphClass::Edgeless));
    CHECK(recognize(empty, GraphClass::Cluster));
    CHECK_FALSE(recognize(empty, GraphClass::Connected)); // 3 components

    Graph single(1);
    CHECK(recognize(single, GraphClass::Connected));
    CHECK(recognize(single, GraphClass::Complete));
    Graph none(0);
    CHECK(recognize(none, GraphClass::Connected)); // zero components
    CHECK(recognize(none, GraphClass::Edgeless));
}

TEST_CASE("find_induced_p3 returns a genuine induced path") {
    Graph g = path(5);
    auto p3 = find_induced_p3(g);
    REQUIRE(p3.has_value());
    auto [a, b, c] = *p3;
    CHECK(g.has_edge(a, b));
    CHECK(g.has_edge(b, c));
    CHECK_FALSE(g.has_edge(a, c));

    CHECK_FALSE(find_induced_p3(complete(4)).has_value());
    CHECK_FALSE(find_induced_p3(complete(3)).has_value());
}

TEST_CASE("connected_components sorts by smallest member") {
    Graph g(6);
    g.set_edge(4, 5);
    g.set_edge(0, 2);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5});
}

TEST_CASE("maximal P3 packing on a path of six vertices finds two triples") {
    auto pack = maximal_p3_packing(path(6));
    REQUIRE(pack.triples.size() == 2);
    for (auto [a, b, c] : pack.triples) {
        CHECK(pack.covered[a]);
        CHECK(pack.covered[b]);
        CHECK(pack.covered[c]);
    }
    CHECK(pack.covered.count() == 6);
    CHECK(maximal_p3_packing(complete(5)).triples.empty());
}

TEST_CASE("clusters_of splits a cluster graph and rejects non-clusters") {
    Graph g(5);
    // triangle {0,1,2} and edge {3,4}
    g.set_edge(0, 1);
    g.set_edge(0, 2);
    g.set_edge(1, 2);
    g.set_edge(3, 4);
    auto cl = clusters_of(g);
    REQUIRE(cl.size() == 2);
    CHECK(cl[0] == std::vector<int>{0, 1, 2});
    CHECK(cl[1] == std::vector<int>{3, 4});
    CHECK_THROWS_AS(clusters_of(path(3)), InputError);
}

TEST_CASE("graph equality sees edge differences") {
    Graph a = path(4), b = path(4);
    CHECK(a == b);
    b.set_edge(0, 3);
    CHECK_FALSE(a == b);
    b.set_edge(0, 3, false);
    CHECK(a == b);
}
