#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "diskscale/io.hpp"
#include "diskscale/is_enlarge.hpp"
#include "diskscale/vc_shrink.hpp"
#include "diskscale/verify.hpp"

using namespace diskscale;

namespace {

const std::string kFixtures = DISKSCALE_FIXTURE_DIR;

EmbeddedGraph k4() { return load_embedding(kFixtures + "/k4_embedding.json"); }

// Two vertices joined by three parallel routes: the smallest cubic graph,
// so gadget builds stay fast enough for the unit tier.
EmbeddedGraph theta() {
    EmbeddedGraph g;
    g.vertices = {{0, 0, 0, FreeDir::Left}, {1, 4, 0, FreeDir::Right}};
    g.edges = {{0, 1, {{0, 0}, {4, 0}}},
               {0, 1, {{0, 0}, {0, 2}, {4, 2}, {4, 0}}},
               {0, 1, {{0, 0}, {0, -2}, {4, -2}, {4, 0}}}};
    return g;
}

Rational sum(const std::vector<Rational>& v) {
    return std::accumulate(v.begin(), v.end(), Rational(0));
}

} // namespace

TEST_CASE("the bundled K4 embedding is a valid cubic grid drawing") {
    EmbeddedGraph g = k4();
    REQUIRE_NOTHROW(validate_embedding(g));
    auto sep2 = min_route_separation2(g);
    REQUIRE(sep2.has_value());
    CHECK(*sep2 == Rational(4));
}

TEST_CASE("embedding validation rejects malformed drawings") {
    SECTION("non-cubic degree") {
        EmbeddedGraph g = theta();
        g.edges.pop_back();
        CHECK_THROWS_WITH(validate_embedding(g), Catch::Matchers::ContainsSubstring("cubic"));
    }
    SECTION("route endpoint off its vertex") {
        EmbeddedGraph g = theta();
        g.edges[0].route.back() = {5, 0};
        CHECK_THROWS_WITH(validate_embedding(g),
                          Catch::Matchers::ContainsSubstring("vertex positions"));
    }
    SECTION("diagonal segment") {
        EmbeddedGraph g = theta();
        g.edges[1].route[1] = {1, 2};
        CHECK_THROWS_WITH(validate_embedding(g),
                          Catch::Matchers::ContainsSubstring("axis-parallel"));
    }
    SECTION("route crossing outside a shared vertex") {
        // reroute one K4 edge through another edge's vertical run
        EmbeddedGraph g = k4();
        g.edges[3].route = {{2, 0}, {-3, 0}, {-3, -5}, {6, -5}, {6, 2}};
        CHECK_THROWS_WITH(validate_embedding(g), Catch::Matchers::ContainsSubstring("cross"));
    }
    SECTION("overlapping collinear routes") {
        EmbeddedGraph g = theta();
        g.edges[2].route = {{0, 0}, {3, 0}, {3, -2}, {4, -2}, {4, 0}};
        CHECK_THROWS_WITH(validate_embedding(g),
                          Catch::Matchers::ContainsSubstring("overlapping"));
    }
    SECTION("free direction used by an incident route") {
        EmbeddedGraph g = theta();
        g.vertices[0].free = FreeDir::Right; // straight edge departs right
        CHECK_THROWS_WITH(validate_embedding(g),
                          Catch::Matchers::ContainsSubstring("free direction"));
    }
    SECTION("duplicate vertex id") {
        EmbeddedGraph g = theta();
        g.vertices[1].id = 0;
        CHECK_THROWS_AS(validate_embedding(g), InputError);
    }
}

TEST_CASE("gamma choices make every segment a modulus multiple") {
    SECTION("integer lengths and modulus") {
        CHECK(detail::gamma_unit_for(2, 162) == BigInt(81));
        CHECK(detail::gamma_unit_for(4, 162) == BigInt(81));
        CHECK(detail::gamma_unit_for(162, 162) == BigInt(1));
    }
    SECTION("rational modulus") {
        // len 2, modulus 13/2: 2·13 = 4·(13/2)
        CHECK(detail::gamma_unit_for(2, Rational(13, 2)) == BigInt(13));
        // len 3/2, modulus 5: (3/2)·10 = 3·5
        CHECK(detail::gamma_unit_for(Rational(3, 2), 5) == BigInt(10));
    }
    SECTION("separation requirement scales the drawing up") {
        EmbeddedGraph g = k4(); // minsep 2, segment lengths {2,4,8}
        CHECK(detail::choose_gamma(g, 486, 20) == BigInt(243));
        // same modulus, huge separation: smallest multiple m with 2·243·m > 2000
        CHECK(detail::choose_gamma(g, 486, 2000) == BigInt(243 * 5));
    }
    SECTION("theta drawing: parallel middle runs sit 2 apart") {
        auto sep2 = min_route_separation2(theta());
        REQUIRE(sep2.has_value());
        CHECK(*sep2 == Rational(4));
        CHECK(detail::choose_gamma(theta(), 486, 20) == BigInt(243));
    }
}

TEST_CASE("shrink-chain gap schedules tile each segment exactly") {
    // constants for a shrink window at 1/2: α=5, β=6, μ=28/19, modulus/3=162
    const Rational mu(28, 19);
    SECTION("single segment") {
        auto gaps = detail::vc_edge_gaps(5, 6, mu, {3});
        CHECK(gaps.size() == 3 * 6 * 3 + 1);
        CHECK(sum(gaps) == Rational(3 * 162));
        CHECK(gaps.front() == Rational(9));
        CHECK(gaps[19] == Rational(162, 19)); // first compressed gap
    }
    SECTION("two segments: only the last is compressed") {
        auto gaps = detail::vc_edge_gaps(5, 6, mu, {3, 3});
        CHECK(gaps.size() == 3 * 6 * 6 + 1);
        CHECK(sum(gaps) == Rational(6 * 162));
        for (std::size_t i = 0; i < 54; ++i) CHECK(gaps[i] == Rational(9));
    }
    SECTION("terminal segment too short to absorb the compression") {
        CHECK_THROWS_AS(detail::vc_edge_gaps(5, 6, mu, {3, 2}), InputError);
    }
}

TEST_CASE("enlarge-chain gap schedules tile each segment exactly") {
    // constants for the strict variant at ρ=2: α=5/2, β=4, μ=5
    const Rational alpha(5, 2), beta(4);
    SECTION("single segment") {
        auto gaps = detail::is_edge_gaps(alpha, beta, 5, {12});
        CHECK(gaps.size() == 3 * 12 + 1);
        CHECK(sum(gaps) == Rational(12) * (alpha + beta));
        CHECK(gaps[0] == beta);                 // lead of triple 1
        CHECK(gaps[1] == Rational(5, 4));       // intra-triple α/2
        CHECK(gaps[3] == Rational(16, 5));      // compressed lead of triple 2
        CHECK(gaps[18] == beta);                // triple 7 is past the window
        CHECK(gaps.back() == beta);             // closing gap before the vertex
    }
    SECTION("multiple segments compress only at the very end") {
        auto gaps = detail::is_edge_gaps(alpha, beta, 5, {12, 24, 12});
        CHECK(gaps.size() == 3 * 48 + 1);
        CHECK(sum(gaps) == Rational(48) * (alpha + beta));
        CHECK(gaps[3] == beta); // second triple of a non-terminal segment
    }
}

TEST_CASE("provenance roles parse back into their parts") {
    std::string kind;
    int vertex = -1;
    detail::ChainRole chain;
    REQUIRE(detail::parse_chain_role("vertex 3", kind, vertex, chain));
    CHECK(kind == "vertex");
    CHECK(vertex == 3);
    REQUIRE(detail::parse_chain_role("blocker 0", kind, vertex, chain));
    CHECK(kind == "blocker");
    REQUIRE(detail::parse_chain_role("twin 7", kind, vertex, chain));
    CHECK(vertex == 7);
    REQUIRE(detail::parse_chain_role("chain 2-11 pos 17", kind, vertex, chain));
    CHECK(kind == "chain");
    CHECK(chain.u == 2);
    CHECK(chain.v == 11);
    CHECK(chain.pos == 17);
    CHECK_FALSE(detail::parse_chain_role("tile 1 1 2 2", kind, vertex, chain));
    CHECK_FALSE(detail::parse_chain_role("chain 2+11 pos 17", kind, vertex, chain));
    CHECK_FALSE(detail::parse_chain_role("vertex", kind, vertex, chain));
}

TEST_CASE("chain positions walk through bends exactly") {
    std::vector<std::pair<Rational, Rational>> route{{0, 0}, {4, 0}, {4, 4}};
    std::vector<Rational> gaps{2, 2, 2, 2};
    auto pts = detail::chain_positions(route, gaps);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == std::pair<Rational, Rational>{2, 0});
    CHECK(pts[1] == std::pair<Rational, Rational>{4, 0}); // lands on the bend
    CHECK(pts[2] == std::pair<Rational, Rational>{4, 2});
    CHECK(pts[3] == std::pair<Rational, Rational>{4, 4}); // lands on the far vertex
    CHECK_THROWS_AS(detail::chain_positions(route, {9}), InputError);
}

TEST_CASE("shrink gadget end to end on the theta multigraph") {
    EmbeddedGraph g = theta();
    ReductionArtifact art = gen_vc_shrink(g, Rational(1, 2), 1);

    // pinned constants for r_min = 1/2 on this drawing
    CHECK(art.parameters.at("alpha") == Rational(5));
    CHECK(art.parameters.at("beta") == Rational(6));
    CHECK(art.parameters.at("mu") == Rational(28, 19));
    CHECK(art.parameters.at("gamma") == Rational(243));
    CHECK(art.parameters.at("k_fix") == Rational(720));
    CHECK(art.instance.k == 721);
    CHECK(art.parameters.at("theta") == Rational(722));
    CHECK(art.instance.points.size() == 2 * 723 + 180 * (722 + 8));
    CHECK(art.instance.r_min == Rational(1, 2));
    CHECK(art.instance.r_max == Rational(1, 2));

    // either vertex alone covers all three parallel edges
    for (int v : {0, 1}) {
        RadiusAssignment r = build_vc_forward_solution(art, {v});
        CHECK(static_cast<long long>(r.scaled_set().size()) == art.instance.k);
        auto res = verify_solution(art.instance, r, GraphClass::Cluster);
        INFO(res.message);
        CHECK(res.ok);
    }

    // unknown vertex ids are caller bugs
    CHECK_THROWS_AS(build_vc_forward_solution(art, {5}), InputError);
}

TEST_CASE("shrink gadget rejects bad windows") {
    EmbeddedGraph g = theta();
    CHECK_THROWS_AS(gen_vc_shrink(g, Rational(3, 2), 1), InputError);
    CHECK_THROWS_AS(gen_vc_shrink(g, Rational(1, 2), 1, Rational(1)), InputError);
    CHECK_THROWS_AS(gen_vc_shrink(g, Rational(1, 2), 9), InputError);
}

TEST_CASE("enlarge gadget end to end on the theta multigraph") {
    EmbeddedGraph g = theta();

    SECTION("strict variant, r_min = 2") {
        ReductionArtifact art = gen_is_enlarge(g, 2, 1);
        CHECK(art.parameters.at("alpha") == Rational(5, 2));
        CHECK(art.parameters.at("beta") == Rational(4));
        CHECK(art.parameters.at("mu") == Rational(5));
        CHECK(art.parameters.at("gamma") == Rational(39));
        CHECK(art.parameters.at("rho") == Rational(2));
        CHECK(art.instance.k == 483);
        CHECK(art.instance.points.size() == 2 * (3 + 484) + 120 * (484 + 8));

        // each single vertex is independent (the two ends are adjacent)
        for (int v : {0, 1}) {
            RadiusAssignment r = build_is_forward_solution(art, {v});
            CHECK(static_cast<long long>(r.scaled_set().size()) == art.instance.k);
            auto res = verify_solution(art.instance, r, GraphClass::Cluster);
            INFO(res.message);
            CHECK(res.ok);
        }
    }
    SECTION("claiming both adjacent ends leaves an induced P3 somewhere") {
        ReductionArtifact art = gen_is_enlarge(g, 2, 2);
        RadiusAssignment r = build_is_forward_solution(art, {0, 1});
        auto res = verify_solution(art.instance, r, GraphClass::Cluster);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("P3") != std::string::npos);
    }
    SECTION("unit-minimum variant derives its target radius from r_max") {
        ReductionArtifact art = gen_is_enlarge(g, 1, 1, Rational(5));
        CHECK(art.parameters.at("rho") == Rational(3, 2));
        CHECK(art.parameters.at("alpha") == Rational(5, 2));
        CHECK(art.parameters.at("beta") == Rational(3));
        CHECK(art.parameters.at("mu") == Rational(7));
        RadiusAssignment r = build_is_forward_solution(art, {1});
        auto res = verify_solution(art.instance, r, GraphClass::Cluster);
        INFO(res.message);
        CHECK(res.ok);
    }
    SECTION("bad windows") {
        CHECK_THROWS_AS(gen_is_enlarge(g, Rational(1, 2), 1), InputError);
        CHECK_THROWS_AS(gen_is_enlarge(g, 1, 1), InputError);          // needs r_max > 1
        CHECK_THROWS_AS(gen_is_enlarge(g, 2, 1, Rational(3, 2)), InputError); // r_max < r_min
    }
}

TEST_CASE("gadgets refuse non-grid drawings") {
    EmbeddedGraph g = theta();
    g.vertices[1].x = Rational(7, 2);
    for (auto& e : g.edges) e.route.back().first = Rational(7, 2);
    for (auto& e : g.edges)
        for (std::size_t i = 1; i + 1 < e.route.size(); ++i)
            if (e.route[i].first == 4) e.route[i].first = Rational(7, 2);
    CHECK_THROWS_WITH(gen_vc_shrink(g, Rational(1, 2), 1),
                      Catch::Matchers::ContainsSubstring("integer grid"));
}
