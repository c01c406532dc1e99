#include <catch2/catch_amalgamated.hpp>

#include "diskscale/harness.hpp"
#include "diskscale/heavy.hpp"
#include "diskscale/solve.hpp"

using namespace diskscale;

TEST_CASE("radius feasibility for a fixed scaled set") {
    SECTION("an edge at distance 3 forces radius into [2, 3]") {
        std::vector<Point> pts{{0, 0, 0}, {3, 0, 1}};
        Graph target(2);
        target.set_edge(0, 1);
        auto r = conscal(pts, {0}, target, 1, 3);
        REQUIRE(r.has_value());
        CHECK(r->radii[0] >= 2.0 - 1e-9);
        CHECK(r->radii[0] <= 3.0 + 1e-9);
        CHECK(r->radii[1] == 1.0);
    }
    SECTION("a non-edge at distance 2 is impossible when radii start at 1") {
        // x ≥ 1 and x + ε ≤ 1 leave ε = 0: strict separation fails
        std::vector<Point> pts{{0, 0, 0}, {2, 0, 1}};
        Graph target(2); // no edge
        CHECK_FALSE(conscal(pts, {0}, target, 1, 3).has_value());
    }
    SECTION("empty scaled set succeeds exactly on the unit disk graph") {
        std::vector<Point> pts{{0, 0, 0}, {1, 0, 1}, {5, 0, 2}};
        Graph unit = build_unit_disk_graph(pts);
        auto r = conscal(pts, {}, unit, Rational(1, 2), 2);
        REQUIRE(r.has_value());
        CHECK(r->radii == std::vector<double>(3, 1.0));

        Graph wrong = unit;
        wrong.set_edge(0, 2);
        CHECK_THROWS_AS(conscal(pts, {}, wrong, Rational(1, 2), 2),
                        UnscaledMismatchError);
    }
}

TEST_CASE("exhaustive solver on tiny hand instances") {
    // path at spacing 2; shrink the middle disk to kill both edges
    Instance inst;
    inst.points = {{0, 0, 0}, {2, 0, 1}, {4, 0, 2}};
    inst.r_min = Rational(1, 2);
    inst.r_max = 1;
    inst.k = 1;

    auto edgeless = brute_force_solve(inst, GraphClass::Edgeless);
    REQUIRE(edgeless.yes);
    REQUIRE(edgeless.witness.has_value());
    CHECK(verify_solution(inst, *edgeless.witness, GraphClass::Edgeless).ok);

    // the same break also yields a cluster graph (three singletons)
    CHECK(brute_force_solve(inst, GraphClass::Cluster).yes);

    // no single shrink can make this complete (0 and 2 are 4 apart)
    CHECK_FALSE(brute_force_solve(inst, GraphClass::Complete).yes);

    // it is already connected, k = 0 suffices
    Instance zero = inst;
    zero.k = 0;
    CHECK(brute_force_solve(zero, GraphClass::Connected).yes);
    CHECK_FALSE(brute_force_solve(zero, GraphClass::Edgeless).yes);
}

TEST_CASE("the exhaustive solver refuses out-of-budget inputs") {
    Instance big;
    for (int i = 0; i < 9; ++i) big.points.push_back({Rational(3 * i), 0, i});
    big.k = 1;
    CHECK_THROWS_AS(brute_force_solve(big, GraphClass::Edgeless), BudgetExceededError);
    Instance wide;
    wide.points = {{0, 0, 0}};
    wide.k = 3;
    CHECK_THROWS_AS(brute_force_solve(wide, GraphClass::Edgeless), BudgetExceededError);
}

TEST_CASE("dispatcher cross-checks against the exhaustive reference") {
    CompareOptions opt;
    opt.trials = 48;
    opt.seed = 1101;
    auto rep = run_oracle_compare(opt);
    INFO((rep.failures.empty() ? "" : rep.failures.front()));
    CHECK(rep.mismatches == 0);
    CHECK(rep.trials == 48);
    CHECK(rep.yes > 0);
    CHECK(rep.no > 0);
}

TEST_CASE("cluster solver agrees with the general solver") {
    CompareOptions opt;
    opt.trials = 32;
    opt.seed = 2202;
    opt.algo = Algo::ClusterFpt;
    opt.reference = Algo::Xp;
    opt.classes = {GraphClass::Cluster};
    opt.max_k = 3;
    auto rep = run_oracle_compare(opt);
    INFO((rep.failures.empty() ? "" : rep.failures.front()));
    CHECK(rep.mismatches == 0);
}

TEST_CASE("complete solver agrees with the exhaustive reference") {
    CompareOptions opt;
    opt.trials = 32;
    opt.seed = 3303;
    opt.algo = Algo::Complete;
    opt.classes = {GraphClass::Complete};
    opt.max_k = 3;
    opt.budget.max_k = 3;
    auto rep = run_oracle_compare(opt);
    INFO((rep.failures.empty() ? "" : rep.failures.front()));
    CHECK(rep.mismatches == 0);
}

TEST_CASE("the fault-injection hook proves mismatches surface") {
    CompareOptions opt;
    opt.trials = 4;
    opt.seed = 1101;
    opt.inject_fault = true;
    auto rep = run_oracle_compare(opt);
    CHECK(rep.mismatches == 1);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().find("trial 0") != std::string::npos);
}

TEST_CASE("heavy P3 groups: breaking costs the lighter end, never the middle") {
    // end multiplicity 2, middle multiplicity 3, spacing ξ = 3/2
    auto pts = make_heavy_p3({0, 0, 2}, {Rational(3, 2), 0, 3}, {3, 0, 2}, Rational(3, 2));
    REQUIRE(pts.size() == 7);
    Instance inst;
    inst.points = pts;
    inst.r_min = Rational(1, 4);
    inst.r_max = 3;

    inst.k = 2; // shrink one end group entirely
    auto yes = brute_force_solve(inst, GraphClass::Cluster);
    REQUIRE(yes.yes);
    CHECK(verify_solution(inst, *yes.witness, GraphClass::Cluster).ok);

    inst.k = 1; // neither end group fits, and the middle costs 3
    CHECK_FALSE(brute_force_solve(inst, GraphClass::Cluster).yes);
}

TEST_CASE("witness checking reports the first violated condition") {
    Instance inst;
    inst.points = {{0, 0, 0}, {2, 0, 1}, {4, 0, 2}};
    inst.r_min = Rational(1, 2);
    inst.r_max = 1;
    inst.k = 1;

    SECTION("budget") {
        RadiusAssignment r{{0.5, 0.5, 1.0}};
        auto res = verify_solution(inst, r, GraphClass::Cluster);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("budget") != std::string::npos);
        CHECK(res.culprit_ids == std::vector<int>{0, 1});
    }
    SECTION("radius range") {
        RadiusAssignment r{{1.0, 0.25, 1.0}};
        auto res = verify_solution(inst, r, GraphClass::Cluster);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("out of range") != std::string::npos);
        CHECK(res.culprit_ids == std::vector<int>{1});
    }
    SECTION("induced P3 with culprit triple") {
        RadiusAssignment r = all_unit_radii(3);
        auto res = verify_solution(inst, r, GraphClass::Cluster);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("P3") != std::string::npos);
        REQUIRE(res.culprit_ids.size() == 3);
    }
    SECTION("missing pair for completeness") {
        RadiusAssignment r = all_unit_radii(3);
        auto res = verify_solution(inst, r, GraphClass::Complete);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("do not intersect") != std::string::npos);
    }
    SECTION("disconnection names a disk outside the largest component") {
        Instance two;
        two.points = {{0, 0, 0}, {1, 0, 1}, {10, 0, 2}};
        auto res = verify_solution(two, all_unit_radii(3), GraphClass::Connected);
        CHECK_FALSE(res.ok);
        CHECK(res.culprit_ids == std::vector<int>{2});
    }
    SECTION("coincident disks can never be edgeless") {
        Instance co;
        co.points = {{0, 0, 0}, {0, 0, 1}};
        co.k = 2;
        co.r_min = Rational(1, 2);
        auto res = verify_solution(co, RadiusAssignment{{0.5, 0.5}}, GraphClass::Edgeless);
        CHECK_FALSE(res.ok);
        CHECK(res.message.find("coincide") != std::string::npos);
    }
    SECTION("wrong radii vector length is a caller bug") {
        CHECK_THROWS_AS(verify_solution(inst, all_unit_radii(2), GraphClass::Cluster),
                        InputError);
    }
}

TEST_CASE("solvers honour a cooperative deadline") {
    Instance inst = gen_random(8, 2, Rational(1, 2), Rational(5, 2), 6, 99);
    CHECK_THROWS_AS(solve(inst, GraphClass::Cluster, Algo::Xp, Deadline::after_ms(-1)),
                    TimeoutError);
}

TEST_CASE("answers and witnesses are deterministic run to run") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        Instance inst = gen_random(7, 2, Rational(1, 2), Rational(5, 2), 6, seed);
        auto a = solve(inst, GraphClass::Cluster, Algo::Auto);
        auto b = solve(inst, GraphClass::Cluster, Algo::Auto);
        CHECK(a.yes == b.yes);
        if (a.witness && b.witness) CHECK(a.witness->radii == b.witness->radii);
    }
}
