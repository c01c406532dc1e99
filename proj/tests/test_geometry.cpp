#include <catch2/catch_amalgamated.hpp>

#include "diskscale/geometry.hpp"

using namespace diskscale;

namespace {
Point pt(const Rational& x, const Rational& y, int id) { return {x, y, id}; }
} // namespace

TEST_CASE("dist2 is exact on rational coordinates") {
    CHECK(dist2(pt(0, 0, 0), pt(3, 4, 1)) == Rational(25));
    CHECK(dist2(pt(Rational(1, 3), 0, 0), pt(Rational(2, 3), 0, 1)) == Rational(1, 9));
    CHECK(dist2(pt(-1, -1, 0), pt(1, 1, 1)) == Rational(8));
}

TEST_CASE("closed disks touch exactly at the tangent distance") {
    // two unit disks at distance 2: tangent, counts as intersecting
    CHECK(disks_intersect(Rational(4), 1.0, 1.0));
    // just beyond the edge tolerance: apart
    CHECK_FALSE(disks_intersect(Rational(4) + Rational(1, 1000), 1.0, 1.0));
    // well within
    CHECK(disks_intersect(Rational(1), 1.0, 1.0));
    // mixed radii: 0.5 + 1 = 1.5 reach, distance 1.6
    CHECK_FALSE(disks_intersect(Rational(64, 25), 0.5, 1.0));
    CHECK(disks_intersect(Rational(9, 4), 0.5, 1.0));
}

TEST_CASE("unit disk graph of three collinear points at spacing 2 is a path") {
    std::vector<Point> pts{pt(0, 0, 0), pt(2, 0, 1), pt(4, 0, 2)};
    Graph g = build_unit_disk_graph(pts);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("shrinking the middle disk breaks a path into isolated disks") {
    std::vector<Point> pts{pt(0, 0, 0), pt(2, 0, 1), pt(4, 0, 2)};
    RadiusAssignment r = all_unit_radii(3);
    r.radii[1] = 0.5; // reach 1.5 < 2 on both sides
    Graph g = build_disk_graph(pts, r);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("scaled_set lists exactly the non-unit radii") {
    RadiusAssignment r = all_unit_radii(4);
    CHECK(r.scaled_set().empty());
    r.radii[2] = 1.5;
    r.radii[0] = 0.5;
    CHECK(r.scaled_set() == std::vector<int>{0, 2});
}
