#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

#include "diskscale/gridtiling.hpp"
#include "diskscale/io.hpp"
#include "diskscale/random_gen.hpp"
#include "diskscale/svg.hpp"

using namespace diskscale;

namespace {

const std::string kFixtures = DISKSCALE_FIXTURE_DIR;

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

InstanceDoc tiny_doc() {
    InstanceDoc doc;
    doc.instance.points = {{Rational(0), Rational(0), 0},
                           {Rational(8, 5), Rational(-3, 7), 1},
                           {Rational(3), Rational(2), 2}};
    doc.instance.r_min = Rational(1, 2);
    doc.instance.r_max = Rational(5, 2);
    doc.instance.k = 2;
    doc.target = GraphClass::Cluster;
    return doc;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("class names round trip and reject junk") {
    for (GraphClass cls : {GraphClass::Cluster, GraphClass::Complete, GraphClass::Connected,
                           GraphClass::Edgeless})
        CHECK(parse_graph_class(graph_class_name(cls)) == cls);
    CHECK_THROWS_AS(parse_graph_class("clusterish"), InputError);
    CHECK_THROWS_AS(parse_graph_class(""), InputError);
}

TEST_CASE("radius strings use shortest round-trip form") {
    CHECK(double_to_string(1.0) == "1");
    CHECK(double_to_string(0.5) == "0.5");
    CHECK(double_from_string("55.226806") == 55.226806);
    CHECK_THROWS_AS(double_from_string("1.5x"), InputError);
    CHECK_THROWS_AS(double_from_string(""), InputError);

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dist(0.01, 100.0);
    for (int t = 0; t < 200; ++t) {
        double v = dist(rng);
        CHECK(double_from_string(double_to_string(v)) == v);
    }
}

TEST_CASE("instance documents survive a file round trip") {
    InstanceDoc doc = tiny_doc();
    auto path = temp_file("diskscale_inst.json");
    save_instance(path.string(), doc);
    InstanceDoc back = load_instance(path.string());
    std::filesystem::remove(path);

    REQUIRE(back.instance.points.size() == 3);
    CHECK(back.instance.points[1].x == Rational(8, 5));
    CHECK(back.instance.points[1].y == Rational(-3, 7));
    CHECK(back.instance.r_min == Rational(1, 2));
    CHECK(back.instance.r_max == Rational(5, 2));
    CHECK(back.instance.k == 2);
    REQUIRE(back.target.has_value());
    CHECK(*back.target == GraphClass::Cluster);
    CHECK(back.provenance.empty());
}

TEST_CASE("provenance runs and parameters survive the JSON round trip") {
    ReductionArtifact art = gen_gridtiling_connected(gt_planted_instance(2, 2));
    Json j = instance_to_json(doc_from_artifact(art, GraphClass::Connected));
    InstanceDoc back = instance_from_json(j);
    ReductionArtifact art2 = artifact_from_doc(back); // re-checks coverage
    CHECK(art2.provenance.size() == art.provenance.size());
    CHECK(art2.role_of(0) == "tile 1 1 2 2");
    CHECK(art2.role_of(19) == art.role_of(19));
    CHECK(art2.parameters.at("gamma") == Rational(4));
    CHECK(art2.parameters.at("pitch") == Rational(12));
    CHECK(back.target == GraphClass::Connected);
    CHECK(instance_to_json(doc_from_artifact(art2, GraphClass::Connected)).dump() == j.dump());
}

TEST_CASE("malformed instance files are rejected with InputError") {
    Json good = instance_to_json(tiny_doc());
    auto mutated = [&](auto&& f) {
        Json j = good;
        f(j);
        return j;
    };
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j.erase("points"); })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j.erase("k"); })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["points"][0] = "0"; })),
                    InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["points"][0] = {"0"}; })),
                    InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["k"] = -1; })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["k"] = "two"; })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["r_min"] = "9"; })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["r_min"] = "1/0"; })), InputError);
    CHECK_THROWS_AS(instance_from_json(mutated([](Json& j) { j["class"] = "planar"; })),
                    InputError);
    CHECK_THROWS_AS(instance_from_json(Json::array()), InputError);
}

TEST_CASE("solution files validate their scaled list") {
    RadiusAssignment r{{1.0, 2.5, 1.0, 0.5}};
    Json j = solution_to_json(r);
    CHECK(j.at("scaled") == Json::array({1, 3}));
    RadiusAssignment back = solution_from_json(j);
    CHECK(back.radii == r.radii);

    Json tampered = j;
    tampered["scaled"] = {1};
    CHECK_THROWS_AS(solution_from_json(tampered), InputError);
    Json numeric = j;
    numeric["radii"][0] = 1.0;
    CHECK_THROWS_AS(solution_from_json(numeric), InputError);
    CHECK_THROWS_AS(solution_from_json(Json::object()), InputError);

    auto path = temp_file("diskscale_sol.json");
    save_solution(path.string(), r);
    CHECK(load_solution(path.string()).radii == r.radii);
    std::filesystem::remove(path);
}

TEST_CASE("shipped fixtures parse into the expected objects") {
    InstanceDoc p3 = load_instance(kFixtures + "/p3_instance.json");
    CHECK(p3.instance.points.size() == 3);
    CHECK(p3.instance.points[1].x == Rational(8, 5));
    CHECK(p3.instance.r_min == Rational(1, 2));
    CHECK(p3.target == GraphClass::Cluster);

    EmbeddedGraph k4 = load_embedding(kFixtures + "/k4_embedding.json");
    REQUIRE(k4.vertices.size() == 4);
    REQUIRE(k4.edges.size() == 6);
    CHECK(k4.vertices[0].free == FreeDir::Left);
    CHECK(k4.edges[0].route.size() == 2);
    CHECK(k4.edges[5].route.size() == 5);

    GridTilingInstance tiles = load_tiles(kFixtures + "/gt_planted_2x2.json");
    GridTilingInstance planted = gt_planted_instance(2, 2);
    CHECK(tiles.kappa == planted.kappa);
    CHECK(tiles.eta == planted.eta);
    CHECK(tiles.cells == planted.cells);
}

TEST_CASE("tiling tables round trip and reject malformed tuples") {
    GridTilingInstance inst = gt_planted_instance(3, 2);
    auto path = temp_file("diskscale_tiles.json");
    save_tiles(path.string(), inst);
    GridTilingInstance back = load_tiles(path.string());
    std::filesystem::remove(path);
    CHECK(back.cells == inst.cells);

    Json j = tiles_to_json(inst);
    j["cells"][0][0][0] = {1, 2, 3};
    CHECK_THROWS_AS(tiles_from_json(j), InputError);
    Json shallow = tiles_to_json(inst);
    shallow["cells"][0].erase(1);
    CHECK_THROWS_AS(tiles_from_json(shallow), InputError); // ragged grid
    CHECK_THROWS_AS(load_tiles(kFixtures + "/no_such_file.json"), InputError);
}

TEST_CASE("embedding parser rejects bad free directions") {
    Json j = {{"vertices", Json::array({{{"id", 0},
                                         {"pos", {"0", "0"}},
                                         {"free", "sideways"}}})},
              {"edges", Json::array()}};
    CHECK_THROWS_AS(embedding_from_json(j), InputError);
    CHECK_THROWS_AS(embedding_from_json(Json::object()), InputError);
}

TEST_CASE("SVG rendering is deterministic and marks scaled disks") {
    InstanceDoc doc = tiny_doc();
    std::string flat = render_svg(doc.instance);
    CHECK(flat == render_svg(doc.instance));
    CHECK(count_of(flat, "<circle class=\"disk\"") == 3);
    CHECK(count_of(flat, "<circle class=\"dot\"") == 3);
    CHECK(count_of(flat, "class=\"disk scaled\"") == 0);

    RadiusAssignment r{{1.0, 2.5, 1.0}};
    std::string marked = render_svg(doc.instance, r);
    CHECK(count_of(marked, "<circle class=\"disk scaled\"") == 1);
    CHECK(marked == render_svg(doc.instance, r));

    RadiusAssignment wrong{{1.0, 1.0}};
    CHECK_THROWS_AS(render_svg(doc.instance, wrong), InputError);
}

TEST_CASE("random generator output is byte-deterministic per seed") {
    for (std::uint64_t seed : {1ULL, 42ULL, 31337ULL}) {
        InstanceDoc a, b;
        a.instance = gen_random(6, 2, Rational(1, 2), Rational(2), 6, seed);
        b.instance = gen_random(6, 2, Rational(1, 2), Rational(2), 6, seed);
        a.target = b.target = GraphClass::Cluster;
        CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
    }
    InstanceDoc c, d;
    c.instance = gen_random(6, 2, Rational(1, 2), Rational(2), 6, 1);
    d.instance = gen_random(6, 2, Rational(1, 2), Rational(2), 6, 2);
    CHECK(instance_to_json(c).dump() != instance_to_json(d).dump());
}
