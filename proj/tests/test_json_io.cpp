#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cech/json_io.hpp"
#include "support/testutil.hpp"

using namespace cech;

TEST_CASE("space round trip") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testutil::random_space(rng, 1 + rng() % 12);
        CHECK(space_from_json(space_to_json(s)) == s);
    }
    const ClosureSpace empty({}, {});
    CHECK(space_from_json(space_to_json(empty)) == empty);
}

TEST_CASE("space parsing errors name the field") {
    CHECK_THROWS_WITH_AS(space_from_json(json{{"labels", json::array({"a"})}}),
                         doctest::Contains("closure"), JsonError);
    json bad{{"labels", json::array({"a", "b"})},
             {"closure", json::array({json::array({0, 5}), json::array({1})})}};
    CHECK_THROWS_WITH_AS(space_from_json(bad), doctest::Contains("out of range"), JsonError);
}

TEST_CASE("space documents resolve structures") {
    const auto doc = space_document_from_json(json{{"cyclic", {{"n", 7}, {"m", 2}}}}, ".");
    REQUIRE(doc.cyclic.has_value());
    CHECK(doc.cyclic->n == 7);
    CHECK(doc.space == cyclic_space(7, 2));

    const auto wdoc = space_document_from_json(
        json{{"wedge", {{"n1", 7}, {"m1", 2}, {"n2", 5}, {"m2", 1}}}}, ".");
    REQUIRE(wdoc.wedge.has_value());
    CHECK(wdoc.space.size() == 11);
}

TEST_CASE("quotient map JSON") {
    const json j{{"space", space_to_json(testutil::p4_space())},
                 {"classes", json::array({"x1", "x2", "x3"})},
                 {"assign", json::array({0, 1, 1, 2})}};
    const auto q = quotient_from_json(j);
    CHECK(q.class_labels.size() == 3);
    CHECK(quotient(q).row(0) == PointSet::from_indices(3, {0, 1}));

    json bad = j;
    bad["assign"] = json::array({0, 0, 0, 0});
    CHECK_THROWS_AS(quotient_from_json(bad), std::invalid_argument);
}

TEST_CASE("metric JSON both forms") {
    const json matrix{{"labels", json::array({"a", "b"})},
                      {"dist", json::array({json::array({0.0, 2.0}), json::array({2.0, 0.0})})}};
    CHECK(metric_from_json(matrix).dist(0, 1) == 2.0);

    const json points{{"points", json::array({json::array({0.0}), json::array({0.25})})},
                      {"metric", "circle"}};
    CHECK(metric_from_json(points).dist(0, 1) == doctest::Approx(0.25));

    json asym = matrix;
    asym["dist"][0][1] = 3.0;
    CHECK_THROWS_AS(metric_from_json(asym), std::invalid_argument);
}

TEST_CASE("CSV point clouds") {
    const auto plain = pointcloud_from_csv("0,0\n3,4\n", false, MetricKind::Euclidean);
    CHECK(plain.size() == 2);
    CHECK(plain.dist(0, 1) == doctest::Approx(5.0));
    CHECK(plain.labels()[0] == "p0");

    const auto labeled = pointcloud_from_csv("alpha, 0.0\nbeta, 0.5\n", true, MetricKind::Circle);
    CHECK(labeled.labels() == std::vector<std::string>{"alpha", "beta"});
    CHECK(labeled.dist(0, 1) == doctest::Approx(0.5));

    CHECK_THROWS_WITH_AS(pointcloud_from_csv("0,oops\n", false, MetricKind::Euclidean),
                         doctest::Contains("line 1"), JsonError);
}

TEST_CASE("graph and complex JSON") {
    const json g{{"vertices", json::array({"u", "v"})},
                 {"edges", json::array({json::array({0, 1})})}};
    const auto graph = graph_from_json(g);
    CHECK(graph_closure(graph).row(0) == PointSet::from_indices(2, {0, 1}));

    const json c{{"vertices", json::array({"a", "b", "c"})},
                 {"simplices", json::array({json::array({0, 1, 2})})}};
    const auto sc = complex_from_json(c);
    CHECK(sc.k_simplices(1).size() == 3);  // faces auto-completed
}

TEST_CASE("path documents") {
    json j{{"space", json{{"cyclic", {{"n", 7}, {"m", 2}}}}},
           {"points", json::array({0, 2, 4, 6, 1, 3, 5, 0})}};
    const auto doc = path_from_json(j, ".");
    CHECK(doc.path.points().size() == 8);
    CHECK(doc.path.valid());

    j["points"] = json::array();
    CHECK_THROWS_WITH_AS(path_from_json(j, "."), doctest::Contains("points"), JsonError);
}

TEST_CASE("path round trip") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = testutil::random_space(rng, 2 + rng() % 8);
        const auto p = testutil::random_loop(rng, s, rng() % s.size(), 1 + rng() % 5);
        const auto doc = path_from_json(path_to_json(p), ".");
        CHECK(doc.path == p);
    }
}

TEST_CASE("covering documents") {
    json shorthand{{"cyclic_cover", {{"k", 2}, {"n", 7}, {"m", 2}}}};
    const auto doc = covering_from_json(shorthand, ".");
    CHECK(doc.cyclic_surrogate);
    CHECK(doc.candidate.is_covering().covering);

    json full{{"total", space_to_json(cyclic_space(6, 1))},
              {"base", space_to_json(cyclic_space(3, 1))},
              {"proj", json::array({0, 1, 2, 0, 1, 2})}};
    const auto doc2 = covering_from_json(full, ".");
    CHECK_FALSE(doc2.cyclic_surrogate);
}

TEST_CASE("barcode and verdict serialization") {
    Barcode bc;
    bc.bars = {{0.0, std::nullopt}, {0.0, 1.5}};
    const json j = barcode_to_json(bc);
    CHECK(j["bars"][0][1].is_null());
    CHECK(j["bars"][1][1] == 1.5);

    HomotopyResult yes;
    yes.verdict = HomotopyVerdict::Yes;
    yes.trace = {{Move::Kind::Substitute, 2, 5, 3}};
    const json hy = homotopy_result_to_json(yes);
    CHECK(hy["verdict"] == "yes");
    CHECK(hy["witness"]["moves"][0]["op"] == "substitute");

    HomotopyResult no;
    no.verdict = HomotopyVerdict::No;
    no.reason = "winding 2 vs 0";
    CHECK(homotopy_result_to_json(no)["witness"]["invariant"] == "winding 2 vs 0");
}

TEST_CASE("floats render with twelve significant digits") {
    CHECK(round_sig(1.0 / 3.0) == 0.333333333333);
    CHECK(round_sig(123456789012345.0) == 123456789012000.0);
    CHECK(round_sig(0.0) == 0.0);
    CHECK(json_number(2.0) == 2.0);
}

TEST_CASE("word serialization") {
    const Word w{{'a', 2}, {'b', -1}};
    const json j = word_to_json(w);
    CHECK(j["display"] == "a^2 b^-1");
    CHECK(j["word"][0][0] == "a");
    CHECK(j["word"][0][1] == 2);
}
