#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cech/persistence.hpp"
#include "support/testutil.hpp"

using namespace cech;

namespace {

MetricSpace line_points(std::vector<double> xs) {
    std::vector<std::vector<double>> coords;
    for (double x : xs) coords.push_back({x});
    return MetricSpace::from_points(testutil::numbered_labels(xs.size()), coords,
                                    MetricKind::Euclidean);
}

std::multiset<double> finite_deaths(const Barcode& bc) {
    std::multiset<double> out;
    for (const auto& b : bc.bars)
        if (b.death) out.insert(*b.death);
    return out;
}

std::size_t infinite_bars(const Barcode& bc) {
    std::size_t c = 0;
    for (const auto& b : bc.bars)
        if (!b.death) ++c;
    return c;
}

/// Distinct pairwise distances, ascending.
std::vector<double> critical_radii(const MetricSpace& ms) {
    std::set<double> rs;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) rs.insert(ms.dist(i, j));
    return {rs.begin(), rs.end()};
}

}  // namespace

TEST_CASE("barcode of the 0-1-2-10 line") {
    const auto ms = line_points({0, 1, 2, 10});
    const auto bc = pi0_barcode(ms);
    REQUIRE(bc.bars.size() == 4);
    CHECK(infinite_bars(bc) == 1);
    CHECK(finite_deaths(bc) == std::multiset<double>{1, 1, 8});
    for (const auto& b : bc.bars) CHECK(b.birth == 0.0);
    // sorted by death descending, infinite first
    CHECK_FALSE(bc.bars[0].death.has_value());
    CHECK(*bc.bars[1].death == 8);
}

TEST_CASE("degenerate barcodes") {
    const auto single = pi0_barcode(line_points({3.5}));
    REQUIRE(single.bars.size() == 1);
    CHECK_FALSE(single.bars[0].death.has_value());

    const auto triple = pi0_barcode(line_points({2, 2, 2}));
    REQUIRE(triple.bars.size() == 3);
    CHECK(infinite_bars(triple) == 1);
    CHECK(finite_deaths(triple) == std::multiset<double>{0, 0});
}

TEST_CASE("dendrogram events on the fixture") {
    const auto ms = line_points({0, 1, 2, 10});
    const auto tree = dendrogram(ms);
    REQUIRE(tree.events.size() == 2);
    CHECK(tree.events[0].radius == 1);
    CHECK(tree.events[0].roots == std::vector<std::size_t>{0, 1, 2});  // tie chains into one event
    CHECK(tree.events[1].radius == 8);
    CHECK(tree.events[1].roots == std::vector<std::size_t>{0, 3});

    const auto pair = dendrogram(line_points({0, 4}));
    REQUIRE(pair.events.size() == 1);
    CHECK(pair.events[0].radius == 4);

    CHECK(dendrogram(line_points({1})).events.empty());
}

TEST_CASE("newick rendering") {
    const auto ms = line_points({0, 1, 2, 10});
    const auto s = dendrogram_newick(dendrogram(ms), ms);
    CHECK(s.find("p3") != std::string::npos);
    CHECK(s.back() == ';');
}

TEST_CASE("persistent component maps") {
    const auto ms = line_points({0, 1, 2, 10});
    const auto pm = persistent_components(ms, 0.5, 1.0);
    CHECK(pm.from_classes.size() == 4);
    CHECK(pm.to_classes.size() == 2);
    CHECK(pm.onto == std::vector<std::size_t>{0, 0, 0, 1});

    const auto id = persistent_components(ms, 1.0, 1.0);
    CHECK(id.from_classes == id.to_classes);
    for (std::size_t c = 0; c < id.onto.size(); ++c) CHECK(id.onto[c] == c);

    const auto all = persistent_components(ms, 0.0, ms.diameter());
    CHECK(all.to_classes.size() == 1);

    CHECK_THROWS_AS(persistent_components(ms, 2.0, 1.0), std::invalid_argument);
    // q > r is fine once the target scale is indiscrete
    CHECK(persistent_components(ms, 11.0, 10.0).to_classes.size() == 1);
}

TEST_CASE("empty cloud") {
    const auto ms = line_points({});
    CHECK(pi0_barcode(ms).bars.empty());
    CHECK(dendrogram(ms).events.empty());
    const auto pm = persistent_components(ms, 0.0, 1.0);
    CHECK(pm.from_classes.empty());
    CHECK(pm.onto.empty());
}

TEST_CASE("functoriality and monotone counts") {
    testutil::Rng rng(121212);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ms = testutil::random_metric_space(rng, 2 + rng() % 20);
        double q = (rng() % 30) / 10.0;
        double r = q + (rng() % 20) / 10.0;
        double s = r + (rng() % 20) / 10.0;
        const auto qr = persistent_components(ms, q, r);
        const auto rs = persistent_components(ms, r, s);
        const auto qs = persistent_components(ms, q, s);
        REQUIRE(qr.from_classes == qs.from_classes);
        REQUIRE(rs.to_classes == qs.to_classes);
        for (std::size_t c = 0; c < qr.onto.size(); ++c)
            CHECK(rs.onto[qr.onto[c]] == qs.onto[c]);
        CHECK(qr.to_classes.size() <= qr.from_classes.size());
    }
}

TEST_CASE("barcode, dendrogram, and per-radius components agree") {
    testutil::Rng rng(131313);
    for (int trial = 0; trial < 25; ++trial) {
        const auto ms = testutil::random_metric_space(rng, 2 + rng() % 30, 1 + rng() % 3);
        const auto bc = pi0_barcode(ms);
        const auto tree = dendrogram(ms);
        for (const double r : critical_radii(ms)) {
            const auto comps = metric_closure(ms, r).components();
            CHECK(comps.size() == bc.alive_at(r));

            const auto reps = tree.partition_at(r);
            std::set<std::size_t> classes(reps.begin(), reps.end());
            CHECK(classes.size() == comps.size());
            for (const auto& comp : comps)
                for (auto p : comp) CHECK(reps[p] == reps[comp.front()]);
        }
    }
}
