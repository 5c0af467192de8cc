#include "bundlelabel/labeling.hpp"

#include "bundlelabel/bundle.hpp"
#include "bundlelabel/schemes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace bundlelabel;

namespace {

Labeling constant(int count, int value, int d) {
    return {std::vector<int>(static_cast<size_t>(count), value), d};
}

Graph random_graph(std::mt19937& rng, int max_vertices) {
    int v = 1 + static_cast<int>(rng() % max_vertices);
    Graph g(v);
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
            if (rng() % 4 == 0) g.add_edge(u, w);
    return g;
}

Labeling random_labeling(std::mt19937& rng, int count) {
    Labeling l;
    l.d = 1 + static_cast<int>(rng() % 4);
    l.labels.resize(static_cast<size_t>(count));
    int top = static_cast<int>(rng() % 13);
    for (auto& x : l.labels) x = static_cast<int>(rng() % (top + 1));
    return l;
}

}  // namespace

TEST(VerifyLabeling, ConstantLabelingOnPentagon) {
    auto report = verify_labeling(cycle(5), constant(5, 0, 1));
    EXPECT_FALSE(report.valid);
    EXPECT_EQ(report.span, 0);
    int dist1 = 0, dist2 = 0;
    for (const auto& v : report.violations)
        (v.distance == 1 ? dist1 : dist2)++;
    EXPECT_EQ(dist1, 5);
    EXPECT_EQ(dist2, 5);
}

TEST(VerifyLabeling, FigureBundleIsValid) {
    BundleSpec spec{ProductKind::Direct, 9, 7, 3};
    Labeling l = labels_from_scheme(spec, {2, SchemeKind::F, 1});
    auto report = verify_labeling(build_bundle(spec), l);
    EXPECT_TRUE(report.valid);
    EXPECT_EQ(report.span, 6);
}

TEST(VerifyLabeling, EdgeMeetsGapExactly) {
    for (int d = 1; d <= 5; ++d) {
        auto report = verify_labeling(path(2), {{0, d}, d});
        EXPECT_TRUE(report.valid);
        EXPECT_EQ(report.span, d);
    }
}

TEST(VerifyLabeling, UsageErrorsAreDistinct) {
    EXPECT_THROW(verify_labeling(cycle(5), constant(4, 0, 1)),
                 std::invalid_argument);
    EXPECT_THROW(verify_labeling(cycle(5), {{0, 1, 2, 3, -1}, 1}),
                 std::invalid_argument);
    EXPECT_THROW(verify_labeling(cycle(5), constant(5, 0, 0)),
                 std::invalid_argument);
}

TEST(NaiveVerify, SpecExamples) {
    // j -> 3j mod 7 around the 7-cycle
    auto report = naive_verify(cycle(7), {{0, 3, 6, 2, 5, 1, 4}, 2});
    EXPECT_TRUE(report.valid);
    report = naive_verify(cycle(3), {{0, 1, 2}, 2});
    EXPECT_FALSE(report.valid);
}

TEST(NaiveVerify, MatchesVerifyLabelingRandomized) {
    std::mt19937 rng(2024);
    auto cross_check = [](const Graph& g, const Labeling& l) {
        auto fast = verify_labeling(g, l);
        auto slow = naive_verify(g, l);
        ASSERT_EQ(fast.valid, slow.valid);
        ASSERT_EQ(fast.span, slow.span);
        ASSERT_EQ(fast.violations.size(), slow.violations.size());
        for (size_t i = 0; i < fast.violations.size(); ++i)
            ASSERT_TRUE(fast.violations[i] == slow.violations[i]);
    };
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(rng, 40);
        cross_check(g, random_labeling(rng, g.vertex_count()));
    }
    // a few graphs at the 200-vertex end of the contract
    for (int it = 0; it < 10; ++it) {
        Graph g(150 + static_cast<int>(rng() % 51));
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w = u + 1; w < g.vertex_count(); ++w)
                if (rng() % 50 == 0) g.add_edge(u, w);
        cross_check(g, random_labeling(rng, g.vertex_count()));
    }
}

TEST(VerifyLabeling, ShiftAndReflectionInvariance) {
    std::mt19937 rng(5150);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(rng, 25);
        Labeling l = random_labeling(rng, g.vertex_count());
        auto base = verify_labeling(g, l);

        Labeling shifted = l;
        int offset = static_cast<int>(rng() % 9);
        for (auto& x : shifted.labels) x += offset;
        auto sh = verify_labeling(g, shifted);
        ASSERT_EQ(base.valid, sh.valid);
        ASSERT_EQ(base.span, sh.span);

        Labeling reflected = l;
        int top = *std::max_element(l.labels.begin(), l.labels.end());
        for (auto& x : reflected.labels) x = top - x;
        ASSERT_EQ(base.valid, verify_labeling(g, reflected).valid);
    }
}

TEST(VerifyLabeling, ValidForDImpliesValidForSmallerD) {
    BundleSpec spec{ProductKind::Direct, 9, 7, 3};
    Graph g = build_bundle(spec);
    Labeling l = labels_from_scheme(spec, {2, SchemeKind::F, 1});
    for (int lower = 1; lower <= l.d; ++lower) {
        Labeling weaker{l.labels, lower};
        EXPECT_TRUE(verify_labeling(g, weaker).valid);
    }
}

TEST(DegreeLowerBound, FourRegularBundle) {
    Graph g = build_bundle({ProductKind::Cartesian, 5, 6, 2});
    EXPECT_EQ(degree_lower_bound(g, 2), std::optional<int>(6));
}

TEST(DegreeLowerBound, SingleEdge) {
    EXPECT_EQ(degree_lower_bound(path(2), 1), std::optional<int>(1));
}

TEST(DegreeLowerBound, HypothesisFails) {
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    EXPECT_EQ(degree_lower_bound(star, 1), std::nullopt);
    // d exceeding the maximum degree
    EXPECT_EQ(degree_lower_bound(path(2), 2), std::nullopt);
}

TEST(SpanOf, Basics) {
    EXPECT_EQ(span_of({}), 0);
    EXPECT_EQ(span_of({7}), 0);
    EXPECT_EQ(span_of({3, 9, 5}), 6);
}
