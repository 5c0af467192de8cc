#include "bundlelabel/solver.hpp"

#include "bundlelabel/bundle.hpp"
#include "bundlelabel/labeling.hpp"
#include "bundlelabel/schemes.hpp"

#include "test_oracles.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace bundlelabel;

TEST(IsLabelable, PentagonAgainstBruteForce) {
    Graph g = cycle(5);
    // frozen from the exhaustive oracle: feasible at 4, not at 3
    EXPECT_TRUE(testoracle::brute_force_labeling(g, 2, 4).has_value());
    EXPECT_FALSE(testoracle::brute_force_labeling(g, 2, 3).has_value());

    auto yes = is_labelable(g, 2, 4);
    EXPECT_EQ(yes.status, Feasibility::Labelable);
    ASSERT_TRUE(yes.labeling.has_value());
    EXPECT_TRUE(verify_labeling(g, *yes.labeling).valid);

    auto no = is_labelable(g, 2, 3);
    EXPECT_EQ(no.status, Feasibility::Infeasible);
    EXPECT_FALSE(no.labeling.has_value());
}

TEST(IsLabelable, SingleEdgeNeedsFullGap) {
    Graph g = path(2);
    EXPECT_EQ(is_labelable(g, 3, 2).status, Feasibility::Infeasible);
    EXPECT_EQ(is_labelable(g, 3, 3).status, Feasibility::Labelable);
}

TEST(IsLabelable, BudgetExhaustion) {
    Graph g = build_bundle({ProductKind::Direct, 9, 7, 3});
    SearchOptions opts;
    opts.node_budget = 5;
    auto dec = is_labelable(g, 2, 6, opts);
    EXPECT_EQ(dec.status, Feasibility::BudgetExceeded);
    EXPECT_EQ(dec.nodes_explored, 5);
}

TEST(IsLabelable, RejectsBadArguments) {
    EXPECT_THROW(is_labelable(cycle(3), 0, 4), std::invalid_argument);
    EXPECT_THROW(is_labelable(cycle(3), 1, -1), std::invalid_argument);
}

TEST(LambdaExact, SingleVertex) {
    auto result = lambda_exact(path(1), 2);
    EXPECT_EQ(result.lambda, 0);
    EXPECT_FALSE(result.timed_out);
}

TEST(LambdaExact, SevenCycle) {
    // classical value, reproduced by the exhaustive oracle
    Graph g = cycle(7);
    EXPECT_EQ(testoracle::brute_force_lambda(g, 2), 4);
    auto result = lambda_exact(g, 2);
    EXPECT_EQ(result.lambda, 4);
    EXPECT_EQ(span_of(result.witness.labels), 4);
}

TEST(LambdaExact, SmallestAdmissibleBundle) {
    Graph g = build_bundle({ProductKind::Direct, 3, 5, 1});
    auto result = lambda_exact(g, 1);
    EXPECT_EQ(result.lambda, 4);
    EXPECT_TRUE(verify_labeling(g, result.witness).valid);
    EXPECT_EQ(result.lower_bound, 4);
    EXPECT_EQ(result.upper_bound, std::optional<int>(4));
}

TEST(LambdaExact, AgreesWithBruteForceOnTinyGraphs) {
    std::vector<Graph> graphs;
    graphs.push_back(cycle(3));
    graphs.push_back(cycle(4));
    graphs.push_back(cycle(5));
    graphs.push_back(cycle(6));
    graphs.push_back(path(2));
    graphs.push_back(path(3));
    graphs.push_back(path(5));
    for (const auto& g : graphs)
        for (int d = 1; d <= 2; ++d)
            ASSERT_EQ(lambda_exact(g, d).lambda,
                      testoracle::brute_force_lambda(g, d));
}

TEST(LambdaExact, ClosedFormAgreementAtDeskScale) {
    // admissible bundles with m*n <= 40 match the closed-form span
    struct Instance {
        ProductKind kind;
        int m, n, d;
    };
    const Instance instances[] = {
        {ProductKind::Direct, 3, 5, 1},    {ProductKind::Direct, 4, 5, 1},
        {ProductKind::Direct, 8, 5, 1},    {ProductKind::Cartesian, 3, 5, 1},
        {ProductKind::Cartesian, 4, 5, 1}, {ProductKind::Direct, 3, 7, 2},
        {ProductKind::Cartesian, 3, 7, 2},
    };
    for (const auto& inst : instances)
        for (int ell : admissible_shifts(inst.kind, inst.m, inst.n, inst.d)) {
            Graph g = build_bundle({inst.kind, inst.m, inst.n, ell});
            auto result = lambda_exact(g, inst.d);
            ASSERT_FALSE(result.timed_out);
            ASSERT_EQ(result.lambda, 2 * inst.d + 2)
                << kind_name(inst.kind) << " m=" << inst.m << " n=" << inst.n
                << " ell=" << ell << " d=" << inst.d;
        }
}

TEST(LambdaExact, MonotoneInSeparation) {
    for (const Graph& g :
         {cycle(5), path(4), build_bundle({ProductKind::Direct, 3, 5, 1})}) {
        int prev = 0;
        for (int d = 1; d <= 3; ++d) {
            int lambda = lambda_exact(g, d).lambda;
            ASSERT_GE(lambda, prev);
            prev = lambda;
        }
    }
}

TEST(LambdaExact, RespectsDegreeLowerBound) {
    std::vector<Graph> graphs;
    for (int n = 3; n <= 7; ++n) graphs.push_back(cycle(n));
    graphs.push_back(build_bundle({ProductKind::Cartesian, 3, 5, 2}));
    graphs.push_back(build_bundle({ProductKind::Direct, 3, 5, 3}));
    for (const auto& g : graphs)
        for (int d = 1; d <= 2; ++d) {
            auto bound = degree_lower_bound(g, d);
            ASSERT_TRUE(bound.has_value());  // regular graphs always qualify
            ASSERT_GE(lambda_exact(g, d).lambda, *bound);
        }
}

TEST(LambdaExact, Deterministic) {
    Graph g = build_bundle({ProductKind::Direct, 3, 5, 2});  // not admissible
    auto r1 = lambda_exact(g, 1);
    auto r2 = lambda_exact(g, 1);
    EXPECT_EQ(r1.lambda, r2.lambda);
    EXPECT_EQ(r1.witness.labels, r2.witness.labels);
    EXPECT_EQ(r1.nodes_explored, r2.nodes_explored);
}

TEST(LambdaExact, ReflectionBreakSameAnswer) {
    SearchOptions opts;
    opts.reflect_symmetry_break = true;
    for (const Graph& g : {cycle(5), cycle(7),
                           build_bundle({ProductKind::Direct, 3, 5, 1})}) {
        auto plain = lambda_exact(g, 2);
        auto reflected = lambda_exact(g, 2, opts);
        ASSERT_EQ(plain.lambda, reflected.lambda);
        ASSERT_TRUE(verify_labeling(g, reflected.witness).valid);
    }
}

TEST(LambdaExact, TimeoutReportsBracket) {
    Graph g = build_bundle({ProductKind::Direct, 9, 7, 3});
    SearchOptions opts;
    opts.node_budget = 10;
    auto result = lambda_exact(g, 2, opts);
    EXPECT_TRUE(result.timed_out);
    EXPECT_EQ(result.lower_bound, 6);  // degree bound, nothing refuted yet
    EXPECT_FALSE(result.upper_bound.has_value());
    EXPECT_EQ(result.lambda, -1);
}

// independent solves on shared immutable graphs from worker threads
// agree with the serial answers
TEST(LambdaExact, ConcurrentSolvesMatchSerial) {
    std::vector<Graph> graphs;
    for (int ell : {0, 1, 2, 3, 4})
        graphs.push_back(build_bundle({ProductKind::Direct, 3, 5, ell}));
    std::vector<int> serial;
    for (const auto& g : graphs) serial.push_back(lambda_exact(g, 1).lambda);

    std::vector<int> parallel(graphs.size(), -1);
    std::vector<std::thread> workers;
    for (size_t i = 0; i < graphs.size(); ++i)
        workers.emplace_back(
            [&, i] { parallel[i] = lambda_exact(graphs[i], 1).lambda; });
    for (auto& w : workers) w.join();
    EXPECT_EQ(parallel, serial);
}

TEST(LambdaExact, ProgressCallbackFires) {
    Graph g = build_bundle({ProductKind::Direct, 3, 5, 2});
    SearchOptions opts;
    long long calls = 0;
    opts.on_progress = [&](long long) { ++calls; };
    lambda_exact(g, 2, opts);
    // small instance: no guarantee of a full interval; just make sure
    // the callback plumbing compiles and never crashes
    SUCCEED();
}
