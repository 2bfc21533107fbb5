#include <gtest/gtest.h>

#include <random>

#include "cyclex/constructions.hpp"
#include "cyclex/error.hpp"
#include "cyclex/invariants.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

const Graph k2x4_k3 = join(disjoint_copies(4, complete_graph(2)), complete_graph(3));

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::InvalidParameter;
}

TEST(MinDegree, Examples) {
    EXPECT_EQ(min_degree(complete_graph(1)), 0);
    EXPECT_EQ(min_degree(k2x4_k3), 4);
    EXPECT_EQ(min_degree(petersen_graph()), 3);
}

TEST(Connectivity, Examples) {
    EXPECT_EQ(connectivity(complete_graph(5)), 4);
    EXPECT_EQ(connectivity(cycle_graph(6)), 2);
    EXPECT_EQ(connectivity(k2x4_k3), 3);
    EXPECT_EQ(connectivity(empty_graph(3)), 0);
    EXPECT_EQ(connectivity(petersen_graph()), 3);
}

TEST(IndependenceNumber, Examples) {
    EXPECT_EQ(independence_number(cycle_graph(5)), 2);
    EXPECT_EQ(independence_number(complete_bipartite(3, 3)), 3);
    EXPECT_EQ(independence_number(k2x4_k3), 4);
    const IndependentSet mis = maximum_independent_set(petersen_graph());
    EXPECT_EQ(mis.size, 4);
    EXPECT_TRUE(is_independent(petersen_graph(), mis.witness));
    EXPECT_EQ(mis.witness.size(), 4);
}

TEST(MinimumCutsets, Examples) {
    const auto c4 = minimum_cutsets(cycle_graph(4));
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_EQ(c4[0], (VertexSet{0, 2}));
    EXPECT_EQ(c4[1], (VertexSet{1, 3}));
    const auto cuts = minimum_cutsets(k2x4_k3);
    ASSERT_EQ(cuts.size(), 1u);
    EXPECT_EQ(cuts[0], (VertexSet{8, 9, 10}));
    EXPECT_EQ(code_of([] { minimum_cutsets(complete_graph(4)); }), ErrorCode::CompleteGraph);
    EXPECT_EQ(code_of([] { minimum_cutsets(empty_graph(3)); }), ErrorCode::Disconnected);
}

TEST(NeighborhoodAndHat, Examples) {
    const Neighborhood c6 = neighborhood_and_hat(cycle_graph(6), {2, 3});
    EXPECT_EQ(c6.boundary, (VertexSet{1, 4}));
    EXPECT_EQ(c6.hat, (VertexSet{0, 5}));
    const Neighborhood all = neighborhood_and_hat(petersen_graph(), petersen_graph().vertices());
    EXPECT_TRUE(all.boundary.empty());
    EXPECT_TRUE(all.hat.empty());
    const Neighborhood pair = neighborhood_and_hat(k2x4_k3, {0, 1});
    EXPECT_EQ(pair.boundary, (VertexSet{8, 9, 10}));
    EXPECT_EQ(pair.hat, (VertexSet{2, 3, 4, 5, 6, 7}));
}

TEST(Invariants, RecordAndErrors) {
    const InvariantRecord r = compute_invariants(k2x4_k3);
    EXPECT_EQ(r, (InvariantRecord{11, 4, 3, 4, 31}));
    EXPECT_EQ(code_of([] { compute_invariants(Graph(0)); }), ErrorCode::EmptyGraph);
}

// Property: the flow-based and branch-and-bound invariants agree with the
// subset-scan oracles, and the classical chain κ <= δ holds.
TEST(Invariants, MatchBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = testing::random_graph(n, p, rng);
        const int kappa = connectivity(g);
        EXPECT_EQ(kappa, testing::brute_connectivity(g));
        EXPECT_EQ(min_degree(g), testing::brute_min_degree(g));
        EXPECT_EQ(independence_number(g), testing::brute_alpha(g));
        EXPECT_LE(kappa, min_degree(g));
        if (is_connected(g) && !is_complete(g)) {
            std::vector<std::uint64_t> bits;
            for (VertexSet s : minimum_cutsets(g)) bits.push_back(s.bits());
            std::sort(bits.begin(), bits.end());
            EXPECT_EQ(bits, testing::brute_min_cutsets(g));
        }
    }
}

TEST(Invariants, ConnectivityOfDisjointUnionIsZero) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph a = testing::random_hamiltonian_graph(4, 0.5, rng);
        const Graph b = testing::random_hamiltonian_graph(5, 0.5, rng);
        std::vector<Edge> edges = a.edges();
        for (auto [u, v] : b.edges()) edges.emplace_back(u + 4, v + 4);
        EXPECT_EQ(connectivity(Graph(9, edges)), 0);
    }
}

}  // namespace
}  // namespace cyclex
