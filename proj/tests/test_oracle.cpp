#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cf1p/generators.hpp"
#include "cf1p/io.hpp"
#include "cf1p/oracle.hpp"
#include "cf1p/planarity.hpp"
#include "oracles.hpp"

using namespace cf1p;

namespace {

Graph k33() {
    return build_graph({"a1", "a2", "a3", "b1", "b2", "b3"},
                       {{"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b2"}, {"a2", "b3"},
                        {"a3", "b1"}, {"a3", "b2"}, {"a3", "b3"}});
}

Graph k33_minus() {
    auto g = k33();
    std::vector<TokenEdge> es;
    for (const auto& e : g.edges())
        if (g.edge_name(e) != "a1-b1") es.emplace_back(g.name(e.u), g.name(e.v));
    return build_graph(g.names(), es);
}

}  // namespace

TEST(Planarity, Kuratowski) {
    EXPECT_TRUE(is_planar(oracle::complete_graph(4)).planar);
    EXPECT_FALSE(is_planar(oracle::complete_graph(5)).planar);
    EXPECT_FALSE(is_planar(k33()).planar);
}

TEST(Planarity, EmbeddingsPassFaceCount) {
    std::mt19937_64 rng(17);
    int planar = 0;
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, 8, 0.35);
        auto r = is_planar(g);
        if (!r.planar) continue;
        ++planar;
        EXPECT_TRUE(euler_check(plane_embedding(g)));
    }
    EXPECT_GT(planar, 50);
}

TEST(Oracle, PlanarGraphsNeedNoCrossing) {
    for (const auto& g : {oracle::complete_graph(4), build_graph({"a", "b", "c"}, {{"a", "b"}}), k33_minus()}) {
        auto r = find_one_planar_drawing(g);
        ASSERT_EQ(r.status, OracleStatus::witness);
        EXPECT_EQ(r.witness->crossing_count(), 0u);
    }
}

TEST(Oracle, MinimumCrossings) {
    auto k5 = min_crossings_one_planar(oracle::complete_graph(5), 5);
    ASSERT_EQ(k5.status, OracleStatus::witness);
    EXPECT_EQ(k5.crossings, 1u);
    EXPECT_TRUE(validate_drawing(*k5.witness).ok());

    auto k6 = min_crossings_one_planar(oracle::complete_graph(6), 7);
    ASSERT_EQ(k6.status, OracleStatus::witness);
    EXPECT_EQ(k6.crossings, 3u);

    SearchBudget two;
    two.max_crossings = 2;
    EXPECT_EQ(find_one_planar_drawing(oracle::complete_graph(6), two).status, OracleStatus::refuted);

    auto k33r = min_crossings_one_planar(k33(), 4);
    ASSERT_EQ(k33r.status, OracleStatus::witness);
    EXPECT_EQ(k33r.crossings, 1u);
    EXPECT_EQ(min_crossings_one_planar(oracle::complete_graph(4), 3).crossings, 0u);
}

TEST(Oracle, DensityRefutation) {
    auto k7 = oracle::complete_graph(7);
    auto r = find_one_planar_drawing(k7);
    EXPECT_EQ(r.status, OracleStatus::refuted);
    EXPECT_EQ(r.nodes, 0u);
    EXPECT_GT(k7.size(), 4 * k7.order() - 8);
}

TEST(Oracle, BudgetExceeded) {
    SearchBudget tiny;
    tiny.node_limit = 5;
    tiny.density_prune = false;
    EXPECT_EQ(find_one_planar_drawing(oracle::complete_graph(7), tiny).status, OracleStatus::budget_exceeded);
}

TEST(Oracle, WitnessRespectsCap) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        auto g = oracle::random_graph(rng, 7, 0.6);
        SearchBudget b;
        b.max_crossings = 3;
        auto r = find_one_planar_drawing(g, b);
        if (r.status != OracleStatus::witness) continue;
        EXPECT_LE(r.witness->crossing_count(), 3u);
        EXPECT_TRUE(validate_drawing(*r.witness).ok());
        EXPECT_TRUE(r.witness->base() == g);
    }
}

TEST(Oracle, RelabelingInvariance) {
    std::mt19937_64 rng(29);
    for (std::size_t n : {5u, 6u}) {
        auto g = oracle::complete_graph(n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < 50; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto h = oracle::relabel(g, perm);
            auto r = min_crossings_one_planar(h, 5);
            ASSERT_EQ(r.status, OracleStatus::witness);
            EXPECT_EQ(r.crossings, n == 5 ? 1u : 3u);
        }
    }
    // K7: refuted under every relabeling.
    auto k7 = oracle::complete_graph(7);
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 50; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(find_one_planar_drawing(oracle::relabel(k7, perm)).status, OracleStatus::refuted);
    }
}

TEST(Oracle, RandomGraphsAgreeUnderRelabeling) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        auto g = oracle::random_graph(rng, 7, 0.7);
        std::vector<std::size_t> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto a = find_one_planar_drawing(g).status;
        auto b = find_one_planar_drawing(oracle::relabel(g, perm)).status;
        EXPECT_EQ(a, b) << "sample " << i;
    }
}

TEST(Oracle, SameWitnessForAnyThreadCount) {
    std::mt19937_64 rng(37);
    std::vector<Graph> graphs{oracle::complete_graph(5), oracle::complete_graph(6)};
    for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_graph(rng, 8, 0.55));
    for (const auto& g : graphs) {
        std::string first;
        std::uint64_t nodes = 0;
        for (unsigned threads : {1u, 4u, 8u}) {
            SearchBudget b;
            b.threads = threads;
            auto r = find_one_planar_drawing(g, b);
            std::string text = std::string(to_string(r.status)) + "\n";
            if (r.witness) text += serialize_drawing("w", *r.witness);
            if (threads == 1) {
                first = text;
                nodes = r.nodes;
            } else {
                EXPECT_EQ(text, first);
                EXPECT_EQ(r.nodes, nodes);
            }
        }
    }
}

TEST(Oracle, EulerLowerBound) {
    EXPECT_EQ(euler_crossing_lower_bound(oracle::complete_graph(6)), 3u);
    EXPECT_EQ(euler_crossing_lower_bound(gen_k2222().graph), 6u);
    EXPECT_EQ(euler_crossing_lower_bound(oracle::complete_graph(4)), 0u);
}
