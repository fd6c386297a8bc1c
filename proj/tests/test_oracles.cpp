#include <gridlock/oracles.hpp>

#include <gridlock/families.hpp>

#include "support/graph_enum.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

using namespace gridlock;
using testsupport::disjoint_union;
using testsupport::random_connected_graph;
using testsupport::random_graph;

namespace {

Coloring coloring_of(std::initializer_list<std::pair<VertexId, int>> entries) {
    Coloring c;
    for (const auto& [v, color] : entries) c.assignment[v] = color;
    return c;
}

Graph cycle(int n) { return build_family({FamilyName::Cycle, n}); }
Graph complete(int n) { return build_family({FamilyName::Complete, n}); }

} // namespace

TEST_CASE("local optimality of explicit colorings") {
    Graph k3 = complete(3);
    CHECK(is_locally_optimal(k3, coloring_of({{0, 1}, {1, 1}, {2, 1}})));
    CHECK_FALSE(is_locally_optimal(k3, coloring_of({{0, 0}, {1, 0}, {2, 1}})));

    Graph p3 = build_family({FamilyName::Path, 3});
    CHECK_FALSE(is_locally_optimal(p3, coloring_of({{0, 0}, {1, 1}, {2, 0}})));
    CHECK(is_locally_optimal(p3, coloring_of({{0, 2}, {1, 2}, {2, 2}})));

    Graph lonely = make_graph({0}, {});
    CHECK_FALSE(is_locally_optimal(lonely, coloring_of({{0, 0}})));

    CHECK_THROWS_AS(is_locally_optimal(k3, coloring_of({{0, 0}, {1, 0}})), Error);

    SUBCASE("same-color constraints must hold") {
        Graph g = make_graph({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{1, 2}});
        CHECK(is_locally_optimal(g, coloring_of({{0, 4}, {1, 4}, {2, 4}, {3, 4}})));
        CHECK_FALSE(is_locally_optimal(g, coloring_of({{0, 4}, {1, 4}, {2, 5}, {3, 5}})));
    }
}

TEST_CASE("brute-force counts") {
    CHECK(brute_force_lo_count(complete(4), 3) == 3);
    CHECK(brute_force_lo_count(cycle(5), 2) == 2);

    Graph triangles = disjoint_union(complete(3), complete(3));
    CHECK(brute_force_lo_count(triangles, 2) == 4);

    CHECK(brute_force_lo_count(complete(3), 0) == 0);
    CHECK(brute_force_lo_count(complete(3), 1) == 1);
    CHECK(brute_force_lo_count(Graph{}, 5) == 1);
    CHECK(brute_force_lo_count(make_graph({0, 1, 2}, {{0, 1}}), 3) == 0); // isolated vertex

    SUBCASE("budget is enforced and named") {
        OracleOptions tight;
        tight.coloring_budget = 10;
        CHECK_THROWS_WITH_AS(static_cast<void>(brute_force_lo_count(complete(4), 3, tight)),
                             doctest::Contains("budget"), Error);
    }

    SUBCASE("worker split does not change the count") {
        Graph g = random_connected_graph(7, 45, 11);
        OracleOptions serial;
        OracleOptions parallel;
        parallel.workers = 3;
        for (int k = 2; k <= 3; ++k)
            CHECK(brute_force_lo_count(g, k, serial) == brute_force_lo_count(g, k, parallel));
    }
}

TEST_CASE("locally-optimal partition enumeration") {
    SUBCASE("complete graph forces consensus") {
        auto partitions = enumerate_lo_partitions(complete(3));
        REQUIRE(partitions.size() == 1);
        CHECK(partitions[0].blocks == std::vector<std::vector<VertexId>>{{0, 1, 2}});
    }

    SUBCASE("triangle chain admits the two-triangle split") {
        Graph chain = build_family({FamilyName::TriangleChain, 2});
        auto partitions = enumerate_lo_partitions(chain);
        REQUIRE(partitions.size() == 2);
        CHECK(partitions[0].blocks == std::vector<std::vector<VertexId>>{{0, 1, 2, 3, 4, 5}});
        CHECK(partitions[1].blocks == std::vector<std::vector<VertexId>>{{0, 1, 2}, {3, 4, 5}});
    }

    SUBCASE("single edge") {
        auto partitions = enumerate_lo_partitions(build_family({FamilyName::Path, 2}));
        REQUIRE(partitions.size() == 1);
        CHECK(partitions[0].block_count() == 1);
    }

    SUBCASE("isolated vertices admit no partition") {
        CHECK(enumerate_lo_partitions(make_graph({0, 1, 2}, {{0, 1}})).empty());
    }

    SUBCASE("budget") {
        OracleOptions tight;
        tight.partition_budget = 3;
        CHECK_THROWS_AS(enumerate_lo_partitions(complete(4), tight), Error);
    }

    SUBCASE("blocks have size >= 3 on connected graphs with >= 3 vertices") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Graph g = random_connected_graph(6, 45, seed);
            for (const auto& partition : enumerate_lo_partitions(g)) {
                for (const auto& block : partition.blocks) CHECK(block.size() >= 3);
            }
        }
    }
}

TEST_CASE("partition-based polynomial") {
    CHECK(lo_polynomial_via_partitions(complete(5)) == IntPolynomial::monomial(1));
    CHECK(lo_polynomial_via_partitions(build_family({FamilyName::TriangleChain, 2})) ==
          IntPolynomial::monomial(2));
    CHECK(lo_polynomial_via_partitions(cycle(4)) == IntPolynomial::monomial(1));

    SUBCASE("evaluating the partition polynomial reproduces brute-force counts") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            Graph g = random_graph(6, 40, seed);
            IntPolynomial p = lo_polynomial_via_partitions(g);
            for (int k = 0; k <= 4; ++k) CHECK(p.evaluate(k) == brute_force_lo_count(g, k));
        }
    }

    SUBCASE("degree and leading coefficient match the max-block statistics") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            Graph g = random_connected_graph(7, 40, seed);
            IntPolynomial p = lo_polynomial_via_partitions(g);
            auto partitions = enumerate_lo_partitions(g);
            std::size_t max_blocks = 0;
            for (const auto& partition : partitions)
                max_blocks = std::max(max_blocks, partition.block_count());
            std::size_t count_max = 0;
            for (const auto& partition : partitions)
                if (partition.block_count() == max_blocks) ++count_max;
            REQUIRE(!partitions.empty());
            CHECK(p.degree() == static_cast<int>(max_blocks));
            CHECK(p.leading_coefficient() == count_max);
        }
    }
}

TEST_CASE("interpolation oracle") {
    SUBCASE("nine-cycle") {
        Graph c9 = cycle(9);
        // sample values are derived by enumeration before being frozen
        std::vector<std::int64_t> samples;
        for (int k = 0; k <= 3; ++k) samples.push_back(brute_force_lo_count(c9, k));
        CHECK(samples == std::vector<std::int64_t>{0, 1, 2, 3});
        CHECK(lo_polynomial_via_interpolation(c9) == IntPolynomial::monomial(1));
    }

    CHECK(lo_polynomial_via_interpolation(complete(6)) == IntPolynomial::monomial(1));

    SUBCASE("triangle chain of depth three") {
        Graph chain = build_family({FamilyName::TriangleChain, 3});
        std::vector<std::int64_t> samples;
        for (int k = 0; k <= 3; ++k) samples.push_back(brute_force_lo_count(chain, k));
        CHECK(samples == std::vector<std::int64_t>{0, 1, 8, 27});
        CHECK(lo_polynomial_via_interpolation(chain) == IntPolynomial::monomial(3));
    }

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(lo_polynomial_via_interpolation(build_family({FamilyName::Path, 2})), Error);
        Graph disconnected = disjoint_union(complete(3), complete(3));
        CHECK_THROWS_AS(lo_polynomial_via_interpolation(disconnected), Error);
    }

    SUBCASE("agrees with the partition oracle on random connected graphs") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Graph g = random_connected_graph(6, 45, seed);
            CHECK(lo_polynomial_via_interpolation(g) == lo_polynomial_via_partitions(g));
        }
    }
}

TEST_CASE("empty graph conventions") {
    CHECK(lo_polynomial_via_partitions(Graph{}) == IntPolynomial::constant(1));
    auto partitions = enumerate_lo_partitions(Graph{});
    REQUIRE(partitions.size() == 1);
    CHECK(partitions[0].block_count() == 0);
}
