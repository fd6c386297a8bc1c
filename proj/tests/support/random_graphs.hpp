#pragma once

// Seeded graph generators for the test suites. All draws go through an
// explicit mt19937_64 with modulo reduction so the sequences are identical
// across platforms.

#include <gridlock/graph.hpp>

#include <cstdint>

namespace gridlock::testsupport {

// Random spanning tree plus independent extra edges (percent in [0,100]).
// Connected by construction.
Graph random_connected_graph(int n, int percent, std::uint64_t seed);

// Random graph of maximum voting degree 3 with minimum degree >= 1 and at
// least one trivalent vertex.
Graph random_max_degree3_graph(int n, std::uint64_t seed);

// Plain Erdos-Renyi draw; may be disconnected.
Graph random_graph(int n, int percent, std::uint64_t seed);

// Disjoint union with b's vertex ids shifted above a's.
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace gridlock::testsupport
