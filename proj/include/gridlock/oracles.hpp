#pragma once

// Independent ground-truth computations: exhaustive coloring enumeration,
// locally-optimal set-partition enumeration, and exact interpolation. These
// stay deliberately simple; they are the yardstick the recursive engine is
// measured against.

#include <gridlock/graph.hpp>
#include <gridlock/polynomial.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace gridlock {

struct Coloring {
    std::map<VertexId, int> assignment; // vertex -> color index in [0, k)
};

struct Partition {
    std::vector<std::vector<VertexId>> blocks; // each sorted; ordered by first element

    std::size_t block_count() const { return blocks.size(); }
};

struct OracleOptions {
    std::uint64_t coloring_budget = std::uint64_t{1} << 34; // max colorings per call
    std::uint64_t partition_budget = 4'213'597;             // Bell(12)
    int workers = 1;
};

// True iff (a) every same-color constraint is satisfied, (b) every vertex
// shares its color with a strict plurality of its voting neighbors, and (c)
// no vertex is neighborless. Throws if the coloring misses a vertex.
bool is_locally_optimal(const Graph& g, const Coloring& coloring);

// Number of colorings V -> [k] that are locally optimal, by enumeration.
std::int64_t brute_force_lo_count(const Graph& g, int k, const OracleOptions& options = {});

// All set partitions of V in which every vertex has strictly more voting
// neighbors in its own block than in any other single block, and no
// same-color constraint crosses blocks. Restricted-growth-string order.
std::vector<Partition> enumerate_lo_partitions(const Graph& g, const OracleOptions& options = {});

// Sum of falling factorials k^(|pi|) over locally-optimal partitions.
IntPolynomial lo_polynomial_via_partitions(const Graph& g, const OracleOptions& options = {});

// Unique polynomial of degree <= n/3 through the brute-force counts at
// k = 0..n/3, computed with exact rational arithmetic. Requires a connected
// graph on at least 3 vertices; a non-integral result is reported as an
// error since it signals a violated degree bound.
IntPolynomial lo_polynomial_via_interpolation(const Graph& g, const OracleOptions& options = {});

} // namespace gridlock
