#pragma once

// Deterministic constructors for the named graph families: complete graphs,
// paths, cycles, stars, the triangle chain realizing LO-degree d, and the two
// 25-vertex five-clique graphs whose gridlock behavior differs despite
// identical community structure.

#include <gridlock/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridlock {

enum class FamilyName {
    Complete,
    Path,
    Cycle,
    Star,
    TriangleChain,
    CliqueCycle,
    CliqueMatching,
};

struct FamilySpec {
    FamilyName name;
    std::optional<long> parameter;
};

// Accepted names: complete, path, cycle, star, triangle_chain, clique_cycle,
// clique_matching.
FamilySpec parse_family_spec(const std::string& name, std::optional<long> parameter);
std::string family_name_string(FamilyName name);

Graph build_family(const FamilySpec& spec);

// Five 5-cliques arranged in a cycle: each clique has one exterior vertex and
// two interior pairs; a pair's two vertices share all neighbors, and each
// pair is joined by a complete 4-edge block to one pair in each of the two
// cliques adjacent in one direction around the cycle.
Graph clique_cycle();

// Same clique skeleton, but every interior vertex has exactly one edge to
// each of the four other cliques (index-aligned matchings between cliques).
Graph clique_matching();

// The five cliques of either 25-vertex graph, as vertex blocks {5i..5i+4}.
std::vector<std::vector<VertexId>> five_clique_blocks();

// Counts locally-optimal k-colorings by enumerating only the k^c assignments
// of one color per clique; valid whenever every clique is monochromatic in
// every locally-optimal coloring (checked against full brute force at k = 2
// by the acceptance suite).
std::int64_t reduced_clique_lo_count(const Graph& g, const std::vector<std::vector<VertexId>>& cliques,
                                     int k);

} // namespace gridlock
