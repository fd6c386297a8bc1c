#pragma once

// The recursive LO-polynomial algorithm: local expansion identities, term
// normalization with like-term cancellation, base-case evaluation, and the
// worklist that drives everything to forced-dense graphs.

#include <gridlock/graph.hpp>
#include <gridlock/polynomial.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace gridlock {

struct Term {
    Graph graph;
    BigInt coeff; // nonzero by construction
};

struct Expansion {
    std::vector<Term> terms;

    // Every expansion is counting-neutral: its coefficients sum to 1.
    BigInt coefficient_sum() const;
};

// The recurrence statement calls for n - 2b + 1 added leaves, its proof for
// n - 2b + 2; both make the forced neighbors a strict majority and both are
// validated against the brute-force oracle (see the acceptance suite).
enum class LeafRule {
    Minimal,      // l = n - 2b + 1
    ProofVariant, // l = n - 2b + 2
};

struct EngineOptions {
    LeafRule leaf_rule = LeafRule::Minimal;
    // When set, subcomputations are cached by the canonical byte form of the
    // normalized labeled graph (not by isomorphism class).
    bool memoize = false;
    // Upper bound on terms generated per polynomial computation; exceeding it
    // reports budget exhaustion instead of running unbounded.
    std::uint64_t term_budget = 20'000'000;
    int workers = 1;
};

// Inclusion-exclusion over all ways to subdivide >= 2 of v's edges, with
// coefficient (-1)^j (j-1) for subdivision sets of size j. Requires voting
// degree >= 3.
Expansion expand_any_degree(const Graph& g, VertexId v, IdAllocator& ids);

// Three-part signed expansion for a vertex with n voting neighbors of which
// exactly b (with 2 <= b <= n/2) are already forced to share v's color:
// leaf-augmented head term, minus the inclusion-exclusion over extra
// subdivisions and non-voting-edge families, plus the leafless subdivision
// correction.
Expansion expand_to_majority(const Graph& g, VertexId v, int b, IdAllocator& ids,
                             LeafRule rule = LeafRule::Minimal);

// Rewrites a term's graph to a canonical representative: drops same-color
// constraints implied by the remaining forcings, removes leaves whose vertex
// already has a forced majority without them, and converts constraints whose
// one endpoint is forced equal to a neighbor of the other endpoint into
// subdivisions. Fixed-point application; the coefficient is unchanged.
Term normalize_term(Term term, IdAllocator& ids);

// k^p for a forced-dense graph with p forced classes (1 for the empty graph).
IntPolynomial base_case_value(const Graph& g);

IntPolynomial lo_polynomial(const Graph& g, const EngineOptions& options = {});

// lo minus the k consensus colorings when every vertex has a voting
// neighbor; unchanged otherwise (uniform colorings are then not locally
// optimal, and lo is identically zero anyway).
IntPolynomial sg_polynomial(const Graph& g, const EngineOptions& options = {});

} // namespace gridlock
