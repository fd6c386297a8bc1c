#pragma once

// Graph data model and the structural edits the expansion identities need:
// edge subdivision, leaf augmentation, non-voting (same-color) edges, and
// the forcing analysis that drives the base case.
//
// Graphs are immutable values: every edit returns a new graph and leaves the
// input untouched, so terms can be shared freely between workers.

#include <gridlock/error.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gridlock {

using VertexId = std::int64_t;

enum class VertexRole : std::uint8_t {
    Original,    // present in the input graph
    Subdivision, // created by subdividing a voting edge; voting degree 2 at creation
    Leaf,        // created by leaf augmentation; voting degree 1 at creation
};

using VertexPair = std::pair<VertexId, VertexId>;

inline VertexPair ordered_pair(VertexId a, VertexId b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Hands out ids for vertices created by structural edits. Ids are interned by
// the content of the edit (which edge was subdivided, which leaf slot on which
// vertex), so the same edit performed in two different expansion branches
// produces the same id. That is what lets normalized like terms compare
// byte-identically and cancel.
class IdAllocator {
public:
    explicit IdAllocator(VertexId first_free) : next_(first_free) {}

    IdAllocator(const IdAllocator&) = delete;
    IdAllocator& operator=(const IdAllocator&) = delete;

    VertexId subdivision_id(VertexId u, VertexId w);
    VertexId leaf_id(VertexId v, int ordinal);

private:
    VertexId intern(int kind, VertexId a, VertexId b);

    VertexId next_;
    std::map<std::tuple<int, VertexId, VertexId>, VertexId> interned_;
    std::mutex mutex_;
};

// Vertex partition induced by the forcing rules: in every locally-optimal
// coloring, all vertices of one class carry the same color.
struct ForcedClasses {
    std::vector<std::vector<VertexId>> classes; // each sorted; ordered by first element

    std::size_t count() const { return classes.size(); }
    int class_index(VertexId v) const;
    bool same_class(VertexId a, VertexId b) const { return class_index(a) == class_index(b); }

    // lookup table parallel to the graph's sorted vertex list
    std::vector<VertexId> vertex_ids;
    std::vector<int> class_of;
};

class Graph;

namespace detail {
// Assembles a graph from already-sorted, already-validated parts. Used by the
// engine's expansion internals, which maintain the invariants themselves.
Graph assemble_graph(std::vector<std::pair<VertexId, VertexRole>> vertices,
                     std::vector<VertexPair> voting_edges, std::vector<VertexPair> non_voting_edges,
                     std::vector<VertexPair> forced_pairs);
} // namespace detail

class Graph {
public:
    Graph() = default;

    bool has_vertex(VertexId v) const;
    VertexRole role(VertexId v) const;
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t voting_edge_count() const { return voting_edges_.size(); }

    const std::vector<std::pair<VertexId, VertexRole>>& vertices() const { return vertices_; }
    const std::vector<VertexPair>& voting_edges() const { return voting_edges_; }
    const std::vector<VertexPair>& non_voting_edges() const { return non_voting_edges_; }

    // Same-color constraints requested between endpoints that are already
    // voting-adjacent; kept apart from non_voting_edges so the two edge sets
    // stay disjoint.
    const std::vector<VertexPair>& forced_pairs() const { return forced_pairs_; }

    std::vector<VertexId> vertex_ids() const;
    VertexId max_vertex_id() const; // -1 when empty

    bool has_voting_edge(VertexId a, VertexId b) const;
    bool has_non_voting_edge(VertexId a, VertexId b) const;
    bool has_forced_pair(VertexId a, VertexId b) const;

    // Non-voting edges do not count toward the degree.
    int voting_degree(VertexId v) const;
    std::vector<VertexId> voting_neighbors(VertexId v) const; // sorted
    bool has_isolated_vertex() const;
    int min_voting_degree() const; // large when the graph is empty

    // --- structural edits (pure; the receiver is unchanged) ---

    // Replace voting edge uw by u-x-w with a fresh subdivision vertex x.
    Graph subdivide_edge(VertexId u, VertexId w, IdAllocator& ids) const;

    // Attach a fresh leaf to v by a voting edge.
    Graph add_leaf(VertexId v, IdAllocator& ids) const;

    // Record a same-color constraint. If the pair is already a voting edge it
    // is stored as a forced pair instead of a non-voting edge; repeat requests
    // are no-ops.
    Graph add_non_voting_edge(VertexId t1, VertexId t2) const;

    Graph remove_vertex(VertexId v) const;
    Graph remove_non_voting_edge(VertexId a, VertexId b) const;
    Graph remove_forced_pair(VertexId a, VertexId b) const;

    // --- forcing analysis ---

    // Union-find over (a) voting edges incident to a vertex of voting degree
    // 2, (b) voting edges incident to a vertex of voting degree 1, (c)
    // non-voting edges, (d) forced pairs.
    ForcedClasses forced_classes() const;

    // True iff every vertex has strictly more voting neighbors inside its
    // forced class than outside it. Such graphs have LO-polynomial k^p.
    bool is_forced_dense() const;
    bool vertex_has_forced_majority(const ForcedClasses& classes, VertexId v) const;

    // Components under voting edges only.
    std::vector<std::vector<VertexId>> connected_components() const;

    // Deterministic byte form used for like-term merging and memoization.
    std::string canonical_key() const;

    bool operator==(const Graph& rhs) const = default;

private:
    friend Graph make_graph(const std::vector<VertexId>&, const std::vector<VertexPair>&,
                            const std::vector<VertexPair>&);
    friend Graph detail::assemble_graph(std::vector<std::pair<VertexId, VertexRole>>,
                                        std::vector<VertexPair>, std::vector<VertexPair>,
                                        std::vector<VertexPair>);

    std::size_t vertex_index(VertexId v) const; // throws UnknownVertex
    void insert_vertex(VertexId v, VertexRole role);
    void insert_voting_edge(VertexId a, VertexId b);

    // all sorted ascending
    std::vector<std::pair<VertexId, VertexRole>> vertices_;
    std::vector<VertexPair> voting_edges_;
    std::vector<VertexPair> non_voting_edges_;
    std::vector<VertexPair> forced_pairs_;
};

// Build and validate a graph with Original-role vertices.
Graph make_graph(const std::vector<VertexId>& vertices, const std::vector<VertexPair>& voting_edges,
                 const std::vector<VertexPair>& non_voting_edges = {});

} // namespace gridlock
