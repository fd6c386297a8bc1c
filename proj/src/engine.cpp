#include <gridlock/engine.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>

namespace gridlock {

namespace {

struct Budget {
    std::uint64_t limit;
    std::atomic<std::uint64_t> used{0};

    void charge() {
        if (used.fetch_add(1, std::memory_order_relaxed) + 1 > limit)
            raise(ErrorKind::BudgetExceeded,
                  "engine term budget of " + std::to_string(limit) + " exceeded");
    }
};

template <typename F>
void for_each_combination(int n, int j, F&& f) {
    std::vector<int> comb(static_cast<std::size_t>(j));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        f(comb);
        int i = j - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - j + i) --i;
        if (i < 0) return;
        ++comb[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
    }
}

// Visits all partitions of {0..n-1} as restricted-growth strings.
template <typename Visitor>
void for_each_set_partition(std::size_t n, Visitor&& visit) {
    if (n == 0) return;
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);
    while (true) {
        visit(rgs, prefix_max[n - 1] + 1);
        std::size_t i = n;
        bool advanced = false;
        while (i-- > 1) {
            if (rgs[i] <= prefix_max[i - 1]) {
                ++rgs[i];
                prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[j - 1];
                }
                advanced = true;
                break;
            }
            if (i == 1) return;
        }
        if (!advanced) return;
    }
}

// ---------------------------------------------------------------------------
// Scratch representation: flat slot-indexed arrays the expansion loop can
// copy and mutate without rebuilding sorted Graph values. Slots of removed
// vertices are tombstoned; all ordering decisions are made on vertex ids so
// the results are identical to the Graph-based operations.
// ---------------------------------------------------------------------------

struct ScratchGraph {
    std::vector<VertexId> id;       // per slot
    std::vector<VertexRole> role;   // per slot
    std::vector<char> alive;        // per slot
    std::vector<std::pair<int, int>> edges; // voting edges as slot pairs
    std::vector<std::pair<int, int>> ties;  // non-voting edges, sorted by id pair
    std::vector<std::pair<int, int>> locks; // forced pairs, sorted by id pair

    std::size_t slot_count() const { return id.size(); }

    VertexPair id_pair(const std::pair<int, int>& slots) const {
        return ordered_pair(id[static_cast<std::size_t>(slots.first)],
                            id[static_cast<std::size_t>(slots.second)]);
    }

    int add_vertex(VertexId vertex_id, VertexRole vertex_role) {
        id.push_back(vertex_id);
        role.push_back(vertex_role);
        alive.push_back(1);
        return static_cast<int>(id.size()) - 1;
    }

    void insert_constraint(std::vector<std::pair<int, int>>& list, int a, int b) {
        VertexPair key = id_pair({a, b});
        auto position = std::lower_bound(list.begin(), list.end(), key,
                                         [&](const std::pair<int, int>& entry, const VertexPair& k) {
                                             return id_pair(entry) < k;
                                         });
        if (position != list.end() && id_pair(*position) == key) return;
        list.insert(position, {a, b});
    }

    bool has_voting_edge_slots(int a, int b) const {
        for (const auto& [x, y] : edges) {
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
    }

    // Same-color constraint; lands in locks when the pair is voting-adjacent.
    void add_tie(int a, int b) {
        if (has_voting_edge_slots(a, b)) insert_constraint(locks, a, b);
        else insert_constraint(ties, a, b);
    }

    // Replace voting edge (a, b) by a fresh subdivision vertex.
    int subdivide(int a, int b, IdAllocator& ids) {
        int slot = add_vertex(ids.subdivision_id(id[static_cast<std::size_t>(a)],
                                                 id[static_cast<std::size_t>(b)]),
                              VertexRole::Subdivision);
        for (auto& edge : edges) {
            if ((edge.first == a && edge.second == b) || (edge.first == b && edge.second == a)) {
                edge = {a, slot};
                edges.push_back({slot, b});
                return slot;
            }
        }
        raise(ErrorKind::InvalidEdge, "scratch subdivision of a missing edge");
    }

    int add_leaf(int host, IdAllocator& ids) {
        int ordinal = 0;
        for (const auto& [a, b] : edges) {
            if (a == host && role[static_cast<std::size_t>(b)] == VertexRole::Leaf) ++ordinal;
            else if (b == host && role[static_cast<std::size_t>(a)] == VertexRole::Leaf) ++ordinal;
        }
        int slot = add_vertex(ids.leaf_id(id[static_cast<std::size_t>(host)], ordinal), VertexRole::Leaf);
        edges.push_back({host, slot});
        return slot;
    }

    void remove_leaf(int slot) {
        alive[static_cast<std::size_t>(slot)] = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].first == slot || edges[i].second == slot) {
                edges[i] = edges.back();
                edges.pop_back();
                return;
            }
        }
    }

    std::string canonical_key() const;
    Graph to_graph() const;
};

ScratchGraph scratch_from_graph(const Graph& g) {
    ScratchGraph s;
    const auto& vertices = g.vertices();
    s.id.reserve(vertices.size());
    s.role.reserve(vertices.size());
    for (const auto& [vid, vrole] : vertices) {
        s.id.push_back(vid);
        s.role.push_back(vrole);
    }
    s.alive.assign(vertices.size(), 1);
    auto slot_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(s.id.begin(), s.id.end(), v) - s.id.begin());
    };
    for (const auto& [a, b] : g.voting_edges()) s.edges.push_back({slot_of(a), slot_of(b)});
    for (const auto& [a, b] : g.non_voting_edges()) s.ties.push_back({slot_of(a), slot_of(b)});
    for (const auto& [a, b] : g.forced_pairs()) s.locks.push_back({slot_of(a), slot_of(b)});
    return s;
}

// Alive slots in ascending id order.
std::vector<int> sorted_alive_slots(const ScratchGraph& s) {
    std::vector<int> slots;
    slots.reserve(s.slot_count());
    for (std::size_t i = 0; i < s.slot_count(); ++i) {
        if (s.alive[i]) slots.push_back(static_cast<int>(i));
    }
    std::sort(slots.begin(), slots.end(), [&](int a, int b) {
        return s.id[static_cast<std::size_t>(a)] < s.id[static_cast<std::size_t>(b)];
    });
    return slots;
}

std::vector<VertexPair> sorted_id_pairs(const ScratchGraph& s,
                                        const std::vector<std::pair<int, int>>& list) {
    std::vector<VertexPair> pairs;
    pairs.reserve(list.size());
    for (const auto& entry : list) pairs.push_back(s.id_pair(entry));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::string ScratchGraph::canonical_key() const {
    std::string key;
    key.reserve(8 * (slot_count() + edges.size() + ties.size() + locks.size()) + 16);
    char buffer[24];
    auto append_int = [&](VertexId value) {
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
        key.append(buffer, end);
    };
    auto append_pairs = [&](const std::vector<VertexPair>& pairs) {
        for (const auto& [a, b] : pairs) {
            append_int(a);
            key.push_back('-');
            append_int(b);
            key.push_back(',');
        }
    };
    key.push_back('V');
    for (int slot : sorted_alive_slots(*this)) {
        append_int(id[static_cast<std::size_t>(slot)]);
        key.push_back(static_cast<char>('a' + static_cast<int>(role[static_cast<std::size_t>(slot)])));
    }
    key.push_back('E');
    append_pairs(sorted_id_pairs(*this, edges));
    key.push_back('N');
    append_pairs(sorted_id_pairs(*this, ties));
    key.push_back('F');
    append_pairs(sorted_id_pairs(*this, locks));
    return key;
}

Graph ScratchGraph::to_graph() const {
    std::vector<std::pair<VertexId, VertexRole>> vertices;
    for (int slot : sorted_alive_slots(*this)) {
        vertices.emplace_back(id[static_cast<std::size_t>(slot)],
                              role[static_cast<std::size_t>(slot)]);
    }
    return detail::assemble_graph(std::move(vertices), sorted_id_pairs(*this, edges),
                                  sorted_id_pairs(*this, ties), sorted_id_pairs(*this, locks));
}

// Union-find over slots.
struct SlotUnion {
    std::vector<int> parent;

    explicit SlotUnion(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> scratch_degrees(const ScratchGraph& s) {
    std::vector<int> degree(s.slot_count(), 0);
    for (const auto& [a, b] : s.edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    return degree;
}

// Forcing classes from leaf and bivalent voting edges only.
SlotUnion constraint_free_union(const ScratchGraph& s, const std::vector<int>& degree) {
    SlotUnion uf(s.slot_count());
    for (const auto& [a, b] : s.edges) {
        if (degree[static_cast<std::size_t>(a)] <= 2 || degree[static_cast<std::size_t>(b)] <= 2)
            uf.unite(a, b);
    }
    return uf;
}

// Full forcing classes: constraint-free forcing plus all same-color ties.
SlotUnion full_union(const ScratchGraph& s, const std::vector<int>& degree) {
    SlotUnion uf = constraint_free_union(s, degree);
    for (const auto& [a, b] : s.ties) uf.unite(a, b);
    for (const auto& [a, b] : s.locks) uf.unite(a, b);
    return uf;
}

// Per-slot degree and same-class neighbor counts, plus density and the
// expansion pick (lowest degree, ties by id, among vertices lacking a strict
// forced majority).
struct ScratchStats {
    std::vector<int> degree;
    std::vector<int> same;
    SlotUnion classes;
    bool dense = true;
    int pick_slot = -1;
    int pick_coclass = 0;
    int class_count = 0;
};

ScratchStats scratch_stats(const ScratchGraph& s) {
    ScratchStats stats{scratch_degrees(s), {}, SlotUnion(0)};
    stats.classes = full_union(s, stats.degree);
    stats.same.assign(s.slot_count(), 0);
    for (const auto& [a, b] : s.edges) {
        if (stats.classes.find(a) == stats.classes.find(b)) {
            ++stats.same[static_cast<std::size_t>(a)];
            ++stats.same[static_cast<std::size_t>(b)];
        }
    }
    VertexId best_id = 0;
    int best_degree = 0;
    std::vector<char> seen_root(s.slot_count(), 0);
    for (std::size_t i = 0; i < s.slot_count(); ++i) {
        if (!s.alive[i]) continue;
        int root = stats.classes.find(static_cast<int>(i));
        if (!seen_root[static_cast<std::size_t>(root)]) {
            seen_root[static_cast<std::size_t>(root)] = 1;
            ++stats.class_count;
        }
        if (2 * stats.same[i] > stats.degree[i]) continue;
        stats.dense = false;
        if (stats.pick_slot < 0 || stats.degree[i] < best_degree ||
            (stats.degree[i] == best_degree && s.id[i] < best_id)) {
            stats.pick_slot = static_cast<int>(i);
            best_degree = stats.degree[i];
            best_id = s.id[i];
            stats.pick_coclass = stats.same[i];
        }
    }
    return stats;
}

// --- normalization rules, shared by the public operation and the engine ---

// Drops every same-color constraint already implied by the forcings kept so
// far; ties first then locks, each in sorted order.
bool scratch_drop_redundant(ScratchGraph& s) {
    if (s.ties.empty() && s.locks.empty()) return false;
    const std::vector<int> degree = scratch_degrees(s);
    SlotUnion uf = constraint_free_union(s, degree);
    bool dropped = false;
    auto sweep = [&](std::vector<std::pair<int, int>>& list) {
        for (std::size_t i = 0; i < list.size();) {
            int a = uf.find(list[i].first);
            int b = uf.find(list[i].second);
            if (a == b) {
                list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
            } else {
                uf.unite(a, b);
                ++i;
            }
        }
    };
    sweep(s.ties);
    sweep(s.locks);
    return dropped;
}

bool constraint_touches_slot(const ScratchGraph& s, int slot) {
    for (const auto& [a, b] : s.ties) {
        if (a == slot || b == slot) return true;
    }
    for (const auto& [a, b] : s.locks) {
        if (a == slot || b == slot) return true;
    }
    return false;
}

// Removes one added leaf whose host keeps a strict forced majority without
// it; highest id first. Only engine-created leaves are candidates.
bool scratch_drop_leaf(ScratchGraph& s) {
    bool any_leaf = false;
    for (std::size_t i = 0; i < s.slot_count(); ++i) {
        if (s.alive[i] && s.role[i] == VertexRole::Leaf) {
            any_leaf = true;
            break;
        }
    }
    if (!any_leaf) return false;
    const std::vector<int> degree = scratch_degrees(s);
    SlotUnion classes = full_union(s, degree);

    std::vector<int> candidates;
    for (std::size_t i = 0; i < s.slot_count(); ++i) {
        if (s.alive[i] && s.role[i] == VertexRole::Leaf && degree[i] == 1) candidates.push_back(static_cast<int>(i));
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return s.id[static_cast<std::size_t>(a)] > s.id[static_cast<std::size_t>(b)]; });
    for (int leaf : candidates) {
        if (constraint_touches_slot(s, leaf)) continue;
        int host = -1;
        for (const auto& [a, b] : s.edges) {
            if (a == leaf) host = b;
            else if (b == leaf) host = a;
            if (host >= 0) break;
        }
        if (host < 0) continue;
        int same = 0;
        int other = 0;
        const int host_root = classes.find(host);
        for (const auto& [a, b] : s.edges) {
            int neighbor;
            if (a == host) neighbor = b;
            else if (b == host) neighbor = a;
            else continue;
            if (neighbor == leaf) continue;
            if (classes.find(neighbor) == host_root) ++same;
            else ++other;
        }
        if (same > other) {
            s.remove_leaf(leaf);
            return true;
        }
    }
    return false;
}

// Converts one same-color constraint into a subdivision when one endpoint is
// forced equal (without that constraint) to a vertex adjacent to the other
// endpoint. Candidates ranked by descending degree of x, then ascending ids.
bool scratch_promote(ScratchGraph& s, IdAllocator& ids) {
    const std::size_t total = s.ties.size() + s.locks.size();
    if (total == 0) return false;
    const std::vector<int> degree = scratch_degrees(s);
    SlotUnion base = constraint_free_union(s, degree);
    for (std::size_t i = 0; i < s.slot_count(); ++i) base.find(static_cast<int>(i)); // compress

    struct Candidate {
        int neg_degree;
        VertexId x_id;
        VertexId target_id;
        int x;
        int target;
        bool in_locks;
        std::pair<int, int> constraint;
    };
    std::optional<Candidate> best;

    auto constraint_at = [&](std::size_t index) -> std::pair<std::pair<int, int>, bool> {
        if (index < s.ties.size()) return {s.ties[index], false};
        return {s.locks[index - s.ties.size()], true};
    };

    std::vector<int> parent(s.slot_count());
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    for (std::size_t skip = 0; skip < total; ++skip) {
        for (std::size_t i = 0; i < s.slot_count(); ++i)
            parent[i] = base.parent[i];
        for (std::size_t i = 0; i < total; ++i) {
            if (i == skip) continue;
            auto [pair, in_locks] = constraint_at(i);
            int a = find(pair.first);
            int b = find(pair.second);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
        auto [pair, in_locks] = constraint_at(skip);
        const std::array<std::pair<int, int>, 2> orientations{pair,
                                                              std::pair{pair.second, pair.first}};
        for (const auto& [anchor, target] : orientations) {
            const int anchor_root = find(anchor);
            for (const auto& [a, b] : s.edges) {
                int x;
                if (a == target) x = b;
                else if (b == target) x = a;
                else continue;
                if (find(x) != anchor_root) continue;
                Candidate candidate{-degree[static_cast<std::size_t>(x)],
                                    s.id[static_cast<std::size_t>(x)],
                                    s.id[static_cast<std::size_t>(target)],
                                    x,
                                    target,
                                    in_locks,
                                    pair};
                if (!best || std::tie(candidate.neg_degree, candidate.x_id, candidate.target_id) <
                                 std::tie(best->neg_degree, best->x_id, best->target_id))
                    best = candidate;
            }
        }
    }
    if (!best) return false;
    s.subdivide(best->x, best->target, ids);
    auto& list = best->in_locks ? s.locks : s.ties;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == best->constraint) {
            list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    return true;
}

void scratch_normalize(ScratchGraph& s, IdAllocator& ids) {
    for (;;) {
        if (scratch_drop_redundant(s)) continue;
        if (scratch_drop_leaf(s)) continue;
        if (scratch_promote(s, ids)) continue;
        break;
    }
}

// --- expansions over the scratch representation ---

using ScratchSink = std::function<void(ScratchGraph&&, BigInt&&)>;

std::vector<int> voting_neighbor_slots(const ScratchGraph& s, int v) {
    std::vector<int> result;
    for (const auto& [a, b] : s.edges) {
        if (a == v) result.push_back(b);
        else if (b == v) result.push_back(a);
    }
    std::sort(result.begin(), result.end(), [&](int x, int y) {
        return s.id[static_cast<std::size_t>(x)] < s.id[static_cast<std::size_t>(y)];
    });
    return result;
}

void scratch_any_degree(const ScratchGraph& s, int v, IdAllocator& ids, const ScratchSink& emit) {
    const std::vector<int> neighbors = voting_neighbor_slots(s, v);
    const int n = static_cast<int>(neighbors.size());
    for (int j = 2; j <= n; ++j) {
        const BigInt coeff = (j % 2 == 0) ? BigInt(j - 1) : BigInt(1 - j);
        for_each_combination(n, j, [&](const std::vector<int>& comb) {
            ScratchGraph h = s;
            for (int index : comb) h.subdivide(v, neighbors[static_cast<std::size_t>(index)], ids);
            emit(std::move(h), BigInt(coeff));
        });
    }
}

// Net coefficient table for grouping families of b-subsets by the partition
// their union ties together. D[m] is the signed sum over families of
// b-subsets of an m-set whose union is connected and spans all m elements;
// a family contributes (-1)^(family size). Derived from the decomposition of
// arbitrary families by the component containing a fixed element:
//   A(m) = sum_t C(m-1, t-1) D(t) A(m-t),  A(r) = 1 if r < b else 0.
// For b = 2 this gives the classical D(m) = (-1)^(m-1) (m-1)!.
std::vector<BigInt> connected_family_coefficients(int b, int max_m) {
    std::vector<BigInt> a(static_cast<std::size_t>(max_m) + 1);
    for (int r = 0; r <= max_m; ++r) a[static_cast<std::size_t>(r)] = (r < b) ? 1 : 0;
    std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(max_m) + 1);
    for (int i = 0; i <= max_m; ++i) {
        binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::vector<BigInt> d(static_cast<std::size_t>(max_m) + 1, BigInt(0));
    if (max_m >= 1) d[1] = 1;
    for (int m = 2; m <= max_m; ++m) {
        BigInt rest = 0;
        for (int t = 1; t < m; ++t) {
            rest += binom[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(t - 1)] *
                    d[static_cast<std::size_t>(t)] * a[static_cast<std::size_t>(m - t)];
        }
        d[static_cast<std::size_t>(m)] = a[static_cast<std::size_t>(m)] - rest;
    }
    return d;
}

// Majority recurrence, grouped form. Two exact regroupings of the plain
// signed sum shrink the enumeration:
//   - families of b-subsets with the same transitive tie pattern give graphs
//     with identical LO-polynomials (ties matter only through their closure),
//     so partitions of W stand in for families, with per-block coefficients
//     D_b from connected_family_coefficients;
//   - a tie block that touches the subdivided set W' forces its members equal
//     to the center outright, which is the same constraint closure as
//     subdividing the whole block. Grouping by the effective subdivided set A
//     and the partition of W \ A multiplies in
//       g(|A|) = sum over partitions sigma of A of (-1)^(|sigma|) prod D_b(|B|),
//     by summing (-1)^(|W'|) over the W' and sigma that collapse to A.
void scratch_to_majority(const ScratchGraph& s, int v, int b, int leaves, IdAllocator& ids,
                         const ScratchSink& emit) {
    const std::vector<int> neighbors = voting_neighbor_slots(s, v);
    const std::vector<int> degree = scratch_degrees(s);
    SlotUnion classes = full_union(s, degree);
    std::vector<int> free_neighbors; // W
    const int v_root = classes.find(v);
    for (int u : neighbors) {
        if (classes.find(u) != v_root) free_neighbors.push_back(u);
    }
    const int wn = static_cast<int>(free_neighbors.size());
    if (wn >= 62)
        raise(ErrorKind::BudgetExceeded, "expansion at vertex " +
                                             std::to_string(s.id[static_cast<std::size_t>(v)]) +
                                             " is too large to enumerate");
    const std::vector<BigInt> connected_coeff = connected_family_coefficients(b, wn);

    // g(m) via the same component decomposition, with blocks weighted -D_b.
    std::vector<BigInt> collapsed_coeff(static_cast<std::size_t>(wn) + 1, BigInt(0));
    collapsed_coeff[0] = 1;
    {
        std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(wn) + 1);
        for (int i = 0; i <= wn; ++i) {
            binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
            for (int j = 1; j < i; ++j)
                binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        for (int m = 1; m <= wn; ++m) {
            BigInt total = 0;
            for (int t = 1; t <= m; ++t) {
                total += binom[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(t - 1)] *
                         -connected_coeff[static_cast<std::size_t>(t)] *
                         collapsed_coeff[static_cast<std::size_t>(m - t)];
            }
            collapsed_coeff[static_cast<std::size_t>(m)] = total;
        }
    }

    ScratchGraph leafed = s;
    for (int i = 0; i < leaves; ++i) leafed.add_leaf(v, ids);

    const std::uint64_t subdivision_masks = std::uint64_t{1} << wn;
    std::vector<std::vector<int>> blocks;
    for (std::uint64_t am = 0; am < subdivision_masks; ++am) {
        const int abits = std::popcount(am);
        const BigInt& head_coeff = collapsed_coeff[static_cast<std::size_t>(abits)];
        if (head_coeff == 0) continue;
        ScratchGraph base = leafed;
        std::vector<int> rest;
        for (int i = 0; i < wn; ++i) {
            if ((am >> i) & 1) base.subdivide(v, free_neighbors[static_cast<std::size_t>(i)], ids);
            else rest.push_back(free_neighbors[static_cast<std::size_t>(i)]);
        }
        if (rest.empty()) {
            emit(std::move(base), BigInt(head_coeff));
            continue;
        }
        for_each_set_partition(rest.size(), [&](const std::vector<int>& rgs, int block_count) {
            blocks.assign(static_cast<std::size_t>(block_count), {});
            for (std::size_t i = 0; i < rgs.size(); ++i)
                blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
            BigInt coeff = head_coeff;
            for (const auto& block : blocks) {
                coeff *= connected_coeff[block.size()];
                if (coeff == 0) break;
            }
            if (coeff == 0) return;
            ScratchGraph h = base;
            for (const auto& block : blocks) {
                for (std::size_t i = 1; i < block.size(); ++i) {
                    h.add_tie(rest[static_cast<std::size_t>(block[0])],
                              rest[static_cast<std::size_t>(block[i])]);
                }
            }
            emit(std::move(h), std::move(coeff));
        });
    }

    for (std::uint64_t wm = 1; wm < subdivision_masks; ++wm) {
        ScratchGraph h = s;
        for (int i = 0; i < wn; ++i) {
            if ((wm >> i) & 1) h.subdivide(v, free_neighbors[static_cast<std::size_t>(i)], ids);
        }
        const int j = std::popcount(wm);
        emit(std::move(h), (j % 2 == 1) ? BigInt(1) : BigInt(-1));
    }
}

struct ScratchTerm {
    ScratchGraph graph;
    BigInt coeff;
};

// Normalized children of one term: forced-dense children fold directly into
// `harvested`, the rest merge into `sink` keyed by canonical bytes.
struct ExpansionSink {
    std::unordered_map<std::string, ScratchTerm>& sink;
    IntPolynomial& harvested;
};

void expand_scratch_term(const ScratchTerm& term, IdAllocator& ids, LeafRule rule, Budget& budget,
                         ExpansionSink out) {
    const ScratchStats stats = scratch_stats(term.graph);
    if (stats.pick_slot < 0)
        raise(ErrorKind::Precondition, "expansion requested on a forced-dense term");
    const ScratchSink emit = [&](ScratchGraph&& child, BigInt&& raw_coeff) {
        budget.charge();
        scratch_normalize(child, ids);
        BigInt coeff = std::move(raw_coeff);
        coeff *= term.coeff;
        const ScratchStats child_stats = scratch_stats(child);
        if (child_stats.dense) {
            out.harvested += IntPolynomial::monomial(child_stats.class_count, std::move(coeff));
            return;
        }
        std::string key = child.canonical_key();
        auto it = out.sink.find(key);
        if (it == out.sink.end()) {
            out.sink.emplace(std::move(key), ScratchTerm{std::move(child), std::move(coeff)});
        } else {
            it->second.coeff += coeff;
            if (it->second.coeff == 0) out.sink.erase(it);
        }
    };
    const int v = stats.pick_slot;
    if (stats.pick_coclass < 2) {
        scratch_any_degree(term.graph, v, ids, emit);
    } else {
        const int n = stats.degree[static_cast<std::size_t>(v)];
        const int b = stats.pick_coclass;
        const int leaves = n - 2 * b + (rule == LeafRule::Minimal ? 1 : 2);
        scratch_to_majority(term.graph, v, b, leaves, ids, emit);
    }
}

void merge_sink(std::unordered_map<std::string, ScratchTerm>& into,
                std::unordered_map<std::string, ScratchTerm>&& from) {
    for (auto& [key, term] : from) {
        auto it = into.find(key);
        if (it == into.end()) {
            into.emplace(key, std::move(term));
        } else {
            it->second.coeff += term.coeff;
            if (it->second.coeff == 0) into.erase(it);
        }
    }
}

class MemoizedEngine {
public:
    MemoizedEngine(IdAllocator& ids, LeafRule rule, Budget& budget)
        : ids_(ids), rule_(rule), budget_(budget) {}

    // graph must be normalized and not forced-dense.
    IntPolynomial compute(const ScratchGraph& graph) {
        std::string key = graph.canonical_key();
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::unordered_map<std::string, ScratchTerm> children;
        IntPolynomial poly;
        expand_scratch_term(ScratchTerm{graph, 1}, ids_, rule_, budget_,
                            ExpansionSink{children, poly});
        for (const auto& [child_key, child] : children) poly += child.coeff * compute(child.graph);
        cache_.emplace(std::move(key), poly);
        return poly;
    }

private:
    IdAllocator& ids_;
    LeafRule rule_;
    Budget& budget_;
    std::unordered_map<std::string, IntPolynomial> cache_;
};

// Majority recurrence in its plain subset-enumeration form, used by the
// public expand_to_majority surface: subdivision sets W' and families T of
// b-element subsets with sign (-1)^(|W'| + |T|), then the leafless correction
// with sign (-1)^(j+1).
void visit_to_majority_literal(const Graph& g, VertexId v, int b, IdAllocator& ids, LeafRule rule,
                               const std::function<void(Term&&)>& emit) {
    const int n = g.voting_degree(v);
    if (b < 2 || 2 * b > n)
        raise(ErrorKind::Precondition, "forced neighbor count " + std::to_string(b) +
                                           " outside [2, n/2] for degree " + std::to_string(n));
    const ForcedClasses classes = g.forced_classes();
    std::vector<VertexId> free_neighbors;
    int measured = 0;
    for (VertexId u : g.voting_neighbors(v)) {
        if (classes.same_class(u, v)) ++measured;
        else free_neighbors.push_back(u);
    }
    if (measured != b)
        raise(ErrorKind::Precondition, "vertex " + std::to_string(v) + " has " +
                                           std::to_string(measured) + " forced co-class neighbors, not " +
                                           std::to_string(b));
    const int wn = static_cast<int>(free_neighbors.size());
    const int leaves = n - 2 * b + (rule == LeafRule::Minimal ? 1 : 2);

    std::vector<std::vector<VertexId>> families; // P(W, b)
    for_each_combination(wn, b, [&](const std::vector<int>& comb) {
        std::vector<VertexId> t;
        t.reserve(comb.size());
        for (int index : comb) t.push_back(free_neighbors[static_cast<std::size_t>(index)]);
        families.push_back(std::move(t));
    });
    if (wn >= 62 || families.size() >= 62)
        raise(ErrorKind::BudgetExceeded, "expansion at vertex " + std::to_string(v) +
                                             " is too large to enumerate");

    Graph leafed = g;
    for (int i = 0; i < leaves; ++i) leafed = leafed.add_leaf(v, ids);

    const std::uint64_t subdivision_masks = std::uint64_t{1} << wn;
    const std::uint64_t family_masks = std::uint64_t{1} << families.size();
    for (std::uint64_t wm = 0; wm < subdivision_masks; ++wm) {
        Graph base = leafed;
        for (int i = 0; i < wn; ++i) {
            if ((wm >> i) & 1)
                base = base.subdivide_edge(v, free_neighbors[static_cast<std::size_t>(i)], ids);
        }
        const int wbits = std::popcount(wm);
        for (std::uint64_t fm = 0; fm < family_masks; ++fm) {
            Graph h = base;
            for (std::size_t t = 0; t < families.size(); ++t) {
                if (!((fm >> t) & 1)) continue;
                const auto& family = families[t];
                for (std::size_t i = 0; i < family.size(); ++i) {
                    for (std::size_t j = i + 1; j < family.size(); ++j)
                        h = h.add_non_voting_edge(family[i], family[j]);
                }
            }
            const int r = wbits + std::popcount(fm);
            emit(Term{std::move(h), (r % 2 == 0) ? BigInt(1) : BigInt(-1)});
        }
    }

    for (std::uint64_t wm = 1; wm < subdivision_masks; ++wm) {
        Graph h = g;
        for (int i = 0; i < wn; ++i) {
            if ((wm >> i) & 1)
                h = h.subdivide_edge(v, free_neighbors[static_cast<std::size_t>(i)], ids);
        }
        const int j = std::popcount(wm);
        emit(Term{std::move(h), (j % 2 == 1) ? BigInt(1) : BigInt(-1)});
    }
}

} // namespace

BigInt Expansion::coefficient_sum() const {
    BigInt sum = 0;
    for (const auto& term : terms) sum += term.coeff;
    return sum;
}

Expansion expand_any_degree(const Graph& g, VertexId v, IdAllocator& ids) {
    const int n = g.voting_degree(v);
    if (n < 3)
        raise(ErrorKind::Precondition,
              "any-degree expansion requires voting degree >= 3, vertex " + std::to_string(v) +
                  " has degree " + std::to_string(n));
    const std::vector<VertexId> neighbors = g.voting_neighbors(v);
    Expansion expansion;
    for (int j = 2; j <= n; ++j) {
        const BigInt coeff = (j % 2 == 0) ? BigInt(j - 1) : BigInt(1 - j);
        for_each_combination(n, j, [&](const std::vector<int>& comb) {
            Graph h = g;
            for (int index : comb) h = h.subdivide_edge(v, neighbors[static_cast<std::size_t>(index)], ids);
            expansion.terms.push_back(Term{std::move(h), coeff});
        });
    }
    return expansion;
}

Expansion expand_to_majority(const Graph& g, VertexId v, int b, IdAllocator& ids, LeafRule rule) {
    Expansion expansion;
    visit_to_majority_literal(g, v, b, ids, rule,
                              [&](Term&& t) { expansion.terms.push_back(std::move(t)); });
    return expansion;
}

Term normalize_term(Term term, IdAllocator& ids) {
    ScratchGraph scratch = scratch_from_graph(term.graph);
    scratch_normalize(scratch, ids);
    return Term{scratch.to_graph(), std::move(term.coeff)};
}

IntPolynomial base_case_value(const Graph& g) {
    const ForcedClasses classes = g.forced_classes();
    for (const auto& [id, role] : g.vertices()) {
        if (!g.vertex_has_forced_majority(classes, id))
            raise(ErrorKind::Precondition,
                  "base case requires a forced-dense graph; vertex " + std::to_string(id) +
                      " lacks a forced majority");
    }
    return IntPolynomial::monomial(static_cast<int>(classes.count()));
}

IntPolynomial lo_polynomial(const Graph& g, const EngineOptions& options) {
    if (g.has_isolated_vertex()) return IntPolynomial::zero();
    IdAllocator ids(g.max_vertex_id() + 1);
    Budget budget{options.term_budget};
    budget.charge();

    ScratchGraph start = scratch_from_graph(g);
    scratch_normalize(start, ids);
    {
        const ScratchStats stats = scratch_stats(start);
        if (stats.dense) return IntPolynomial::monomial(stats.class_count);
    }

    if (options.memoize) {
        MemoizedEngine engine(ids, options.leaf_rule, budget);
        return engine.compute(start);
    }

    std::unordered_map<std::string, ScratchTerm> frontier;
    frontier.emplace(start.canonical_key(), ScratchTerm{std::move(start), 1});
    IntPolynomial result;
    while (!frontier.empty()) {
        std::vector<ScratchTerm> active;
        active.reserve(frontier.size());
        for (auto& [key, term] : frontier) active.push_back(std::move(term));
        frontier.clear();

        const int workers = std::min<int>(options.workers, static_cast<int>(active.size()));
        if (workers > 1) {
            std::vector<std::unordered_map<std::string, ScratchTerm>> sinks(
                static_cast<std::size_t>(workers));
            std::vector<IntPolynomial> harvested(static_cast<std::size_t>(workers));
            std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        for (std::size_t i = static_cast<std::size_t>(w); i < active.size();
                             i += static_cast<std::size_t>(workers)) {
                            expand_scratch_term(active[i], ids, options.leaf_rule, budget,
                                                ExpansionSink{sinks[static_cast<std::size_t>(w)],
                                                              harvested[static_cast<std::size_t>(w)]});
                        }
                    } catch (...) {
                        failures[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            }
            for (auto& t : threads) t.join();
            for (const auto& failure : failures) {
                if (failure) std::rethrow_exception(failure);
            }
            for (auto& sink : sinks) merge_sink(frontier, std::move(sink));
            for (auto& part : harvested) result += part;
        } else {
            for (const ScratchTerm& term : active)
                expand_scratch_term(term, ids, options.leaf_rule, budget,
                                    ExpansionSink{frontier, result});
        }
    }
    return result;
}

IntPolynomial sg_polynomial(const Graph& g, const EngineOptions& options) {
    if (g.vertex_count() == 0) return IntPolynomial::zero();
    IntPolynomial lo = lo_polynomial(g, options);
    if (g.min_voting_degree() >= 1) return lo - IntPolynomial::monomial(1);
    return lo;
}

} // namespace gridlock
