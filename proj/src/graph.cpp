#include <gridlock/graph.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace gridlock {

namespace {

// Small union-find over dense indices.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

template <typename T>
bool sorted_contains(const std::vector<T>& v, const T& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
void sorted_insert(std::vector<T>& v, T x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, std::move(x));
}

template <typename T>
void sorted_erase(std::vector<T>& v, const T& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

} // namespace

VertexId IdAllocator::subdivision_id(VertexId u, VertexId w) {
    auto [a, b] = ordered_pair(u, w);
    return intern(0, a, b);
}

VertexId IdAllocator::leaf_id(VertexId v, int ordinal) { return intern(1, v, ordinal); }

VertexId IdAllocator::intern(int kind, VertexId a, VertexId b) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(kind, a, b);
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    VertexId id = next_++;
    interned_.emplace(key, id);
    return id;
}

int ForcedClasses::class_index(VertexId v) const {
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
    if (it == vertex_ids.end() || *it != v)
        raise(ErrorKind::UnknownVertex, "vertex not in forced-class table");
    return class_of[static_cast<std::size_t>(it - vertex_ids.begin())];
}

bool Graph::has_vertex(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const auto& entry, VertexId id) { return entry.first < id; });
    return it != vertices_.end() && it->first == v;
}

std::size_t Graph::vertex_index(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const auto& entry, VertexId id) { return entry.first < id; });
    if (it == vertices_.end() || it->first != v)
        raise(ErrorKind::UnknownVertex, "unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

VertexRole Graph::role(VertexId v) const { return vertices_[vertex_index(v)].second; }

std::vector<VertexId> Graph::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(vertices_.size());
    for (const auto& [id, role] : vertices_) ids.push_back(id);
    return ids;
}

VertexId Graph::max_vertex_id() const {
    return vertices_.empty() ? VertexId{-1} : vertices_.back().first;
}

bool Graph::has_voting_edge(VertexId a, VertexId b) const {
    return sorted_contains(voting_edges_, ordered_pair(a, b));
}

bool Graph::has_non_voting_edge(VertexId a, VertexId b) const {
    return sorted_contains(non_voting_edges_, ordered_pair(a, b));
}

bool Graph::has_forced_pair(VertexId a, VertexId b) const {
    return sorted_contains(forced_pairs_, ordered_pair(a, b));
}

int Graph::voting_degree(VertexId v) const {
    vertex_index(v); // validate
    int degree = 0;
    for (const auto& [a, b] : voting_edges_) {
        if (a == v || b == v) ++degree;
    }
    return degree;
}

std::vector<VertexId> Graph::voting_neighbors(VertexId v) const {
    vertex_index(v);
    std::vector<VertexId> result;
    for (const auto& [a, b] : voting_edges_) {
        if (a == v) result.push_back(b);
        else if (b == v) result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool Graph::has_isolated_vertex() const {
    if (vertices_.empty()) return false;
    std::vector<bool> touched(vertices_.size(), false);
    for (const auto& [a, b] : voting_edges_) {
        touched[vertex_index(a)] = true;
        touched[vertex_index(b)] = true;
    }
    return std::find(touched.begin(), touched.end(), false) != touched.end();
}

int Graph::min_voting_degree() const {
    if (vertices_.empty()) return std::numeric_limits<int>::max();
    std::vector<int> degree(vertices_.size(), 0);
    for (const auto& [a, b] : voting_edges_) {
        ++degree[vertex_index(a)];
        ++degree[vertex_index(b)];
    }
    return *std::min_element(degree.begin(), degree.end());
}

void Graph::insert_vertex(VertexId v, VertexRole role) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const auto& entry, VertexId id) { return entry.first < id; });
    if (it != vertices_.end() && it->first == v)
        raise(ErrorKind::InvalidArgument, "duplicate vertex id " + std::to_string(v));
    vertices_.insert(it, {v, role});
}

void Graph::insert_voting_edge(VertexId a, VertexId b) {
    if (a == b) raise(ErrorKind::InvalidEdge, "self-loop on vertex " + std::to_string(a));
    vertex_index(a);
    vertex_index(b);
    auto pair = ordered_pair(a, b);
    if (sorted_contains(voting_edges_, pair))
        raise(ErrorKind::InvalidEdge, "duplicate voting edge");
    if (sorted_contains(non_voting_edges_, pair))
        raise(ErrorKind::InvalidEdge, "edge present in both edge sets");
    sorted_insert(voting_edges_, pair);
}

Graph Graph::subdivide_edge(VertexId u, VertexId w, IdAllocator& ids) const {
    auto pair = ordered_pair(u, w);
    if (!sorted_contains(voting_edges_, pair)) {
        if (sorted_contains(non_voting_edges_, pair))
            raise(ErrorKind::InvalidEdge, "subdivision is defined only for voting edges");
        raise(ErrorKind::InvalidEdge, "cannot subdivide: not a voting edge");
    }
    Graph result(*this);
    VertexId x = ids.subdivision_id(u, w);
    result.insert_vertex(x, VertexRole::Subdivision);
    sorted_erase(result.voting_edges_, pair);
    sorted_insert(result.voting_edges_, ordered_pair(u, x));
    sorted_insert(result.voting_edges_, ordered_pair(x, w));
    return result;
}

Graph Graph::add_leaf(VertexId v, IdAllocator& ids) const {
    vertex_index(v);
    // Leaf slots on v are numbered by how many engine-created leaves v already
    // carries, so re-deriving the same augmentation reuses the same id.
    int ordinal = 0;
    for (const auto& [a, b] : voting_edges_) {
        if (a == v && has_vertex(b) && role(b) == VertexRole::Leaf) ++ordinal;
        else if (b == v && role(a) == VertexRole::Leaf) ++ordinal;
    }
    Graph result(*this);
    VertexId x = ids.leaf_id(v, ordinal);
    result.insert_vertex(x, VertexRole::Leaf);
    sorted_insert(result.voting_edges_, ordered_pair(v, x));
    return result;
}

Graph Graph::add_non_voting_edge(VertexId t1, VertexId t2) const {
    if (t1 == t2) raise(ErrorKind::InvalidArgument, "non-voting self-loop");
    vertex_index(t1);
    vertex_index(t2);
    auto pair = ordered_pair(t1, t2);
    Graph result(*this);
    if (sorted_contains(voting_edges_, pair)) {
        // Already voting-adjacent: the same-color constraint is recorded as a
        // forced pair so the two edge sets stay disjoint.
        sorted_insert(result.forced_pairs_, pair);
    } else {
        sorted_insert(result.non_voting_edges_, pair);
    }
    return result;
}

Graph Graph::remove_vertex(VertexId v) const {
    vertex_index(v);
    Graph result;
    result.vertices_.reserve(vertices_.size() - 1);
    for (const auto& entry : vertices_) {
        if (entry.first != v) result.vertices_.push_back(entry);
    }
    auto keep = [v](const VertexPair& e) { return e.first != v && e.second != v; };
    for (const auto& e : voting_edges_)
        if (keep(e)) result.voting_edges_.push_back(e);
    for (const auto& e : non_voting_edges_)
        if (keep(e)) result.non_voting_edges_.push_back(e);
    for (const auto& e : forced_pairs_)
        if (keep(e)) result.forced_pairs_.push_back(e);
    return result;
}

Graph Graph::remove_non_voting_edge(VertexId a, VertexId b) const {
    Graph result(*this);
    sorted_erase(result.non_voting_edges_, ordered_pair(a, b));
    return result;
}

Graph Graph::remove_forced_pair(VertexId a, VertexId b) const {
    Graph result(*this);
    sorted_erase(result.forced_pairs_, ordered_pair(a, b));
    return result;
}

ForcedClasses Graph::forced_classes() const {
    const std::size_t n = vertices_.size();
    std::vector<int> degree(n, 0);
    for (const auto& [a, b] : voting_edges_) {
        ++degree[vertex_index(a)];
        ++degree[vertex_index(b)];
    }
    UnionFind uf(n);
    for (const auto& [a, b] : voting_edges_) {
        std::size_t ia = vertex_index(a);
        std::size_t ib = vertex_index(b);
        if (degree[ia] <= 2 || degree[ib] <= 2) uf.unite(ia, ib);
    }
    for (const auto& [a, b] : non_voting_edges_) uf.unite(vertex_index(a), vertex_index(b));
    for (const auto& [a, b] : forced_pairs_) uf.unite(vertex_index(a), vertex_index(b));

    ForcedClasses result;
    result.vertex_ids.reserve(n);
    for (const auto& [id, role] : vertices_) result.vertex_ids.push_back(id);
    result.class_of.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = uf.find(i);
        if (result.class_of[root] < 0) {
            result.class_of[root] = static_cast<int>(result.classes.size());
            result.classes.emplace_back();
        }
        result.class_of[i] = result.class_of[root];
        result.classes[static_cast<std::size_t>(result.class_of[i])].push_back(vertices_[i].first);
    }
    return result;
}

bool Graph::vertex_has_forced_majority(const ForcedClasses& classes, VertexId v) const {
    int own = classes.class_index(v);
    int same = 0;
    int other = 0;
    for (const auto& [a, b] : voting_edges_) {
        VertexId nbr;
        if (a == v) nbr = b;
        else if (b == v) nbr = a;
        else continue;
        if (classes.class_index(nbr) == own) ++same;
        else ++other;
    }
    return same > other;
}

bool Graph::is_forced_dense() const {
    ForcedClasses classes = forced_classes();
    for (const auto& [id, role] : vertices_) {
        if (!vertex_has_forced_majority(classes, id)) return false;
    }
    return true;
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
    const std::size_t n = vertices_.size();
    UnionFind uf(n);
    for (const auto& [a, b] : voting_edges_) uf.unite(vertex_index(a), vertex_index(b));
    std::vector<int> component_of(n, -1);
    std::vector<std::vector<VertexId>> components;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = uf.find(i);
        if (component_of[root] < 0) {
            component_of[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[static_cast<std::size_t>(component_of[root])].push_back(vertices_[i].first);
    }
    return components;
}

std::string Graph::canonical_key() const {
    std::string key;
    key.reserve(8 * (vertices_.size() + voting_edges_.size() + non_voting_edges_.size() +
                     forced_pairs_.size()) +
                16);
    char buffer[24];
    auto append_int = [&](VertexId value) {
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
        key.append(buffer, end);
    };
    key.push_back('V');
    for (const auto& [id, role] : vertices_) {
        append_int(id);
        key.push_back(static_cast<char>('a' + static_cast<int>(role)));
    }
    key.push_back('E');
    for (const auto& [a, b] : voting_edges_) {
        append_int(a);
        key.push_back('-');
        append_int(b);
        key.push_back(',');
    }
    key.push_back('N');
    for (const auto& [a, b] : non_voting_edges_) {
        append_int(a);
        key.push_back('-');
        append_int(b);
        key.push_back(',');
    }
    key.push_back('F');
    for (const auto& [a, b] : forced_pairs_) {
        append_int(a);
        key.push_back('-');
        append_int(b);
        key.push_back(',');
    }
    return key;
}

Graph detail::assemble_graph(std::vector<std::pair<VertexId, VertexRole>> vertices,
                             std::vector<VertexPair> voting_edges,
                             std::vector<VertexPair> non_voting_edges,
                             std::vector<VertexPair> forced_pairs) {
    Graph g;
    g.vertices_ = std::move(vertices);
    g.voting_edges_ = std::move(voting_edges);
    g.non_voting_edges_ = std::move(non_voting_edges);
    g.forced_pairs_ = std::move(forced_pairs);
    return g;
}

Graph make_graph(const std::vector<VertexId>& vertices, const std::vector<VertexPair>& voting_edges,
                 const std::vector<VertexPair>& non_voting_edges) {
    Graph g;
    for (VertexId v : vertices) {
        if (v < 0) raise(ErrorKind::InvalidArgument, "vertex ids must be nonnegative");
        g.insert_vertex(v, VertexRole::Original);
    }
    for (const auto& [a, b] : voting_edges) g.insert_voting_edge(a, b);
    for (const auto& [a, b] : non_voting_edges) {
        if (a == b) raise(ErrorKind::InvalidEdge, "non-voting self-loop");
        g.vertex_index(a);
        g.vertex_index(b);
        auto pair = ordered_pair(a, b);
        if (sorted_contains(g.voting_edges_, pair))
            raise(ErrorKind::InvalidEdge, "edge present in both edge sets");
        if (sorted_contains(g.non_voting_edges_, pair))
            raise(ErrorKind::InvalidEdge, "duplicate non-voting edge");
        sorted_insert(g.non_voting_edges_, pair);
    }
    return g;
}

} // namespace gridlock
