#include <gridlock/families.hpp>

#include <gridlock/oracles.hpp>

#include <algorithm>
#include <set>

namespace gridlock {

namespace {

Graph complete_graph(long n) {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    for (long i = 0; i < n; ++i) vertices.push_back(i);
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return make_graph(vertices, edges);
}

Graph path_graph(long n) {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    for (long i = 0; i < n; ++i) vertices.push_back(i);
    for (long i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(vertices, edges);
}

Graph cycle_graph(long n) {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    for (long i = 0; i < n; ++i) vertices.push_back(i);
    for (long i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return make_graph(vertices, edges);
}

Graph star_graph(long leaves) {
    std::vector<VertexId> vertices{0};
    std::vector<VertexPair> edges;
    for (long i = 1; i <= leaves; ++i) {
        vertices.push_back(i);
        edges.emplace_back(0, i);
    }
    return make_graph(vertices, edges);
}

// d disjoint triangles T_0..T_{d-1} on {3i, 3i+1, 3i+2}, with a bridge edge
// from vertex 3i+2 of T_i to vertex 3(i+1) of T_{i+1}.
Graph triangle_chain(long d) {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    for (long i = 0; i < d; ++i) {
        VertexId a = 3 * i;
        VertexId b = 3 * i + 1;
        VertexId c = 3 * i + 2;
        vertices.insert(vertices.end(), {a, b, c});
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(b, c);
        if (i + 1 < d) edges.emplace_back(c, 3 * (i + 1));
    }
    return make_graph(vertices, edges);
}

// Clique i occupies ids 5i..5i+4, exterior vertex first.
void add_five_cliques(std::vector<VertexId>& vertices, std::vector<VertexPair>& edges) {
    for (long clique = 0; clique < 5; ++clique) {
        for (long i = 0; i < 5; ++i) vertices.push_back(5 * clique + i);
        for (long i = 0; i < 5; ++i) {
            for (long j = i + 1; j < 5; ++j) edges.emplace_back(5 * clique + i, 5 * clique + j);
        }
    }
}

} // namespace

FamilySpec parse_family_spec(const std::string& name, std::optional<long> parameter) {
    FamilySpec spec;
    spec.parameter = parameter;
    if (name == "complete") spec.name = FamilyName::Complete;
    else if (name == "path") spec.name = FamilyName::Path;
    else if (name == "cycle") spec.name = FamilyName::Cycle;
    else if (name == "star") spec.name = FamilyName::Star;
    else if (name == "triangle_chain") spec.name = FamilyName::TriangleChain;
    else if (name == "clique_cycle") spec.name = FamilyName::CliqueCycle;
    else if (name == "clique_matching") spec.name = FamilyName::CliqueMatching;
    else raise(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
    return spec;
}

std::string family_name_string(FamilyName name) {
    switch (name) {
        case FamilyName::Complete: return "complete";
        case FamilyName::Path: return "path";
        case FamilyName::Cycle: return "cycle";
        case FamilyName::Star: return "star";
        case FamilyName::TriangleChain: return "triangle_chain";
        case FamilyName::CliqueCycle: return "clique_cycle";
        case FamilyName::CliqueMatching: return "clique_matching";
    }
    raise(ErrorKind::InvalidArgument, "unknown family");
}

Graph build_family(const FamilySpec& spec) {
    auto require_parameter = [&](long minimum) {
        if (!spec.parameter)
            raise(ErrorKind::InvalidArgument,
                  "family '" + family_name_string(spec.name) + "' requires a parameter");
        if (*spec.parameter < minimum)
            raise(ErrorKind::InvalidArgument,
                  "family '" + family_name_string(spec.name) + "' requires parameter >= " +
                      std::to_string(minimum));
        return *spec.parameter;
    };
    auto forbid_parameter = [&] {
        if (spec.parameter)
            raise(ErrorKind::InvalidArgument,
                  "family '" + family_name_string(spec.name) + "' takes no parameter");
    };
    switch (spec.name) {
        case FamilyName::Complete: return complete_graph(require_parameter(1));
        case FamilyName::Path: return path_graph(require_parameter(1));
        case FamilyName::Cycle: return cycle_graph(require_parameter(3));
        case FamilyName::Star: return star_graph(require_parameter(1));
        case FamilyName::TriangleChain: return triangle_chain(require_parameter(1));
        case FamilyName::CliqueCycle: forbid_parameter(); return clique_cycle();
        case FamilyName::CliqueMatching: forbid_parameter(); return clique_matching();
    }
    raise(ErrorKind::InvalidArgument, "unknown family");
}

Graph clique_cycle() {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    add_five_cliques(vertices, edges);
    // Interior pairs: P_{i,1} = {5i+1, 5i+2}, P_{i,2} = {5i+3, 5i+4}. Each
    // first pair is joined by complete 4-edge blocks to the second pairs of
    // the cliques one and two steps back around the cycle, so every clique
    // pair gets exactly one block and every interior vertex reaches two
    // consecutively-adjacent cliques.
    for (long i = 0; i < 5; ++i) {
        for (long step : {1, 2}) {
            long j = (i + 5 - step) % 5;
            for (VertexId a : {5 * i + 1, 5 * i + 2}) {
                for (VertexId b : {5 * j + 3, 5 * j + 4}) edges.emplace_back(a, b);
            }
        }
    }
    return make_graph(vertices, edges);
}

Graph clique_matching() {
    std::vector<VertexId> vertices;
    std::vector<VertexPair> edges;
    add_five_cliques(vertices, edges);
    // Between cliques i < j, interior m of clique i joins interior m of
    // clique j (index-aligned matching).
    for (long i = 0; i < 5; ++i) {
        for (long j = i + 1; j < 5; ++j) {
            for (long m = 1; m <= 4; ++m) edges.emplace_back(5 * i + m, 5 * j + m);
        }
    }
    return make_graph(vertices, edges);
}

std::vector<std::vector<VertexId>> five_clique_blocks() {
    std::vector<std::vector<VertexId>> blocks;
    for (long i = 0; i < 5; ++i) {
        std::vector<VertexId> block;
        for (long k = 0; k < 5; ++k) block.push_back(5 * i + k);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::int64_t reduced_clique_lo_count(const Graph& g, const std::vector<std::vector<VertexId>>& cliques,
                                     int k) {
    if (k < 1) raise(ErrorKind::InvalidArgument, "color count must be positive");
    std::set<VertexId> covered;
    for (const auto& clique : cliques) {
        for (VertexId v : clique) {
            if (!g.has_vertex(v)) raise(ErrorKind::UnknownVertex, "clique vertex not in graph");
            if (!covered.insert(v).second)
                raise(ErrorKind::InvalidArgument, "clique list is not a partition: repeated vertex");
        }
    }
    if (covered.size() != g.vertex_count())
        raise(ErrorKind::InvalidArgument, "clique list is not a partition: vertices missing");

    const std::size_t m = cliques.size();
    std::vector<int> choice(m, 0);
    std::int64_t count = 0;
    while (true) {
        Coloring coloring;
        for (std::size_t i = 0; i < m; ++i) {
            for (VertexId v : cliques[i]) coloring.assignment[v] = choice[i];
        }
        if (is_locally_optimal(g, coloring)) ++count;
        std::size_t i = 0;
        for (; i < m; ++i) {
            if (++choice[i] < k) break;
            choice[i] = 0;
        }
        if (i == m) break;
    }
    return count;
}

} // namespace gridlock
