#include <gridlock/graph_io.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gridlock {

namespace {

using nlohmann::json;

std::vector<VertexPair> read_pair_array(const json& array, const char* what) {
    std::vector<VertexPair> result;
    if (!array.is_array()) raise(ErrorKind::ParseError, std::string(what) + " must be an array");
    for (const auto& entry : array) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            raise(ErrorKind::ParseError, std::string(what) + " entries must be [int, int] pairs");
        result.emplace_back(entry[0].get<VertexId>(), entry[1].get<VertexId>());
    }
    return result;
}

} // namespace

Graph read_graph_json(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object()) raise(ErrorKind::ParseError, "graph JSON must be an object");
    if (!document.contains("vertices"))
        raise(ErrorKind::ParseError, "graph JSON requires a 'vertices' array");
    std::vector<VertexId> vertices;
    for (const auto& entry : document["vertices"]) {
        if (!entry.is_number_integer())
            raise(ErrorKind::ParseError, "vertex ids must be integers");
        vertices.push_back(entry.get<VertexId>());
    }
    std::vector<VertexPair> edges;
    if (document.contains("edges")) edges = read_pair_array(document["edges"], "edges");
    std::vector<VertexPair> non_voting;
    if (document.contains("non_voting_edges"))
        non_voting = read_pair_array(document["non_voting_edges"], "non_voting_edges");
    try {
        return make_graph(vertices, edges, non_voting);
    } catch (const Error& e) {
        raise(ErrorKind::ParseError, std::string("invalid graph: ") + e.what());
    }
}

std::string write_graph_json(const Graph& g) {
    json document;
    json vertices = json::array();
    for (const auto& [id, role] : g.vertices()) vertices.push_back(id);
    json edges = json::array();
    for (const auto& [a, b] : g.voting_edges()) edges.push_back(json::array({a, b}));
    json non_voting = json::array();
    for (const auto& [a, b] : g.non_voting_edges()) non_voting.push_back(json::array({a, b}));
    document["vertices"] = std::move(vertices);
    document["edges"] = std::move(edges);
    document["non_voting_edges"] = std::move(non_voting);
    return document.dump();
}

Graph read_edge_list(const std::string& text) {
    std::vector<VertexId> declared;
    std::vector<VertexPair> edges;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<VertexId> numbers;
        VertexId value;
        while (fields >> value) numbers.push_back(value);
        std::string trailing;
        if (fields.clear(), fields >> trailing; !trailing.empty())
            raise(ErrorKind::ParseError,
                  "line " + std::to_string(line_number) + ": unexpected token '" + trailing + "'");
        if (numbers.empty()) continue;
        if (numbers.size() == 1) {
            declared.push_back(numbers[0]);
        } else if (numbers.size() == 2) {
            edges.emplace_back(numbers[0], numbers[1]);
            declared.push_back(numbers[0]);
            declared.push_back(numbers[1]);
        } else {
            raise(ErrorKind::ParseError,
                  "line " + std::to_string(line_number) + ": expected one or two integers");
        }
    }
    std::sort(declared.begin(), declared.end());
    declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
    try {
        return make_graph(declared, edges);
    } catch (const Error& e) {
        raise(ErrorKind::ParseError, std::string("invalid edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [a, b] : g.voting_edges()) out << a << ' ' << b << '\n';
    for (const auto& [id, role] : g.vertices()) {
        if (g.voting_degree(id) == 0) out << id << '\n';
    }
    return out.str();
}

Graph read_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return read_graph_json(text);
        break;
    }
    return read_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return read_graph_auto(buffer.str());
}

} // namespace gridlock
