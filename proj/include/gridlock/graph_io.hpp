#pragma once

// Graph file formats: canonical JSON and a plain-text edge list.

#include <gridlock/graph.hpp>

#include <string>

namespace gridlock {

// {"vertices": [...], "edges": [[u,w]...], "non_voting_edges": [[u,w]...]}
// with nonnegative integer ids, each pair sorted ascending, and arrays sorted
// lexicographically on write.
Graph read_graph_json(const std::string& text);
std::string write_graph_json(const Graph& g);

// One "u w" pair per line; '#' starts a comment; an isolated vertex is a
// single integer on its own line. Voting edges only.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Sniffs JSON (leading '{') versus edge list.
Graph read_graph_auto(const std::string& text);
Graph load_graph_file(const std::string& path);

} // namespace gridlock
