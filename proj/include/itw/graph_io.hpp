#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "itw/graph.hpp"
#include "json.hpp"

namespace itw {

enum class GraphFormat { graph6, edge_list, json };

GraphFormat parse_graph_format(std::string_view name);

/// Edge-list text: one "u v" pair per line, 0-based. Blank lines and lines
/// starting with '#' are ignored. An optional first data line holding a single
/// integer fixes the vertex count (needed for trailing isolated vertices);
/// otherwise the count is one more than the largest id seen.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 (McKay). Leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// {"vertex_count": n, "edges": [[u,v],...], "adjacency": [[...],...]}.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string format_graph(const Graph& g, GraphFormat format);

/// Reads a graph file; the format is taken from the extension (.g6, .json,
/// anything else is an edge list).
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace itw
