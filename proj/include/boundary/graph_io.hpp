#ifndef BOUNDARY_GRAPH_IO_HPP
#define BOUNDARY_GRAPH_IO_HPP

#include <stdexcept>
#include <string>

#include "boundary/graph.hpp"

namespace boundary {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list document: {"n": int, "edges": [[u,v], ...]} with 0-based indices.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6 ASCII encoding (bit-exact). Accepts the optional >>graph6<< header
// and a trailing newline; everything else must be the exact byte sequence.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Dispatch on content: an edge-list document starts with '{', anything else
// is treated as graph6.
Graph parse_graph_auto(const std::string& text);

// Reads a whole file and parses it; ".json" forces the edge-list format,
// ".g6" forces graph6, any other extension auto-detects.
Graph load_graph_file(const std::string& path);

}  // namespace boundary

#endif  // BOUNDARY_GRAPH_IO_HPP
