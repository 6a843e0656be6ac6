#pragma once

#include <stdexcept>
#include <string>

#include "minorkit/graph.hpp"

namespace mk {

struct ParseError : std::runtime_error {
    int line;    // 1-based, 0 when not line-oriented
    int offset;  // byte offset within the line / stream
    ParseError(const std::string& msg, int line_, int offset_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", offset " +
                             std::to_string(offset_) + ")"),
          line(line_),
          offset(offset_) {}
};

// One "u v" pair per line, 0-indexed ids, optional leading header "n=<count>".
// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Standard graph6 bit packing (<= 62 and the multi-byte order encoding).
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(const std::string& text, GraphFormat fmt);
std::string serialize_graph(const Graph& g, GraphFormat fmt);

// Reads a file and auto-detects the format when `fmt` is unset: a first
// line that parses as graph6 wins over edge-list only if it has no spaces.
Graph load_graph_file(const std::string& path, GraphFormat fmt);

}  // namespace mk
