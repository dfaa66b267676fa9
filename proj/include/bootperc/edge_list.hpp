#pragma once

#include <stdexcept>
#include <string>

#include "bootperc/graph.hpp"

namespace bootperc {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Text format: header "n m", then m lines "u v" with 0-indexed endpoints.
// Duplicate edges collapse silently; self-loops and out-of-range ids are
// rejected with the offending line number.
Graph parse_edge_list(const std::string& text);

// Canonical form: header, then edges sorted lexicographically with u < v,
// newline-terminated.
std::string serialize_edge_list(const Graph& g);

Graph load_edge_list_file(const std::string& path);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace bootperc
