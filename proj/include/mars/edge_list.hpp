#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mars/graph.hpp"

namespace mars {

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what) : GraphError(what, line) {}
};

/// Reads the edge-list text format.
///
/// One edge per line as two whitespace-separated vertex tokens. Lines whose
/// first non-blank character is '#' are comments; blank lines are skipped.
/// An optional header line "n <count>" fixes the vertex count, otherwise it is
/// max index + 1. CRLF line endings are accepted.
///
/// If every token is a non-negative integer the tokens are vertex indices.
/// Otherwise tokens are treated as labels and numbered 0.. in order of first
/// appearance; the label map is kept on the returned graph.
///
/// Self-loops and out-of-range indices are reported with the offending line
/// number; Disconnected applies to the whole file and carries no line.
/// Duplicate edges are merged and counted in `notes` when given.
Graph read_edge_list(std::istream& in, BuildNotes* notes = nullptr);
Graph read_edge_list(std::string_view text, BuildNotes* notes = nullptr);
Graph read_edge_list_file(const std::string& path, BuildNotes* notes = nullptr);

/// Writes "n <count>" followed by one "u v" line per edge with u < v, in
/// lexicographic order, LF terminated.
std::string write_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace mars
