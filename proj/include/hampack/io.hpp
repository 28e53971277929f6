#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hampack/graph.hpp"

namespace hampack {

// Edge-list format:
//
//   # optional comment lines anywhere
//   p <n> <m>
//   <u> <v>        (m lines, 0-based, u < v, no duplicates)
//
// Arc-list format shares the header and uses "a <u> <v>" lines.

Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

/// Canonical text: header then edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);

DiGraph read_arc_list(std::istream& in);
DiGraph parse_arc_list(std::string_view text);
void write_arc_list(std::ostream& out, const DiGraph& d);
std::string format_arc_list(const DiGraph& d);

}  // namespace hampack
