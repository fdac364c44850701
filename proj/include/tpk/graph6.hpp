#ifndef TPK_GRAPH6_HPP
#define TPK_GRAPH6_HPP

#include <iosfwd>
#include <string>

#include "tpk/graph.hpp"

namespace tpk {

// Standard graph6 text format: size header (one char for n < 63, '~' plus
// three chars up to n = 258047), then the upper-triangle adjacency bits in
// column order packed into 6-bit chunks, each offset by 63.

std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& line);  // throws parse_error / capability_error

// Edge-list text: "u v" per line, 0-indexed, '#' comments ignored. The
// writer emits a "# n=N" comment so isolated trailing vertices survive the
// round trip; the reader honors it and otherwise infers n = max endpoint + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Format sniffing by extension: ".g6" means graph6, anything else edge list.
Graph load_graph_file(const std::string& path);

}  // namespace tpk

#endif
