#pragma once

#include <iosfwd>
#include <string>

#include "rhg/hypergraph.hpp"

namespace rhg {

// Text format, bit-exact under write/read round-trips:
//   line 1:  "r n m"
//   then m lines, one edge each, vertices 0-indexed and sorted ascending,
//   separated by single spaces, '\n' line endings.
// Oriented variant: each edge line is "tail | h1 h2 ... h_{r-1}" with heads
// sorted ascending.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);

void write_oriented(std::ostream& out, const OrientedHypergraph& h);
OrientedHypergraph read_oriented(std::istream& in);

std::string to_text(const Hypergraph& h);
std::string to_text(const OrientedHypergraph& h);

void save_hypergraph(const std::string& path, const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);
void save_oriented(const std::string& path, const OrientedHypergraph& h);
OrientedHypergraph load_oriented(const std::string& path);

// True if the file's edge lines carry tail markers ('|').
bool file_is_oriented(const std::string& path);

}  // namespace rhg
