#pragma once

#include <iosfwd>
#include <string>

#include "lpr/graph.hpp"
#include "lpr/rational.hpp"
#include "lpr/rigidity.hpp"

namespace lpr::io {

// Graph file format: a header line "n m" followed by m lines "u v" with
// 0 <= u < v < n.  Lines starting with '#' and blank lines are ignored.
// Self-loops, duplicates, u >= v or out-of-range endpoints are parse
// errors.
graphs::Graph read_graph(std::istream& in);
graphs::Graph read_graph_file(const std::string& path);

std::string write_graph(const graphs::Graph& g);
void write_graph_file(const graphs::Graph& g, const std::string& path);

// Configuration file: one non-comment line per vertex carrying d rational
// tokens ("num" or "num/den"), whitespace-separated.  d is inferred from
// the first line.
rigidity::Configuration<field::Rat> read_configuration(std::istream& in, std::size_t n);
rigidity::Configuration<field::Rat> read_configuration_file(const std::string& path, std::size_t n);

}  // namespace lpr::io
