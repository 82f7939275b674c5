#include "lpr/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace lpr::io {

namespace {

// Next line that carries data: comments ('#' first non-space) and blank
// lines are skipped.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long parse_count(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " '" + tok + "'");
  }
}

}  // namespace

graphs::Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing header line 'n m'");
  const auto header = tokens_of(line);
  if (header.size() != 2) throw ParseError("header must be 'n m'");
  const long n = parse_count(header[0], "vertex count");
  const long m = parse_count(header[1], "edge count");

  std::vector<graphs::Edge> edges;
  for (long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    const auto toks = tokens_of(line);
    if (toks.size() != 2) throw ParseError("edge line must be 'u v': '" + line + "'");
    const long u = parse_count(toks[0], "endpoint");
    const long v = parse_count(toks[1], "endpoint");
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v: '" + line + "'");
    if (v >= n) throw ParseError("endpoint out of range: '" + line + "'");
    edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  if (next_data_line(in, line)) throw ParseError("trailing data after edge list: '" + line + "'");
  try {
    return graphs::Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

graphs::Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

std::string write_graph(const graphs::Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_graph_file(const graphs::Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file '" + path + "'");
  out << write_graph(g);
}

rigidity::Configuration<field::Rat> read_configuration(std::istream& in, std::size_t n) {
  std::string line;
  std::vector<field::Rat> coords;
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("expected " + std::to_string(n) + " configuration rows, got " +
                       std::to_string(i));
    const auto toks = tokens_of(line);
    if (i == 0) {
      d = toks.size();
      if (d == 0) throw ParseError("empty configuration row");
    } else if (toks.size() != d) {
      throw ParseError("configuration rows must all have " + std::to_string(d) + " entries");
    }
    for (const auto& tok : toks) coords.push_back(field::parse_rational(tok));
  }
  if (next_data_line(in, line))
    throw ParseError("trailing data after configuration: '" + line + "'");
  return rigidity::Configuration<field::Rat>(n, d, std::move(coords));
}

rigidity::Configuration<field::Rat> read_configuration_file(const std::string& path,
                                                            std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration file '" + path + "'");
  return read_configuration(in, n);
}

}  // namespace lpr::io
