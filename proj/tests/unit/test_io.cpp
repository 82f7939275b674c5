#include <doctest.h>

#include <sstream>

#include "lpr/graph_io.hpp"

using lpr::graphs::Graph;

TEST_CASE("graph file parsing") {
  std::istringstream in("# a comment\n4 3\n0 1\n\n1 2\n# another\n2 3\n");
  const auto g = lpr::io::read_graph(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("graph file rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return lpr::io::read_graph(in);
  };
  CHECK_THROWS_AS((void)parse(""), lpr::ParseError);
  CHECK_THROWS_AS((void)parse("3\n"), lpr::ParseError);
  CHECK_THROWS_AS((void)parse("3 1\n1 1\n"), lpr::ParseError);      // self-loop
  CHECK_THROWS_AS((void)parse("3 2\n0 1\n0 1\n"), lpr::ParseError);  // duplicate
  CHECK_THROWS_AS((void)parse("3 1\n1 0\n"), lpr::ParseError);      // u >= v
  CHECK_THROWS_AS((void)parse("3 1\n0 3\n"), lpr::ParseError);      // out of range
  CHECK_THROWS_AS((void)parse("3 2\n0 1\n"), lpr::ParseError);      // too few edges
  CHECK_THROWS_AS((void)parse("3 1\n0 1\n0 2\n"), lpr::ParseError);  // trailing data
  CHECK_THROWS_AS((void)parse("3 1\n0 1 2\n"), lpr::ParseError);    // bad edge line
}

TEST_CASE("round trip is stable") {
  const auto g = lpr::graphs::k5_minus();
  const auto text = lpr::io::write_graph(g);
  std::istringstream in(text);
  const auto g2 = lpr::io::read_graph(in);
  CHECK(g == g2);
  CHECK(lpr::io::write_graph(g2) == text);

  // comments and whitespace normalize away
  std::istringstream noisy("# hello\n 5   9 \n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n");
  CHECK(lpr::io::write_graph(lpr::io::read_graph(noisy)) == text);
}

TEST_CASE("configuration files parse exact rationals") {
  std::istringstream in("# config\n0 0\n1 0\n1/2 -3/4\n");
  const auto c = lpr::io::read_configuration(in, 3);
  CHECK(c.n == 3);
  CHECK(c.d == 2);
  CHECK(c.at(2, 0) == lpr::field::Rat(1) / 2);
  CHECK(c.at(2, 1) == lpr::field::Rat(-3) / 4);

  std::istringstream bad("0 0\n1\n");
  CHECK_THROWS_AS((void)lpr::io::read_configuration(bad, 2), lpr::ParseError);
  std::istringstream bad2("0 0\n1 1/0\n");
  CHECK_THROWS_AS((void)lpr::io::read_configuration(bad2, 2), lpr::ParseError);
}

TEST_CASE("rational token parsing") {
  CHECK(lpr::field::parse_rational("3/6") == lpr::field::Rat(1) / 2);
  CHECK(lpr::field::parse_rational("-2") == lpr::field::Rat(-2));
  CHECK(lpr::field::to_string(lpr::field::Rat(1) / 2) == "1/2");
  CHECK(lpr::field::to_string(lpr::field::Rat(-7)) == "-7");
  CHECK_THROWS_AS((void)lpr::field::parse_rational("a/b"), lpr::ParseError);
  CHECK_THROWS_AS((void)lpr::field::parse_rational("1/ 2"), lpr::ParseError);
  CHECK_THROWS_AS((void)lpr::field::parse_rational(""), lpr::ParseError);
}
