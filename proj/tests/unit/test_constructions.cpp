#include <doctest.h>

#include "lpr/connectivity.hpp"
#include "lpr/constructions.hpp"
#include "lpr/tree_packing.hpp"

using lpr::Rng;
using lpr::field::Rat;
using lpr::field::RationalField;
using lpr::graphs::Edge;
using lpr::graphs::Graph;
using lpr::rigidity::PExponent;
namespace cons = lpr::constructions;

TEST_CASE("K4- extension shape") {
  const auto k4 = lpr::graphs::complete_graph(4);
  const auto g = cons::k4_minus_extension(k4, {0, 1});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == k4.edge_count() + 4);
  CHECK_FALSE(g.has_edge(0, 1));
  for (auto e : {Edge{0, 4}, Edge{0, 5}, Edge{1, 4}, Edge{1, 5}, Edge{4, 5}})
    CHECK(g.has_edge(e.u, e.v));
  CHECK_THROWS_AS((void)cons::k4_minus_extension(g, {0, 1}), lpr::EdgeNotFound);
}

TEST_CASE("generalized vertex split shape and errors") {
  const auto k4 = lpr::graphs::complete_graph(4);

  // empty n0: new vertex keeps only the splitting edge and the x edge
  const auto g0 = cons::generalized_vertex_split(k4, 0, {}, 2);
  CHECK(g0.vertex_count() == 5);
  CHECK(g0.edge_count() == 8);
  CHECK(g0.has_edge(0, 4));
  CHECK(g0.has_edge(2, 4));
  CHECK(g0.has_edge(0, 1));  // old neighbours stay with v

  // full n0: the fresh vertex inherits every neighbour (x must then be a
  // non-neighbour of v, so use C5)
  const auto c5 = lpr::graphs::cycle_graph(5);
  const auto g1 = cons::generalized_vertex_split(c5, 0, {1, 4}, 2);
  CHECK(g1.vertex_count() == 6);
  CHECK(g1.edge_count() == 7);
  CHECK(g1.has_edge(1, 5));
  CHECK(g1.has_edge(4, 5));
  CHECK(g1.has_edge(2, 5));
  CHECK(g1.has_edge(0, 5));
  CHECK_FALSE(g1.has_edge(0, 1));

  CHECK_THROWS_AS((void)cons::generalized_vertex_split(k4, 0, {1}, 1), lpr::InvalidSplit);
  CHECK_THROWS_AS((void)cons::generalized_vertex_split(k4, 0, {1}, 0), lpr::InvalidSplit);
  // n0 not a subset of N(v): 0 is not its own neighbour
  CHECK_THROWS_AS((void)cons::generalized_vertex_split(k4, 1, {0, 1}, 2), lpr::InvalidSplit);
}

TEST_CASE("vertex and edge counts after split on random applications") {
  Rng rng(401);
  auto corpus = cons::generate_corpus(20, 10, 77);
  std::size_t applied = 0;
  for (const auto& entry : corpus) {
    const auto& g = entry.graph;
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    const auto adj = g.adjacency();
    const auto v = static_cast<std::uint32_t>(rng.below(n));
    std::set<std::uint32_t> n0;
    for (auto u : adj[v])
      if (rng.coin()) n0.insert(u);
    std::vector<std::uint32_t> xs;
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && !n0.count(u)) xs.push_back(u);
    if (xs.empty()) continue;
    const auto g2 = cons::generalized_vertex_split(g, v, n0, xs[rng.below(xs.size())]);
    CHECK(g2.vertex_count() == g.vertex_count() + 1);
    CHECK(g2.edge_count() == g.edge_count() + 2);
    ++applied;
  }
  CHECK(applied >= 15);
}

TEST_CASE("edge subdivision shape") {
  const auto c3 = lpr::graphs::cycle_graph(3);
  const auto c4 = cons::subdivide_edge(c3, {0, 1});
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(lpr::graphs::is_two_connected(c4));

  const auto k4 = lpr::graphs::complete_graph(4);
  const auto s = cons::subdivide_edge(k4, {2, 3});
  CHECK(s.vertex_count() == 5);
  CHECK(s.edge_count() == 7);
  CHECK_THROWS_AS((void)cons::subdivide_edge(k4, {0, 5}), lpr::EdgeNotFound);
}

TEST_CASE("subdivision preserves 2-connectivity on a corpus") {
  Rng rng(409);
  const auto corpus = cons::generate_corpus(50, 11, 500);
  std::size_t checked = 0;
  for (const auto& entry : corpus) {
    const auto& g = entry.graph;
    const auto e = g.edges()[rng.below(g.edge_count())];
    CHECK(lpr::graphs::is_two_connected(cons::subdivide_edge(g, e)));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("K4- extension preserves the class on a corpus") {
  Rng rng(419);
  const auto corpus = cons::generate_corpus(50, 10, 501);
  for (const auto& entry : corpus) {
    const auto& g = entry.graph;
    const auto e = g.edges()[rng.below(g.edge_count())];
    const auto g2 = cons::k4_minus_extension(g, e);
    CHECK(lpr::graphs::is_two_connected(g2));
    CHECK(lpr::graphs::is_redundantly_two_tree_connected(g2));
  }
}

TEST_CASE("base frameworks validate and match the known closed forms") {
  for (int pv : {4, 6, 8}) {
    const PExponent p(pv);
    const auto k5m = cons::base_framework(cons::BaseName::K5minus, p);
    CHECK(k5m.graph == lpr::graphs::k5_minus());
    const auto b1 = cons::base_framework(cons::BaseName::B1, p);
    CHECK(b1.graph == lpr::graphs::b1_graph());
    const auto k3 = cons::base_framework(cons::BaseName::K3_1d, p);
    CHECK(k3.graph == lpr::graphs::complete_graph(3));
  }
  const auto k5m = cons::base_framework(cons::BaseName::K5minus, PExponent(4));
  CHECK(k5m.stress == std::vector<Rat>{Rat(18), Rat(18), Rat(-2), Rat(-2), Rat(-16), Rat(2),
                                       Rat(7) / 4, Rat(7) / 4, Rat(2)});
  const auto b1 = cons::base_framework(cons::BaseName::B1, PExponent(4));
  CHECK(b1.stress == std::vector<Rat>{Rat(7), Rat(1), Rat(-1), Rat(-1), Rat(-1), Rat(0), Rat(1),
                                      Rat(1), Rat(-1), Rat(1), Rat(-7)});
}

TEST_CASE("K4- framework transfer certifies rank and Schur identities") {
  const RationalField fq;
  for (int pv : {4, 6}) {
    const PExponent p(pv);
    auto fw = cons::base_framework(cons::BaseName::K5minus, p);
    // edge (0,3): stress -2 != 0, endpoints (0,0) and (2,1) differ on both axes
    const auto fw2 = cons::k4_extension_framework_transfer(fw, {0, 3});
    CHECK(fw2.graph.vertex_count() == 7);
    CHECK(fw2.graph.edge_count() == 13);
    CHECK(lpr::rigidity::is_self_stress(fq, fw2.graph, fw2.config, fw2.stress, p));
    // the transfer itself asserts rank J' = 2n' - 2, rank L' = n' - 2 and
    // the Schur identity; do one more extension on a fresh valid edge
    for (std::size_t i = 0; i < fw2.graph.edge_count(); ++i) {
      const auto e = fw2.graph.edges()[i];
      if (sgn(fw2.stress[i]) == 0) continue;
      if (fw2.config.at(e.u, 0) == fw2.config.at(e.v, 0)) continue;
      if (fw2.config.at(e.u, 1) == fw2.config.at(e.v, 1)) continue;
      const auto fw3 = cons::k4_extension_framework_transfer(fw2, e);
      CHECK(fw3.graph.vertex_count() == 9);
      break;
    }
  }

  // error paths
  const auto b1 = cons::base_framework(cons::BaseName::B1, PExponent(4));
  // edge (1,4) carries stress 0
  CHECK_THROWS_AS((void)cons::k4_extension_framework_transfer(b1, {1, 4}),
                  lpr::ZeroStressOnEdge);
  // edge (0,1) endpoints share the y coordinate
  CHECK_THROWS_AS((void)cons::k4_extension_framework_transfer(b1, {0, 1}), lpr::DegenerateEdge);
}

TEST_CASE("subdivision framework transfer certifies rank and Schur identities in d = 1") {
  for (int pv : {4, 6}) {
    const PExponent p(pv);
    auto fw = cons::base_framework(cons::BaseName::K3_1d, p);
    for (int step = 0; step < 4; ++step) {
      // subdivide the first edge with nonzero stress
      bool done = false;
      for (std::size_t i = 0; i < fw.graph.edge_count() && !done; ++i) {
        if (sgn(fw.stress[i]) == 0) continue;
        fw = cons::subdivision_framework_transfer(fw, fw.graph.edges()[i]);
        done = true;
      }
      REQUIRE(done);
    }
    CHECK(fw.graph.vertex_count() == 7);
  }
}

TEST_CASE("corpus generation") {
  const auto corpus = cons::generate_corpus(30, 12, 1234);
  REQUIRE(corpus.size() == 30);
  CHECK(corpus[0].graph == lpr::graphs::k5_minus());
  CHECK(corpus[1].graph == lpr::graphs::b1_graph());
  for (const auto& entry : corpus) {
    CHECK(entry.graph.vertex_count() <= 12);
    CHECK(lpr::graphs::is_two_connected(entry.graph));
    CHECK(lpr::graphs::is_redundantly_two_tree_connected(entry.graph));
    CHECK(entry.graph.edge_count() >= 2 * entry.graph.vertex_count() - 1);
    CHECK_FALSE(entry.trace.empty());
  }

  // deterministic per seed
  const auto again = cons::generate_corpus(30, 12, 1234);
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i].graph == again[i].graph);
}
