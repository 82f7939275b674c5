#pragma once

#include <set>
#include <string>

#include "lpr/graph.hpp"
#include "lpr/rational.hpp"
#include "lpr/rigidity.hpp"
#include "lpr/rng.hpp"

namespace lpr::constructions {

// Deletes edge e = v1v2, adds two fresh vertices u1, u2 (indices n, n+1)
// and the five edges v1u1, v1u2, v2u1, v2u2, u1u2.
graphs::Graph k4_minus_extension(const graphs::Graph& g, graphs::Edge e);

// Splits v into v (keeping the neighbours outside n0) and a fresh vertex
// v0 (index n) joined to n0, plus the edges v0-v and v0-x.
graphs::Graph generalized_vertex_split(const graphs::Graph& g, std::uint32_t v,
                                       const std::set<std::uint32_t>& n0, std::uint32_t x);

// Replaces e = v1v2 by a path v1 - v0 - v2 through a fresh vertex.
graphs::Graph subdivide_edge(const graphs::Graph& g, graphs::Edge e);

enum class BaseName { K5minus, B1, K3_1d };

// Framework with an exact rational configuration and a distinguished exact
// self-stress.
struct Framework {
  graphs::Graph graph;
  rigidity::Configuration<field::Rat> config;
  std::vector<field::Rat> stress;
  int p = 4;
};

// The explicit base frameworks with their closed-form stresses, evaluated
// at the given exponent.  Self-validates: the stress satisfies the
// equilibrium condition exactly, the rigidity matrix has rank d*n - d, and
// the designated coordinated Laplacian has rank n - 2.
Framework base_framework(BaseName name, rigidity::PExponent p);

// K4^- extension at the framework level: the two fresh vertices are placed
// on the axis-aligned rectangle spanned by the endpoints of e, and the
// stress transfers in closed form.  Postconditions (checked exactly):
// rank J' = 2n' - 2, rank of the first-coordinated Laplacian = n' - 2, and
// the Schur complement at the two fresh vertices reproduces the parent
// Laplacian.  Requires w(e) != 0 and endpoints differing on both axes.
Framework k4_extension_framework_transfer(const Framework& fw, graphs::Edge e);

// Edge subdivision at the framework level (1-dimensional): the fresh vertex
// sits at the midpoint and the two new edges carry 2^(p-1) w(e).  Checked
// exactly: rank J' = n' - 1, rank of the coordinated Laplacian = n' - 2,
// Schur complement at the fresh vertex reproduces the parent Laplacian.
Framework subdivision_framework_transfer(const Framework& fw, graphs::Edge e);

struct CorpusEntry {
  graphs::Graph graph;
  std::vector<std::string> trace;  // construction steps from the base graph
};

// Random members of the 2-connected redundantly 2-tree-connected class,
// generated from K5^- / B1 by K4^- extensions, edge additions and
// generalised vertex splits; candidates that break the class invariants
// are discarded and retried.  Deterministic given the seed; the first two
// entries are the bases themselves.
std::vector<CorpusEntry> generate_corpus(std::size_t count, std::size_t max_n,
                                         std::uint64_t seed);

}  // namespace lpr::constructions
