#pragma once

#include <cstddef>
#include <vector>

#include "lpr/errors.hpp"
#include "lpr/graph.hpp"
#include "lpr/linalg.hpp"
#include "lpr/rng.hpp"

namespace lpr::rigidity {

// Even exponent of the l_p norm; the theory here requires p even, >= 4.
class PExponent {
 public:
  explicit PExponent(int p) : p_(p) {
    if (p < 4 || p % 2 != 0) throw Error("p must be an even integer >= 4");
  }
  int value() const { return p_; }

 private:
  int p_;
};

// Point configuration: n points with d coordinates each, row-major.
template <class E>
struct Configuration {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<E> coords;

  Configuration() = default;
  Configuration(std::size_t n_, std::size_t d_, std::vector<E> coords_)
      : n(n_), d(d_), coords(std::move(coords_)) {
    if (coords.size() != n * d) throw DimensionMismatch("configuration size mismatch");
  }

  const E& at(std::size_t vertex, std::size_t axis) const { return coords[vertex * d + axis]; }
  E& at(std::size_t vertex, std::size_t axis) { return coords[vertex * d + axis]; }
};

template <class F>
typename F::Elem pow_int(const F& f, typename F::Elem base, unsigned e) {
  auto result = f.one();
  while (e) {
    if (e & 1) result = f.mul(result, base);
    base = f.mul(base, base);
    e >>= 1;
  }
  return result;
}

// Axes on which the configuration repeats a value; empty for generic data.
template <class F>
std::vector<std::size_t> degenerate_axes(const F& f, const Configuration<typename F::Elem>& c) {
  std::vector<std::size_t> axes;
  for (std::size_t k = 0; k < c.d; ++k) {
    bool repeated = false;
    for (std::size_t i = 0; i < c.n && !repeated; ++i)
      for (std::size_t j = i + 1; j < c.n && !repeated; ++j)
        if (f.eq(c.at(i, k), c.at(j, k))) repeated = true;
    if (repeated) axes.push_back(k);
  }
  return axes;
}

// Edge measurement (pi_G . f_p^{x d}): for edge uv the sum over axes of
// (u_k - v_k)^p.
template <class F>
std::vector<typename F::Elem> measurement(const F& f, const graphs::Graph& g,
                                          const Configuration<typename F::Elem>& c, PExponent p) {
  if (c.n != g.vertex_count()) throw DimensionMismatch("configuration does not match graph");
  const unsigned pe = static_cast<unsigned>(p.value());
  std::vector<typename F::Elem> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto acc = f.zero();
    for (std::size_t k = 0; k < c.d; ++k) {
      const auto diff = f.sub(c.at(e.u, k), c.at(e.v, k));
      acc = f.add(acc, pow_int(f, diff, pe));
    }
    out.push_back(acc);
  }
  return out;
}

// Jacobian of the measurement map with the constant factor p dropped (it
// does not change rank or kernels).  Rows follow the canonical edge order;
// columns are vertex-major with d axes per vertex.  The row of edge uv has
// (u_k - v_k)^(p-1) in the u block and the negated value in the v block.
template <class F>
field::Matrix<typename F::Elem> rigidity_matrix(const F& f, const graphs::Graph& g,
                                                const Configuration<typename F::Elem>& c,
                                                PExponent p) {
  if (c.n != g.vertex_count()) throw DimensionMismatch("configuration does not match graph");
  const unsigned pm1 = static_cast<unsigned>(p.value() - 1);
  field::Matrix<typename F::Elem> jac(g.edge_count(), c.n * c.d, f.zero());
  for (std::size_t row = 0; row < g.edge_count(); ++row) {
    const auto& e = g.edges()[row];
    for (std::size_t k = 0; k < c.d; ++k) {
      const auto diff = f.sub(c.at(e.u, k), c.at(e.v, k));
      const auto entry = pow_int(f, diff, pm1);
      jac.at(row, e.u * c.d + k) = entry;
      jac.at(row, e.v * c.d + k) = f.neg(entry);  // (-x)^(p-1) = -x^(p-1), p-1 odd
    }
  }
  return jac;
}

// Checks the equilibrium condition: at every vertex and axis the weighted
// powered differences cancel, i.e. w is in the left kernel of the Jacobian.
template <class F>
bool is_self_stress(const F& f, const graphs::Graph& g, const Configuration<typename F::Elem>& c,
                    const std::vector<typename F::Elem>& w, PExponent p) {
  if (w.size() != g.edge_count()) throw DimensionMismatch("stress does not match edge count");
  const auto jac = rigidity_matrix(f, g, c, p);
  const auto residual = field::vec_mat_mul(f, w, jac);
  for (const auto& r : residual)
    if (!f.is_zero(r)) return false;
  return true;
}

// Basis of the self-stress space (left kernel of the rigidity matrix),
// each vector normalized so its first nonzero entry is one.
template <class F>
std::vector<std::vector<typename F::Elem>> stress_basis(const F& f, const graphs::Graph& g,
                                                        const Configuration<typename F::Elem>& c,
                                                        PExponent p) {
  const auto jac = rigidity_matrix(f, g, c, p);
  auto basis = field::left_kernel_basis(f, jac);
  for (const auto& w : basis)
    require(is_self_stress(f, g, c, w, p), "kernel vector fails the equilibrium condition");
  return basis;
}

// Random nonzero combination of independent stress-basis vectors; throws
// NoStress when the stress space is trivial.
template <class F>
std::vector<typename F::Elem> random_stress_combination(
    const F& f, const std::vector<std::vector<typename F::Elem>>& basis, Rng& rng) {
  if (basis.empty()) throw NoStress("the self-stress space is trivial");
  const std::size_t m = basis.front().size();
  std::vector<typename F::Elem> coeffs;
  bool any_nonzero = false;
  while (!any_nonzero) {
    coeffs.clear();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      coeffs.push_back(f.sample(rng));
      if (!f.is_zero(coeffs.back())) any_nonzero = true;
    }
  }
  std::vector<typename F::Elem> w(m, f.zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (std::size_t j = 0; j < m; ++j)
      w[j] = f.add(w[j], f.mul(coeffs[i], basis[i][j]));
  }
  return w;
}

template <class F>
std::vector<typename F::Elem> random_generic_stress(const F& f, const graphs::Graph& g,
                                                    const Configuration<typename F::Elem>& c,
                                                    PExponent p, Rng& rng) {
  return random_stress_combination(f, stress_basis(f, g, c, p), rng);
}

// k-th coordinated stress: w^k(uv) = w(uv) * (v_k - u_k)^(p-2).  The power
// p-2 is even, so edge orientation does not matter.
template <class F>
std::vector<typename F::Elem> coordinated_stress(const F& f, const graphs::Graph& g,
                                                 const Configuration<typename F::Elem>& c,
                                                 const std::vector<typename F::Elem>& w,
                                                 std::size_t axis, PExponent p) {
  if (axis >= c.d) throw DimensionMismatch("axis out of range");
  if (w.size() != g.edge_count()) throw DimensionMismatch("stress does not match edge count");
  const unsigned pm2 = static_cast<unsigned>(p.value() - 2);
  std::vector<typename F::Elem> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const auto diff = f.sub(c.at(e.v, axis), c.at(e.u, axis));
    out.push_back(f.mul(w[i], pow_int(f, diff, pm2)));
  }
  return out;
}

// Weighted Laplacian: -w(uv) off-diagonal on edges, row sums zero.
template <class F>
field::Matrix<typename F::Elem> weighted_laplacian(const F& f, const graphs::Graph& g,
                                                   const std::vector<typename F::Elem>& w) {
  if (w.size() != g.edge_count()) throw DimensionMismatch("weights do not match edge count");
  const std::size_t n = g.vertex_count();
  field::Matrix<typename F::Elem> lap(n, n, f.zero());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    lap.at(e.u, e.v) = f.neg(w[i]);
    lap.at(e.v, e.u) = f.neg(w[i]);
    lap.at(e.u, e.u) = f.add(lap.at(e.u, e.u), w[i]);
    lap.at(e.v, e.v) = f.add(lap.at(e.v, e.v), w[i]);
  }
  return lap;
}

// Rank of the Laplacian weighted by the k-th coordinated stress, for every
// axis k.
template <class F>
std::vector<std::size_t> per_axis_laplacian_ranks(const F& f, const graphs::Graph& g,
                                                  const Configuration<typename F::Elem>& c,
                                                  const std::vector<typename F::Elem>& w,
                                                  PExponent p) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < c.d; ++k) {
    const auto wk = coordinated_stress(f, g, c, w, k, p);
    ranks.push_back(field::rank(f, weighted_laplacian(f, g, wk)));
  }
  return ranks;
}

}  // namespace lpr::rigidity
