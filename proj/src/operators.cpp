#include "graphwave/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace graphwave {

AssembledOperators assemble(const DirichletDomain& dom) {
  const WeightedGraph& g = dom.graph();
  const int n = dom.interior_size();

  std::vector<Eigen::Triplet<double>> lt, st;
  for (int j = 0; j < n; ++j) {
    const int x = dom.interior()[j];
    const double mx = g.degree_weight(x);
    lt.emplace_back(j, j, mx / g.mu(x));
    st.emplace_back(j, j, mx / g.mu(x));
    for (const Neighbor& nb : g.neighbors(x)) {
      const int k = dom.interior_index(nb.vertex);
      if (k < 0) continue;  // boundary/exterior: zero-extension, diagonal only
      lt.emplace_back(j, k, -nb.weight / g.mu(x));
      // S is assembled from the symmetric expression; j<k entries are
      // mirrored so storage is exactly symmetric.
      if (j < k) {
        const double s =
            -nb.weight / std::sqrt(g.mu(x) * g.mu(nb.vertex));
        st.emplace_back(j, k, s);
        st.emplace_back(k, j, s);
      }
    }
  }

  AssembledOperators out;
  out.op.n = n;
  out.op.matrix.resize(n, n);
  out.op.matrix.setFromTriplets(lt.begin(), lt.end());
  out.sym.n = n;
  out.sym.matrix.resize(n, n);
  out.sym.matrix.setFromTriplets(st.begin(), st.end());
  out.sym.sqrt_mu.resize(n);
  for (int j = 0; j < n; ++j) {
    out.sym.sqrt_mu(j) = std::sqrt(g.mu(dom.interior()[j]));
  }
  return out;
}

double integrate(const WeightedGraph& g, const VertexFunction& u,
                 std::span<const int> subset) {
  double s = 0.0;
  for (int x : subset) s += u(x) * g.mu(x);
  return s;
}

double inner_product(const WeightedGraph& g, const VertexFunction& u,
                     const VertexFunction& v, std::span<const int> subset) {
  double s = 0.0;
  for (int x : subset) s += u(x) * v(x) * g.mu(x);
  return s;
}

double mu_laplacian(const WeightedGraph& g, const VertexFunction& u, int x) {
  double s = 0.0;
  for (const Neighbor& nb : g.neighbors(x)) {
    s += nb.weight * (u(nb.vertex) - u(x));
  }
  return s / g.mu(x);
}

VertexFunction apply_dirichlet(const DirichletDomain& dom,
                               const VertexFunction& u) {
  const WeightedGraph& g = dom.graph();
  const int n = dom.interior_size();
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) {
    const int x = dom.interior()[j];
    double s = 0.0;
    for (const Neighbor& nb : g.neighbors(x)) {
      const double uy = dom.in_interior(nb.vertex) ? u(nb.vertex) : 0.0;
      s += nb.weight * (uy - u(x));
    }
    out(j) = s / g.mu(x);
  }
  return extend_interior(dom, out);
}

double gradient_form(const WeightedGraph& g, const VertexFunction& u,
                     const VertexFunction& v, int x) {
  double s = 0.0;
  for (const Neighbor& nb : g.neighbors(x)) {
    s += nb.weight * (u(nb.vertex) - u(x)) * (v(nb.vertex) - v(x));
  }
  return s / (2.0 * g.mu(x));
}

double gradient_norm(const WeightedGraph& g, const VertexFunction& u, int x) {
  return std::sqrt(gradient_form(g, u, u, x));
}

double gradient_energy(const DirichletDomain& dom, const VertexFunction& u) {
  const WeightedGraph& g = dom.graph();
  double s = 0.0;
  for (int x : dom.omega()) s += gradient_form(g, u, u, x) * g.mu(x);
  return s;
}

double green_residual(const DirichletDomain& dom, const VertexFunction& u,
                      const VertexFunction& v) {
  const WeightedGraph& g = dom.graph();
  const VertexFunction lu = apply_dirichlet(dom, u);
  double lhs = inner_product(g, lu, v, dom.interior());
  double rhs = 0.0;
  for (int x : dom.omega()) rhs += gradient_form(g, u, v, x) * g.mu(x);
  return lhs + rhs;
}

double sobolev_norm(const DirichletDomain& dom, const VertexFunction& u) {
  const WeightedGraph& g = dom.graph();
  double s = gradient_energy(dom, u);
  for (int x : dom.omega()) s += u(x) * u(x) * g.mu(x);
  return std::sqrt(s);
}

double l2_norm_sq(const DirichletDomain& dom, const VertexFunction& u) {
  return inner_product(dom.graph(), u, u, dom.omega());
}

}  // namespace graphwave
