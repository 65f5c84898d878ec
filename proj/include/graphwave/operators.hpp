#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "graphwave/graph.hpp"

namespace graphwave {

/// L = -Delta_Omega in the interior ordering: diagonal m(x)/mu(x)
/// (edges to boundary/exterior appear only there, by zero-extension),
/// off-diagonal -omega_xy/mu(x) for interior neighbors. Self-adjoint in
/// the mu-inner product, positive definite when Omega is connected and
/// the boundary is nonempty.
struct OperatorMatrix {
  int n = 0;
  Eigen::SparseMatrix<double> matrix;

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }
  Eigen::VectorXd apply(const Eigen::VectorXd& u) const { return matrix * u; }
};

/// S = M^{1/2} L M^{-1/2}, assembled once from the symmetric formula
/// omega_jk / sqrt(mu_j mu_k) so that S is exactly symmetric in storage.
/// Shares eigenvalues with L.
struct SymmetrizedOperator {
  int n = 0;
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd sqrt_mu;  // interior ordering

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }

  /// Symmetrized frame -> original frame (multiply by M^{-1/2}).
  Eigen::VectorXd to_original(const Eigen::VectorXd& v) const {
    return v.cwiseQuotient(sqrt_mu);
  }
  /// Original frame -> symmetrized frame (multiply by M^{1/2}).
  Eigen::VectorXd to_symmetrized(const Eigen::VectorXd& v) const {
    return v.cwiseProduct(sqrt_mu);
  }
};

struct AssembledOperators {
  OperatorMatrix op;
  SymmetrizedOperator sym;
};

AssembledOperators assemble(const DirichletDomain& dom);

/// Integral of u over `subset` against the measure mu.
double integrate(const WeightedGraph& g, const VertexFunction& u,
                 std::span<const int> subset);

/// (u, v) = sum u(x) v(x) mu(x) over `subset`.
double inner_product(const WeightedGraph& g, const VertexFunction& u,
                     const VertexFunction& v, std::span<const int> subset);

/// mu-Laplacian at x: (1/mu(x)) sum_{y~x} omega_xy (u(y) - u(x)).
double mu_laplacian(const WeightedGraph& g, const VertexFunction& u, int x);

/// Dirichlet Laplacian applied to a function supported on the interior;
/// returns a function supported on the interior.
VertexFunction apply_dirichlet(const DirichletDomain& dom,
                               const VertexFunction& u);

/// Gradient form Gamma(u,v)(x) = (1/2mu(x)) sum omega_xy (du)(dv).
double gradient_form(const WeightedGraph& g, const VertexFunction& u,
                     const VertexFunction& v, int x);

/// |grad u|(x) = sqrt(Gamma(u,u)(x)).
double gradient_norm(const WeightedGraph& g, const VertexFunction& u, int x);

/// Gradient energy of u over Omega (boundary vertices included via
/// zero-extension): integral of Gamma(u,u) over Omega.
double gradient_energy(const DirichletDomain& dom, const VertexFunction& u);

/// Green's identity defect: integral over the interior of
/// Delta_Omega u . v dmu plus the integral of Gamma(u,v) over Omega.
/// Lemma-exact zero up to roundoff.
double green_residual(const DirichletDomain& dom, const VertexFunction& u,
                      const VertexFunction& v);

/// ||u||_{W^{1,2}(Omega)} = sqrt( int_Omega |grad u|^2 + int_Omega |u|^2 ).
double sobolev_norm(const DirichletDomain& dom, const VertexFunction& u);

/// L2(Omega) squared norm of a function vanishing on the boundary.
double l2_norm_sq(const DirichletDomain& dom, const VertexFunction& u);

}  // namespace graphwave
