#pragma once

#include <string>
#include <vector>

#include "graphwave/operators.hpp"
#include "graphwave/problem.hpp"

namespace graphwave {

/// Conjugate gradients on a symmetric positive definite matrix, relative
/// residual 1e-13, iteration cap 10N. Throws (with the residual in the
/// message) if the cap is hit.
Eigen::VectorXd cg_solve(const Eigen::SparseMatrix<double>& a,
                         const Eigen::VectorXd& rhs, double tol = 1e-13);

/// Solves (L + shift I) u = rhs in the symmetrized frame: CG on
/// (S + shift I) y = M^{1/2} rhs, then u = M^{-1/2} y.
Eigen::VectorXd linear_solve_spd(const SymmetrizedOperator& sym, double shift,
                                 const Eigen::VectorXd& rhs);

/// One implicit time level: the unique solution of
///   (L + l^-2 I) u^i = f^i + l^-2 (2 u^{i-1} - u^{i-2})
/// on the interior. All vectors are in the interior ordering.
Eigen::VectorXd rothe_step(const SymmetrizedOperator& sym,
                           const Eigen::VectorXd& u_prev,
                           const Eigen::VectorXd& u_prev2,
                           const Eigen::VectorXd& f_i, double ell);

/// F_i(u) = (grad u, grad u) + l^-2 (u,u) + 2 l^-2 (-2u^{i-1}+u^{i-2}, u)
///          - 2 (f^i, u); each discrete level is its unique minimizer.
double functional_value(const DirichletDomain& dom, const VertexFunction& u,
                        const VertexFunction& u_prev,
                        const VertexFunction& u_prev2,
                        const VertexFunction& f_i, double ell);

/// Full discrete trajectory. All level vectors are in the interior
/// ordering; every level vanishes on the boundary by construction.
struct RotheRun {
  const DirichletDomain* domain = nullptr;
  int n = 0;
  double T = 0.0;
  double ell = 0.0;
  bool step_warning = false;  // ell > 1: bound constants unproven

  Eigen::VectorXd u_minus1;             // g - ell h
  Eigen::VectorXd f0;                   // f(0, .)
  std::vector<Eigen::VectorXd> u;       // i = 0..n
  std::vector<Eigen::VectorXd> delta;   // i = 0..n
  std::vector<Eigen::VectorXd> delta2;  // i = 1..n (index i-1)
  std::vector<Eigen::VectorXd> f;       // f^i = f(t_i, .), i = 1..n

  double t(int i) const { return ell * i; }

  VertexFunction level(int i) const { return extend_interior(*domain, u.at(i)); }
};

RotheRun solve_rothe(const WaveProblem& problem, double T, int n);

/// Piecewise interpolants of a completed run, following the step-function
/// conventions on (t_{i-1}, t_i] and the [-ell, 0] initial extensions.
struct RotheInterpolants {
  const RotheRun* run;

  Eigen::VectorXd u_lin(double t) const;        // u^{(n)}: piecewise linear
  Eigen::VectorXd delta_u_lin(double t) const;  // delta u^{(n)}
  Eigen::VectorXd u_bar(double t) const;        // step; g on [-ell, 0]
  Eigen::VectorXd delta_u_bar(double t) const;  // step; h on [-ell, 0]
  Eigen::VectorXd f_bar(double t) const;        // step; f(0,.) at t = 0
};

/// A-priori constants of the discrete trajectory.
struct AprioriBounds {
  double C0 = 0.0;  // e^T (||grad u^0||^2 + ||delta u^0||^2) + c~ T e^T
  double C1 = 0.0;  // sobolev_C * C0
  double C2 = 0.0;  // 4 M^2 D_mu^2 C1 + 2 c~
  double sobolev_C = 0.0;  // 1 / lambda_1
  double c_tilde = 0.0;
};

AprioriBounds compute_apriori_bounds(const WaveProblem& problem, double T);

struct BoundsReport {
  bool ok = true;
  double max_ratio_delta = 0.0;   // ||delta u^i||^2 / C0
  double max_ratio_grad = 0.0;    // ||grad u^i||^2 / C0
  double max_ratio_u = 0.0;       // ||u^i||^2 / C1
  double max_ratio_delta2 = 0.0;  // ||delta^2 u^i||^2 / C2
  int failing_level = -1;
  std::string failing_quantity;
};

/// Checks the four level bounds for every i. Throws if ell > 1 (the
/// constants are only proven for ell <= 1).
BoundsReport verify_bounds(const RotheRun& run, const AprioriBounds& bounds);

struct InterpolantGapReport {
  bool ok = true;
  double max_gap = 0.0;        // vs 2T(sqrt(C0)+sqrt(C2))/n
  double gap_bound = 0.0;
  double max_lipschitz = 0.0;  // gap(t,s)/|t-s| vs sqrt(C0)+sqrt(C2)
  double lipschitz_bound = 0.0;
};

/// Samples a fine grid and checks the step-function gap and the
/// Lipschitz-in-time bound.
InterpolantGapReport verify_interpolant_gaps(const RotheRun& run,
                                             const AprioriBounds& bounds);

/// max over levels and interior vertices of |-Delta_Omega u^i + delta^2
/// u^i - f^i| (the pointwise scheme identity).
double scheme_identity_residual(const RotheRun& run);

}  // namespace graphwave
