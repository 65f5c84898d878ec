#include "graphwave/rothe.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace graphwave {

Eigen::VectorXd cg_solve(const Eigen::SparseMatrix<double>& a,
                         const Eigen::VectorXd& rhs, double tol) {
  const Eigen::Index n = rhs.size();
  const double rhs_norm = rhs.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (rhs_norm == 0.0) return x;

  Eigen::VectorXd r = rhs;
  Eigen::VectorXd p = r;
  double rho = r.squaredNorm();
  const Eigen::Index max_iter = 10 * n;
  for (Eigen::Index it = 0; it < max_iter; ++it) {
    if (std::sqrt(rho) <= tol * rhs_norm) return x;
    const Eigen::VectorXd ap = a * p;
    const double alpha = rho / p.dot(ap);
    x += alpha * p;
    r -= alpha * ap;
    const double rho_next = r.squaredNorm();
    p = r + (rho_next / rho) * p;
    rho = rho_next;
  }
  if (std::sqrt(rho) <= tol * rhs_norm) return x;
  std::ostringstream msg;
  msg << "conjugate gradients did not converge: relative residual "
      << std::sqrt(rho) / rhs_norm << " after " << max_iter << " iterations";
  throw std::runtime_error(msg.str());
}

Eigen::VectorXd linear_solve_spd(const SymmetrizedOperator& sym, double shift,
                                 const Eigen::VectorXd& rhs) {
  Eigen::SparseMatrix<double> shifted = sym.matrix;
  Eigen::SparseMatrix<double> eye(sym.n, sym.n);
  eye.setIdentity();
  shifted += shift * eye;
  const Eigen::VectorXd y = cg_solve(shifted, sym.to_symmetrized(rhs));
  return sym.to_original(y);
}

Eigen::VectorXd rothe_step(const SymmetrizedOperator& sym,
                           const Eigen::VectorXd& u_prev,
                           const Eigen::VectorXd& u_prev2,
                           const Eigen::VectorXd& f_i, double ell) {
  if (ell <= 0.0) throw std::invalid_argument("step length must be positive");
  const double inv_ell2 = 1.0 / (ell * ell);
  const Eigen::VectorXd rhs = f_i + inv_ell2 * (2.0 * u_prev - u_prev2);
  return linear_solve_spd(sym, inv_ell2, rhs);
}

double functional_value(const DirichletDomain& dom, const VertexFunction& u,
                        const VertexFunction& u_prev,
                        const VertexFunction& u_prev2,
                        const VertexFunction& f_i, double ell) {
  const WeightedGraph& g = dom.graph();
  const double inv_ell2 = 1.0 / (ell * ell);
  double value = gradient_energy(dom, u);
  value += inv_ell2 * inner_product(g, u, u, dom.omega());
  for (int x : dom.omega()) {
    value += 2.0 * inv_ell2 * (-2.0 * u_prev(x) + u_prev2(x)) * u(x) * g.mu(x);
  }
  value -= 2.0 * inner_product(g, f_i, u, dom.omega());
  return value;
}

RotheRun solve_rothe(const WaveProblem& problem, double T, int n) {
  if (T <= 0.0) throw std::invalid_argument("horizon must be positive");
  if (n < 1) throw std::invalid_argument("need at least one step");
  const DirichletDomain& dom = *problem.domain;
  const AssembledOperators ops = assemble(dom);

  RotheRun run;
  run.domain = &dom;
  run.n = n;
  run.T = T;
  run.ell = T / n;
  run.step_warning = run.ell > 1.0;

  const Eigen::VectorXd g = problem.g.interior_values(dom);
  const Eigen::VectorXd h = problem.h.interior_values(dom);
  run.u_minus1 = g - run.ell * h;
  run.f0 = forcing_interior(problem, 0.0);
  run.u.reserve(n + 1);
  run.u.push_back(g);
  run.delta.reserve(n + 1);
  run.delta.push_back((run.u[0] - run.u_minus1) / run.ell);  // = h
  run.delta2.reserve(n);
  run.f.reserve(n);

  for (int i = 1; i <= n; ++i) {
    run.f.push_back(forcing_interior(problem, run.t(i)));
    const Eigen::VectorXd& prev = run.u[i - 1];
    const Eigen::VectorXd& prev2 = i >= 2 ? run.u[i - 2] : run.u_minus1;
    run.u.push_back(rothe_step(ops.sym, prev, prev2, run.f.back(), run.ell));
    run.delta.push_back((run.u[i] - run.u[i - 1]) / run.ell);
    run.delta2.push_back((run.delta[i] - run.delta[i - 1]) / run.ell);
  }
  return run;
}

namespace {

// Index of the interval (t_{i-1}, t_i] containing t, clamped to [1, n].
int interval_of(const RotheRun& run, double t) {
  if (t <= 0.0) return 1;
  int i = static_cast<int>(std::ceil(t / run.ell - 1e-12));
  return std::min(std::max(i, 1), run.n);
}

double l2_norm_interior(const RotheRun& run, const Eigen::VectorXd& v) {
  const DirichletDomain& dom = *run.domain;
  double s = 0.0;
  for (int j = 0; j < dom.interior_size(); ++j) {
    s += v(j) * v(j) * dom.graph().mu(dom.interior()[j]);
  }
  return std::sqrt(s);
}

}  // namespace

Eigen::VectorXd RotheInterpolants::u_lin(double t) const {
  const int i = interval_of(*run, t);
  return run->u[i - 1] + (t - run->t(i - 1)) * run->delta[i];
}

Eigen::VectorXd RotheInterpolants::delta_u_lin(double t) const {
  const int i = interval_of(*run, t);
  return run->delta[i - 1] + (t - run->t(i - 1)) * run->delta2[i - 1];
}

Eigen::VectorXd RotheInterpolants::u_bar(double t) const {
  if (t < -run->ell || t > run->T) {
    throw std::domain_error("interpolant queried outside [-ell, T]");
  }
  if (t <= 0.0) return run->u[0];  // g on the interior, 0 on the boundary
  return run->u[interval_of(*run, t)];
}

Eigen::VectorXd RotheInterpolants::delta_u_bar(double t) const {
  if (t < -run->ell || t > run->T) {
    throw std::domain_error("interpolant queried outside [-ell, T]");
  }
  if (t <= 0.0) return run->delta[0];  // = h
  return run->delta[interval_of(*run, t)];
}

Eigen::VectorXd RotheInterpolants::f_bar(double t) const {
  if (t < 0.0 || t > run->T) {
    throw std::domain_error("forcing interpolant queried outside [0, T]");
  }
  if (t == 0.0) return run->f0;  // f(0, .), not f^1
  return run->f[interval_of(*run, t) - 1];
}

AprioriBounds compute_apriori_bounds(const WaveProblem& problem, double T) {
  const DirichletDomain& dom = *problem.domain;
  const AssembledOperators ops = assemble(dom);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ops.sym.dense());
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const double lambda1 = eig.eigenvalues()(0);
  if (lambda1 <= 1e-12) {
    throw std::runtime_error(
        "lambda_1 is not positive: boundary missing or disconnected "
        "interior component touching no boundary");
  }

  AprioriBounds b;
  b.sobolev_C = 1.0 / lambda1;
  b.c_tilde = problem.holder && problem.holder->c_tilde
                  ? *problem.holder->c_tilde
                  : empirical_c_tilde(problem, T);

  const double grad_u0 = gradient_energy(dom, problem.g);
  const double delta_u0 = l2_norm_sq(dom, problem.h);
  const double eT = std::exp(T);
  b.C0 = eT * (grad_u0 + delta_u0) + b.c_tilde * T * eT;
  b.C1 = b.sobolev_C * b.C0;

  const double M = dom.omega_size();
  const double d_mu = compute_d_mu(dom.graph());
  b.C2 = 4.0 * M * M * d_mu * d_mu * b.C1 + 2.0 * b.c_tilde;
  return b;
}

BoundsReport verify_bounds(const RotheRun& run, const AprioriBounds& bounds) {
  if (run.ell > 1.0) {
    throw std::invalid_argument(
        "bound constants are only proven for step length <= 1");
  }
  const DirichletDomain& dom = *run.domain;
  BoundsReport report;
  auto norm2 = [&](const Eigen::VectorXd& v) {
    const double norm = l2_norm_interior(run, v);
    return norm * norm;
  };
  auto check = [&](double value, double bound, double& max_ratio, int i,
                   const char* what) {
    const double ratio = bound > 0.0 ? value / bound : (value > 0.0 ? 2.0 : 0.0);
    max_ratio = std::max(max_ratio, ratio);
    if (value > bound && report.ok) {
      report.ok = false;
      report.failing_level = i;
      report.failing_quantity = what;
    }
  };
  for (int i = 1; i <= run.n; ++i) {
    check(norm2(run.delta[i]), bounds.C0, report.max_ratio_delta, i,
          "delta u");
    check(gradient_energy(dom, run.level(i)), bounds.C0,
          report.max_ratio_grad, i, "grad u");
    check(norm2(run.u[i]), bounds.C1, report.max_ratio_u, i, "u");
    check(norm2(run.delta2[i - 1]), bounds.C2, report.max_ratio_delta2, i,
          "delta2 u");
  }
  return report;
}

InterpolantGapReport verify_interpolant_gaps(const RotheRun& run,
                                             const AprioriBounds& bounds) {
  InterpolantGapReport report;
  report.gap_bound =
      2.0 * run.T * (std::sqrt(bounds.C0) + std::sqrt(bounds.C2)) / run.n;
  report.lipschitz_bound = std::sqrt(bounds.C0) + std::sqrt(bounds.C2);

  const RotheInterpolants interp{&run};
  const int fine = 4 * run.n > 4096 ? 4096 : 4 * run.n;
  std::vector<double> ts(fine + 1);
  for (int i = 0; i <= fine; ++i) ts[i] = run.T * i / fine;

  for (double t : ts) {
    const double gap = l2_norm_interior(run, interp.u_lin(t) - interp.u_bar(t)) +
                       l2_norm_interior(run, interp.delta_u_lin(t) -
                                                 interp.delta_u_bar(t));
    report.max_gap = std::max(report.max_gap, gap);
  }
  if (report.max_gap > report.gap_bound) report.ok = false;

  // Lipschitz in time on sampled pairs.
  for (size_t a = 0; a < ts.size(); a += 7) {
    for (size_t b = a + 1; b < ts.size(); b += 13) {
      const double dt = ts[b] - ts[a];
      if (dt <= 0.0) continue;
      const double gap =
          l2_norm_interior(run, interp.u_lin(ts[b]) - interp.u_lin(ts[a])) +
          l2_norm_interior(run,
                           interp.delta_u_lin(ts[b]) - interp.delta_u_lin(ts[a]));
      report.max_lipschitz = std::max(report.max_lipschitz, gap / dt);
    }
  }
  if (report.max_lipschitz > report.lipschitz_bound) report.ok = false;
  return report;
}

double scheme_identity_residual(const RotheRun& run) {
  const DirichletDomain& dom = *run.domain;
  const AssembledOperators ops = assemble(dom);
  double worst = 0.0;
  for (int i = 1; i <= run.n; ++i) {
    const Eigen::VectorXd r =
        ops.op.apply(run.u[i]) + run.delta2[i - 1] - run.f[i - 1];
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace graphwave
