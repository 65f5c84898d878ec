#pragma once

#include <vector>

#include "graphwave/rothe.hpp"
#include "graphwave/spectral.hpp"

namespace graphwave {

/// Sup errors of Rothe runs against the spectral oracle, with empirical
/// orders between consecutive n values.
struct ConvergenceReport {
  std::vector<int> n_values;
  std::vector<double> errors;  // sup over grid times and interior vertices
  std::vector<double> orders;  // log(e_i/e_{i+1}) / log(n_{i+1}/n_i)
  bool exact = false;          // all errors zero; orders undefined
};

ConvergenceReport convergence_study(const WaveProblem& problem, double T,
                                    const std::vector<int>& n_list);

/// max_t |e(t) - e(0)| over `samples` times in [0, T], spectral solution.
/// Throws unless the forcing is identically zero.
double energy_drift(const WaveProblem& problem, double T, int samples);

struct UniquenessReport {
  double diff_n_2n = 0.0;   // sup gap between the n and 2n Rothe runs
  double zero_sup = 0.0;    // sup of both solvers on the zero problem
};

UniquenessReport uniqueness_check(const WaveProblem& problem, double T,
                                  int n);

/// Unweighted BFS distance between two interior vertices through the
/// interior-induced subgraph; -1 if unreachable.
int interior_distance(const DirichletDomain& dom, int from, int to);

/// Propagation-speed experiment on a path with `n_int` interior vertices
/// and Dirichlet endpoints, normalized measure, g = h = 0.
/// Scenario A: f = -amplitude on the whole interior; u(t, x) should be
/// positive everywhere for small t. Scenario B: f = -amplitude at the
/// leftmost interior vertex; |u(t, probe)| at the rightmost is compared
/// against the Taylor detectability floor t^{2d}/(2d)!.
struct PropagationReport {
  int n_int = 0;
  std::vector<double> times;

  std::vector<Eigen::VectorXd> uniform_u;  // scenario A, per time
  bool all_positive = true;

  int probe_distance = 0;
  std::vector<double> probe_abs_u;  // scenario B
  std::vector<double> floor;        // t^{2d}/(2d)!
  std::vector<bool> below_floor;    // marked, never asserted
};

PropagationReport propagation_experiment(int n_int, double amplitude,
                                         const std::vector<double>& times);

/// max over t_grid x interior of |d2u/dt2 - Delta_Omega u - f| for a
/// spectral solution.
double spectral_residual(const WaveProblem& problem,
                         const SpectralSolution& solution,
                         const std::vector<double>& t_grid);

}  // namespace graphwave
