#pragma once

#include <span>
#include <vector>

#include "graphwave/operators.hpp"
#include "graphwave/problem.hpp"

namespace graphwave {

/// Eigenpairs of -Delta_Omega: ascending positive eigenvalues, columns of
/// `phi` are the eigenfunctions in the interior ordering, orthonormal in
/// the mu-inner product, sign-fixed so the first nonzero component of
/// each is positive.
struct Spectrum {
  const DirichletDomain* domain = nullptr;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd phi;  // N x N, column k = phi_k

  int modes() const { return static_cast<int>(lambda.size()); }
};

Spectrum eigendecompose(const DirichletDomain& dom);

/// Coefficients (u, phi_k)_mu of an interior-supported function.
Eigen::VectorXd project(const Spectrum& spectrum, const Eigen::VectorXd& u);

/// sum_k c_k phi_k.
Eigen::VectorXd reconstruct(const Spectrum& spectrum,
                            const Eigen::VectorXd& coeffs);

/// One term of a modal forcing coefficient b_k(t) = sum coef * profile(t).
struct ModalTerm {
  double coef;
  const TimeProfile* profile;
};

struct ModalValue {
  double a;
  double da;
  double dda;
};

/// Variation-of-constants coefficient:
///   a(t) = g cos(wt) + (h/w) sin(wt) + (1/w) int_0^t sin(w(t-s)) b(s) ds
/// with w = sqrt(lambda); da analytic, dda from the modal ODE.
ModalValue duhamel_coefficient(double lambda, double g_k, double h_k,
                               std::span<const ModalTerm> b, double t);

/// Audit variant of the closed form: identical to the Duhamel
/// coefficient except the sinusoidal term carries (h - b(0))/w, so
/// a'(0) = h - b(0) whenever b(0) != 0. The `compare` audit contrasts
/// the two variants.
ModalValue paper_coefficient(double lambda, double g_k, double h_k,
                             std::span<const ModalTerm> b, double t);

enum class SpectralVariant { Duhamel, Paper };

/// Projections of the problem data onto the eigenbasis.
struct ModalCoefficients {
  Eigen::VectorXd g_k;
  Eigen::VectorXd h_k;
  std::vector<TimeProfile> profiles;
  Eigen::MatrixXd amp_coeffs;  // term j, mode k: (amplitude_j, phi_k)_mu

  double b(int k, double t) const;
  std::vector<ModalTerm> terms(int k) const;
};

/// Exact modal solution u(t,x) = sum a_k(t) phi_k(x).
struct SpectralSolution {
  Spectrum spectrum;
  ModalCoefficients coeffs;
  SpectralVariant variant = SpectralVariant::Duhamel;

  ModalValue coefficient(int k, double t) const;
  Eigen::VectorXd u(double t) const;       // interior ordering
  Eigen::VectorXd dudt(double t) const;
  Eigen::VectorXd d2udt2(double t) const;
};

SpectralSolution solve_spectral(const WaveProblem& problem,
                                SpectralVariant variant =
                                    SpectralVariant::Duhamel);

/// e(t) = int_Omega |grad u|^2 dmu + int_interior |du/dt|^2 dmu, computed
/// spatially, with the modal value sum lambda a^2 + a'^2 as a cross-check.
struct EnergyValue {
  double spatial;
  double modal;
};

EnergyValue energy(const WaveProblem& problem,
                   const SpectralSolution& solution, double t);

}  // namespace graphwave
