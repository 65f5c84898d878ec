#include "graphwave/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace graphwave {

Spectrum eigendecompose(const DirichletDomain& dom) {
  const AssembledOperators ops = assemble(dom);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ops.sym.dense());
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }

  Spectrum spectrum;
  spectrum.domain = &dom;
  spectrum.lambda = eig.eigenvalues();
  if (spectrum.lambda(0) <= 1e-12) {
    throw std::runtime_error(
        "degenerate eigenvalue: boundary missing or disconnected interior "
        "component touching no boundary");
  }

  // Back to the original frame: phi = M^{-1/2} psi keeps mu-orthonormality.
  const int n = dom.interior_size();
  spectrum.phi.resize(n, n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd phi = ops.sym.to_original(eig.eigenvectors().col(k));
    // mu-normalize (already unit up to roundoff) and fix the sign.
    double norm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      norm2 += phi(j) * phi(j) * dom.graph().mu(dom.interior()[j]);
    }
    phi /= std::sqrt(norm2);
    for (int j = 0; j < n; ++j) {
      if (std::abs(phi(j)) > 1e-12) {
        if (phi(j) < 0.0) phi = -phi;
        break;
      }
    }
    spectrum.phi.col(k) = phi;
  }
  return spectrum;
}

namespace {

Eigen::VectorXd interior_mu(const DirichletDomain& dom) {
  Eigen::VectorXd mu(dom.interior_size());
  for (int j = 0; j < dom.interior_size(); ++j) {
    mu(j) = dom.graph().mu(dom.interior()[j]);
  }
  return mu;
}

}  // namespace

Eigen::VectorXd project(const Spectrum& spectrum, const Eigen::VectorXd& u) {
  const Eigen::VectorXd mu = interior_mu(*spectrum.domain);
  return spectrum.phi.transpose() * u.cwiseProduct(mu);
}

Eigen::VectorXd reconstruct(const Spectrum& spectrum,
                            const Eigen::VectorXd& coeffs) {
  return spectrum.phi * coeffs;
}

ModalValue duhamel_coefficient(double lambda, double g_k, double h_k,
                               std::span<const ModalTerm> b, double t) {
  if (lambda <= 0.0) {
    throw std::invalid_argument("modal coefficient needs lambda > 0");
  }
  const double w = std::sqrt(lambda);
  double conv_sin = 0.0, conv_cos = 0.0, b_t = 0.0;
  for (const ModalTerm& term : b) {
    conv_sin += term.coef * term.profile->conv_sin(w, t);
    conv_cos += term.coef * term.profile->conv_cos(w, t);
    b_t += term.coef * (*term.profile)(t);
  }
  ModalValue v;
  v.a = g_k * std::cos(w * t) + (h_k / w) * std::sin(w * t) + conv_sin / w;
  v.da = -g_k * w * std::sin(w * t) + h_k * std::cos(w * t) + conv_cos;
  v.dda = b_t - lambda * v.a;
  return v;
}

ModalValue paper_coefficient(double lambda, double g_k, double h_k,
                             std::span<const ModalTerm> b, double t) {
  ModalValue v = duhamel_coefficient(lambda, g_k, h_k, b, t);
  double b0 = 0.0;
  for (const ModalTerm& term : b) b0 += term.coef * (*term.profile)(0.0);
  const double w = std::sqrt(lambda);
  // The extra term is a homogeneous solution, so the modal ODE still
  // holds; the initial velocity becomes h - b(0).
  v.a -= (b0 / w) * std::sin(w * t);
  v.da -= b0 * std::cos(w * t);
  v.dda += b0 * w * std::sin(w * t);
  return v;
}

double ModalCoefficients::b(int k, double t) const {
  double v = 0.0;
  for (size_t j = 0; j < profiles.size(); ++j) {
    v += amp_coeffs(static_cast<Eigen::Index>(j), k) * profiles[j](t);
  }
  return v;
}

std::vector<ModalTerm> ModalCoefficients::terms(int k) const {
  std::vector<ModalTerm> out;
  out.reserve(profiles.size());
  for (size_t j = 0; j < profiles.size(); ++j) {
    out.push_back({amp_coeffs(static_cast<Eigen::Index>(j), k), &profiles[j]});
  }
  return out;
}

ModalValue SpectralSolution::coefficient(int k, double t) const {
  const std::vector<ModalTerm> b = coeffs.terms(k);
  if (variant == SpectralVariant::Duhamel) {
    return duhamel_coefficient(spectrum.lambda(k), coeffs.g_k(k),
                               coeffs.h_k(k), b, t);
  }
  return paper_coefficient(spectrum.lambda(k), coeffs.g_k(k), coeffs.h_k(k),
                           b, t);
}

Eigen::VectorXd SpectralSolution::u(double t) const {
  Eigen::VectorXd a(spectrum.modes());
  for (int k = 0; k < spectrum.modes(); ++k) a(k) = coefficient(k, t).a;
  return reconstruct(spectrum, a);
}

Eigen::VectorXd SpectralSolution::dudt(double t) const {
  Eigen::VectorXd da(spectrum.modes());
  for (int k = 0; k < spectrum.modes(); ++k) da(k) = coefficient(k, t).da;
  return reconstruct(spectrum, da);
}

Eigen::VectorXd SpectralSolution::d2udt2(double t) const {
  Eigen::VectorXd dda(spectrum.modes());
  for (int k = 0; k < spectrum.modes(); ++k) dda(k) = coefficient(k, t).dda;
  return reconstruct(spectrum, dda);
}

SpectralSolution solve_spectral(const WaveProblem& problem,
                                SpectralVariant variant) {
  const DirichletDomain& dom = *problem.domain;
  SpectralSolution sol;
  sol.spectrum = eigendecompose(dom);
  sol.variant = variant;
  sol.coeffs.g_k = project(sol.spectrum, problem.g.interior_values(dom));
  sol.coeffs.h_k = project(sol.spectrum, problem.h.interior_values(dom));

  const size_t terms = problem.forcing.terms.size();
  sol.coeffs.profiles.reserve(terms);
  sol.coeffs.amp_coeffs.resize(static_cast<Eigen::Index>(terms),
                               dom.interior_size());
  for (size_t j = 0; j < terms; ++j) {
    const ForcingTerm& term = problem.forcing.terms[j];
    sol.coeffs.profiles.push_back(term.profile);
    sol.coeffs.amp_coeffs.row(static_cast<Eigen::Index>(j)) =
        project(sol.spectrum, term.amplitude.interior_values(dom))
            .transpose();
  }
  return sol;
}

EnergyValue energy(const WaveProblem& problem,
                   const SpectralSolution& solution, double t) {
  const DirichletDomain& dom = *problem.domain;
  const VertexFunction u = extend_interior(dom, solution.u(t));
  const Eigen::VectorXd dudt = solution.dudt(t);
  const Eigen::VectorXd mu = interior_mu(dom);

  EnergyValue e;
  e.spatial = gradient_energy(dom, u) + dudt.cwiseAbs2().dot(mu);

  e.modal = 0.0;
  for (int k = 0; k < solution.spectrum.modes(); ++k) {
    const ModalValue v = solution.coefficient(k, t);
    e.modal += solution.spectrum.lambda(k) * v.a * v.a + v.da * v.da;
  }
  return e;
}

}  // namespace graphwave
