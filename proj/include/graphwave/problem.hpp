#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "graphwave/graph.hpp"

namespace graphwave {

/// Scalar time profile. Polynomial coefficients are ascending powers of t.
/// Sampled profiles interpolate linearly and refuse evaluation outside
/// their grid.
class TimeProfile {
 public:
  static TimeProfile constant(double value);
  static TimeProfile polynomial(std::vector<double> coeffs);
  static TimeProfile sinusoid(double amplitude, double angular_frequency,
                              double phase = 0.0);
  static TimeProfile samples(std::vector<double> times,
                             std::vector<double> values);

  double operator()(double t) const;

  bool is_constant() const {
    return std::holds_alternative<Constant>(data_);
  }
  bool is_sampled() const { return std::holds_alternative<Samples>(data_); }

  /// Convolutions against the oscillator kernels,
  ///   conv_sin = int_0^t sin(w (t-s)) b(s) ds,
  ///   conv_cos = int_0^t cos(w (t-s)) b(s) ds,
  /// closed form for constant/polynomial/sinusoid, adaptive Simpson
  /// (tolerance 1e-11, at most 2^20 panels) for sampled profiles.
  double conv_sin(double w, double t) const;
  double conv_cos(double w, double t) const;

 private:
  struct Constant {
    double value;
  };
  struct Polynomial {
    std::vector<double> coeffs;
  };
  struct Sinusoid {
    double amplitude, omega, phase;
  };
  struct Samples {
    std::vector<double> times, values;
  };
  std::variant<Constant, Polynomial, Sinusoid, Samples> data_;
};

/// Forcing f(t,x) = sum_j amplitude_j(x) profile_j(t), amplitudes
/// supported on the interior.
struct ForcingTerm {
  VertexFunction amplitude;
  TimeProfile profile;
};

struct Forcing {
  std::vector<ForcingTerm> terms;

  bool constant_in_time() const;
  bool zero() const { return terms.empty(); }
};

/// Hoelder-in-time hypothesis data: ||f(t)-f(s)|| <= c |t-s|^alpha, plus
/// the horizon bound sup_t ||f(t)||^2 <= c_tilde(T).
struct HolderData {
  double alpha = 1.0;
  double c = 0.0;
  std::optional<double> c_tilde;
};

struct WaveProblem {
  const DirichletDomain* domain;
  Forcing forcing;
  VertexFunction g;  // initial displacement, interior support
  VertexFunction h;  // initial velocity, interior support
  std::optional<HolderData> holder;
};

/// f(t, x) for an interior vertex x.
double eval_forcing(const WaveProblem& problem, double t, int x);

/// f(t, .) restricted to the interior ordering.
Eigen::VectorXd forcing_interior(const WaveProblem& problem, double t);

/// sup over a 1024-point grid on [0,T] of ||f(t,.)||^2_{L2}, the empirical
/// c_tilde(T) used when the problem does not supply one.
double empirical_c_tilde(const WaveProblem& problem, double T);

struct HolderEstimate {
  bool time_constant = false;  // hypothesis holds trivially
  double alpha_hat = 0.0;
  double c_hat = 0.0;
  double c_tilde = 0.0;  // sup_t ||f(t,.)||^2 over the sample grid
};

/// Least-squares fit of log ||f(t)-f(s)|| against log |t-s| over sampled
/// pairs in [0,T]. Requires samples >= 16.
HolderEstimate holder_estimate(const WaveProblem& problem, double T,
                               int samples);

}  // namespace graphwave
