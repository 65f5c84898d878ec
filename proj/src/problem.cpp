#include "graphwave/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphwave {
namespace {

// int_0^t cos(a + b s) ds, stable for small b t.
double int_cos(double a, double b, double t) {
  if (std::abs(b * t) < 1e-6) {
    // Taylor in b: t cos a - (b t^2 / 2) sin a - (b^2 t^3 / 6) cos a.
    return t * std::cos(a) - 0.5 * b * t * t * std::sin(a) -
           b * b * t * t * t / 6.0 * std::cos(a);
  }
  return (std::sin(a + b * t) - std::sin(a)) / b;
}

// int_0^t sin(a + b s) ds.
double int_sin(double a, double b, double t) {
  if (std::abs(b * t) < 1e-6) {
    return t * std::sin(a) + 0.5 * b * t * t * std::cos(a) -
           b * b * t * t * t / 6.0 * std::sin(a);
  }
  return (std::cos(a) - std::cos(a + b * t)) / b;
}

// Composite Simpson for f on [0,t] with `panels` panels (panels even).
template <typename F>
double simpson(const F& f, double t, int panels) {
  const double h = t / panels;
  double s = f(0.0) + f(t);
  for (int i = 1; i < panels; ++i) {
    s += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  }
  return s * h / 3.0;
}

template <typename F>
double refined_simpson(const F& f, double t) {
  if (t == 0.0) return 0.0;
  constexpr double kTol = 1e-11;
  constexpr int kMaxPanels = 1 << 20;
  double prev = simpson(f, t, 8);
  for (int panels = 16; panels <= kMaxPanels; panels *= 2) {
    double cur = simpson(f, t, panels);
    if (std::abs(cur - prev) <= kTol * std::max(1.0, std::abs(cur))) {
      return cur;
    }
    prev = cur;
  }
  return prev;
}

}  // namespace

TimeProfile TimeProfile::constant(double value) {
  TimeProfile p;
  p.data_ = Constant{value};
  return p;
}

TimeProfile TimeProfile::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  TimeProfile p;
  p.data_ = Polynomial{std::move(coeffs)};
  return p;
}

TimeProfile TimeProfile::sinusoid(double amplitude, double angular_frequency,
                                  double phase) {
  TimeProfile p;
  p.data_ = Sinusoid{amplitude, angular_frequency, phase};
  return p;
}

TimeProfile TimeProfile::samples(std::vector<double> times,
                                 std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size()) {
    throw std::invalid_argument("sampled profile needs matching grids, >= 2");
  }
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw std::invalid_argument("sample grid must be strictly increasing");
    }
  }
  TimeProfile p;
  p.data_ = Samples{std::move(times), std::move(values)};
  return p;
}

double TimeProfile::operator()(double t) const {
  if (const auto* c = std::get_if<Constant>(&data_)) return c->value;
  if (const auto* poly = std::get_if<Polynomial>(&data_)) {
    double v = 0.0;
    for (auto it = poly->coeffs.rbegin(); it != poly->coeffs.rend(); ++it) {
      v = v * t + *it;
    }
    return v;
  }
  if (const auto* s = std::get_if<Sinusoid>(&data_)) {
    return s->amplitude * std::sin(s->omega * t + s->phase);
  }
  const auto& smp = std::get<Samples>(data_);
  if (t < smp.times.front() || t > smp.times.back()) {
    throw std::domain_error("sampled profile queried outside its grid");
  }
  auto it = std::upper_bound(smp.times.begin(), smp.times.end(), t);
  if (it == smp.times.end()) return smp.values.back();
  size_t i = static_cast<size_t>(it - smp.times.begin());
  if (i == 0) return smp.values.front();
  const double t0 = smp.times[i - 1], t1 = smp.times[i];
  const double a = (t - t0) / (t1 - t0);
  return (1.0 - a) * smp.values[i - 1] + a * smp.values[i];
}

double TimeProfile::conv_sin(double w, double t) const {
  if (const auto* c = std::get_if<Constant>(&data_)) {
    return c->value * (1.0 - std::cos(w * t)) / w;
  }
  if (const auto* poly = std::get_if<Polynomial>(&data_)) {
    // S_m = int s^m sin(w(t-s)) ds, C_m = int s^m cos(w(t-s)) ds with
    // S_0 = (1 - cos wt)/w, C_0 = sin(wt)/w,
    // S_m = t^m/w - (m/w) C_{m-1}, C_m = (m/w) S_{m-1}.
    double S = (1.0 - std::cos(w * t)) / w;
    double C = std::sin(w * t) / w;
    double total = poly->coeffs[0] * S;
    double tm = 1.0;
    for (size_t m = 1; m < poly->coeffs.size(); ++m) {
      tm *= t;
      const double Sm = tm / w - (static_cast<double>(m) / w) * C;
      const double Cm = (static_cast<double>(m) / w) * S;
      S = Sm;
      C = Cm;
      total += poly->coeffs[m] * S;
    }
    return total;
  }
  if (const auto* s = std::get_if<Sinusoid>(&data_)) {
    // sin(w(t-s)) sin(nu s + phi) = [cos(wt - phi - (w+nu)s)
    //                                - cos(wt + phi + (nu-w)s)] / 2
    return 0.5 * s->amplitude *
           (int_cos(w * t - s->phase, -(w + s->omega), t) -
            int_cos(w * t + s->phase, s->omega - w, t));
  }
  return refined_simpson(
      [&](double s) { return (*this)(s) * std::sin(w * (t - s)); }, t);
}

double TimeProfile::conv_cos(double w, double t) const {
  if (const auto* c = std::get_if<Constant>(&data_)) {
    return c->value * std::sin(w * t) / w;
  }
  if (const auto* poly = std::get_if<Polynomial>(&data_)) {
    double S = (1.0 - std::cos(w * t)) / w;
    double C = std::sin(w * t) / w;
    double total = poly->coeffs[0] * C;
    double tm = 1.0;
    for (size_t m = 1; m < poly->coeffs.size(); ++m) {
      tm *= t;
      const double Sm = tm / w - (static_cast<double>(m) / w) * C;
      const double Cm = (static_cast<double>(m) / w) * S;
      S = Sm;
      C = Cm;
      total += poly->coeffs[m] * C;
    }
    return total;
  }
  if (const auto* s = std::get_if<Sinusoid>(&data_)) {
    // cos(w(t-s)) sin(nu s + phi) = [sin(wt + phi + (nu-w)s)
    //                                - sin(wt - phi - (w+nu)s)] / 2
    return 0.5 * s->amplitude *
           (int_sin(w * t + s->phase, s->omega - w, t) -
            int_sin(w * t - s->phase, -(w + s->omega), t));
  }
  return refined_simpson(
      [&](double s) { return (*this)(s) * std::cos(w * (t - s)); }, t);
}

bool Forcing::constant_in_time() const {
  for (const ForcingTerm& term : terms) {
    if (!term.profile.is_constant()) return false;
  }
  return true;
}

double eval_forcing(const WaveProblem& problem, double t, int x) {
  if (!problem.domain->in_interior(x)) {
    throw std::invalid_argument("forcing is only defined on the interior");
  }
  double v = 0.0;
  for (const ForcingTerm& term : problem.forcing.terms) {
    v += term.amplitude(x) * term.profile(t);
  }
  return v;
}

Eigen::VectorXd forcing_interior(const WaveProblem& problem, double t) {
  const DirichletDomain& dom = *problem.domain;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dom.interior_size());
  for (const ForcingTerm& term : problem.forcing.terms) {
    const double p = term.profile(t);
    for (int j = 0; j < dom.interior_size(); ++j) {
      f(j) += term.amplitude(dom.interior()[j]) * p;
    }
  }
  return f;
}

double empirical_c_tilde(const WaveProblem& problem, double T) {
  const DirichletDomain& dom = *problem.domain;
  const WeightedGraph& g = dom.graph();
  constexpr int kGrid = 1024;
  double sup = 0.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double t = T * i / kGrid;
    const Eigen::VectorXd f = forcing_interior(problem, t);
    double norm2 = 0.0;
    for (int j = 0; j < dom.interior_size(); ++j) {
      norm2 += f(j) * f(j) * g.mu(dom.interior()[j]);
    }
    sup = std::max(sup, norm2);
  }
  return sup;
}

HolderEstimate holder_estimate(const WaveProblem& problem, double T,
                               int samples) {
  if (samples < 16) throw std::invalid_argument("need at least 16 samples");
  const DirichletDomain& dom = *problem.domain;
  const WeightedGraph& g = dom.graph();

  std::vector<Eigen::VectorXd> f(samples);
  HolderEstimate est;
  for (int i = 0; i < samples; ++i) {
    const double t = T * i / (samples - 1);
    f[i] = forcing_interior(problem, t);
    double norm2 = 0.0;
    for (int j = 0; j < dom.interior_size(); ++j) {
      norm2 += f[i](j) * f[i](j) * g.mu(dom.interior()[j]);
    }
    est.c_tilde = std::max(est.c_tilde, norm2);
  }

  // log ||f(t)-f(s)|| = log c + alpha log |t-s|, least squares.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 1; j < samples; ++j) {
      const double dt = T * (j - i) / (samples - 1);
      double diff2 = 0.0;
      for (int k = 0; k < dom.interior_size(); ++k) {
        const double d = f[j](k) - f[i](k);
        diff2 += d * d * g.mu(dom.interior()[k]);
      }
      if (diff2 <= 0.0) continue;
      const double lx = std::log(dt), ly = 0.5 * std::log(diff2);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++count;
    }
  }
  if (count < 2) {
    est.time_constant = true;
    return est;
  }
  const double denom = count * sxx - sx * sx;
  est.alpha_hat = (count * sxy - sx * sy) / denom;
  est.c_hat = std::exp((sy - est.alpha_hat * sx) / count);
  return est;
}

}  // namespace graphwave
