// graphwave: wave-equation solvers on weighted graphs with Dirichlet
// boundary. Subcommands run the Rothe and spectral solvers and the
// validation experiments; all numeric output is round-trip-exact decimal
// so repeated runs are byte-identical.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphwave/analysis.hpp"
#include "graphwave/corpus.hpp"
#include "graphwave/io.hpp"
#include "graphwave/rothe.hpp"
#include "graphwave/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace graphwave;

namespace {

struct Options {
  std::string problem;
  double T = 1.0;
  int n = 100;
  std::vector<int> n_list;
  std::vector<double> times;
  std::string variant = "duhamel";
  std::string measure;
  std::string out = ".";
};

std::optional<MeasureMode> measure_override(const Options& opt) {
  if (opt.measure.empty()) return {};
  if (opt.measure == "unit") return MeasureMode::Unit;
  if (opt.measure == "normalized") return MeasureMode::Normalized;
  throw CLI::ValidationError("--measure must be unit or normalized");
}

SpectralVariant variant_of(const Options& opt) {
  if (opt.variant == "duhamel") return SpectralVariant::Duhamel;
  if (opt.variant == "paper") return SpectralVariant::Paper;
  throw CLI::ValidationError("--variant must be duhamel or paper");
}

std::vector<double> sample_times(const Options& opt) {
  if (!opt.times.empty()) return opt.times;
  std::vector<double> ts;
  for (int i = 0; i <= 50; ++i) ts.push_back(opt.T * i / 50.0);
  return ts;
}

std::ofstream open_out(const Options& opt, const std::string& name) {
  fs::create_directories(opt.out);
  fs::path p = fs::path(opt.out) / name;
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

// JSON summaries serialize numbers as round-trip strings so the byte
// stream is independent of locale and library formatting choices.
void write_summary(const Options& opt, const std::string& name,
                   const json& j) {
  auto f = open_out(opt, name);
  f << j.dump(2) << "\n";
}

int cmd_spectrum(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  Spectrum s = eigendecompose(*b.domain);
  auto csv = open_out(opt, "spectrum.csv");
  write_spectrum_csv(csv, s);
  json summary;
  summary["modes"] = s.modes();
  summary["lambda_min"] = format_double(s.lambda(0));
  summary["lambda_max"] = format_double(s.lambda(s.modes() - 1));
  write_summary(opt, "spectrum_summary.json", summary);
  return 0;
}

int cmd_solve_rothe(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  RotheRun run = solve_rothe(b.problem, opt.T, opt.n);
  auto csv = open_out(opt, "trajectory.csv");
  write_trajectory_csv(csv, run);
  json summary;
  summary["n"] = run.n;
  summary["T"] = format_double(run.T);
  summary["ell"] = format_double(run.ell);
  summary["step_warning"] = run.step_warning;
  summary["scheme_identity_residual"] =
      format_double(scheme_identity_residual(run));
  write_summary(opt, "rothe_summary.json", summary);
  return 0;
}

int cmd_solve_spectral(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  SpectralSolution sol = solve_spectral(b.problem, variant_of(opt));
  std::vector<double> ts = sample_times(opt);
  auto csv = open_out(opt, "solution.csv");
  write_solution_csv(csv, sol, ts);
  json summary;
  summary["variant"] = opt.variant;
  summary["modes"] = sol.spectrum.modes();
  summary["residual"] = format_double(spectral_residual(b.problem, sol, ts));
  write_summary(opt, "spectral_summary.json", summary);
  return 0;
}

// Discrepancy table between the Rothe trajectory and both spectral
// closed forms, plus the initial-velocity audit that separates them.
int cmd_compare(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  const WaveProblem& prob = b.problem;

  RotheRun run = solve_rothe(prob, opt.T, opt.n);
  SpectralSolution duhamel = solve_spectral(prob, SpectralVariant::Duhamel);
  SpectralSolution paper = solve_spectral(prob, SpectralVariant::Paper);

  auto csv = open_out(opt, "compare.csv");
  csv << "t,sup_rothe_vs_duhamel,sup_duhamel_vs_paper\n";
  double sup_rothe = 0.0;
  for (int i = 0; i <= run.n; ++i) {
    const double t = run.t(i);
    const double gap_rd = (run.u[i] - duhamel.u(t)).lpNorm<Eigen::Infinity>();
    const double gap_dp =
        (duhamel.u(t) - paper.u(t)).lpNorm<Eigen::Infinity>();
    sup_rothe = std::max(sup_rothe, gap_rd);
    csv << format_double(t) << "," << format_double(gap_rd) << ","
        << format_double(gap_dp) << "\n";
  }

  // Initial-velocity audit: the variation-of-constants solution starts
  // with u'(0) = h; the audit variant starts with h - f(0,.)
  // projected back, i.e. its velocity is off by exactly -f(0,.) whenever
  // the forcing is nonzero at t = 0.
  const Eigen::VectorXd f0 = forcing_interior(prob, 0.0);
  const Eigen::VectorXd h = prob.h.interior_values(*b.domain);
  const double duhamel_velocity_defect =
      (duhamel.dudt(0.0) - h).lpNorm<Eigen::Infinity>();
  const double paper_velocity_defect =
      (paper.dudt(0.0) - (h - f0)).lpNorm<Eigen::Infinity>();

  std::vector<double> ts = sample_times(opt);
  const double duhamel_residual = spectral_residual(prob, duhamel, ts);

  // Residual scale: data magnitude, so the tolerance is relative.
  double scale = std::max({1.0, f0.lpNorm<Eigen::Infinity>(),
                           h.lpNorm<Eigen::Infinity>()});
  const bool audit_ok = duhamel_velocity_defect <= 1e-12 * scale &&
                        paper_velocity_defect <= 1e-12 * scale &&
                        duhamel_residual <= 1e-9 * scale;

  json summary;
  summary["n"] = run.n;
  summary["sup_rothe_vs_duhamel"] = format_double(sup_rothe);
  summary["duhamel_velocity_defect"] = format_double(duhamel_velocity_defect);
  summary["paper_velocity_defect_vs_h_minus_f0"] =
      format_double(paper_velocity_defect);
  summary["duhamel_residual"] = format_double(duhamel_residual);
  summary["audit_ok"] = audit_ok;
  write_summary(opt, "compare_summary.json", summary);

  if (!audit_ok) {
    std::cerr << "compare: formula audit failed\n";
    return 1;
  }
  return 0;
}

int cmd_energy(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  SpectralSolution sol = solve_spectral(b.problem, variant_of(opt));
  std::vector<double> ts = sample_times(opt);
  auto csv = open_out(opt, "energy.csv");
  csv << "t,spatial,modal\n";
  double e0 = 0.0, max_drift = 0.0, max_gap = 0.0;
  for (size_t i = 0; i < ts.size(); ++i) {
    EnergyValue e = energy(b.problem, sol, ts[i]);
    if (i == 0) e0 = e.spatial;
    max_drift = std::max(max_drift, std::abs(e.spatial - e0));
    max_gap = std::max(max_gap, std::abs(e.spatial - e.modal));
    csv << format_double(ts[i]) << "," << format_double(e.spatial) << ","
        << format_double(e.modal) << "\n";
  }
  json summary;
  summary["e0"] = format_double(e0);
  summary["max_drift"] = format_double(max_drift);
  summary["max_spatial_modal_gap"] = format_double(max_gap);
  summary["conservative"] = b.problem.forcing.zero();
  write_summary(opt, "energy_summary.json", summary);
  return 0;
}

int cmd_propagation(const Options& opt) {
  std::vector<double> ts =
      opt.times.empty() ? std::vector<double>{0.05, 0.1, 0.2, 0.25}
                        : opt.times;
  PropagationReport rep = propagation_experiment(5, 1.0, ts);
  auto csv = open_out(opt, "propagation.csv");
  csv << "t,min_uniform_u,probe_abs_u,floor,below_floor\n";
  for (size_t i = 0; i < rep.times.size(); ++i) {
    csv << format_double(rep.times[i]) << ","
        << format_double(rep.uniform_u[i].minCoeff()) << ","
        << format_double(rep.probe_abs_u[i]) << ","
        << format_double(rep.floor[i]) << ","
        << (rep.below_floor[i] ? "1" : "0") << "\n";
  }
  json summary;
  summary["n_int"] = rep.n_int;
  summary["probe_distance"] = rep.probe_distance;
  summary["all_positive"] = rep.all_positive;
  write_summary(opt, "propagation_summary.json", summary);
  return 0;
}

int cmd_convergence(const Options& opt) {
  ProblemBundle b = load_problem(opt.problem, measure_override(opt));
  std::vector<int> ns =
      opt.n_list.empty() ? std::vector<int>{125, 250, 500, 1000} : opt.n_list;
  ConvergenceReport rep = convergence_study(b.problem, opt.T, ns);
  auto csv = open_out(opt, "convergence.csv");
  csv << "n,error,order\n";
  for (size_t i = 0; i < rep.n_values.size(); ++i) {
    csv << rep.n_values[i] << "," << format_double(rep.errors[i]) << ",";
    if (i > 0 && !rep.exact) csv << format_double(rep.orders[i - 1]);
    csv << "\n";
  }
  json summary;
  summary["exact"] = rep.exact;
  if (!rep.orders.empty() && !rep.exact)
    summary["last_order"] = format_double(rep.orders.back());
  write_summary(opt, "convergence_summary.json", summary);
  return 0;
}

// Invariant suite over the deterministic random-domain corpus. Exit 1 on
// any violated invariant.
int cmd_verify(const Options& opt) {
  json summary;
  bool ok = true;
  std::mt19937 rng(12345);

  // Green's identity on random domains and data.
  double worst_green = 0.0;
  for (unsigned seed = 1; seed <= 40; ++seed) {
    RandomDomain d = make_random_domain(seed);
    for (int trial = 0; trial < 3; ++trial) {
      VertexFunction u =
          extend_interior(*d.domain, random_interior_values(*d.domain, rng));
      VertexFunction v =
          extend_interior(*d.domain, random_interior_values(*d.domain, rng));
      worst_green = std::max(worst_green,
                             std::abs(green_residual(*d.domain, u, v)));
    }
  }
  summary["green_residual_max"] = format_double(worst_green);
  ok = ok && worst_green <= 1e-12 * 64.0;

  // Positive spectrum, mu-orthonormality; lambda in (0,2) when mu = m.
  double worst_ortho = 0.0;
  bool spectra_ok = true;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    RandomDomain d = make_random_domain(seed, 16, MeasureMode::Normalized);
    Spectrum s = eigendecompose(*d.domain);
    if (s.lambda(0) <= 0.0 || s.lambda(s.modes() - 1) >= 2.0)
      spectra_ok = false;
    Eigen::VectorXd mu(s.phi.rows());
    for (int j = 0; j < mu.size(); ++j)
      mu(j) = d.domain->graph().mu(d.domain->interior()[j]);
    Eigen::MatrixXd gram =
        s.phi.transpose() * mu.asDiagonal() * s.phi -
        Eigen::MatrixXd::Identity(s.modes(), s.modes());
    worst_ortho = std::max(worst_ortho, gram.cwiseAbs().maxCoeff());
  }
  summary["spectra_ok"] = spectra_ok;
  summary["orthonormality_defect"] = format_double(worst_ortho);
  ok = ok && spectra_ok && worst_ortho <= 1e-12;

  // A-priori bounds, interpolant gaps, and the scheme identity on a small
  // Rothe suite.
  bool bounds_ok = true;
  double worst_identity = 0.0;
  for (unsigned seed = 1; seed <= 6; ++seed) {
    RandomDomain d = make_random_domain(seed, 12);
    WaveProblem prob;
    prob.domain = d.domain.get();
    prob.g = extend_interior(*d.domain, random_interior_values(*d.domain, rng));
    prob.h = extend_interior(*d.domain, random_interior_values(*d.domain, rng));
    RotheRun run = solve_rothe(prob, 1.0, 200);
    AprioriBounds bounds = compute_apriori_bounds(prob, 1.0);
    BoundsReport br = verify_bounds(run, bounds);
    InterpolantGapReport gr = verify_interpolant_gaps(run, bounds);
    bounds_ok = bounds_ok && br.ok && gr.ok;
    worst_identity = std::max(worst_identity, scheme_identity_residual(run));
  }
  summary["bounds_ok"] = bounds_ok;
  summary["scheme_identity_max"] = format_double(worst_identity);
  ok = ok && bounds_ok && worst_identity <= 1e-10 * 16.0;

  summary["ok"] = ok;
  write_summary(opt, "verify_summary.json", summary);
  std::cout << (ok ? "verify: all invariants hold\n"
                   : "verify: invariant violated\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wave equation on weighted graphs: Rothe and spectral solvers"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_problem) {
    auto* p = sub->add_option("--problem", opt.problem, "problem JSON file");
    if (needs_problem) p->required()->check(CLI::ExistingFile);
    sub->add_option("--T", opt.T, "time horizon")->check(CLI::PositiveNumber);
    sub->add_option("--n", opt.n, "number of time levels")
        ->check(CLI::PositiveNumber);
    sub->add_option("--n-list", opt.n_list, "comma-separated n values")
        ->delimiter(',');
    sub->add_option("--times", opt.times, "comma-separated sample times")
        ->delimiter(',');
    sub->add_option("--variant", opt.variant, "duhamel|paper");
    sub->add_option("--measure", opt.measure,
                    "override vertex measure: unit|normalized");
    sub->add_option("--out", opt.out, "output directory");
  };

  auto* c_spectrum = app.add_subcommand("spectrum", "eigenpairs of the domain");
  auto* c_rothe = app.add_subcommand("solve-rothe", "implicit time stepping");
  auto* c_spectral =
      app.add_subcommand("solve-spectral", "exact modal solution");
  auto* c_compare =
      app.add_subcommand("compare", "solver discrepancies and formula audit");
  auto* c_energy = app.add_subcommand("energy", "energy along the solution");
  auto* c_prop =
      app.add_subcommand("propagation", "propagation-speed experiment");
  auto* c_conv = app.add_subcommand("convergence", "Rothe convergence study");
  auto* c_verify =
      app.add_subcommand("verify", "invariant suite on the random corpus");
  add_common(c_spectrum, true);
  add_common(c_rothe, true);
  add_common(c_spectral, true);
  add_common(c_compare, true);
  add_common(c_energy, true);
  add_common(c_conv, true);
  add_common(c_prop, false);
  add_common(c_verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_spectrum->parsed()) return cmd_spectrum(opt);
    if (c_rothe->parsed()) return cmd_solve_rothe(opt);
    if (c_spectral->parsed()) return cmd_solve_spectral(opt);
    if (c_compare->parsed()) return cmd_compare(opt);
    if (c_energy->parsed()) return cmd_energy(opt);
    if (c_prop->parsed()) return cmd_propagation(opt);
    if (c_conv->parsed()) return cmd_convergence(opt);
    if (c_verify->parsed()) return cmd_verify(opt);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
