#include "graphwave/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace graphwave {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

WeightedGraph load_graph(const nlohmann::json& j,
                         std::optional<MeasureMode> measure_override) {
  WeightedGraph g;
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph file needs 'vertices' and 'edges'");
  }

  std::string measure = j.value("measure", "unit");
  MeasureMode mode;
  if (measure == "unit") {
    mode = MeasureMode::Unit;
  } else if (measure == "normalized") {
    mode = MeasureMode::Normalized;
  } else if (measure == "explicit") {
    mode = MeasureMode::Explicit;
  } else {
    throw std::invalid_argument("unknown measure mode: " + measure);
  }
  if (measure_override) mode = *measure_override;

  for (const auto& v : j.at("vertices")) {
    const std::string id = v.at("id").get<std::string>();
    if (mode == MeasureMode::Explicit && !v.contains("mu")) {
      throw std::invalid_argument(
          "explicit measure requires mu on every vertex: " + id);
    }
    g.add_vertex(id, v.value("mu", 1.0));
  }
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.at("a").get<std::string>(), e.at("b").get<std::string>(),
               e.at("w").get<double>());
  }
  g.set_measure(mode);
  return g;
}

TimeProfile parse_profile(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    return TimeProfile::constant(j.at("value").get<double>());
  }
  if (kind == "poly") {
    return TimeProfile::polynomial(j.at("coeffs").get<std::vector<double>>());
  }
  if (kind == "sin") {
    return TimeProfile::sinusoid(j.at("amplitude").get<double>(),
                                 j.at("omega").get<double>(),
                                 j.value("phase", 0.0));
  }
  if (kind == "samples") {
    return TimeProfile::samples(j.at("t").get<std::vector<double>>(),
                                j.at("v").get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown profile kind: " + kind);
}

namespace {

VertexFunction parse_vertex_map(const DirichletDomain& dom,
                                const nlohmann::json& j) {
  VertexFunction f(dom.graph(), Support::Interior);
  if (j.is_null()) return f;
  for (const auto& [id, value] : j.items()) {
    const int v = dom.graph().index_of(id);
    if (!dom.in_interior(v)) {
      throw std::invalid_argument("data assigned outside the interior: " + id);
    }
    f.set(v, value.get<double>());
  }
  return f;
}

}  // namespace

ProblemBundle load_problem(const std::filesystem::path& file,
                           std::optional<MeasureMode> measure_override) {
  std::ifstream in(file);
  if (!in) {
    throw std::invalid_argument("cannot open problem file: " + file.string());
  }
  nlohmann::json j = nlohmann::json::parse(in);  // parse_error carries position
  return load_problem(j, file.parent_path(), measure_override);
}

ProblemBundle load_problem(const nlohmann::json& j,
                           const std::filesystem::path& base_dir,
                           std::optional<MeasureMode> measure_override) {
  ProblemBundle bundle;
  const nlohmann::json& jg = j.at("graph");
  if (jg.is_string()) {
    std::filesystem::path p = jg.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    std::ifstream in(p);
    if (!in) {
      throw std::invalid_argument("cannot open graph file: " + p.string());
    }
    bundle.graph = std::make_unique<WeightedGraph>(
        load_graph(nlohmann::json::parse(in), measure_override));
  } else {
    bundle.graph =
        std::make_unique<WeightedGraph>(load_graph(jg, measure_override));
  }

  bundle.domain = std::make_unique<DirichletDomain>(split_domain(
      *bundle.graph, j.at("omega").get<std::vector<std::string>>()));

  bundle.problem.domain = bundle.domain.get();
  bundle.problem.g =
      parse_vertex_map(*bundle.domain, j.value("g", nlohmann::json()));
  bundle.problem.h =
      parse_vertex_map(*bundle.domain, j.value("h", nlohmann::json()));

  if (j.contains("forcing")) {
    for (const auto& term : j.at("forcing")) {
      bundle.problem.forcing.terms.push_back(
          {parse_vertex_map(*bundle.domain, term.at("amplitude")),
           parse_profile(term.at("profile"))});
    }
  }
  if (j.contains("holder")) {
    HolderData hd;
    hd.alpha = j.at("holder").at("alpha").get<double>();
    hd.c = j.at("holder").at("c").get<double>();
    if (j.at("holder").contains("c_tilde")) {
      hd.c_tilde = j.at("holder").at("c_tilde").get<double>();
    }
    if (hd.alpha <= 0.0 || hd.alpha > 1.0 || hd.c <= 0.0) {
      throw std::invalid_argument("holder data needs alpha in (0,1], c > 0");
    }
    bundle.problem.holder = hd;
  }
  return bundle;
}

void write_trajectory_csv(std::ostream& out, const RotheRun& run) {
  const DirichletDomain& dom = *run.domain;
  out << "t,vertex,u,du,d2u\n";
  for (int i = 0; i <= run.n; ++i) {
    for (int jj = 0; jj < dom.interior_size(); ++jj) {
      out << format_double(run.t(i)) << ','
          << dom.graph().id_of(dom.interior()[jj]) << ','
          << format_double(run.u[i](jj)) << ','
          << format_double(run.delta[i](jj)) << ',';
      if (i >= 1) out << format_double(run.delta2[i - 1](jj));
      out << '\n';
    }
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << "k,lambda";
  const DirichletDomain& dom = *spectrum.domain;
  for (int j = 0; j < dom.interior_size(); ++j) {
    out << ',' << dom.graph().id_of(dom.interior()[j]);
  }
  out << '\n';
  for (int k = 0; k < spectrum.modes(); ++k) {
    out << (k + 1) << ',' << format_double(spectrum.lambda(k));
    for (int j = 0; j < dom.interior_size(); ++j) {
      out << ',' << format_double(spectrum.phi(j, k));
    }
    out << '\n';
  }
}

void write_solution_csv(std::ostream& out, const SpectralSolution& solution,
                        const std::vector<double>& times) {
  const DirichletDomain& dom = *solution.spectrum.domain;
  out << "t,vertex,u,dudt\n";
  for (double t : times) {
    const Eigen::VectorXd u = solution.u(t);
    const Eigen::VectorXd du = solution.dudt(t);
    for (int j = 0; j < dom.interior_size(); ++j) {
      out << format_double(t) << ','
          << dom.graph().id_of(dom.interior()[j]) << ','
          << format_double(u(j)) << ',' << format_double(du(j)) << '\n';
    }
  }
}

void write_matrix_triplets(std::ostream& out, const OperatorMatrix& op) {
  for (int k = 0; k < op.matrix.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, k); it;
         ++it) {
      out << it.row() << ' ' << it.col() << ' ' << format_double(it.value())
          << '\n';
    }
  }
}

}  // namespace graphwave
