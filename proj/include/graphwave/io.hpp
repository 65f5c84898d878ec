#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "graphwave/rothe.hpp"
#include "graphwave/spectral.hpp"

namespace graphwave {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Graph file format:
/// {"vertices":[{"id":str,"mu":number?}],
///  "edges":[{"a":str,"b":str,"w":number}],
///  "measure":"unit"|"normalized"|"explicit"}
WeightedGraph load_graph(const nlohmann::json& j,
                         std::optional<MeasureMode> measure_override = {});

/// Owns the graph and domain a parsed WaveProblem points into.
struct ProblemBundle {
  std::unique_ptr<WeightedGraph> graph;
  std::unique_ptr<DirichletDomain> domain;
  WaveProblem problem;
};

/// Problem file format:
/// {"graph": path-or-inline, "omega":[ids], "g":{id:val}, "h":{id:val},
///  "forcing":[{"amplitude":{id:val},
///              "profile":{"kind":"constant"|"poly"|"sin"|"samples",...}}],
///  "holder":{"alpha":a,"c":c,"c_tilde":ct?}?}
/// A string "graph" is resolved relative to the problem file.
ProblemBundle load_problem(const std::filesystem::path& file,
                           std::optional<MeasureMode> measure_override = {});
ProblemBundle load_problem(const nlohmann::json& j,
                           const std::filesystem::path& base_dir,
                           std::optional<MeasureMode> measure_override = {});

TimeProfile parse_profile(const nlohmann::json& j);

/// CSV: t,vertex,u,du,d2u — one row per (level, interior vertex); the
/// d2u field is empty at level 0.
void write_trajectory_csv(std::ostream& out, const RotheRun& run);

/// CSV: k,lambda,phi components in interior vertex order.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

/// CSV: t,vertex,u,dudt at the requested times.
void write_solution_csv(std::ostream& out, const SpectralSolution& solution,
                        const std::vector<double>& times);

/// Triplet-format text dump of the assembled operator (debugging aid).
void write_matrix_triplets(std::ostream& out, const OperatorMatrix& op);

}  // namespace graphwave
