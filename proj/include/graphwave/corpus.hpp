#pragma once

#include <memory>
#include <random>

#include "graphwave/graph.hpp"

namespace graphwave {

/// A randomly generated domain for property tests and the verification
/// corpus: connected graph, connected Omega with nonempty boundary and
/// interior. Deterministic for a given seed.
struct RandomDomain {
  std::unique_ptr<WeightedGraph> graph;
  std::unique_ptr<DirichletDomain> domain;
};

RandomDomain make_random_domain(unsigned seed, int max_vertices = 24,
                                MeasureMode mode = MeasureMode::Explicit);

/// Uniform [-1, 1] values on the interior ordering.
Eigen::VectorXd random_interior_values(const DirichletDomain& dom,
                                       std::mt19937& rng);

}  // namespace graphwave
