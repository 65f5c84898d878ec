#include "graphwave/corpus.hpp"

#include <algorithm>

namespace graphwave {

namespace {

RandomDomain try_make(std::mt19937& rng, int max_vertices, MeasureMode mode) {
  std::uniform_int_distribution<int> size_dist(5, std::max(5, max_vertices));
  std::uniform_real_distribution<double> weight_dist(0.5, 2.0);
  std::uniform_real_distribution<double> mu_dist(0.5, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const int nv = size_dist(rng);
  auto graph = std::make_unique<WeightedGraph>();
  for (int i = 0; i < nv; ++i) {
    graph->add_vertex("r" + std::to_string(i), mu_dist(rng));
  }
  // Random spanning tree plus a few extra edges keeps the graph connected.
  for (int i = 1; i < nv; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    graph->add_edge(i, pick(rng), weight_dist(rng));
  }
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (!graph->adjacent(i, j) && coin(rng) < 0.15) {
        graph->add_edge(i, j, weight_dist(rng));
      }
    }
  }
  graph->set_measure(mode);

  // Grow a connected Omega strictly inside V.
  std::uniform_int_distribution<int> omega_size(3, nv - 1);
  const int target = omega_size(rng);
  std::uniform_int_distribution<int> start_dist(0, nv - 1);
  std::vector<int> omega{start_dist(rng)};
  std::vector<char> in(nv, 0);
  in[omega[0]] = 1;
  while (static_cast<int>(omega.size()) < target) {
    std::uniform_int_distribution<size_t> pick(0, omega.size() - 1);
    const int v = omega[pick(rng)];
    std::vector<int> candidates;
    for (const Neighbor& nb : graph->neighbors(v)) {
      if (!in[nb.vertex]) candidates.push_back(nb.vertex);
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<size_t> cpick(0, candidates.size() - 1);
    const int w = candidates[cpick(rng)];
    in[w] = 1;
    omega.push_back(w);
    // Frontier can dry up when Omega already swallowed a component side.
    bool any = false;
    for (int u : omega) {
      for (const Neighbor& nb : graph->neighbors(u)) {
        if (!in[nb.vertex]) any = true;
      }
    }
    if (!any) break;
  }
  std::sort(omega.begin(), omega.end());

  RandomDomain out;
  out.domain = std::make_unique<DirichletDomain>(
      split_domain(*graph, omega));  // throws if the interior is empty
  out.graph = std::move(graph);
  return out;
}

}  // namespace

RandomDomain make_random_domain(unsigned seed, int max_vertices,
                                MeasureMode mode) {
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      RandomDomain d = try_make(rng, max_vertices, mode);
      if (d.domain->boundary().empty()) continue;
      if (!is_connected(*d.graph, d.domain->interior())) continue;
      return d;
    } catch (const std::invalid_argument&) {
      continue;  // empty interior; redraw
    }
  }
  throw std::runtime_error("random domain generation failed");
}

Eigen::VectorXd random_interior_values(const DirichletDomain& dom,
                                       std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(dom.interior_size());
  for (int j = 0; j < dom.interior_size(); ++j) v(j) = dist(rng);
  return v;
}

}  // namespace graphwave
