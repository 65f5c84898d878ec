#include "graphwave/graph.hpp"

#include <deque>
#include <stdexcept>

namespace graphwave {

int WeightedGraph::add_vertex(const std::string& id, double mu) {
  if (index_.count(id)) {
    throw std::invalid_argument("duplicate vertex id: " + id);
  }
  if (mu <= 0.0) {
    throw std::invalid_argument("vertex measure must be positive: " + id);
  }
  int v = size();
  ids_.push_back(id);
  index_[id] = v;
  mu_.push_back(mu);
  adj_.emplace_back();
  return v;
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b,
                             double w) {
  add_edge(index_of(a), index_of(b), w);
}

void WeightedGraph::add_edge(int a, int b, double w) {
  if (a < 0 || a >= size() || b < 0 || b >= size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (a == b) {
    throw std::invalid_argument("self-loop rejected: " + ids_[a]);
  }
  if (w <= 0.0) {
    throw std::invalid_argument("edge weight must be positive");
  }
  if (adjacent(a, b)) {
    throw std::invalid_argument("multigraph input rejected: duplicate edge " +
                                ids_[a] + "-" + ids_[b]);
  }
  adj_[a].push_back({b, w});
  adj_[b].push_back({a, w});
}

void WeightedGraph::set_measure(MeasureMode mode) {
  mode_ = mode;
  if (mode == MeasureMode::Unit) {
    for (double& m : mu_) m = 1.0;
  } else if (mode == MeasureMode::Normalized) {
    for (int v = 0; v < size(); ++v) {
      double m = degree_weight(v);
      if (m <= 0.0) {
        throw std::invalid_argument(
            "normalized measure requires every vertex to have an edge: " +
            ids_[v]);
      }
      mu_[v] = m;
    }
  }
  // Explicit: keep the values supplied at add_vertex.
}

int WeightedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown vertex id: " + id);
  }
  return it->second;
}

bool WeightedGraph::adjacent(int a, int b) const {
  for (const Neighbor& nb : adj_.at(a)) {
    if (nb.vertex == b) return true;
  }
  return false;
}

double WeightedGraph::degree_weight(int v) const {
  if (v < 0 || v >= size()) {
    throw std::invalid_argument("vertex index out of range");
  }
  double m = 0.0;
  for (const Neighbor& nb : adj_[v]) m += nb.weight;
  return m;
}

WeightedGraph WeightedGraph::path(int n, double w, MeasureMode mode) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, w);
  g.set_measure(mode);
  return g;
}

WeightedGraph WeightedGraph::star(int leaves, double w, double mu) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  WeightedGraph g;
  g.add_vertex("c", mu);
  for (int i = 0; i < leaves; ++i) {
    g.add_vertex("l" + std::to_string(i + 1), mu);
    g.add_edge(0, i + 1, w);
  }
  g.set_measure(MeasureMode::Explicit);
  return g;
}

WeightedGraph WeightedGraph::grid(int rows, int cols, double w,
                                  MeasureMode mode) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty grid");
  WeightedGraph g;
  auto name = [cols](int r, int c) {
    return "g" + std::to_string(r) + "_" + std::to_string(c);
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g.add_vertex(name(r, c));
  auto idx = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(idx(r, c), idx(r, c + 1), w);
      if (r + 1 < rows) g.add_edge(idx(r, c), idx(r + 1, c), w);
    }
  }
  g.set_measure(mode);
  return g;
}

double compute_d_mu(const WeightedGraph& g) {
  if (g.empty()) throw std::invalid_argument("D_mu of an empty graph");
  double d = 0.0;
  for (int v = 0; v < g.size(); ++v) {
    d = std::max(d, g.degree_weight(v) / g.mu(v));
  }
  return d;
}

double degree_weight(const WeightedGraph& g, int x) {
  return g.degree_weight(x);
}

bool is_connected(const WeightedGraph& g, std::span<const int> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("connectivity of an empty subset");
  }
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (int v : subset) in.at(v) = 1;
  std::deque<int> queue{subset[0]};
  seen[subset[0]] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (in[nb.vertex] && !seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        queue.push_back(nb.vertex);
      }
    }
  }
  return reached == subset.size();
}

DirichletDomain::DirichletDomain(const WeightedGraph& graph,
                                 std::vector<int> omega)
    : graph_(&graph), omega_(std::move(omega)) {
  if (omega_.empty()) throw std::invalid_argument("omega must be nonempty");
  omega_flag_.assign(graph.size(), 0);
  for (int v : omega_) {
    if (v < 0 || v >= graph.size()) {
      throw std::invalid_argument("omega vertex out of range");
    }
    if (omega_flag_[v]) {
      throw std::invalid_argument("omega contains a duplicate vertex");
    }
    omega_flag_[v] = 1;
  }
  interior_index_.assign(graph.size(), -1);
  for (int v : omega_) {
    bool boundary = false;
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (!omega_flag_[nb.vertex]) {
        boundary = true;
        break;
      }
    }
    if (boundary) {
      boundary_.push_back(v);
    } else {
      interior_index_[v] = static_cast<int>(interior_.size());
      interior_.push_back(v);
    }
  }
  if (interior_.empty()) throw std::invalid_argument("empty interior");
}

DirichletDomain split_domain(const WeightedGraph& graph,
                             std::vector<int> omega) {
  return DirichletDomain(graph, std::move(omega));
}

DirichletDomain split_domain(const WeightedGraph& graph,
                             const std::vector<std::string>& omega_ids) {
  std::vector<int> omega;
  omega.reserve(omega_ids.size());
  for (const std::string& id : omega_ids) omega.push_back(graph.index_of(id));
  return DirichletDomain(graph, std::move(omega));
}

VertexFunction::VertexFunction(const WeightedGraph& g, Support support)
    : values_(Eigen::VectorXd::Zero(g.size())), support_(support) {}

VertexFunction::VertexFunction(const DirichletDomain& dom, Support support,
                               const Eigen::VectorXd& values)
    : values_(Eigen::VectorXd::Zero(dom.graph().size())),
      support_(support),
      domain_(&dom) {
  const std::vector<int>& where =
      support == Support::Interior ? dom.interior() : dom.omega();
  if (support == Support::All) {
    throw std::invalid_argument("use the whole-graph constructor for V");
  }
  if (values.size() != static_cast<Eigen::Index>(where.size())) {
    throw std::invalid_argument("value vector does not match support size");
  }
  for (size_t i = 0; i < where.size(); ++i) values_(where[i]) = values(i);
}

VertexFunction::VertexFunction(const WeightedGraph& g,
                               const Eigen::VectorXd& values)
    : values_(values), support_(Support::All) {
  if (values.size() != g.size()) {
    throw std::invalid_argument("value vector does not match graph size");
  }
}

void VertexFunction::set(int v, double value) {
  if (domain_ != nullptr) {
    bool ok = support_ == Support::Interior ? domain_->in_interior(v)
                                            : domain_->in_omega(v);
    if (!ok && value != 0.0) {
      throw std::invalid_argument("assignment outside the declared support");
    }
  }
  values_(v) = value;
}

Eigen::VectorXd VertexFunction::interior_values(
    const DirichletDomain& dom) const {
  Eigen::VectorXd out(dom.interior_size());
  for (int j = 0; j < dom.interior_size(); ++j) {
    out(j) = values_(dom.interior()[j]);
  }
  return out;
}

VertexFunction extend_interior(const DirichletDomain& dom,
                               const Eigen::VectorXd& interior_values) {
  return VertexFunction(dom, Support::Interior, interior_values);
}

}  // namespace graphwave
