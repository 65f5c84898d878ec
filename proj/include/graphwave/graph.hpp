#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace graphwave {

/// How vertex measures are assigned when a graph is finalized.
enum class MeasureMode { Unit, Normalized, Explicit };

/// Declared support of a vertex function. Evaluation outside the support
/// is identically zero (the zero-extension convention of the Dirichlet
/// Laplacian).
enum class Support { All, Omega, Interior };

struct Neighbor {
  int vertex;
  double weight;
};

/// Finite weighted graph (V, omega, mu): symmetric positive edge weights,
/// positive vertex measure, no self-loops, at most one edge per pair.
///
/// Build with add_vertex/add_edge, then call set_measure once. After a
/// DirichletDomain has been constructed on it the graph must not be
/// mutated; all accessors are const and thread-safe.
class WeightedGraph {
 public:
  /// Adds a vertex with an optional explicit measure. Returns its index.
  int add_vertex(const std::string& id, double mu = 1.0);

  /// Adds an undirected edge with weight w > 0. Throws on self-loops,
  /// duplicate edges, unknown vertices, or nonpositive weight.
  void add_edge(const std::string& a, const std::string& b, double w);
  void add_edge(int a, int b, double w);

  /// Fixes the vertex measure. Normalized sets mu(x) = m(x) and requires
  /// every vertex to have at least one edge.
  void set_measure(MeasureMode mode);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }

  int index_of(const std::string& id) const;
  const std::string& id_of(int v) const { return ids_.at(v); }
  bool has_vertex(const std::string& id) const {
    return index_.count(id) != 0;
  }

  double mu(int v) const { return mu_.at(v); }
  MeasureMode measure_mode() const { return mode_; }

  std::span<const Neighbor> neighbors(int v) const {
    return {adj_.at(v).data(), adj_.at(v).size()};
  }
  bool adjacent(int a, int b) const;

  /// m(x) = sum of incident edge weights.
  double degree_weight(int v) const;

  /// Convenience builders used by tests and the propagation experiment.
  static WeightedGraph path(int n, double w = 1.0,
                            MeasureMode mode = MeasureMode::Unit);
  static WeightedGraph star(int leaves, double w = 1.0, double mu = 1.0);
  static WeightedGraph grid(int rows, int cols, double w = 1.0,
                            MeasureMode mode = MeasureMode::Unit);

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<double> mu_;
  std::vector<std::vector<Neighbor>> adj_;
  MeasureMode mode_ = MeasureMode::Unit;
};

/// D_mu = max_x m(x)/mu(x). Throws on an empty graph.
double compute_d_mu(const WeightedGraph& g);

/// m(x); throws on an unknown vertex index.
double degree_weight(const WeightedGraph& g, int x);

/// True iff the subgraph induced on `subset` is connected (BFS).
bool is_connected(const WeightedGraph& g, std::span<const int> subset);

/// A bounded domain Omega split into boundary and interior, with the
/// interior ordering frozen at construction.
class DirichletDomain {
 public:
  DirichletDomain(const WeightedGraph& graph, std::vector<int> omega);

  const WeightedGraph& graph() const { return *graph_; }
  const std::vector<int>& omega() const { return omega_; }
  const std::vector<int>& boundary() const { return boundary_; }
  const std::vector<int>& interior() const { return interior_; }

  int omega_size() const { return static_cast<int>(omega_.size()); }      // M
  int interior_size() const { return static_cast<int>(interior_.size()); } // N

  bool in_omega(int v) const { return omega_flag_.at(v); }
  bool in_interior(int v) const { return interior_index_.at(v) >= 0; }
  bool on_boundary(int v) const { return omega_flag_.at(v) && !in_interior(v); }

  /// Position of v in the interior ordering, or -1.
  int interior_index(int v) const { return interior_index_.at(v); }

 private:
  const WeightedGraph* graph_;
  std::vector<int> omega_;
  std::vector<int> boundary_;
  std::vector<int> interior_;
  std::vector<char> omega_flag_;
  std::vector<int> interior_index_;
};

/// split_domain(graph, omega): boundary = vertices of omega with a
/// neighbor outside omega, interior = the rest (input order preserved).
/// Throws if the interior is empty.
DirichletDomain split_domain(const WeightedGraph& graph,
                             std::vector<int> omega);
DirichletDomain split_domain(const WeightedGraph& graph,
                             const std::vector<std::string>& omega_ids);

/// Real-valued vertex function with a declared support. Values are stored
/// for every vertex of the graph; construction zeroes everything outside
/// the support, so evaluation anywhere honors zero-extension.
class VertexFunction {
 public:
  /// Empty placeholder; assign before use.
  VertexFunction() = default;

  /// Zero function on the whole graph.
  explicit VertexFunction(const WeightedGraph& g,
                          Support support = Support::All);

  /// Function supported on Omega or the interior of `dom`; `values` is
  /// indexed by the corresponding ordering (omega() or interior()).
  VertexFunction(const DirichletDomain& dom, Support support,
                 const Eigen::VectorXd& values);

  /// Function on all of V from a full-length vector.
  VertexFunction(const WeightedGraph& g, const Eigen::VectorXd& values);

  Support support() const { return support_; }
  int graph_size() const { return static_cast<int>(values_.size()); }

  double operator()(int v) const { return values_(v); }
  void set(int v, double value);

  const Eigen::VectorXd& values() const { return values_; }

  /// Values restricted to the interior ordering of `dom`.
  Eigen::VectorXd interior_values(const DirichletDomain& dom) const;

 private:
  Eigen::VectorXd values_;
  Support support_ = Support::All;
  const DirichletDomain* domain_ = nullptr;  // null for Support::All
};

/// Interior vector -> zero-extended vertex function.
VertexFunction extend_interior(const DirichletDomain& dom,
                               const Eigen::VectorXd& interior_values);

}  // namespace graphwave
