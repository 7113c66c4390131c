#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cutpath/ext_value.hpp"

namespace cutpath {

using VertexId = int;
using EdgeId = int;

// A point in a d-dimensional workspace.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<double> coords);
  Configuration(std::initializer_list<double> coords)
      : Configuration(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<double> coords_;
};

double squared_distance(const Configuration& a, const Configuration& b);
double distance(const Configuration& a, const Configuration& b);

enum class EdgeState { kUnknown, kFree, kCollision };

const char* to_string(EdgeState s);

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Raised when an edge is evaluated twice or other monotone-state rules break.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when start or goal cannot be connected to the roadmap.
class QueryNotEmbeddable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p_w = log(1/p); INF when p = 0.
ExtValue weight_from_prob(double p);
// p_c = log(1/(1-p)); INF when p = 1.
ExtValue capacity_from_prob(double p);

// Undirected simple graph whose edges carry a prior probability of being
// collision-free, the derived weight/capacity, and the evaluation state.
//
// Invariants kept by every mutator:
//   * 0 < p < 1 and UNKNOWN  ->  p_w = log(1/p),  p_c = log(1/(1-p))
//   * p = 0 or COLLISION     ->  p_w = INF,       p_c = 0
//   * p = 1 or FREE          ->  p_w = 0,         p_c = INF
// Capacities may be overridden temporarily (see set_capacity) by the cut
// heuristics; restore_capacity puts the invariant back.
class Roadmap {
 public:
  explicit Roadmap(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  VertexId add_vertex(Configuration q);
  EdgeId add_edge(VertexId u, VertexId v, double p);

  const Configuration& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  double prior(EdgeId e) const { return prior_[e]; }
  ExtValue weight(EdgeId e) const { return weight_[e]; }
  ExtValue capacity(EdgeId e) const { return capacity_[e]; }
  EdgeState state(EdgeId e) const { return state_[e]; }
  std::span<const ExtValue> weights() const { return weight_; }
  std::span<const ExtValue> capacities() const { return capacity_; }

  // True when p is exactly 0 or 1; such edges are never evaluated.
  bool is_deterministic(EdgeId e) const { return prior_[e] == 0.0 || prior_[e] == 1.0; }
  // Evaluated state, or the state implied by a deterministic prior.
  EdgeState known_status(EdgeId e) const;

  // Replaces the prior of an UNKNOWN edge and recomputes its values.
  void set_prior(EdgeId e, double p);
  void set_capacity(EdgeId e, ExtValue c) { capacity_.at(e) = c; }
  void restore_capacity(EdgeId e);

  // UNKNOWN -> FREE|COLLISION; throws ContractViolation otherwise.
  void record_evaluation(EdgeId e, EdgeState status);
  // Resets every edge to UNKNOWN with values derived from its prior.
  void clear_evaluations();

  bool has_query() const { return start_ >= 0 && goal_ >= 0; }
  VertexId start() const { return start_; }
  VertexId goal() const { return goal_; }
  void set_query(VertexId start, VertexId goal);

 private:
  void check_vertex(VertexId v) const;
  void derive_values(EdgeId e);

  std::size_t dim_;
  std::vector<Configuration> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<long long, EdgeId> edge_index_;
  std::vector<double> prior_;
  std::vector<ExtValue> weight_;
  std::vector<ExtValue> capacity_;
  std::vector<EdgeState> state_;
  VertexId start_ = -1;
  VertexId goal_ = -1;
};

// Collision check for a straight segment; must return FREE or COLLISION.
using SegmentChecker = std::function<EdgeState(const Configuration&, const Configuration&)>;

inline constexpr std::size_t kAttachCandidates = 10;

// Adds start and goal to the roadmap (or reuses a vertex at zero distance)
// and links each one to the nearest vertex whose connecting segment is free,
// trying up to kAttachCandidates vertices in increasing distance. The new
// edges get p = 1. Throws QueryNotEmbeddable when no candidate works.
void attach_query(Roadmap& roadmap, const Configuration& start, const Configuration& goal,
                  const SegmentChecker& checker);

// Text format:
//   dim <d> vertices <n> edges <m>
//   n lines of d reals
//   m lines "u v p" with u < v and 0 <= p <= 1
void write_roadmap(std::ostream& os, const Roadmap& roadmap);
Roadmap read_roadmap(std::istream& is);

// Thrown by the text readers; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cutpath
