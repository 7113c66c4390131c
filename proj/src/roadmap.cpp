#include "cutpath/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cutpath {

Configuration::Configuration(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_)
    if (!std::isfinite(c)) throw std::invalid_argument("Configuration: non-finite coordinate");
}

double squared_distance(const Configuration& a, const Configuration& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("squared_distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double distance(const Configuration& a, const Configuration& b) {
  return std::sqrt(squared_distance(a, b));
}

const char* to_string(EdgeState s) {
  switch (s) {
    case EdgeState::kUnknown: return "unknown";
    case EdgeState::kFree: return "free";
    case EdgeState::kCollision: return "collision";
  }
  return "?";
}

ExtValue weight_from_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("weight_from_prob: p outside [0,1]");
  if (p == 0.0) return ExtValue::inf();
  if (p == 1.0) return ExtValue::zero();
  return ExtValue::finite(std::log(1.0 / p));
}

ExtValue capacity_from_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("capacity_from_prob: p outside [0,1]");
  if (p == 0.0) return ExtValue::zero();
  if (p == 1.0) return ExtValue::inf();
  return ExtValue::finite(std::log(1.0 / (1.0 - p)));
}

Roadmap::Roadmap(std::size_t dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Roadmap: dimension must be >= 1");
}

VertexId Roadmap::add_vertex(Configuration q) {
  if (q.dim() != dim_) throw std::invalid_argument("Roadmap::add_vertex: dimension mismatch");
  vertices_.push_back(std::move(q));
  adjacency_.emplace_back();
  return static_cast<VertexId>(vertices_.size() - 1);
}

void Roadmap::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
    throw std::out_of_range("Roadmap: vertex " + std::to_string(v) + " out of range");
}

static long long edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

EdgeId Roadmap::add_edge(VertexId u, VertexId v, double p) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Roadmap::add_edge: self-loop");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("Roadmap::add_edge: p outside [0,1]");
  const auto key = edge_key(u, v);
  if (edge_index_.contains(key)) throw std::invalid_argument("Roadmap::add_edge: duplicate edge");

  const auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::min(u, v), std::max(u, v)});
  edge_index_.emplace(key, e);
  adjacency_[u].push_back({v, e});
  adjacency_[v].push_back({u, e});
  prior_.push_back(p);
  weight_.emplace_back();
  capacity_.emplace_back();
  state_.push_back(EdgeState::kUnknown);
  derive_values(e);
  return e;
}

std::optional<EdgeId> Roadmap::find_edge(VertexId u, VertexId v) const {
  auto it = edge_index_.find(edge_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeState Roadmap::known_status(EdgeId e) const {
  if (state_[e] != EdgeState::kUnknown) return state_[e];
  if (prior_[e] == 0.0) return EdgeState::kCollision;
  if (prior_[e] == 1.0) return EdgeState::kFree;
  return EdgeState::kUnknown;
}

void Roadmap::derive_values(EdgeId e) {
  switch (state_[e]) {
    case EdgeState::kFree:
      weight_[e] = ExtValue::zero();
      capacity_[e] = ExtValue::inf();
      break;
    case EdgeState::kCollision:
      weight_[e] = ExtValue::inf();
      capacity_[e] = ExtValue::zero();
      break;
    case EdgeState::kUnknown:
      weight_[e] = weight_from_prob(prior_[e]);
      capacity_[e] = capacity_from_prob(prior_[e]);
      break;
  }
}

void Roadmap::set_prior(EdgeId e, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("Roadmap::set_prior: p outside [0,1]");
  if (state_.at(e) != EdgeState::kUnknown)
    throw ContractViolation("Roadmap::set_prior: edge already evaluated");
  prior_[e] = p;
  derive_values(e);
}

void Roadmap::restore_capacity(EdgeId e) { derive_values(e); }

void Roadmap::record_evaluation(EdgeId e, EdgeState status) {
  if (status == EdgeState::kUnknown)
    throw std::invalid_argument("Roadmap::record_evaluation: status must be FREE or COLLISION");
  if (state_.at(e) != EdgeState::kUnknown)
    throw ContractViolation("Roadmap::record_evaluation: edge " + std::to_string(e) +
                            " already evaluated");
  state_[e] = status;
  derive_values(e);
}

void Roadmap::clear_evaluations() {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    state_[e] = EdgeState::kUnknown;
    derive_values(static_cast<EdgeId>(e));
  }
}

void Roadmap::set_query(VertexId start, VertexId goal) {
  check_vertex(start);
  check_vertex(goal);
  start_ = start;
  goal_ = goal;
}

namespace {

VertexId attach_one(Roadmap& roadmap, const Configuration& q, const SegmentChecker& checker,
                    const char* label) {
  if (q.dim() != roadmap.dim())
    throw std::invalid_argument(std::string("attach_query: ") + label + " dimension mismatch");
  const auto n = roadmap.num_vertices();
  if (n == 0) throw std::invalid_argument("attach_query: roadmap has no vertices");

  std::vector<std::pair<double, VertexId>> by_distance;
  by_distance.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto id = static_cast<VertexId>(v);
    const double d2 = squared_distance(q, roadmap.vertex(id));
    if (d2 == 0.0) return id;
    by_distance.emplace_back(d2, id);
  }
  const auto k = std::min(kAttachCandidates, by_distance.size());
  std::partial_sort(by_distance.begin(), by_distance.begin() + static_cast<long>(k),
                    by_distance.end());

  for (std::size_t i = 0; i < k; ++i) {
    const VertexId target = by_distance[i].second;
    if (checker(q, roadmap.vertex(target)) == EdgeState::kFree) {
      const VertexId added = roadmap.add_vertex(q);
      roadmap.add_edge(added, target, 1.0);
      return added;
    }
  }
  throw QueryNotEmbeddable(std::string("query not embeddable: no collision-free connection for ") +
                           label);
}

}  // namespace

void attach_query(Roadmap& roadmap, const Configuration& start, const Configuration& goal,
                  const SegmentChecker& checker) {
  const VertexId s = attach_one(roadmap, start, checker, "start");
  const VertexId g = attach_one(roadmap, goal, checker, "goal");
  roadmap.set_query(s, g);
}

}  // namespace cutpath
