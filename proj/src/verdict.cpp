#include "cutpath/verdict.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cutpath {

void IterationStats::record_cut_call(std::size_t input_vertices) {
  if (n_cut_calls > 0)
    max_cut_input_vertices_after_first =
        std::max(max_cut_input_vertices_after_first, input_vertices);
  ++n_cut_calls;
  max_cut_input_vertices = std::max(max_cut_input_vertices, input_vertices);
  cut_input_vertices_sum += input_vertices;
}

namespace {

template <typename StatusOf>
std::string check(const Roadmap& roadmap, const Verdict& verdict, StatusOf&& status_of) {
  if (!roadmap.has_query()) return "roadmap has no query";
  const VertexId s = roadmap.start();
  const VertexId g = roadmap.goal();
  const auto m = roadmap.num_edges();

  if (verdict.feasible()) {
    const auto& path = verdict.path();
    if (path.vertices.size() != path.edges.size() + 1) return "path vertex/edge count mismatch";
    if (path.vertices.front() != s || path.vertices.back() != g)
      return "path does not run from start to goal";
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
      const EdgeId e = path.edges[i];
      if (e < 0 || static_cast<std::size_t>(e) >= m) return "path edge out of range";
      const auto& ed = roadmap.edge(e);
      const VertexId a = path.vertices[i];
      const VertexId b = path.vertices[i + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
        return "path edges are not consecutive";
      if (status_of(e) != EdgeState::kFree)
        return "path edge " + std::to_string(e) + " is not FREE";
    }
    return {};
  }

  const auto& cut = verdict.cut();
  std::unordered_set<EdgeId> removed;
  for (EdgeId e : cut.edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= m) return "cut edge out of range";
    if (status_of(e) != EdgeState::kCollision)
      return "cut edge " + std::to_string(e) + " is not COLLISION";
    removed.insert(e);
  }
  const auto seen = reachable_from(roadmap, s, [&](EdgeId e) { return !removed.contains(e); });
  if (seen[g]) return "cut does not disconnect start from goal";
  return {};
}

}  // namespace

std::string certificate_error(const Roadmap& roadmap, const Verdict& verdict) {
  return check(roadmap, verdict, [&](EdgeId e) { return roadmap.known_status(e); });
}

std::string certificate_error(const Roadmap& roadmap, const Verdict& verdict,
                              std::span<const EdgeState> truth) {
  if (truth.size() != roadmap.num_edges()) return "truth table size mismatch";
  return check(roadmap, verdict, [&](EdgeId e) { return truth[e]; });
}

CandidateCut frontier_cut(const Roadmap& roadmap) {
  const auto seen = reachable_from(roadmap, roadmap.start(), [&](EdgeId e) {
    return roadmap.known_status(e) != EdgeState::kCollision;
  });
  if (seen[roadmap.goal()])
    throw std::logic_error("frontier_cut: goal reachable over non-collision edges");
  CandidateCut cut;
  cut.partition.resize(roadmap.num_vertices());
  for (std::size_t v = 0; v < seen.size(); ++v)
    cut.partition[v] = seen[v] ? Side::kSource : Side::kSink;
  for (std::size_t e = 0; e < roadmap.num_edges(); ++e) {
    const auto& ed = roadmap.edge(static_cast<EdgeId>(e));
    if (seen[ed.u] != seen[ed.v]) cut.edges.push_back(static_cast<EdgeId>(e));
  }
  return cut;
}

std::optional<CandidatePath> known_free_path(const Roadmap& roadmap) {
  const VertexId s = roadmap.start();
  const VertexId g = roadmap.goal();
  std::vector<EdgeId> parent(roadmap.num_vertices(), -1);
  std::vector<bool> seen(roadmap.num_vertices(), false);
  std::deque<VertexId> queue{s};
  seen[s] = true;
  while (!queue.empty() && !seen[g]) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : roadmap.incident(u)) {
      if (seen[inc.neighbor] || roadmap.known_status(inc.edge) != EdgeState::kFree) continue;
      seen[inc.neighbor] = true;
      parent[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  if (!seen[g]) return std::nullopt;
  CandidatePath path;
  for (VertexId v = g; v != s;) {
    const EdgeId e = parent[v];
    path.vertices.push_back(v);
    path.edges.push_back(e);
    v = roadmap.edge(e).other(v);
  }
  path.vertices.push_back(s);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

namespace detail {

RunContext::RunContext(Roadmap& roadmap, const EdgeOracle& oracle)
    : roadmap_(roadmap),
      oracle_(oracle),
      ledger_(roadmap.num_edges()),
      started_(std::chrono::steady_clock::now()) {
  if (!roadmap.has_query()) throw std::invalid_argument("algorithm run: roadmap has no query");
}

void RunContext::begin_iteration() {
  ++stats_.n_iterations;
  if (stats_.n_iterations > roadmap_.num_edges() + 1)
    throw std::logic_error("iteration bound |E|+1 exceeded");
  evaluations_at_iteration_start_ = ledger_.n_evaluations;
}

void RunContext::end_iteration() {
  if (ledger_.n_evaluations == evaluations_at_iteration_start_) ++stats_.stalled_iterations;
}

Verdict RunContext::finish(CandidatePath path) { return finish_impl(std::move(path)); }
Verdict RunContext::finish(CandidateCut cut) { return finish_impl(std::move(cut)); }

Verdict RunContext::finish_impl(std::variant<CandidatePath, CandidateCut> cert) {
  stats_.n_evaluations = ledger_.n_evaluations;
  const auto elapsed = std::chrono::steady_clock::now() - started_ - ledger_.oracle_time;
  stats_.wall_time_us = std::chrono::duration<double, std::micro>(elapsed).count();
  return Verdict{std::move(cert), stats_};
}

}  // namespace detail

}  // namespace cutpath
