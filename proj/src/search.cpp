#include <deque>
#include <stdexcept>

#include "cutpath/search.hpp"

namespace cutpath {

std::optional<CandidateCut> most_probable_cut(std::size_t num_vertices,
                                              std::span<const Edge> edges,
                                              std::span<const ExtValue> capacities,
                                              std::span<const VertexId> sources,
                                              std::span<const VertexId> sinks) {
  if (capacities.size() != edges.size())
    throw std::invalid_argument("most_probable_cut: capacities/edges size mismatch");
  if (sources.empty() || sinks.empty())
    throw std::invalid_argument("most_probable_cut: empty terminal set");

  std::vector<unsigned char> role(num_vertices, 0);
  auto mark = [&](std::span<const VertexId> set, unsigned char r) {
    for (VertexId v : set) {
      if (v < 0 || static_cast<std::size_t>(v) >= num_vertices)
        throw std::out_of_range("most_probable_cut: terminal out of range");
      if (role[v] != 0 && role[v] != r)
        throw std::invalid_argument("most_probable_cut: sources and sinks intersect");
      role[v] = r;
    }
  };
  mark(sources, 1);
  mark(sinks, 2);

  double finite_sum = 0.0;
  for (const auto& c : capacities)
    if (c.is_finite()) finite_sum += c.value();
  const double surrogate = finite_sum + 1.0;

  const bool single = sources.size() == 1 && sinks.size() == 1;
  const std::size_t nodes = single ? num_vertices : num_vertices + 2;
  if (nodes < 2) throw std::invalid_argument("most_probable_cut: graph too small");
  MaxFlow flow(nodes);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.u < 0 || ed.v < 0 || static_cast<std::size_t>(ed.u) >= num_vertices ||
        static_cast<std::size_t>(ed.v) >= num_vertices)
      throw std::out_of_range("most_probable_cut: edge endpoint out of range");
    const double c = capacities[e].value_or(surrogate);
    flow.add_arc_pair(ed.u, ed.v, c, c);
  }
  int s = sources.front();
  int t = sinks.front();
  if (!single) {
    s = static_cast<int>(num_vertices);
    t = static_cast<int>(num_vertices + 1);
    for (VertexId v : sources) flow.add_arc_pair(s, v, surrogate, 0.0);
    for (VertexId v : sinks) flow.add_arc_pair(v, t, surrogate, 0.0);
  }

  const double value = flow.solve(s, t);
  // Any cut with an INF edge is worth at least S + 1; finite cuts at most S.
  if (value > finite_sum + 0.5) return std::nullopt;

  CandidateCut cut;
  cut.flow_value = value;
  cut.partition.resize(num_vertices);
  const auto& side = flow.source_side();
  for (std::size_t v = 0; v < num_vertices; ++v)
    cut.partition[v] = side[v] ? Side::kSource : Side::kSink;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (side[ed.u] != side[ed.v]) {
      if (capacities[e].is_inf())
        throw std::logic_error("most_probable_cut: INF edge crosses a finite cut");
      cut.edges.push_back(static_cast<EdgeId>(e));
      cut.total_capacity += capacities[e].value();
    }
  }
  return cut;
}

std::optional<CandidateCut> most_probable_cut(const Roadmap& roadmap) {
  if (!roadmap.has_query()) throw std::invalid_argument("most_probable_cut: roadmap has no query");
  const VertexId s = roadmap.start();
  const VertexId t = roadmap.goal();
  return most_probable_cut(roadmap.num_vertices(), roadmap.edges(), roadmap.capacities(),
                           std::span<const VertexId>(&s, 1), std::span<const VertexId>(&t, 1));
}

bool bfs_connected(std::size_t num_vertices, std::span<const Edge> edges, VertexId s, VertexId t) {
  if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= num_vertices ||
      static_cast<std::size_t>(t) >= num_vertices)
    throw std::out_of_range("bfs_connected: vertex absent");
  if (s == t) return true;
  std::vector<std::vector<VertexId>> adj(num_vertices);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(num_vertices, false);
  std::deque<VertexId> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : adj[u]) {
      if (seen[v]) continue;
      if (v == t) return true;
      seen[v] = true;
      queue.push_back(v);
    }
  }
  return false;
}

std::vector<bool> reachable_from(const Roadmap& roadmap, VertexId s,
                                 const std::function<bool(EdgeId)>& usable) {
  std::vector<bool> seen(roadmap.num_vertices(), false);
  std::deque<VertexId> queue{s};
  seen.at(s) = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : roadmap.incident(u)) {
      if (seen[inc.neighbor] || !usable(inc.edge)) continue;
      seen[inc.neighbor] = true;
      queue.push_back(inc.neighbor);
    }
  }
  return seen;
}

}  // namespace cutpath
