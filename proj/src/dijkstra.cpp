#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "cutpath/search.hpp"

namespace cutpath {

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();

// `for_each_incident(v, fn)` calls fn(neighbor, edge) for each incident edge.
template <typename Incident, typename Weight>
std::optional<CandidatePath> dijkstra(std::size_t n, VertexId source, VertexId target,
                                      Incident&& for_each_incident, Weight&& weight_of) {
  if (source < 0 || target < 0 || static_cast<std::size_t>(source) >= n ||
      static_cast<std::size_t>(target) >= n)
    throw std::out_of_range("most_probable_path: source or target vertex absent");
  if (source == target) return CandidatePath{{}, {source}, 0.0};

  std::vector<double> dist(n, kUnreached);
  std::vector<VertexId> pred(n, -1);
  std::vector<EdgeId> pred_edge(n, -1);
  std::vector<bool> done(n, false);

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[source] = 0.0;
  open.emplace(0.0, source);

  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (done[u] || d > dist[u]) continue;
    done[u] = true;
    if (u == target) break;
    for_each_incident(u, [&](VertexId v, EdgeId e) {
      if (done[v]) return;
      const ExtValue w = weight_of(e);
      if (w.is_inf()) return;
      const double nd = d + w.value();
      if (nd < dist[v] - kValueTolerance) {
        dist[v] = nd;
        pred[v] = u;
        pred_edge[v] = e;
        open.emplace(nd, v);
      } else if (std::abs(nd - dist[v]) <= kValueTolerance && u < pred[v]) {
        pred[v] = u;
        pred_edge[v] = e;
      }
    });
  }
  if (!done[target]) return std::nullopt;

  CandidatePath path;
  path.total_weight = dist[target];
  for (VertexId v = target; v != source; v = pred[v]) {
    path.vertices.push_back(v);
    path.edges.push_back(pred_edge[v]);
  }
  path.vertices.push_back(source);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

}  // namespace

std::optional<CandidatePath> most_probable_path(std::size_t num_vertices,
                                                std::span<const Edge> edges,
                                                std::span<const ExtValue> weights,
                                                VertexId source, VertexId target) {
  if (weights.size() != edges.size())
    throw std::invalid_argument("most_probable_path: weights/edges size mismatch");
  std::vector<std::vector<Incidence>> adj(num_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.u < 0 || ed.v < 0 || static_cast<std::size_t>(ed.u) >= num_vertices ||
        static_cast<std::size_t>(ed.v) >= num_vertices)
      throw std::out_of_range("most_probable_path: edge endpoint out of range");
    adj[ed.u].push_back({ed.v, static_cast<EdgeId>(e)});
    adj[ed.v].push_back({ed.u, static_cast<EdgeId>(e)});
  }
  return dijkstra(
      num_vertices, source, target,
      [&](VertexId u, auto&& fn) {
        for (const auto& inc : adj[u]) fn(inc.neighbor, inc.edge);
      },
      [&](EdgeId e) { return weights[e]; });
}

std::optional<CandidatePath> most_probable_path(const Roadmap& roadmap) {
  if (!roadmap.has_query()) throw std::invalid_argument("most_probable_path: roadmap has no query");
  return dijkstra(
      roadmap.num_vertices(), roadmap.start(), roadmap.goal(),
      [&](VertexId u, auto&& fn) {
        for (const auto& inc : roadmap.incident(u)) fn(inc.neighbor, inc.edge);
      },
      [&](EdgeId e) { return roadmap.weight(e); });
}

}  // namespace cutpath
