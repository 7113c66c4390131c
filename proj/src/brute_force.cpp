#include "cutpath/brute_force.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cutpath::brute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void dfs(int u, int t, double product, const std::vector<std::vector<std::pair<int, double>>>& adj,
         std::vector<bool>& on_path, double& best) {
  if (u == t) {
    best = std::max(best, product);
    return;
  }
  for (const auto& [v, p] : adj[u]) {
    if (on_path[v]) continue;
    on_path[v] = true;
    dfs(v, t, product * p, adj, on_path, best);
    on_path[v] = false;
  }
}

}  // namespace

std::optional<double> best_path_product(std::size_t n, std::span<const Edge> edges,
                                        std::span<const double> probs, int s, int t) {
  if (s == t) return 1.0;
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].emplace_back(edges[e].v, probs[e]);
    adj[edges[e].v].emplace_back(edges[e].u, probs[e]);
  }
  std::vector<bool> on_path(n, false);
  on_path[s] = true;
  double best = 0.0;
  dfs(s, t, 1.0, adj, on_path, best);
  if (best == 0.0) return std::nullopt;
  return best;
}

double min_cut_capacity(std::size_t n, std::span<const Edge> edges, std::span<const double> caps, int s,
                        int t) {
  if (n > 24) throw std::invalid_argument("min_cut_capacity: graph too large");
  std::vector<int> free_vertices;
  for (int v = 0; v < static_cast<int>(n); ++v)
    if (v != s && v != t) free_vertices.push_back(v);
  double best = kInf;
  std::vector<bool> source_side(n);
  for (unsigned long mask = 0; mask < (1UL << free_vertices.size()); ++mask) {
    source_side[s] = true;
    source_side[t] = false;
    for (std::size_t i = 0; i < free_vertices.size(); ++i) source_side[free_vertices[i]] = (mask >> i) & 1;
    double total = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (source_side[edges[e].u] != source_side[edges[e].v]) total += caps[e];
    best = std::min(best, total);
  }
  return best;
}

double edmonds_karp(std::size_t n, std::span<const Edge> edges, std::span<const double> caps, int s,
                    int t) {
  // Dense residual matrix; parallel edges merge.
  std::vector<std::vector<double>> res(n, std::vector<double>(n, 0.0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    res[edges[e].u][edges[e].v] += caps[e];
    res[edges[e].v][edges[e].u] += caps[e];
  }
  double flow = 0.0;
  for (;;) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < static_cast<int>(n); ++v)
        if (parent[v] < 0 && res[u][v] > 1e-12) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[t] < 0) return flow;
    double bottleneck = kInf;
    for (int v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, res[parent[v]][v]);
    if (bottleneck == kInf) return kInf;
    for (int v = t; v != s; v = parent[v]) {
      res[parent[v]][v] -= bottleneck;
      res[v][parent[v]] += bottleneck;
    }
    flow += bottleneck;
  }
}

bool connected(std::size_t n, std::span<const Edge> edges, const std::vector<bool>& usable, int s, int t) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (usable[e]) parent[find(edges[e].u)] = find(edges[e].v);
  return find(s) == find(t);
}

RandomGraph random_graph(std::mt19937_64& rng, std::size_t max_n, double density) {
  RandomGraph g;
  g.n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int u = 0; u < static_cast<int>(g.n); ++u)
    for (int v = u + 1; v < static_cast<int>(g.n); ++v) {
      if (unit(rng) >= density) continue;
      g.edges.push_back({u, v});
      const double r = unit(rng);
      g.probs.push_back(r < 0.05 ? 0.0 : r < 0.1 ? 1.0 : unit(rng));
    }
  return g;
}

}  // namespace cutpath::brute
