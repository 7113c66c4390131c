#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cutpath/ext_value.hpp"
#include "cutpath/roadmap.hpp"

namespace cutpath {

// Ordered edge sequence from a source vertex to a target vertex.
struct CandidatePath {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // edges.size() + 1 entries
  double total_weight = 0.0;
};

enum class Side : unsigned char { kSource, kSink };

struct CandidateCut {
  std::vector<EdgeId> edges;
  double total_capacity = 0.0;
  double flow_value = 0.0;
  std::vector<Side> partition;  // one entry per input vertex
};

// Absolute tolerance for comparing accumulated weights and capacities.
inline constexpr double kValueTolerance = 1e-12;

// Dijkstra over the finite weights. Returns the path with minimum total
// weight (maximum product of p), or nullopt when every s-t path crosses an
// INF edge. Equal-distance relaxations keep the smaller predecessor index.
std::optional<CandidatePath> most_probable_path(std::size_t num_vertices,
                                                std::span<const Edge> edges,
                                                std::span<const ExtValue> weights,
                                                VertexId source, VertexId target);
std::optional<CandidatePath> most_probable_path(const Roadmap& roadmap);

// Minimum-capacity cut separating every source from every sink of the
// undirected graph (each edge is two antiparallel arcs). INF capacities are
// replaced by S + 1, S being the sum of finite capacities; a minimum above S
// means every cut uses an INF edge and nullopt is returned. The reported cut
// is the set of edges leaving the residual-reachable set of the sources.
std::optional<CandidateCut> most_probable_cut(std::size_t num_vertices,
                                              std::span<const Edge> edges,
                                              std::span<const ExtValue> capacities,
                                              std::span<const VertexId> sources,
                                              std::span<const VertexId> sinks);
std::optional<CandidateCut> most_probable_cut(const Roadmap& roadmap);

bool bfs_connected(std::size_t num_vertices, std::span<const Edge> edges, VertexId s, VertexId t);

// Vertices reachable from `s` over roadmap edges accepted by `usable`.
std::vector<bool> reachable_from(const Roadmap& roadmap, VertexId s,
                                 const std::function<bool(EdgeId)>& usable);

// Highest-label push-relabel max flow on real capacities, with gap
// relabeling and periodic global relabeling. Computes a full flow, so the
// residual-reachable set of the source is the minimal source-side cut.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t num_nodes);

  // Adds u->v with capacity `cap_uv` and v->u with `cap_vu`.
  void add_arc_pair(int u, int v, double cap_uv, double cap_vu);

  double solve(int source, int sink);

  // Valid after solve().
  const std::vector<bool>& source_side() const { return source_side_; }
  std::size_t num_nodes() const { return n_; }
  std::size_t relabel_count() const { return relabels_; }

 private:
  struct ArcInput {
    int from, to;
    double cap;
  };

  void build();
  void global_relabel(int source, int sink);
  void push(int a, int u);
  bool discharge(int u, int source, int sink);

  std::size_t n_;
  std::vector<ArcInput> input_;
  // CSR arrays, built in solve().
  std::vector<int> first_, head_, rev_;
  std::vector<double> res_;
  std::vector<double> excess_;
  std::vector<int> label_, current_, label_count_;
  std::vector<std::vector<int>> buckets_;
  int highest_ = -1;
  double eps_ = 0.0;
  std::size_t relabels_ = 0;
  std::size_t relabels_since_global_ = 0;
  bool need_global_ = false;
  std::vector<bool> source_side_;
};

}  // namespace cutpath
