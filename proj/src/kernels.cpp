#include "cutpath/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace cutpath::kernels {

namespace {

EdgeState label_one(const Scene& scene, const Roadmap& roadmap, EdgeId e) {
  const auto& edge = roadmap.edge(e);
  return evaluate_segment(scene, roadmap.vertex(edge.u), roadmap.vertex(edge.v));
}

std::vector<VertexId> neighbors_of(std::span<const Configuration> points, std::size_t i,
                                   std::size_t k, std::vector<std::pair<double, VertexId>>& buf) {
  buf.clear();
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != i) buf.emplace_back(squared_distance(points[i], points[j]), static_cast<VertexId>(j));
  const auto take = std::min(k, buf.size());
  std::partial_sort(buf.begin(), buf.begin() + static_cast<long>(take), buf.end());
  std::vector<VertexId> out(take);
  for (std::size_t t = 0; t < take; ++t) out[t] = buf[t].second;
  return out;
}

}  // namespace

std::vector<EdgeState> label_edges_serial(const Scene& scene, const Roadmap& roadmap) {
  std::vector<EdgeState> out(roadmap.num_edges());
  for (std::size_t e = 0; e < out.size(); ++e)
    out[e] = label_one(scene, roadmap, static_cast<EdgeId>(e));
  return out;
}

std::vector<EdgeState> label_edges(const Scene& scene, const Roadmap& roadmap) {
  const auto m = static_cast<long>(roadmap.num_edges());
  std::vector<EdgeState> out(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static)
  for (long e = 0; e < m; ++e) out[e] = label_one(scene, roadmap, static_cast<EdgeId>(e));
  return out;
}

std::vector<std::vector<VertexId>> nearest_neighbors_serial(std::span<const Configuration> points,
                                                            std::size_t k) {
  std::vector<std::vector<VertexId>> out(points.size());
  std::vector<std::pair<double, VertexId>> buf;
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = neighbors_of(points, i, k, buf);
  return out;
}

std::vector<std::vector<VertexId>> nearest_neighbors(std::span<const Configuration> points,
                                                     std::size_t k) {
  const auto n = static_cast<long>(points.size());
  std::vector<std::vector<VertexId>> out(points.size());
#pragma omp parallel
  {
    std::vector<std::pair<double, VertexId>> buf;
#pragma omp for schedule(dynamic, 32)
    for (long i = 0; i < n; ++i) out[i] = neighbors_of(points, static_cast<std::size_t>(i), k, buf);
  }
  return out;
}

}  // namespace cutpath::kernels
