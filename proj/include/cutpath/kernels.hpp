#pragma once

#include <span>
#include <vector>

#include "cutpath/geometry.hpp"
#include "cutpath/roadmap.hpp"

// Data-parallel kernels used by the generators. Each OpenMP kernel has a
// serial reference twin with identical output; tests compare the two and
// the benchmark target times them.
namespace cutpath::kernels {

// Ground-truth status of every roadmap edge against the scene.
std::vector<EdgeState> label_edges(const Scene& scene, const Roadmap& roadmap);
std::vector<EdgeState> label_edges_serial(const Scene& scene, const Roadmap& roadmap);

// For every point, the indices of its k nearest other points in ascending
// distance (ties by index). Brute force, O(n^2 d).
std::vector<std::vector<VertexId>> nearest_neighbors(std::span<const Configuration> points,
                                                     std::size_t k);
std::vector<std::vector<VertexId>> nearest_neighbors_serial(std::span<const Configuration> points,
                                                            std::size_t k);

}  // namespace cutpath::kernels
