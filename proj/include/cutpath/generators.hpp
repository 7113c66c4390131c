#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutpath/geometry.hpp"
#include "cutpath/roadmap.hpp"

namespace cutpath {

// Generated roadmaps carry p = 0.5 on every edge until calibrated.

// n uniform samples over the scene bounds, each linked to its k nearest
// neighbors (undirected, deduplicated).
Roadmap prm(const Scene& scene, std::size_t n_vertices, std::size_t k_neighbors, std::uint64_t seed);

// As above, with k chosen by binary search so the edge count is as close as
// possible to `target_edges`. The chosen k is written to `k_out` if given.
Roadmap prm_with_edges(const Scene& scene, std::size_t n_vertices, std::size_t target_edges,
                       std::uint64_t seed, std::size_t* k_out = nullptr);

// rows x cols lattice at cell centers of the scene bounds, 4-connected.
Roadmap grid(const Scene& scene, std::size_t rows, std::size_t cols);

// Visibility-based sparse roadmap: a sample becomes a guard when it sees no
// guard within `visibility_radius`, a connector when it sees guards of two
// or more components, and is dropped otherwise. Visibility uses the base
// obstacles only.
Roadmap sparse_roadmap(const Scene& scene, std::size_t n_attempts, double visibility_radius,
                       std::uint64_t seed);

enum class PriorMode { kPerfect, kNoisy, kNone };

const char* to_string(PriorMode m);
PriorMode parse_prior_mode(const std::string& s);

struct PriorCalibration {
  PriorMode mode = PriorMode::kNoisy;
  // NOISY: collision edges ~ U(a, b), free edges ~ U(c, d).
  double a = 0.3, b = 0.4, c = 0.6, d = 0.7;
  std::uint64_t seed = 0;

  void validate() const;
};

// Labels every edge against the scene and assigns priors accordingly.
// Returns the truth table. Only UNKNOWN edges may be relabeled.
std::vector<EdgeState> label_and_calibrate(Roadmap& roadmap, const Scene& scene,
                                           const PriorCalibration& calibration);

}  // namespace cutpath
