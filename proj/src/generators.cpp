#include "cutpath/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cutpath/kernels.hpp"

namespace cutpath {

namespace {

constexpr double kUnsetPrior = 0.5;

std::vector<Configuration> sample_uniform(const Scene& scene, std::size_t n, std::mt19937_64& rng) {
  const auto& lo = scene.bounds.lo;
  const auto& hi = scene.bounds.hi;
  std::vector<Configuration> points;
  points.reserve(n);
  std::vector<double> q(scene.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < q.size(); ++j)
      q[j] = std::uniform_real_distribution<double>(lo[j], hi[j])(rng);
    points.emplace_back(q);
  }
  return points;
}

std::vector<std::pair<VertexId, VertexId>> knn_pairs(const std::vector<std::vector<VertexId>>& nn,
                                                     std::size_t k) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t u = 0; u < nn.size(); ++u)
    for (std::size_t j = 0; j < std::min(k, nn[u].size()); ++j) {
      const auto v = nn[u][j];
      pairs.emplace_back(std::min<VertexId>(u, v), std::max<VertexId>(u, v));
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

Roadmap assemble(const Scene& scene, const std::vector<Configuration>& points,
                 const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Roadmap roadmap(scene.dim());
  for (const auto& q : points) roadmap.add_vertex(q);
  for (const auto& [u, v] : pairs) roadmap.add_edge(u, v, kUnsetPrior);
  return roadmap;
}

void check_prm_args(const Scene& scene, std::size_t n, std::size_t k) {
  validate_scene(scene);
  if (n < 2) throw std::invalid_argument("prm: n_vertices must be >= 2");
  if (k < 1) throw std::invalid_argument("prm: k_neighbors must be >= 1");
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  void grow() { parent.push_back(parent.size()); }
  std::vector<std::size_t> parent;
};

}  // namespace

Roadmap prm(const Scene& scene, std::size_t n_vertices, std::size_t k_neighbors, std::uint64_t seed) {
  check_prm_args(scene, n_vertices, k_neighbors);
  std::mt19937_64 rng(seed);
  const auto points = sample_uniform(scene, n_vertices, rng);
  const auto nn = kernels::nearest_neighbors(points, std::min(k_neighbors, n_vertices - 1));
  return assemble(scene, points, knn_pairs(nn, k_neighbors));
}

Roadmap prm_with_edges(const Scene& scene, std::size_t n_vertices, std::size_t target_edges,
                       std::uint64_t seed, std::size_t* k_out) {
  check_prm_args(scene, n_vertices, 1);
  std::mt19937_64 rng(seed);
  const auto points = sample_uniform(scene, n_vertices, rng);
  // Each vertex contributes at least k/2 distinct edges, so 2m/n + 1 suffices.
  const std::size_t k_max = std::min(n_vertices - 1, 2 * target_edges / n_vertices + 2);
  const auto nn = kernels::nearest_neighbors(points, k_max);

  // Edge count is nondecreasing in k; find the first k reaching the target.
  std::size_t lo = 1, hi = k_max;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (knn_pairs(nn, mid).size() >= target_edges)
      hi = mid;
    else
      lo = mid + 1;
  }
  auto pairs = knn_pairs(nn, lo);
  if (lo > 1) {
    auto below = knn_pairs(nn, lo - 1);
    const auto dist = [&](std::size_t m) { return m > target_edges ? m - target_edges : target_edges - m; };
    if (dist(below.size()) < dist(pairs.size())) {
      pairs = std::move(below);
      --lo;
    }
  }
  if (k_out) *k_out = lo;
  return assemble(scene, points, pairs);
}

Roadmap grid(const Scene& scene, std::size_t rows, std::size_t cols) {
  validate_scene(scene);
  if (scene.dim() != 2) throw std::invalid_argument("grid: scene must be 2-D");
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid: rows and cols must be >= 2");
  const auto& lo = scene.bounds.lo;
  const auto& hi = scene.bounds.hi;
  Roadmap roadmap(2);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      roadmap.add_vertex({lo[0] + (hi[0] - lo[0]) * (c + 0.5) / cols,
                          lo[1] + (hi[1] - lo[1]) * (r + 0.5) / rows});
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) roadmap.add_edge(id(r, c), id(r, c + 1), kUnsetPrior);
      if (r + 1 < rows) roadmap.add_edge(id(r, c), id(r + 1, c), kUnsetPrior);
    }
  return roadmap;
}

Roadmap sparse_roadmap(const Scene& scene, std::size_t n_attempts, double visibility_radius,
                       std::uint64_t seed) {
  validate_scene(scene);
  if (n_attempts < 1) throw std::invalid_argument("sparse_roadmap: n_attempts must be >= 1");
  if (!(visibility_radius > 0.0)) throw std::invalid_argument("sparse_roadmap: radius must be > 0");
  std::mt19937_64 rng(seed);
  Roadmap roadmap(scene.dim());
  std::vector<VertexId> guards;
  DisjointSets components(0);
  const double r2 = visibility_radius * visibility_radius;

  for (std::size_t attempt = 0; attempt < n_attempts; ++attempt) {
    const Configuration q = sample_uniform(scene, 1, rng).front();
    if (evaluate_segment_base(scene, q, q) == EdgeState::kCollision) continue;
    std::vector<VertexId> visible;
    for (VertexId g : guards) {
      const auto& p = roadmap.vertex(g);
      if (squared_distance(p, q) <= r2 && evaluate_segment_base(scene, p, q) == EdgeState::kFree)
        visible.push_back(g);
    }
    if (visible.empty()) {
      guards.push_back(roadmap.add_vertex(q));
      components.grow();
      continue;
    }
    std::vector<VertexId> reps;
    std::vector<std::size_t> roots;
    for (VertexId g : visible) {
      const auto root = components.find(g);
      if (std::find(roots.begin(), roots.end(), root) != roots.end()) continue;
      roots.push_back(root);
      reps.push_back(g);
    }
    if (reps.size() < 2) continue;
    const VertexId c = roadmap.add_vertex(q);
    components.grow();
    for (VertexId g : reps) {
      roadmap.add_edge(std::min(c, g), std::max(c, g), kUnsetPrior);
      components.unite(c, g);
    }
  }
  return roadmap;
}

const char* to_string(PriorMode m) {
  switch (m) {
    case PriorMode::kPerfect: return "perfect";
    case PriorMode::kNoisy: return "noisy";
    case PriorMode::kNone: return "none";
  }
  return "?";
}

PriorMode parse_prior_mode(const std::string& s) {
  if (s == "perfect") return PriorMode::kPerfect;
  if (s == "noisy") return PriorMode::kNoisy;
  if (s == "none") return PriorMode::kNone;
  throw std::invalid_argument("unknown prior mode '" + s + "'");
}

void PriorCalibration::validate() const {
  if (mode == PriorMode::kNoisy && !(0.0 <= a && a < b && b <= c && c < d && d <= 1.0))
    throw std::invalid_argument("noisy prior requires 0 <= a < b <= c < d <= 1");
}

std::vector<EdgeState> label_and_calibrate(Roadmap& roadmap, const Scene& scene,
                                           const PriorCalibration& calibration) {
  calibration.validate();
  auto truth = kernels::label_edges(scene, roadmap);
  std::mt19937_64 rng(calibration.seed);
  std::uniform_real_distribution<double> collision_p(calibration.a, calibration.b);
  std::uniform_real_distribution<double> free_p(calibration.c, calibration.d);
  for (std::size_t e = 0; e < truth.size(); ++e) {
    const bool free = truth[e] == EdgeState::kFree;
    double p = 0.5;
    switch (calibration.mode) {
      case PriorMode::kPerfect: p = free ? 1.0 : 0.0; break;
      case PriorMode::kNoisy: p = free ? free_p(rng) : collision_p(rng); break;
      case PriorMode::kNone: break;
    }
    roadmap.set_prior(static_cast<EdgeId>(e), p);
  }
  return truth;
}

}  // namespace cutpath
