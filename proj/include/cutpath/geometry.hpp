#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cutpath/roadmap.hpp"

namespace cutpath {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Simple convex polygon, counterclockwise. Two-dimensional scenes only.
struct Polygon2D {
  std::vector<Point2> vertices;
};

// Axis-aligned box, lo[i] <= hi[i].
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
};

struct Sphere {
  Configuration center;
  double radius = 0.0;
};

using ConvexObstacle = std::variant<Polygon2D, Box, Sphere>;

// Throws std::invalid_argument if the shape is malformed or its dimension
// differs from `dim`.
void validate_obstacle(const ConvexObstacle& obstacle, std::size_t dim);

std::size_t obstacle_dim(const ConvexObstacle& obstacle);

// Closed-set tests: touching the boundary counts as intersecting.
bool segment_hits(const Polygon2D& poly, const Configuration& a, const Configuration& b);
bool segment_hits(const Box& box, const Configuration& a, const Configuration& b);
bool segment_hits(const Sphere& sphere, const Configuration& a, const Configuration& b);
bool segment_hits(const ConvexObstacle& obstacle, const Configuration& a, const Configuration& b);

bool point_in_polygon(const Polygon2D& poly, Point2 p);

// Point-robot world: a bounding box, a fixed obstacle set and a set of
// "toggle" obstacles that turn a feasible layout into an infeasible one.
struct Scene {
  std::string name;
  Box bounds;
  std::vector<ConvexObstacle> base_obstacles;
  std::vector<ConvexObstacle> toggle_obstacles;
  bool toggles_active = false;
  std::optional<Configuration> start;
  std::optional<Configuration> goal;

  std::size_t dim() const { return bounds.lo.size(); }
  bool contains(const Configuration& q) const;
};

void validate_scene(const Scene& scene);

// COLLISION iff the closed segment [a,b] meets any active obstacle.
EdgeState evaluate_segment(const Scene& scene, const Configuration& a, const Configuration& b);
// Same, ignoring toggle obstacles regardless of toggles_active.
EdgeState evaluate_segment_base(const Scene& scene, const Configuration& a, const Configuration& b);

// Scene text format (one directive per line, '#' comments):
//   bounds <d> lo1 hi1 ... lod hid
//   [toggle] poly <k> x1 y1 ... xk yk
//   [toggle] box lo1 hi1 ... lod hid
//   [toggle] sphere c1 ... cd r
//   start c1 ... cd          (optional query endpoint)
//   goal c1 ... cd           (optional query endpoint)
//   toggles on|off           (optional, default off)
void write_scene(std::ostream& os, const Scene& scene);
Scene read_scene(std::istream& is, std::string name = {});

// Bundled parametric scenes: "passage", "rooms", "zigzag", "clutter".
const std::vector<std::string>& bundled_scene_names();
Scene bundled_scene(const std::string& name, bool toggles_active);

}  // namespace cutpath
