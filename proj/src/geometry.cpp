#include "cutpath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>

#include "text_reader.hpp"

namespace cutpath {

namespace {

constexpr double kDiscriminantTol = 1e-12;

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segment intersection, collinear overlap included.
bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const int d1 = sign(cross(q1, q2, p1));
  const int d2 = sign(cross(q1, q2, p2));
  const int d3 = sign(cross(p1, p2, q1));
  const int d4 = sign(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

Point2 to_point(const Configuration& q) { return {q[0], q[1]}; }

void check_dims(const Configuration& a, const Configuration& b, std::size_t dim) {
  if (a.dim() != dim || b.dim() != dim)
    throw std::invalid_argument("segment test: dimension mismatch");
}

}  // namespace

bool point_in_polygon(const Polygon2D& poly, Point2 p) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (sign(cross(v[j], v[i], p)) == 0 && on_segment(p, v[j], v[i])) return true;
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double x_cross = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

bool segment_hits(const Polygon2D& poly, const Configuration& a, const Configuration& b) {
  check_dims(a, b, 2);
  const Point2 pa = to_point(a);
  const Point2 pb = to_point(b);
  if (point_in_polygon(poly, pa) || point_in_polygon(poly, pb)) return true;
  const auto& v = poly.vertices;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++)
    if (segments_intersect(pa, pb, v[j], v[i])) return true;
  return false;
}

// Slab method over the parameter interval [0,1].
bool segment_hits(const Box& box, const Configuration& a, const Configuration& b) {
  check_dims(a, b, box.lo.size());
  double t_min = 0.0;
  double t_max = 1.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = b[i] - a[i];
    if (d == 0.0) {
      if (a[i] < box.lo[i] || a[i] > box.hi[i]) return false;
      continue;
    }
    double t0 = (box.lo[i] - a[i]) / d;
    double t1 = (box.hi[i] - a[i]) / d;
    if (t0 > t1) std::swap(t0, t1);
    t_min = std::max(t_min, t0);
    t_max = std::min(t_max, t1);
    if (t_min > t_max) return false;
  }
  return true;
}

bool segment_hits(const Sphere& sphere, const Configuration& a, const Configuration& b) {
  check_dims(a, b, sphere.center.dim());
  // |a + t (b - a) - c|^2 = r^2
  double qa = 0.0, qb = 0.0, qc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = b[i] - a[i];
    const double f = a[i] - sphere.center[i];
    qa += d * d;
    qb += 2.0 * f * d;
    qc += f * f;
  }
  qc -= sphere.radius * sphere.radius;
  if (qc <= 0.0) return true;  // a inside or on the sphere
  if (qa == 0.0) return false;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < -kDiscriminantTol) return false;
  const double root = std::sqrt(std::max(disc, 0.0));
  const double t0 = (-qb - root) / (2.0 * qa);
  const double t1 = (-qb + root) / (2.0 * qa);
  return t0 <= 1.0 && t1 >= 0.0;
}

bool segment_hits(const ConvexObstacle& obstacle, const Configuration& a, const Configuration& b) {
  return std::visit([&](const auto& shape) { return segment_hits(shape, a, b); }, obstacle);
}

std::size_t obstacle_dim(const ConvexObstacle& obstacle) {
  struct {
    std::size_t operator()(const Polygon2D&) const { return 2; }
    std::size_t operator()(const Box& b) const { return b.lo.size(); }
    std::size_t operator()(const Sphere& s) const { return s.center.dim(); }
  } dim_of;
  return std::visit(dim_of, obstacle);
}

void validate_obstacle(const ConvexObstacle& obstacle, std::size_t dim) {
  if (obstacle_dim(obstacle) != dim) throw std::invalid_argument("obstacle dimension mismatch");
  if (const auto* poly = std::get_if<Polygon2D>(&obstacle)) {
    const auto& v = poly->vertices;
    if (v.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    double area2 = 0.0;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++)
      area2 += v[j].x * v[i].y - v[i].x * v[j].y;
    if (!(area2 > 0.0)) throw std::invalid_argument("polygon must be counterclockwise and non-degenerate");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& p0 = v[i];
      const auto& p1 = v[(i + 1) % v.size()];
      const auto& p2 = v[(i + 2) % v.size()];
      if (cross(p0, p1, p2) < 0.0) throw std::invalid_argument("polygon must be convex");
    }
  } else if (const auto* box = std::get_if<Box>(&obstacle)) {
    if (box->hi.size() != box->lo.size()) throw std::invalid_argument("box bound size mismatch");
    for (std::size_t i = 0; i < box->lo.size(); ++i)
      if (!(box->lo[i] <= box->hi[i])) throw std::invalid_argument("box requires lo <= hi");
  } else if (const auto* sphere = std::get_if<Sphere>(&obstacle)) {
    if (!(sphere->radius > 0.0)) throw std::invalid_argument("sphere radius must be > 0");
  }
}

bool Scene::contains(const Configuration& q) const {
  if (q.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (q[i] < bounds.lo[i] || q[i] > bounds.hi[i]) return false;
  return true;
}

void validate_scene(const Scene& scene) {
  if (scene.dim() < 2) throw std::invalid_argument("scene dimension must be >= 2");
  validate_obstacle(scene.bounds, scene.dim());
  for (const auto& o : scene.base_obstacles) validate_obstacle(o, scene.dim());
  for (const auto& o : scene.toggle_obstacles) validate_obstacle(o, scene.dim());
  if (scene.start && scene.start->dim() != scene.dim())
    throw std::invalid_argument("scene start dimension mismatch");
  if (scene.goal && scene.goal->dim() != scene.dim())
    throw std::invalid_argument("scene goal dimension mismatch");
}

EdgeState evaluate_segment_base(const Scene& scene, const Configuration& a,
                                const Configuration& b) {
  if (a.dim() != scene.dim() || b.dim() != scene.dim())
    throw std::invalid_argument("evaluate_segment: dimension mismatch");
  for (const auto& o : scene.base_obstacles)
    if (segment_hits(o, a, b)) return EdgeState::kCollision;
  return EdgeState::kFree;
}

EdgeState evaluate_segment(const Scene& scene, const Configuration& a, const Configuration& b) {
  if (evaluate_segment_base(scene, a, b) == EdgeState::kCollision) return EdgeState::kCollision;
  if (scene.toggles_active)
    for (const auto& o : scene.toggle_obstacles)
      if (segment_hits(o, a, b)) return EdgeState::kCollision;
  return EdgeState::kFree;
}

namespace {

void write_obstacle(std::ostream& os, const ConvexObstacle& o) {
  if (const auto* poly = std::get_if<Polygon2D>(&o)) {
    os << "poly " << poly->vertices.size();
    for (const auto& p : poly->vertices) os << ' ' << p.x << ' ' << p.y;
  } else if (const auto* box = std::get_if<Box>(&o)) {
    os << "box";
    for (std::size_t i = 0; i < box->lo.size(); ++i) os << ' ' << box->lo[i] << ' ' << box->hi[i];
  } else if (const auto* s = std::get_if<Sphere>(&o)) {
    os << "sphere";
    for (double c : s->center.coords()) os << ' ' << c;
    os << ' ' << s->radius;
  }
  os << '\n';
}

}  // namespace

void write_scene(std::ostream& os, const Scene& scene) {
  os << std::setprecision(17);
  if (!scene.name.empty()) os << "# scene " << scene.name << '\n';
  os << "bounds " << scene.dim();
  for (std::size_t i = 0; i < scene.dim(); ++i)
    os << ' ' << scene.bounds.lo[i] << ' ' << scene.bounds.hi[i];
  os << '\n';
  for (const auto& o : scene.base_obstacles) write_obstacle(os, o);
  for (const auto& o : scene.toggle_obstacles) {
    os << "toggle ";
    write_obstacle(os, o);
  }
  auto write_point = [&](const char* key, const Configuration& q) {
    os << key;
    for (double c : q.coords()) os << ' ' << c;
    os << '\n';
  };
  if (scene.start) write_point("start", *scene.start);
  if (scene.goal) write_point("goal", *scene.goal);
  os << "toggles " << (scene.toggles_active ? "on" : "off") << '\n';
}

Scene read_scene(std::istream& is, std::string name) {
  detail::LineReader reader(is);
  std::vector<std::string> tok;
  Scene scene;
  scene.name = std::move(name);
  bool have_bounds = false;

  auto reals = [&](std::size_t from) {
    std::vector<double> out;
    for (std::size_t i = from; i < tok.size(); ++i) out.push_back(reader.to_double(tok[i]));
    return out;
  };

  while (reader.next(tok)) {
    std::size_t at = 0;
    bool toggle = false;
    if (tok[0] == "toggle") {
      toggle = true;
      at = 1;
      if (tok.size() < 2) reader.fail("'toggle' must prefix an obstacle");
    }
    const std::string& kind = tok[at];
    if (!toggle && kind == "bounds") {
      if (have_bounds) reader.fail("duplicate bounds line");
      if (tok.size() < 2) reader.fail("bounds needs a dimension");
      const auto d = reader.to_int(tok[1]);
      if (d < 2) reader.fail("bounds dimension must be >= 2");
      const auto v = reals(2);
      if (v.size() != static_cast<std::size_t>(2 * d)) reader.fail("bounds needs 2*d reals");
      for (long long i = 0; i < d; ++i) {
        scene.bounds.lo.push_back(v[2 * i]);
        scene.bounds.hi.push_back(v[2 * i + 1]);
      }
      have_bounds = true;
      continue;
    }
    if (!have_bounds) reader.fail("bounds must precede other directives");
    const std::size_t d = scene.dim();

    ConvexObstacle obstacle;
    if (kind == "poly") {
      if (d != 2) reader.fail("poly requires a 2-dimensional scene");
      if (tok.size() < at + 2) reader.fail("poly needs a vertex count");
      const auto k = reader.to_int(tok[at + 1]);
      const auto v = reals(at + 2);
      if (k < 3 || v.size() != static_cast<std::size_t>(2 * k)) reader.fail("poly needs k >= 3 and 2k reals");
      Polygon2D poly;
      for (long long i = 0; i < k; ++i) poly.vertices.push_back({v[2 * i], v[2 * i + 1]});
      obstacle = std::move(poly);
    } else if (kind == "box") {
      const auto v = reals(at + 1);
      if (v.size() != 2 * d) reader.fail("box needs 2*d reals");
      Box box;
      for (std::size_t i = 0; i < d; ++i) {
        box.lo.push_back(v[2 * i]);
        box.hi.push_back(v[2 * i + 1]);
      }
      obstacle = std::move(box);
    } else if (kind == "sphere") {
      auto v = reals(at + 1);
      if (v.size() != d + 1) reader.fail("sphere needs d+1 reals");
      const double r = v.back();
      v.pop_back();
      obstacle = Sphere{Configuration(std::move(v)), r};
    } else if (!toggle && (kind == "start" || kind == "goal")) {
      auto v = reals(1);
      if (v.size() != d) reader.fail(kind + " needs d reals");
      (kind == "start" ? scene.start : scene.goal) = Configuration(std::move(v));
      continue;
    } else if (!toggle && kind == "toggles") {
      if (tok.size() != 2 || (tok[1] != "on" && tok[1] != "off")) reader.fail("expected 'toggles on|off'");
      scene.toggles_active = tok[1] == "on";
      continue;
    } else {
      reader.fail("unknown directive '" + kind + "'");
    }
    try {
      validate_obstacle(obstacle, d);
    } catch (const std::invalid_argument& ex) {
      reader.fail(ex.what());
    }
    (toggle ? scene.toggle_obstacles : scene.base_obstacles).push_back(std::move(obstacle));
  }
  if (!have_bounds) reader.fail("scene has no bounds line");
  return scene;
}

}  // namespace cutpath
