// Parametric stand-ins for the four comparison environments: a narrow
// passage, a four-room layout, a zigzag corridor and a cluttered field. All
// live in the unit square. Toggle obstacles close the route between start
// and goal, giving the infeasible variant of each scene.

#include <stdexcept>

#include "cutpath/geometry.hpp"

namespace cutpath {

namespace {

Box box2(double x0, double x1, double y0, double y1) { return Box{{x0, y0}, {x1, y1}}; }

Polygon2D rect(double x0, double y0, double x1, double y1) {
  return Polygon2D{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon2D tri(Point2 a, Point2 b, Point2 c) { return Polygon2D{{a, b, c}}; }

Scene unit_scene(std::string name) {
  Scene s;
  s.name = std::move(name);
  s.bounds = box2(0.0, 1.0, 0.0, 1.0);
  return s;
}

Scene passage() {
  Scene s = unit_scene("passage");
  s.base_obstacles = {
      box2(0.47, 0.53, 0.0, 0.44),
      box2(0.47, 0.53, 0.56, 1.0),
      tri({0.20, 0.15}, {0.32, 0.18}, {0.24, 0.30}),
      tri({0.70, 0.70}, {0.82, 0.74}, {0.74, 0.84}),
  };
  s.toggle_obstacles = {box2(0.47, 0.53, 0.43, 0.57)};
  s.start = Configuration{0.1, 0.5};
  s.goal = Configuration{0.9, 0.5};
  return s;
}

Scene rooms() {
  Scene s = unit_scene("rooms");
  // Cross-shaped walls with two doorways on each arm.
  s.base_obstacles = {
      box2(0.48, 0.52, 0.0, 0.18),  box2(0.48, 0.52, 0.30, 0.70), box2(0.48, 0.52, 0.82, 1.0),
      box2(0.0, 0.18, 0.48, 0.52),  box2(0.30, 0.70, 0.48, 0.52), box2(0.82, 1.0, 0.48, 0.52),
  };
  // Close both doors of the start room.
  s.toggle_obstacles = {box2(0.47, 0.53, 0.17, 0.31), box2(0.17, 0.31, 0.47, 0.53)};
  s.start = Configuration{0.1, 0.1};
  s.goal = Configuration{0.9, 0.9};
  return s;
}

Scene zigzag() {
  Scene s = unit_scene("zigzag");
  s.base_obstacles = {
      rect(0.0, 0.23, 0.8, 0.27),
      rect(0.2, 0.48, 1.0, 0.52),
      rect(0.0, 0.73, 0.8, 0.77),
  };
  s.toggle_obstacles = {rect(0.0, 0.47, 0.21, 0.53)};
  s.start = Configuration{0.5, 0.1};
  s.goal = Configuration{0.5, 0.9};
  return s;
}

Scene clutter() {
  Scene s = unit_scene("clutter");
  s.base_obstacles = {
      tri({0.20, 0.20}, {0.30, 0.20}, {0.25, 0.30}),
      tri({0.35, 0.60}, {0.45, 0.62}, {0.38, 0.72}),
      tri({0.70, 0.25}, {0.82, 0.30}, {0.74, 0.38}),
      tri({0.75, 0.70}, {0.85, 0.68}, {0.80, 0.80}),
      tri({0.15, 0.75}, {0.25, 0.80}, {0.17, 0.88}),
      Sphere{Configuration{0.45, 0.30}, 0.07},
      Sphere{Configuration{0.55, 0.80}, 0.06},
      Sphere{Configuration{0.80, 0.50}, 0.05},
      Sphere{Configuration{0.25, 0.50}, 0.05},
  };
  s.toggle_obstacles = {
      box2(0.60, 0.64, 0.0, 0.40),
      box2(0.61, 0.65, 0.35, 0.70),
      box2(0.60, 0.64, 0.65, 1.0),
  };
  s.start = Configuration{0.08, 0.5};
  s.goal = Configuration{0.92, 0.5};
  return s;
}

}  // namespace

const std::vector<std::string>& bundled_scene_names() {
  static const std::vector<std::string> names{"passage", "rooms", "zigzag", "clutter"};
  return names;
}

Scene bundled_scene(const std::string& name, bool toggles_active) {
  Scene s;
  if (name == "passage") s = passage();
  else if (name == "rooms") s = rooms();
  else if (name == "zigzag") s = zigzag();
  else if (name == "clutter") s = clutter();
  else throw std::invalid_argument("unknown bundled scene '" + name + "'");
  s.toggles_active = toggles_active;
  validate_scene(s);
  return s;
}

}  // namespace cutpath
