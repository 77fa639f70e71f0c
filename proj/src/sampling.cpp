#include "unit_shapes/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "unit_shapes/errors.hpp"

namespace unit_shapes {
namespace {

using std::numbers::pi;

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(Point a, Point b, Point c, Point d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

RigidMotion random_rigid_motion(Rng& rng) {
  RigidMotion m;
  m.rotation_angle = rng.uniform(0.0, 2.0 * pi);
  m.reflect = rng.coin();
  m.translation = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
  return m;
}

Similarity random_similarity(Rng& rng) {
  Similarity s;
  s.motion = random_rigid_motion(rng);
  s.scale = std::pow(10.0, rng.uniform(-1.0, 1.0));
  return s;
}

FamilyParam random_family_param(Rng& rng) {
  switch (rng.uniform_int(0, 6)) {
    case 0: return RightTriangle{rng.uniform(0.05, 0.5 * pi - 0.05)};
    case 1: {
      // Rejection keeps r + s comfortably above 1.
      for (;;) {
        const double r = rng.uniform(0.1, 1.0);
        const double s = rng.uniform(0.1, 1.0);
        if (r + s > 1.05) return Triangle{r, s};
      }
    }
    case 2: return Rectangle{std::pow(10.0, rng.uniform(-1.5, 1.5))};
    case 3: return Rhombus{rng.uniform(0.05, pi - 0.05)};
    case 4: return Parallelogram{rng.uniform(0.05, pi - 0.05), std::pow(10.0, rng.uniform(-1.5, 1.5))};
    case 5: return Ellipse{rng.uniform(0.05, 0.98)};
    default: return RegularPolygon{rng.uniform_int(3, 12)};
  }
}

Shape random_simple_polygon(int m, Rng& rng) {
  if (m < 3) throw DomainError("polygon needs at least three vertices");
  for (;;) {
    const Point center{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    std::vector<double> angles(static_cast<std::size_t>(m));
    for (double& a : angles) a = rng.uniform(0.0, 2.0 * pi);
    std::sort(angles.begin(), angles.end());

    std::vector<Point> vertices;
    vertices.reserve(angles.size());
    for (double a : angles) {
      const double radius = rng.uniform(0.2, 2.0);
      vertices.push_back(center + radius * Point{std::cos(a), std::sin(a)});
    }
    if (!is_simple_polygon(vertices)) continue;

    double twice_area = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Point p = vertices[i];
      const Point q = vertices[(i + 1) % vertices.size()];
      twice_area += p.x * q.y - p.y * q.x;
    }
    if (std::abs(twice_area) < 2e-6) continue;
    return make_polygon(vertices);
  }
}

std::vector<Shape> random_simple_polygons(int m, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Shape> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_simple_polygon(m, rng));
  return out;
}

std::vector<Point> polygon_vertices(const Shape& shape) {
  std::vector<Point> vertices;
  for (const auto& piece : shape.pieces()) {
    if (const auto* line = std::get_if<Polyline>(&piece)) {
      vertices.insert(vertices.end(), line->vertices.begin(), line->vertices.end() - 1);
    } else if (const auto* segment = std::get_if<LineSegment>(&piece)) {
      vertices.push_back(segment->start);
    } else {
      return {};
    }
  }
  return vertices;
}

bool is_simple_polygon(const std::vector<Point>& vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_meet(vertices[i], vertices[(i + 1) % n], vertices[j], vertices[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace unit_shapes
