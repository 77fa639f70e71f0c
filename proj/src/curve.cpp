#include "unit_shapes/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "unit_shapes/errors.hpp"
#include "unit_shapes/quadrature.hpp"

namespace unit_shapes {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool finite(const Similarity& s) {
  return std::isfinite(s.scale) && std::isfinite(s.motion.rotation_angle) &&
         finite(s.motion.translation);
}

double sign_of(const RigidMotion& m) { return m.reflect ? -1.0 : 1.0; }

QuadratureOptions kernel_quadrature() {
  QuadratureOptions options;
  options.relative_tolerance = kKernelRelativeTolerance;
  options.max_depth = 60;
  return options;
}

void validate(const CurvePiece& piece) {
  std::visit(
      Overloaded{
          [](const LineSegment& s) {
            if (!finite(s.start) || !finite(s.end)) throw ShapeError("line segment: non-finite endpoint");
            if (s.start == s.end) throw ShapeError("line segment: zero length");
          },
          [](const CircularArc& a) {
            if (!finite(a.center) || !std::isfinite(a.angle_start) || !std::isfinite(a.angle_end))
              throw ShapeError("circular arc: non-finite field");
            if (!(a.radius > 0.0) || !std::isfinite(a.radius)) throw ShapeError("circular arc: radius must be positive");
            if (a.angle_start == a.angle_end) throw ShapeError("circular arc: zero sweep");
          },
          [](const EllipticalArc& e) {
            if (!finite(e.center) || !std::isfinite(e.rotation) || !std::isfinite(e.t_start) ||
                !std::isfinite(e.t_end))
              throw ShapeError("elliptical arc: non-finite field");
            if (!(e.semi_axis_a > 0.0) || !(e.semi_axis_b > 0.0) || !std::isfinite(e.semi_axis_a) ||
                !std::isfinite(e.semi_axis_b))
              throw ShapeError("elliptical arc: semi-axes must be positive");
            if (e.t_start == e.t_end) throw ShapeError("elliptical arc: zero sweep");
          },
          [](const ParabolicArc& p) {
            if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma) ||
                !std::isfinite(p.x_start) || !std::isfinite(p.x_end) || !finite(p.frame))
              throw ShapeError("parabolic arc: non-finite field");
            if (!(p.frame.scale > 0.0)) throw ShapeError("parabolic arc: frame scale must be positive");
            if (p.x_start == p.x_end) throw ShapeError("parabolic arc: zero extent");
          },
          [](const RationalArc& r) {
            if (!std::isfinite(r.t_start) || !std::isfinite(r.t_end) || !finite(r.frame))
              throw ShapeError("rational arc: non-finite field");
            if (!(r.frame.scale > 0.0)) throw ShapeError("rational arc: frame scale must be positive");
            if (r.t_start == r.t_end) throw ShapeError("rational arc: zero extent");
          },
          [](const Polyline& p) {
            if (p.vertices.size() < 2) throw ShapeError("polyline: needs at least two vertices");
            for (std::size_t i = 0; i < p.vertices.size(); ++i) {
              if (!finite(p.vertices[i])) throw ShapeError("polyline: non-finite vertex");
              if (i > 0 && p.vertices[i] == p.vertices[i - 1])
                throw ShapeError("polyline: repeated consecutive vertex");
            }
          },
      },
      piece);
}

Point rational_local(double t) {
  const double d = 1.0 + t * t;
  return {2.0 * t / d, (1.0 - t * t) / d};
}

Point rational_local_derivative(double t) {
  const double d = 1.0 + t * t;
  return {2.0 * (1.0 - t * t) / (d * d), -4.0 * t / (d * d)};
}

// Extent of the piece endpoints, for scaling the join tolerance.
double coordinate_extent(const std::vector<CurvePiece>& pieces) {
  double extent = 0.0;
  for (const auto& piece : pieces) {
    for (Point p : {start_point(piece), end_point(piece)}) {
      extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    }
  }
  return extent;
}

double segment_area(Point a, Point b) { return 0.5 * cross(a, b); }

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point RigidMotion::apply(Point p) const { return apply_linear(p) + translation; }

Point RigidMotion::apply_linear(Point v) const {
  const double c = std::cos(rotation_angle);
  const double s = std::sin(rotation_angle);
  Point r{c * v.x - s * v.y, s * v.x + c * v.y};
  if (reflect) r.y = -r.y;
  return r;
}

Similarity Similarity::scaling(double lambda) {
  Similarity s;
  s.scale = lambda;
  return s;
}

Point Similarity::apply(Point p) const { return scale * motion.apply(p); }

Point Similarity::apply_linear(Point v) const { return scale * motion.apply_linear(v); }

Similarity compose(const Similarity& outer, const Similarity& inner) {
  // L_o S^eo R(ao) S^ei R(ai) = S^(eo^ei) R(+-ao + ai), sign from the inner reflection.
  Similarity result;
  result.scale = outer.scale * inner.scale;
  result.motion.reflect = outer.motion.reflect != inner.motion.reflect;
  result.motion.rotation_angle =
      sign_of(inner.motion) * outer.motion.rotation_angle + inner.motion.rotation_angle;
  result.motion.translation = outer.motion.apply_linear(inner.motion.translation) +
                              (1.0 / inner.scale) * outer.motion.translation;
  return result;
}

ParameterInterval parameter_interval(const CurvePiece& piece) {
  return std::visit(
      Overloaded{
          [](const LineSegment&) { return ParameterInterval{0.0, 1.0}; },
          [](const CircularArc& a) { return ParameterInterval{a.angle_start, a.angle_end}; },
          [](const EllipticalArc& e) { return ParameterInterval{e.t_start, e.t_end}; },
          [](const ParabolicArc& p) { return ParameterInterval{p.x_start, p.x_end}; },
          [](const RationalArc& r) { return ParameterInterval{r.t_start, r.t_end}; },
          [](const Polyline& p) {
            return ParameterInterval{0.0, static_cast<double>(p.vertices.size() - 1)};
          },
      },
      piece);
}

Point evaluate(const CurvePiece& piece, double t) {
  return std::visit(
      Overloaded{
          [t](const LineSegment& s) { return s.start + t * (s.end - s.start); },
          [t](const CircularArc& a) {
            return a.center + a.radius * Point{std::cos(t), std::sin(t)};
          },
          [t](const EllipticalArc& e) {
            const double c = std::cos(e.rotation);
            const double s = std::sin(e.rotation);
            const double u = e.semi_axis_a * std::cos(t);
            const double v = e.semi_axis_b * std::sin(t);
            return e.center + Point{c * u - s * v, s * u + c * v};
          },
          [t](const ParabolicArc& p) {
            return p.frame.apply({t, (p.alpha * t + p.beta) * t + p.gamma});
          },
          [t](const RationalArc& r) { return r.frame.apply(rational_local(t)); },
          [t](const Polyline& p) {
            const auto last = p.vertices.size() - 1;
            auto i = static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, double(last - 1)));
            const double f = t - static_cast<double>(i);
            return p.vertices[i] + f * (p.vertices[i + 1] - p.vertices[i]);
          },
      },
      piece);
}

Point derivative(const CurvePiece& piece, double t) {
  return std::visit(
      Overloaded{
          [](const LineSegment& s) { return s.end - s.start; },
          [t](const CircularArc& a) { return a.radius * Point{-std::sin(t), std::cos(t)}; },
          [t](const EllipticalArc& e) {
            const double c = std::cos(e.rotation);
            const double s = std::sin(e.rotation);
            const double u = -e.semi_axis_a * std::sin(t);
            const double v = e.semi_axis_b * std::cos(t);
            return Point{c * u - s * v, s * u + c * v};
          },
          [t](const ParabolicArc& p) {
            return p.frame.apply_linear({1.0, 2.0 * p.alpha * t + p.beta});
          },
          [t](const RationalArc& r) { return r.frame.apply_linear(rational_local_derivative(t)); },
          [t](const Polyline& p) {
            const auto last = p.vertices.size() - 1;
            auto i = static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, double(last - 1)));
            return p.vertices[i + 1] - p.vertices[i];
          },
      },
      piece);
}

Point start_point(const CurvePiece& piece) {
  if (const auto* p = std::get_if<Polyline>(&piece)) return p->vertices.front();
  if (const auto* s = std::get_if<LineSegment>(&piece)) return s->start;
  return evaluate(piece, parameter_interval(piece).begin);
}

Point end_point(const CurvePiece& piece) {
  if (const auto* p = std::get_if<Polyline>(&piece)) return p->vertices.back();
  if (const auto* s = std::get_if<LineSegment>(&piece)) return s->end;
  return evaluate(piece, parameter_interval(piece).end);
}

CurvePiece reversed(const CurvePiece& piece) {
  return std::visit(
      Overloaded{
          [](LineSegment s) -> CurvePiece {
            std::swap(s.start, s.end);
            return s;
          },
          [](CircularArc a) -> CurvePiece {
            std::swap(a.angle_start, a.angle_end);
            return a;
          },
          [](EllipticalArc e) -> CurvePiece {
            std::swap(e.t_start, e.t_end);
            return e;
          },
          [](ParabolicArc p) -> CurvePiece {
            std::swap(p.x_start, p.x_end);
            return p;
          },
          [](RationalArc r) -> CurvePiece {
            std::swap(r.t_start, r.t_end);
            return r;
          },
          [](Polyline p) -> CurvePiece {
            std::reverse(p.vertices.begin(), p.vertices.end());
            return p;
          },
      },
      piece);
}

CurvePiece transformed(const CurvePiece& piece, const Similarity& s) {
  const double sigma = sign_of(s.motion);
  const double alpha = s.motion.rotation_angle;
  return std::visit(
      Overloaded{
          [&](const LineSegment& seg) -> CurvePiece {
            return LineSegment{s.apply(seg.start), s.apply(seg.end)};
          },
          [&](const CircularArc& a) -> CurvePiece {
            return CircularArc{s.apply(a.center), s.scale * a.radius, sigma * (a.angle_start + alpha),
                               sigma * (a.angle_end + alpha)};
          },
          [&](const EllipticalArc& e) -> CurvePiece {
            return EllipticalArc{s.apply(e.center),  s.scale * e.semi_axis_a, s.scale * e.semi_axis_b,
                                 sigma * (e.rotation + alpha), sigma * e.t_start, sigma * e.t_end};
          },
          [&](ParabolicArc p) -> CurvePiece {
            p.frame = compose(s, p.frame);
            return p;
          },
          [&](RationalArc r) -> CurvePiece {
            r.frame = compose(s, r.frame);
            return r;
          },
          [&](Polyline p) -> CurvePiece {
            for (auto& v : p.vertices) v = s.apply(v);
            return p;
          },
      },
      piece);
}

double quadrature_signed_area_contribution(const CurvePiece& piece) {
  if (const auto* p = std::get_if<Polyline>(&piece)) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
      sum += quadrature_signed_area_contribution(LineSegment{p->vertices[i], p->vertices[i + 1]});
    }
    return sum;
  }
  const auto [t0, t1] = parameter_interval(piece);
  auto integrand = [&piece](double t) { return 0.5 * cross(evaluate(piece, t), derivative(piece, t)); };
  return integrate(integrand, t0, t1, kernel_quadrature()).value;
}

double quadrature_length(const CurvePiece& piece) {
  if (const auto* p = std::get_if<Polyline>(&piece)) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
      sum += quadrature_length(LineSegment{p->vertices[i], p->vertices[i + 1]});
    }
    return sum;
  }
  auto [t0, t1] = parameter_interval(piece);
  if (t1 < t0) std::swap(t0, t1);
  auto speed = [&piece](double t) {
    const Point d = derivative(piece, t);
    return std::hypot(d.x, d.y);
  };
  return integrate(speed, t0, t1, kernel_quadrature()).value;
}

double signed_area_contribution(const CurvePiece& piece) {
  return std::visit(
      Overloaded{
          [](const LineSegment& s) { return segment_area(s.start, s.end); },
          [](const Polyline& p) {
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
              sum += segment_area(p.vertices[i], p.vertices[i + 1]);
            }
            return sum;
          },
          [](const CircularArc& a) {
            const double r = a.radius;
            const double sweep = a.angle_end - a.angle_start;
            return 0.5 * (r * r * sweep +
                          r * a.center.x * (std::sin(a.angle_end) - std::sin(a.angle_start)) -
                          r * a.center.y * (std::cos(a.angle_end) - std::cos(a.angle_start)));
          },
          [&piece](const auto&) { return quadrature_signed_area_contribution(piece); },
      },
      piece);
}

double length(const CurvePiece& piece) {
  return std::visit(
      Overloaded{
          [](const LineSegment& s) { return distance(s.start, s.end); },
          [](const Polyline& p) {
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
              sum += distance(p.vertices[i], p.vertices[i + 1]);
            }
            return sum;
          },
          [](const CircularArc& a) { return a.radius * std::abs(a.angle_end - a.angle_start); },
          [&piece](const auto&) { return quadrature_length(piece); },
      },
      piece);
}

std::vector<double> piece_lengths(const CurvePiece& piece) {
  if (const auto* p = std::get_if<Polyline>(&piece)) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
      out.push_back(distance(p->vertices[i], p->vertices[i + 1]));
    }
    return out;
  }
  return {length(piece)};
}

Shape::Shape(std::vector<CurvePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ShapeError("shape needs at least one piece");
  for (const auto& piece : pieces_) validate(piece);

  const double tolerance = kJoinTolerance * std::max(1.0, coordinate_extent(pieces_));
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Point end = end_point(pieces_[i]);
    const Point next = start_point(pieces_[(i + 1) % pieces_.size()]);
    const double gap = distance(end, next);
    if (gap > tolerance) {
      std::ostringstream msg;
      msg << (i + 1 == pieces_.size() ? "shape is not closed" : "pieces do not join")
          << ": gap " << gap << " after piece " << i;
      throw ShapeError(msg.str());
    }
  }

  double total = 0.0;
  for (const auto& piece : pieces_) total += signed_area_contribution(piece);
  if (total == 0.0) throw ShapeError("shape encloses zero area");
  if (total < 0.0) {
    std::reverse(pieces_.begin(), pieces_.end());
    for (auto& piece : pieces_) piece = reversed(piece);
  }
}

Shape make_polygon(std::span<const Point> vertices) {
  if (vertices.size() < 3) throw ShapeError("polygon needs at least three vertices");
  Polyline line{{vertices.begin(), vertices.end()}};
  line.vertices.push_back(vertices.front());
  return Shape({std::move(line)});
}

Shape make_circle(Point center, double radius) {
  return Shape({CircularArc{center, radius, 0.0, 2.0 * std::numbers::pi}});
}

Shape apply_similarity(const Similarity& s, const Shape& c) {
  std::vector<CurvePiece> pieces;
  pieces.reserve(c.pieces().size());
  for (const auto& piece : c.pieces()) pieces.push_back(transformed(piece, s));
  return Shape(std::move(pieces));
}

double signed_area(const Shape& c) {
  double total = 0.0;
  for (const auto& piece : c.pieces()) total += signed_area_contribution(piece);
  return total;
}

double area(const Shape& c) { return std::abs(signed_area(c)); }

double perimeter(const Shape& c) {
  double total = 0.0;
  for (const auto& piece : c.pieces()) total += length(piece);
  return total;
}

double semiperimeter(const Shape& c) { return 0.5 * perimeter(c); }

bool is_circle(const Shape& c, double tolerance) {
  bool have_reference = false;
  Point center;
  double radius = 0.0;
  for (const auto& piece : c.pieces()) {
    Point piece_center;
    double piece_radius = 0.0;
    if (const auto* a = std::get_if<CircularArc>(&piece)) {
      piece_center = a->center;
      piece_radius = a->radius;
    } else if (const auto* r = std::get_if<RationalArc>(&piece)) {
      piece_center = r->frame.apply({0.0, 0.0});
      piece_radius = r->frame.scale;
    } else {
      return false;
    }
    if (!have_reference) {
      center = piece_center;
      radius = piece_radius;
      have_reference = true;
    } else if (distance(center, piece_center) > tolerance * radius ||
               std::abs(radius - piece_radius) > tolerance * radius) {
      return false;
    }
  }
  return have_reference;
}

bool congruent_by_measures(const Shape& a, const Shape& b, double relative_tolerance) {
  auto close = [relative_tolerance](double x, double y) {
    return std::abs(x - y) <= relative_tolerance * std::max(std::abs(x), std::abs(y));
  };
  if (!close(area(a), area(b)) || !close(semiperimeter(a), semiperimeter(b))) return false;

  auto lengths_of = [](const Shape& s) {
    std::vector<double> out;
    for (const auto& piece : s.pieces()) {
      auto part = piece_lengths(piece);
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto la = lengths_of(a);
  const auto lb = lengths_of(b);
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (!close(la[i], lb[i])) return false;
  }
  return true;
}

}  // namespace unit_shapes
