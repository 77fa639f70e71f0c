#pragma once

#include <span>
#include <variant>
#include <vector>

namespace unit_shapes {

inline constexpr double kJoinTolerance = 1e-12;
inline constexpr double kKernelRelativeTolerance = 1e-10;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b);

/// Placement in the plane: p -> T(h,k)(S^reflect(R(rotation_angle) p)).
/// S reflects across the x-axis.
struct RigidMotion {
  double rotation_angle = 0.0;
  bool reflect = false;
  Point translation;

  Point apply(Point p) const;
  /// The linear part only (for tangent vectors).
  Point apply_linear(Point v) const;
};

/// p -> scale * motion(p), scale > 0.
struct Similarity {
  RigidMotion motion;
  double scale = 1.0;

  static Similarity identity() { return {}; }
  static Similarity scaling(double lambda);

  Point apply(Point p) const;
  Point apply_linear(Point v) const;
  /// True when the linear part reverses orientation.
  bool reverses_orientation() const { return motion.reflect; }
};

/// (outer ∘ inner)(p) == outer.apply(inner.apply(p)).
Similarity compose(const Similarity& outer, const Similarity& inner);

struct LineSegment {
  Point start;
  Point end;
};

/// center + radius (cos a, sin a) for a running from angle_start to angle_end.
/// angle_end < angle_start traverses clockwise.
struct CircularArc {
  Point center;
  double radius = 1.0;
  double angle_start = 0.0;
  double angle_end = 0.0;
};

/// center + Rot(rotation) (a cos t, b sin t) for t from t_start to t_end.
struct EllipticalArc {
  Point center;
  double semi_axis_a = 1.0;
  double semi_axis_b = 1.0;
  double rotation = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
};

/// frame(x, alpha x^2 + beta x + gamma) for x from x_start to x_end.
struct ParabolicArc {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double x_start = 0.0;
  double x_end = 0.0;
  Similarity frame;
};

/// frame(2t/(1+t^2), (1-t^2)/(1+t^2)) for t from t_start to t_end. Traces the
/// unit circle without trigonometry; [-1, 1] is the upper half, run clockwise.
struct RationalArc {
  double t_start = -1.0;
  double t_end = 1.0;
  Similarity frame;
};

/// Straight edges through at least two vertices.
struct Polyline {
  std::vector<Point> vertices;
};

using CurvePiece =
    std::variant<LineSegment, CircularArc, EllipticalArc, ParabolicArc, RationalArc, Polyline>;

Point start_point(const CurvePiece& piece);
Point end_point(const CurvePiece& piece);

/// Same point set traversed in the opposite direction.
CurvePiece reversed(const CurvePiece& piece);

CurvePiece transformed(const CurvePiece& piece, const Similarity& s);

/// (1/2) ∫ (x dy - y dx) along the piece. Exact for segments, polylines and
/// circular arcs, adaptive quadrature otherwise.
double signed_area_contribution(const CurvePiece& piece);

/// Arc length. Exact for segments, polylines and circular arcs.
double length(const CurvePiece& piece);

/// Generic quadrature path driven only by the piece's parameterization and
/// its exact derivative. Used to cross-check the closed forms.
double quadrature_signed_area_contribution(const CurvePiece& piece);
double quadrature_length(const CurvePiece& piece);

/// Parameter interval and exact evaluation, for callers that sample pieces.
struct ParameterInterval {
  double begin;
  double end;
};
ParameterInterval parameter_interval(const CurvePiece& piece);
Point evaluate(const CurvePiece& piece, double t);
Point derivative(const CurvePiece& piece, double t);

/// Lengths of the straight edges of a polyline or of the piece itself.
/// Curved pieces contribute one entry each.
std::vector<double> piece_lengths(const CurvePiece& piece);

/// A piecewise-nice closed curve, normalized to counterclockwise orientation.
///
/// Construction checks that every piece is finite and non-degenerate, that
/// consecutive pieces join, and that the chain closes. Simplicity is a
/// precondition and is not verified.
class Shape {
 public:
  explicit Shape(std::vector<CurvePiece> pieces);

  std::span<const CurvePiece> pieces() const { return pieces_; }

 private:
  std::vector<CurvePiece> pieces_;
};

Shape make_polygon(std::span<const Point> vertices);
Shape make_circle(Point center, double radius);

Shape apply_similarity(const Similarity& s, const Shape& c);

double signed_area(const Shape& c);
double area(const Shape& c);
double perimeter(const Shape& c);
double semiperimeter(const Shape& c);

/// True when every piece is a circular arc (or trig-free rational arc) on one
/// common circle. Such a closed shape is a circle.
bool is_circle(const Shape& c, double tolerance = 1e-12);

/// Compares area, semiperimeter and the sorted per-edge length multiset.
/// Equality of these is the congruence proxy used for unit shapes.
bool congruent_by_measures(const Shape& a, const Shape& b, double relative_tolerance);

}  // namespace unit_shapes
