#include "unit_shapes/verifier.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "unit_shapes/errors.hpp"
#include "unit_shapes/family_catalog.hpp"
#include "unit_shapes/sampling.hpp"

namespace unit_shapes {
namespace {

using std::numbers::pi;

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream out;
  out << std::setprecision(17);
  bool first = true;
  for (const auto& [name, value] : fields) {
    if (!first) out << ' ';
    out << name << '=' << value;
    first = false;
  }
  return out.str();
}

bool relatively_close(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

}  // namespace

VerificationReport check_isoperimetric(const Shape& c, double tolerance) {
  VerificationReport report;
  report.claim = "isoperimetric_inequality";
  const double a = area(c);
  const double s = semiperimeter(c);
  const double slack = s * s - pi * a;
  report.record_slack(slack);

  if (slack < -tolerance * s * s) {
    report.fail("pi A > S^2: " + describe({{"A", a}, {"S", s}, {"slack", slack}}));
  } else if (slack <= tolerance * s * s) {
    ++report.equality_cases;
    if (!is_circle(c)) {
      report.fail("equality on a non-circle: " + describe({{"A", a}, {"S", s}, {"slack", slack}}));
    }
  }
  return report;
}

VerificationReport check_unit_floor(const UnitizationResult& u, double tolerance) {
  VerificationReport report;
  report.claim = "unit_shape_floor";
  const double a = area(u.unit_shape);
  const double s = semiperimeter(u.unit_shape);
  if (!relatively_close(a, s, 1e-8)) {
    report.fail("not a unit shape: " + describe({{"A", a}, {"S", s}}));
  }
  const double measure = u.fundamental_measure;
  const double slack = measure - pi;
  report.record_slack(slack);
  if (slack < -tolerance) {
    report.fail("Pi below pi: " + describe({{"Pi", measure}}));
  } else if (slack <= tolerance) {
    ++report.equality_cases;
    if (!is_circle(u.unit_shape)) {
      report.fail("Pi = pi on a non-circle: " + describe({{"Pi", measure}}));
    }
  }
  return report;
}

VerificationReport check_scale_equivalence(const Shape& unit, double rho, std::span<const double> kappas,
                                           double tolerance) {
  VerificationReport report;
  report.claim = "scale_equivalence";
  const double unit_a = area(unit);
  const double unit_s = semiperimeter(unit);
  if (!relatively_close(unit_a, unit_s, 1e-8)) {
    report.fail("not a unit shape: " + describe({{"A", unit_a}, {"S", unit_s}}));
  }
  const double measure = 0.5 * (unit_a + unit_s);
  const bool bound_holds = rho <= measure * (1.0 + tolerance);

  for (double kappa : kappas) {
    const Shape scaled = apply_similarity(Similarity::scaling(kappa), unit);
    const double a = area(scaled);
    const double s = semiperimeter(scaled);
    const double slack = s * s - rho * a;
    report.record_slack(slack);
    const bool inequality_holds = rho * a <= s * s * (1.0 + tolerance);
    if (std::abs(slack) <= tolerance * s * s) ++report.equality_cases;
    if (inequality_holds != bound_holds) {
      report.fail("equivalence broken: " + describe({{"rho", rho}, {"Pi", measure}, {"kappa", kappa}}));
    }
  }
  return report;
}

VerificationReport check_mgon_bound(int m, std::span<const Shape> samples, double tolerance) {
  VerificationReport report;
  report.claim = "m" + std::to_string(m) + "_gon_bound";
  const double rho = polygon_constant(m);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Shape& sample = samples[i];
    const auto vertices = polygon_vertices(sample);
    if (vertices.size() != static_cast<std::size_t>(m)) {
      report.fail("sample " + std::to_string(i) + " is not a " + std::to_string(m) + "-gon");
      continue;
    }
    const double a = area(sample);
    const double s = semiperimeter(sample);
    const double slack = s * s - rho * a;
    report.record_slack(slack);
    if (slack < -tolerance * s * s) {
      report.fail("sample " + std::to_string(i) + " violates the bound: " +
                  describe({{"A", a}, {"S", s}, {"slack", slack}}));
    } else if (slack <= tolerance * s * s) {
      ++report.equality_cases;
      if (!is_regular_polygon(vertices)) {
        report.fail("sample " + std::to_string(i) + " attains equality but is not regular");
      }
    }
  }
  return report;
}

VerificationReport check_blob_pythagoras(const Shape& base, Triple triple, double tolerance) {
  VerificationReport report;
  report.claim = "blob_pythagoras";
  if (!(triple.a > 0.0 && triple.b > 0.0 && triple.c > 0.0)) {
    throw DomainError("blob pythagoras needs positive a, b, c");
  }
  auto scaled_area = [&base](double t) { return area(apply_similarity(Similarity::scaling(t), base)); };
  const double left = scaled_area(triple.a) + scaled_area(triple.b);
  const double right = scaled_area(triple.c);
  const bool areas_equal = std::abs(left - right) <= tolerance * right;
  const double c2 = triple.c * triple.c;
  const bool right_triple = std::abs(triple.a * triple.a + triple.b * triple.b - c2) <= 1e-12 * c2;

  report.record_slack(right - left);
  if (areas_equal) ++report.equality_cases;
  if (areas_equal != right_triple) {
    report.fail("area sum and triple disagree: " +
                describe({{"a", triple.a}, {"b", triple.b}, {"c", triple.c}, {"A_a+A_b", left}, {"A_c", right}}));
  }
  return report;
}

Shape make_rational_circle() {
  RationalArc upper;
  upper.t_start = 1.0;
  upper.t_end = -1.0;
  RationalArc lower;
  lower.t_start = -1.0;
  lower.t_end = 1.0;
  lower.frame.motion.reflect = true;
  return Shape({upper, lower});
}

Shape make_rational_half_disk() {
  RationalArc upper;
  upper.t_start = 1.0;
  upper.t_end = -1.0;
  return Shape({upper, LineSegment{{-1.0, 0.0}, {1.0, 0.0}}});
}

VerificationReport check_rational_circle(double tolerance) {
  VerificationReport report;
  report.claim = "rational_unit_circle";

  const Shape circle = make_rational_circle();
  const double a = area(circle);
  const double s = semiperimeter(circle);
  for (const auto& [label, value, expected] :
       {std::tuple{"area", a, pi}, std::tuple{"semiperimeter", s, pi},
        std::tuple{"half-disk area", area(make_rational_half_disk()), 0.5 * pi}}) {
    const double gap = std::abs(value - expected);
    report.record_slack(tolerance - gap);
    if (gap > tolerance) {
      report.fail(std::string(label) + " off: " + describe({{"value", value}, {"expected", expected}}));
    }
  }
  if (std::abs(a - s) <= tolerance) ++report.equality_cases;

  const Shape trig_circle = make_circle({0.0, 0.0}, 1.0);
  if (!relatively_close(a, area(trig_circle), 1e-10) ||
      !relatively_close(s, semiperimeter(trig_circle), 1e-10)) {
    report.fail("rational and trigonometric circles disagree: " + describe({{"A", a}, {"S", s}}));
  }
  return report;
}

bool is_regular_polygon(std::span<const Point> vertices, double relative_tolerance) {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  Point centroid;
  for (Point v : vertices) centroid = centroid + v;
  centroid = (1.0 / static_cast<double>(n)) * centroid;

  const double side = distance(vertices[0], vertices[1]);
  const double radius = distance(vertices[0], centroid);
  for (std::size_t i = 0; i < n; ++i) {
    if (!relatively_close(distance(vertices[i], vertices[(i + 1) % n]), side, relative_tolerance)) return false;
    if (!relatively_close(distance(vertices[i], centroid), radius, relative_tolerance)) return false;
  }
  return true;
}

}  // namespace unit_shapes
