#include "unit_shapes/family_catalog.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "unit_shapes/errors.hpp"
#include "unit_shapes/quadrature.hpp"

namespace unit_shapes {
namespace {

using std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

[[noreturn]] void domain_error(const std::string& family, const std::string& detail) {
  throw DomainError(family + ": " + detail);
}

// ∫_0^pi sqrt(1 + (r^2 - 1) cos^2 t) dt; also valid at r = 1 where it is pi.
double ellipse_integral(double r) {
  const double k = r * r - 1.0;
  auto integrand = [k](double t) {
    const double c = std::cos(t);
    return std::sqrt(1.0 + k * c * c);
  };
  QuadratureOptions options;
  options.relative_tolerance = kKernelRelativeTolerance;
  // Split at the midpoint; the integrand is symmetric about pi/2.
  return 2.0 * integrate(integrand, 0.0, 0.5 * pi, options).value;
}

Shape parallelogram_shape(double base, double side, double theta) {
  const Point a{0.0, 0.0};
  const Point b{base, 0.0};
  const Point lift{side * std::cos(theta), side * std::sin(theta)};
  const Point vertices[] = {a, b, b + lift, a + lift};
  return make_polygon(vertices);
}

}  // namespace

void validate(const FamilyParam& p) {
  std::visit(
      Overloaded{
          [](const RightTriangle& f) {
            if (!(f.theta > 0.0 && f.theta < 0.5 * pi))
              domain_error("right_triangle", "theta must lie in (0, pi/2), got " + fmt(f.theta));
          },
          [](const Triangle& f) {
            if (!(f.r > 0.0 && f.s > 0.0 && f.r <= 1.0 && f.s <= 1.0 && f.r + f.s > 1.0))
              domain_error("triangle", "(r, s) must satisfy 0 < r, s <= 1 and r + s > 1, got (" +
                                           fmt(f.r) + ", " + fmt(f.s) + ")");
          },
          [](const Rectangle& f) {
            if (!(f.r > 0.0 && std::isfinite(f.r)))
              domain_error("rectangle", "r must be positive, got " + fmt(f.r));
          },
          [](const Rhombus& f) {
            if (!(f.theta > 0.0 && f.theta < pi))
              domain_error("rhombus", "theta must lie in (0, pi), got " + fmt(f.theta));
          },
          [](const Parallelogram& f) {
            if (!(f.theta > 0.0 && f.theta < pi))
              domain_error("parallelogram", "theta must lie in (0, pi), got " + fmt(f.theta));
            if (!(f.r > 0.0 && std::isfinite(f.r)))
              domain_error("parallelogram", "r must be positive, got " + fmt(f.r));
          },
          [](const Ellipse& f) {
            if (!(f.r > 0.0 && f.r < 1.0))
              domain_error("ellipse", "r must lie in (0, 1), got " + fmt(f.r));
          },
          [](const RegularPolygon& f) {
            if (f.m < 3) domain_error("regular_polygon", "m must be at least 3, got " + std::to_string(f.m));
          },
      },
      p);
}

std::string family_name(const FamilyParam& p) {
  return std::visit(Overloaded{
                        [](const RightTriangle&) { return std::string("right_triangle"); },
                        [](const Triangle&) { return std::string("triangle"); },
                        [](const Rectangle&) { return std::string("rectangle"); },
                        [](const Rhombus&) { return std::string("rhombus"); },
                        [](const Parallelogram&) { return std::string("parallelogram"); },
                        [](const Ellipse&) { return std::string("ellipse"); },
                        [](const RegularPolygon&) { return std::string("regular_polygon"); },
                    },
                    p);
}

double fundamental_measure(const FamilyParam& p) {
  validate(p);
  return std::visit(
      Overloaded{
          [](const RightTriangle& f) { return (1.0 + 1.0 / std::cos(f.theta)) * (1.0 + 1.0 / std::sin(f.theta)); },
          [](const Triangle& f) {
            const double sum = f.r + f.s + 1.0;
            return std::pow(sum, 1.5) /
                   std::sqrt((-f.r + f.s + 1.0) * (f.r - f.s + 1.0) * (f.r + f.s - 1.0));
          },
          [](const Rectangle& f) { return (1.0 + f.r) * (1.0 + f.r) / f.r; },
          [](const Rhombus& f) { return 4.0 / std::sin(f.theta); },
          [](const Parallelogram& f) { return (1.0 + f.r) * (1.0 + f.r) / (f.r * std::sin(f.theta)); },
          [](const Ellipse& f) {
            const double integral = ellipse_integral(f.r);
            return integral * integral / (pi * f.r);
          },
          [](const RegularPolygon& f) { return polygon_constant(f.m); },
      },
      p);
}

Shape build_unit_shape(const FamilyParam& p) {
  validate(p);
  return std::visit(
      Overloaded{
          [](const RightTriangle& f) {
            const double base = 1.0 + 1.0 / std::tan(f.theta) + 1.0 / std::sin(f.theta);
            const Point vertices[] = {{0.0, 0.0}, {base, 0.0}, {base, base * std::tan(f.theta)}};
            return make_polygon(vertices);
          },
          [](const Triangle& f) {
            const double c = 2.0 * std::sqrt((f.r + f.s + 1.0) /
                                             ((-f.r + f.s + 1.0) * (f.r - f.s + 1.0) * (f.r + f.s - 1.0)));
            const double a = f.r * c;  // opposite the first vertex
            const double b = f.s * c;
            const double x = (b * b - a * a + c * c) / (2.0 * c);
            const double y = std::sqrt(std::max(0.0, b * b - x * x));
            const Point vertices[] = {{0.0, 0.0}, {c, 0.0}, {x, y}};
            return make_polygon(vertices);
          },
          [](const Rectangle& f) {
            const double length = (1.0 + f.r) / f.r;
            const double height = 1.0 + f.r;
            const Point vertices[] = {{0.0, 0.0}, {length, 0.0}, {length, height}, {0.0, height}};
            return make_polygon(vertices);
          },
          [](const Rhombus& f) {
            const double side = 2.0 / std::sin(f.theta);
            return parallelogram_shape(side, side, f.theta);
          },
          [](const Parallelogram& f) {
            const double base = (1.0 + f.r) / (f.r * std::sin(f.theta));
            return parallelogram_shape(base, f.r * base, f.theta);
          },
          [](const Ellipse& f) {
            const double integral = ellipse_integral(f.r);
            const double semi_major = integral / (pi * f.r);
            return Shape({EllipticalArc{{0.0, 0.0}, semi_major, f.r * semi_major, 0.0, 0.0, 2.0 * pi}});
          },
          [](const RegularPolygon& f) {
            const double circumradius = 1.0 / std::cos(pi / f.m);
            std::vector<Point> vertices;
            vertices.reserve(static_cast<std::size_t>(f.m));
            // Bottom edge horizontal, tangent to the unit circle at (0, -1).
            for (int k = 0; k < f.m; ++k) {
              const double angle = -0.5 * pi - pi / f.m + 2.0 * pi * k / f.m;
              vertices.push_back({circumradius * std::cos(angle), circumradius * std::sin(angle)});
            }
            return make_polygon(vertices);
          },
      },
      p);
}

double ellipse_semi_minor(double r) {
  if (!(r > 0.0 && r < 1.0)) domain_error("ellipse_semi_minor", "r must lie in (0, 1), got " + fmt(r));
  return ellipse_integral(r) / pi;
}

EllipseMeanRadius ellipse_mean_radius(double r) { return {r, ellipse_semi_minor(r)}; }

double rhombus_short_diagonal(double theta) {
  if (!(theta > 0.0 && theta < pi))
    domain_error("rhombus_short_diagonal", "theta must lie in (0, pi), got " + fmt(theta));
  return 4.0 / std::sin(theta) * std::min(std::sin(0.5 * theta), std::cos(0.5 * theta));
}

double polygon_constant(int m) {
  if (m < 3) domain_error("polygon_constant", "m must be at least 3, got " + std::to_string(m));
  return m * std::tan(pi / m);
}

VerificationReport conciliation_checks() {
  constexpr double kTolerance = 1e-10;
  constexpr int kGrid = 400;
  VerificationReport report;
  report.claim = "closed_form_conciliation";

  auto compare = [&](const std::string& label, double x, double y) {
    const double gap = std::abs(x - y) / std::max(std::abs(x), std::abs(y));
    report.record_slack(kTolerance - gap);
    if (gap > kTolerance) {
      report.fail(label + ": " + fmt(x) + " vs " + fmt(y));
    }
  };

  for (int i = 1; i < kGrid; ++i) {
    // Longest side is the hypotenuse; the legs over it are (sin, cos).
    const double theta = 0.5 * pi * i / kGrid;
    compare("triangle(sin, cos) vs right_triangle at theta=" + fmt(theta),
            fundamental_measure(Triangle{std::sin(theta), std::cos(theta)}),
            fundamental_measure(RightTriangle{theta}));
  }
  for (int i = 0; i <= kGrid; ++i) {
    const double r = std::pow(10.0, -3.0 + 6.0 * i / kGrid);
    compare("parallelogram(pi/2, r) vs rectangle at r=" + fmt(r),
            fundamental_measure(Parallelogram{0.5 * pi, r}), fundamental_measure(Rectangle{r}));
  }
  for (int i = 1; i < kGrid; ++i) {
    const double theta = pi * i / kGrid;
    compare("parallelogram(theta, 1) vs rhombus at theta=" + fmt(theta),
            fundamental_measure(Parallelogram{theta, 1.0}), fundamental_measure(Rhombus{theta}));
  }
  return report;
}

std::vector<FamilyParam> default_catalog() {
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  return {
      RightTriangle{pi / 4},   RightTriangle{pi / 6},      Triangle{1.0, 1.0},
      Triangle{0.8, 0.6},      Rectangle{1.0},             Rectangle{golden},
      Rhombus{pi / 2},         Rhombus{pi / 3},            Parallelogram{pi / 3, 2.0},
      Ellipse{0.5},            RegularPolygon{3},          RegularPolygon{4},
      RegularPolygon{6},
  };
}

nlohmann::json to_json(const FamilyParam& p) {
  nlohmann::json j = {{"family", family_name(p)}};
  std::visit(Overloaded{
                 [&](const RightTriangle& f) { j["theta"] = f.theta; },
                 [&](const Triangle& f) {
                   j["r"] = f.r;
                   j["s"] = f.s;
                 },
                 [&](const Rectangle& f) { j["r"] = f.r; },
                 [&](const Rhombus& f) { j["theta"] = f.theta; },
                 [&](const Parallelogram& f) {
                   j["theta"] = f.theta;
                   j["r"] = f.r;
                 },
                 [&](const Ellipse& f) { j["r"] = f.r; },
                 [&](const RegularPolygon& f) { j["m"] = f.m; },
             },
             p);
  return j;
}

FamilyParam family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw DomainError("family parameters need a string 'family' field");
  }
  const auto name = j["family"].get<std::string>();
  auto number = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
      throw DomainError(name + ": missing numeric field '" + key + "'");
    }
    return j[key].get<double>();
  };

  FamilyParam p = [&]() -> FamilyParam {
    if (name == "right_triangle") return RightTriangle{number("theta")};
    if (name == "triangle") return Triangle{number("r"), number("s")};
    if (name == "rectangle") return Rectangle{number("r")};
    if (name == "rhombus") return Rhombus{number("theta")};
    if (name == "parallelogram") return Parallelogram{number("theta"), number("r")};
    if (name == "ellipse") return Ellipse{number("r")};
    if (name == "regular_polygon") {
      if (!j.contains("m") || !j["m"].is_number_integer()) {
        throw DomainError("regular_polygon: 'm' must be an integer");
      }
      return RegularPolygon{j["m"].get<int>()};
    }
    throw DomainError("unknown family '" + name + "'");
  }();
  validate(p);
  return p;
}

std::string params_string(const FamilyParam& p) {
  return std::visit(Overloaded{
                        [](const RightTriangle& f) { return "theta=" + fmt(f.theta); },
                        [](const Triangle& f) { return "r=" + fmt(f.r) + ";s=" + fmt(f.s); },
                        [](const Rectangle& f) { return "r=" + fmt(f.r); },
                        [](const Rhombus& f) { return "theta=" + fmt(f.theta); },
                        [](const Parallelogram& f) { return "theta=" + fmt(f.theta) + ";r=" + fmt(f.r); },
                        [](const Ellipse& f) { return "r=" + fmt(f.r); },
                        [](const RegularPolygon& f) { return "m=" + std::to_string(f.m); },
                    },
                    p);
}

}  // namespace unit_shapes
