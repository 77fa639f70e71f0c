#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/report.hpp"

namespace unit_shapes {

/// Right triangle with acute angle theta in (0, pi/2) adjacent to the base leg.
struct RightTriangle {
  double theta;
};

/// Triangle with sides r c, s c and longest side c: r, s <= 1 and r + s > 1.
struct Triangle {
  double r;
  double s;
};

/// Rectangle with height / length ratio r > 0.
struct Rectangle {
  double r;
};

/// Rhombus with interior angle theta in (0, pi).
struct Rhombus {
  double theta;
};

/// Parallelogram with angle theta between sides b and r b.
struct Parallelogram {
  double theta;
  double r;
};

/// Ellipse with semi-minor / semi-major ratio r in (0, 1).
struct Ellipse {
  double r;
};

/// Regular m-gon, m >= 3; the unit member has apothem 1.
struct RegularPolygon {
  int m;
};

using FamilyParam =
    std::variant<RightTriangle, Triangle, Rectangle, Rhombus, Parallelogram, Ellipse, RegularPolygon>;

/// Throws DomainError when the parameters fall outside the family's domain.
void validate(const FamilyParam& p);

std::string family_name(const FamilyParam& p);

/// Closed-form area (= semiperimeter) of the family's unit member.
double fundamental_measure(const FamilyParam& p);

/// Concrete unit member in canonical pose (first vertex or center at the origin).
Shape build_unit_shape(const FamilyParam& p);

/// (1/pi) ∫_0^pi sqrt(1 + (r^2 - 1) cos^2 t) dt: the semi-minor axis of the
/// unit ellipse of ratio r, which also serves as its mean radius.
double ellipse_semi_minor(double r);

struct EllipseMeanRadius {
  double r;
  double mean_radius;
};
EllipseMeanRadius ellipse_mean_radius(double r);

/// Shorter diagonal of the unit rhombus with angle theta.
double rhombus_short_diagonal(double theta);

/// m tan(pi / m), the isoperimetric constant of m-gons.
double polygon_constant(int m);

/// Numerically reconciles the closed forms that describe the same shapes:
/// general vs right triangles, parallelograms vs rectangles and rhombi.
VerificationReport conciliation_checks();

/// Representative members of every family, used by tables and sweeps.
std::vector<FamilyParam> default_catalog();

nlohmann::json to_json(const FamilyParam& p);
/// {"family": "rectangle", "r": 1.0} and friends. Throws DomainError.
FamilyParam family_from_json(const nlohmann::json& j);

/// "r=1;s=1" style parameter listing for CSV cells.
std::string params_string(const FamilyParam& p);

}  // namespace unit_shapes
