#pragma once

#include <span>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/report.hpp"
#include "unit_shapes/unitizer.hpp"

namespace unit_shapes {

inline constexpr double kEqualityTolerance = 1e-9;

/// pi A <= S^2, with near-equality (relative 1e-9) allowed only for circles.
VerificationReport check_isoperimetric(const Shape& c, double tolerance = kEqualityTolerance);

/// Pi >= pi, with equality only for circles.
VerificationReport check_unit_floor(const UnitizationResult& u, double tolerance = kEqualityTolerance);

/// For every kappa: rho <= Pi_U exactly when rho A(L_kappa U) <= S(L_kappa U)^2.
VerificationReport check_scale_equivalence(const Shape& unit, double rho, std::span<const double> kappas,
                                           double tolerance = kEqualityTolerance);

/// rho_m A <= S^2 for each m-gon, with equality only for regular ones.
VerificationReport check_mgon_bound(int m, std::span<const Shape> samples,
                                    double tolerance = kEqualityTolerance);

struct Triple {
  double a;
  double b;
  double c;
};

/// A(L_a C) + A(L_b C) = A(L_c C) must hold exactly when a^2 + b^2 = c^2.
VerificationReport check_blob_pythagoras(const Shape& base, Triple triple,
                                         double tolerance = kEqualityTolerance);

/// Circle traced by two trig-free rational arcs: A = S = pi.
VerificationReport check_rational_circle(double tolerance = kEqualityTolerance);

/// Unit circle about the origin from two rational arcs, no trigonometry.
Shape make_rational_circle();
/// Upper half disk: rational arc closed by the diameter.
Shape make_rational_half_disk();

/// All sides equal and all vertices equidistant from the vertex centroid.
bool is_regular_polygon(std::span<const Point> vertices, double relative_tolerance = 1e-9);

}  // namespace unit_shapes
