#pragma once

#include <json.hpp>
#include <vector>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/report.hpp"

namespace unit_shapes {

struct UnitizationResult {
  /// S/A of the input, the scale factor that carries it to its unit shape.
  double tong_inradius_reciprocal;
  /// The input scaled by tong_inradius_reciprocal; its area equals its semiperimeter.
  Shape unit_shape;
  /// The common value of area and semiperimeter of unit_shape.
  double fundamental_measure;
};

/// A unit shape and the indices lambda of the scaled family L_lambda(base).
struct IndexedFamilyProbe {
  Shape base_unit_shape;
  std::vector<double> lambdas;
};

/// Area over semiperimeter.
double tong_inradius(const Shape& c);

UnitizationResult unitize(const Shape& c);

/// Checks A'(lambda) = 2 S(lambda) by central differences with step
/// 1e-5 * lambda (1e-5 relative), plus the exact difference identity
/// A(l + d) - A(l) = (2l + d) d Pi (1e-12 relative).
VerificationReport check_calculus_friendly(const IndexedFamilyProbe& probe);

/// Unitizing the unit shape again must be the identity: scale 1 +- 1e-9 and
/// the same fundamental measure to 1e-9 relative.
bool idempotence_check(const Shape& c);

nlohmann::json to_json(const UnitizationResult& result);

}  // namespace unit_shapes
