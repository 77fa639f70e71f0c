#include "unit_shapes/unitizer.hpp"

#include <cmath>
#include <sstream>

#include "unit_shapes/shape_json.hpp"

namespace unit_shapes {
namespace {

constexpr double kUnitPropertyTolerance = 1e-8;
constexpr double kDerivativeTolerance = 1e-5;
constexpr double kDifferenceIdentityTolerance = 1e-12;
constexpr double kRelativeStep = 1e-5;

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

double tong_inradius(const Shape& c) { return area(c) / semiperimeter(c); }

UnitizationResult unitize(const Shape& c) {
  const double a = area(c);
  const double s = semiperimeter(c);
  const double scale = s / a;
  // Pi = scale^2 A = S^2 / A.
  return {scale, apply_similarity(Similarity::scaling(scale), c), s * s / a};
}

VerificationReport check_calculus_friendly(const IndexedFamilyProbe& probe) {
  VerificationReport report;
  report.claim = "calculus_friendly_indexing";

  const Shape& base = probe.base_unit_shape;
  const double base_area = area(base);
  const double base_semi = semiperimeter(base);
  const double pi_measure = 0.5 * (base_area + base_semi);
  if (relative_gap(base_area, base_semi) > kUnitPropertyTolerance) {
    std::ostringstream msg;
    msg << "base is not a unit shape: A=" << base_area << " S=" << base_semi;
    report.fail(msg.str());
  }

  auto scaled_area = [&base](double lambda) {
    return area(apply_similarity(Similarity::scaling(lambda), base));
  };

  for (double lambda : probe.lambdas) {
    if (!(lambda > 0.0)) {
      std::ostringstream msg;
      msg << "lambda=" << lambda << " is not positive";
      report.fail(msg.str());
      continue;
    }
    const double h = kRelativeStep * lambda;
    const double slope = (scaled_area(lambda + h) - scaled_area(lambda - h)) / (2.0 * h);
    const double twice_semi =
        2.0 * semiperimeter(apply_similarity(Similarity::scaling(lambda), base));
    const double derivative_gap = relative_gap(slope, twice_semi);
    report.record_slack(kDerivativeTolerance - derivative_gap);
    if (derivative_gap > kDerivativeTolerance) {
      std::ostringstream msg;
      msg << "lambda=" << lambda << ": A'=" << slope << " but 2S=" << twice_semi;
      report.fail(msg.str());
    }

    // With A(l) = Pi l^2 the increment over [l, l + d] is twice the mean index times d times Pi.
    const double step = 0.1 * lambda;
    const double increment = pi_measure * (lambda + step) * (lambda + step) - pi_measure * lambda * lambda;
    const double mean_form = 2.0 * ((lambda + (lambda + step)) / 2.0) * step * pi_measure;
    const double identity_gap = relative_gap(increment, mean_form);
    if (identity_gap > kDifferenceIdentityTolerance) {
      std::ostringstream msg;
      msg << "lambda=" << lambda << ": difference identity off by " << identity_gap;
      report.fail(msg.str());
    }
  }
  return report;
}

bool idempotence_check(const Shape& c) {
  const UnitizationResult first = unitize(c);
  const UnitizationResult second = unitize(first.unit_shape);
  return std::abs(second.tong_inradius_reciprocal - 1.0) <= 1e-9 &&
         relative_gap(first.fundamental_measure, second.fundamental_measure) <= 1e-9;
}

nlohmann::json to_json(const UnitizationResult& result) {
  return {{"tong_inradius_reciprocal", result.tong_inradius_reciprocal},
          {"fundamental_measure", result.fundamental_measure},
          {"unit_shape", to_json(result.unit_shape)}};
}

}  // namespace unit_shapes
