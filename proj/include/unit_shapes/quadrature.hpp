#pragma once

#include <functional>

namespace unit_shapes {

struct QuadratureOptions {
  double relative_tolerance = 1e-10;
  // Intervals are bisected at most this many times.
  int max_depth = 60;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// error falls below max(relative_tolerance * |I|, 50 eps * integral of |f|).
/// b < a is allowed and yields the negated integral. Throws QuadratureFailure
/// when the depth or interval budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace unit_shapes
