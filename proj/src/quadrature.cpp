#include "unit_shapes/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "unit_shapes/errors.hpp"

namespace unit_shapes {
namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double abs_value;
  double error;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double f_center = f(center);
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  double abs_sum = std::abs(f_center) * kKronrodWeights[7];

  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    abs_sum += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
  }

  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.value = kronrod * half;
  s.abs_value = abs_sum * std::abs(half);
  s.error = std::abs((kronrod - gauss) * half);
  s.depth = depth;
  return s;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw QuadratureFailure("integration limits must be finite");
  }
  if (a == b) {
    return {};
  }

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b, 0);
  double total = first.value;
  double total_abs = first.abs_value;
  double total_error = first.error;
  heap.push(first);
  int intervals = 1;

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  auto tolerance = [&] {
    return std::max(options.relative_tolerance * std::abs(total), 50.0 * kEps * total_abs);
  };

  while (total_error > tolerance()) {
    if (!std::isfinite(total)) {
      throw QuadratureFailure("integrand produced a non-finite value");
    }
    Segment worst = heap.top();
    if (worst.depth >= options.max_depth || intervals >= options.max_intervals) {
      std::ostringstream msg;
      msg << "adaptive quadrature did not reach tolerance on [" << a << ", " << b
          << "]: error estimate " << total_error << " vs target " << tolerance();
      throw QuadratureFailure(msg.str());
    }
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gauss_kronrod(f, worst.lo, mid, worst.depth + 1);
    Segment right = gauss_kronrod(f, mid, worst.hi, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed the drift from incremental updates.
  double value = 0.0;
  double error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(value)) {
    throw QuadratureFailure("integrand produced a non-finite value");
  }
  return {value, error, intervals};
}

}  // namespace unit_shapes
