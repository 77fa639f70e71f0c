#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's quadrature or search code.

#include <array>
#include <cstddef>
#include <functional>
#include <limits>

namespace unit_shapes::oracle {

/// Composite Simpson rule on n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

struct GridMin1d {
  double x;
  double value;
};

/// Minimum over n evenly spaced points of [lo, hi] inclusive.
inline GridMin1d grid_min_1d(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  GridMin1d best{lo, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

struct GridMin2d {
  std::array<double, 2> x;
  double value;
};

/// Minimum over an n x n grid on the box; f may return +inf off-domain.
inline GridMin2d grid_min_2d(const std::function<double(double, double)>& f, std::array<double, 2> lo,
                             std::array<double, 2> hi, std::size_t n) {
  GridMin2d best{lo, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double v = lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / static_cast<double>(n - 1);
      const double value = f(u, v);
      if (value < best.value) best = {{u, v}, value};
    }
  }
  return best;
}

}  // namespace unit_shapes::oracle
