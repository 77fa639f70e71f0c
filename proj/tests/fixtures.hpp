#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/family_catalog.hpp"
#include "unit_shapes/sampling.hpp"
#include "unit_shapes/verifier.hpp"

namespace unit_shapes::fixtures {

/// Region under y = 1 - x^2 above the x-axis: area 4/3.
inline Shape parabolic_cap() {
  ParabolicArc arc;
  arc.alpha = -1.0;
  arc.gamma = 1.0;
  arc.x_start = 1.0;
  arc.x_end = -1.0;
  return Shape({LineSegment{{-1.0, 0.0}, {1.0, 0.0}}, arc});
}

/// Half disk of radius 2 centered at (1, 1) from a circular arc and its diameter.
inline Shape half_disk() {
  return Shape({CircularArc{{1.0, 1.0}, 2.0, 0.0, std::numbers::pi}, LineSegment{{-1.0, 1.0}, {3.0, 1.0}}});
}

/// Rectangle with two elliptical quarter caps: exercises mixed joins.
inline Shape capsule() {
  const double pi = std::numbers::pi;
  return Shape({LineSegment{{0.0, -1.0}, {2.0, -1.0}},
                EllipticalArc{{2.0, 0.0}, 0.5, 1.0, 0.0, -0.5 * pi, 0.5 * pi},
                LineSegment{{2.0, 1.0}, {0.0, 1.0}},
                EllipticalArc{{0.0, 0.0}, 0.5, 1.0, 0.0, 0.5 * pi, 1.5 * pi}});
}

/// Draws from every piece kind the kernel supports.
inline Shape random_shape(Rng& rng) {
  Shape base = [&]() -> Shape {
    switch (rng.uniform_int(0, 6)) {
      case 0: return build_unit_shape(random_family_param(rng));
      case 1: return random_simple_polygon(rng.uniform_int(3, 9), rng);
      case 2: return make_circle({rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.1, 3.0));
      case 3: return parabolic_cap();
      case 4: return make_rational_circle();
      case 5: return half_disk();
      default: return capsule();
    }
  }();
  return apply_similarity(random_similarity(rng), base);
}

}  // namespace unit_shapes::fixtures
