#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/family_catalog.hpp"

namespace unit_shapes {

/// Seeded generator whose real draws are fixed by the 64-bit engine output
/// alone, so sample sets are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform on {lo, ..., hi}.
  int uniform_int(int lo, int hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

RigidMotion random_rigid_motion(Rng& rng);
/// Random motion with scale log-uniform in [0.1, 10].
Similarity random_similarity(Rng& rng);

/// Random member of a random catalog family, parameters kept off the
/// degenerate edges of each domain.
FamilyParam random_family_param(Rng& rng);

/// Simple m-gon: m vertices sorted by angle around a random center, rejected
/// until simple with area at least 1e-6.
Shape random_simple_polygon(int m, Rng& rng);
std::vector<Shape> random_simple_polygons(int m, int count, std::uint64_t seed);

/// Vertices of a shape made only of straight pieces, without the closing
/// repeat. Empty when the shape has a curved piece.
std::vector<Point> polygon_vertices(const Shape& shape);

/// True when no two non-adjacent edges of the closed polygon meet.
bool is_simple_polygon(const std::vector<Point>& vertices);

}  // namespace unit_shapes
