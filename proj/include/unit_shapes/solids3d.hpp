#pragma once

#include <array>
#include <json.hpp>
#include <string>
#include <vector>

#include "unit_shapes/report.hpp"

namespace unit_shapes {

enum class SolidKind { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline constexpr std::array<SolidKind, 5> kAllSolids = {
    SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron, SolidKind::Dodecahedron,
    SolidKind::Icosahedron};

std::string to_string(SolidKind kind);

struct PlatonicSolid {
  SolidKind kind;
  double edge_length;
};

struct SolidMeasures {
  double volume;
  double surface_area;
  double inradius;
  /// Volume of the similar unit solid; equals volume when this solid is unit.
  double fundamental_measure;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Convex polyhedron: vertices plus faces as counterclockwise (outward)
/// vertex index loops.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;
};

/// Vertex/face model of the solid with the requested edge length, centered
/// at the origin. Faces are recovered as the supporting planes of the hull.
Polyhedron vertex_model(const PlatonicSolid& s);

/// Volume, surface area and inradius measured from the vertex model.
SolidMeasures measures(const PlatonicSolid& s);

/// Rescales by SA / (3 V) so that volume is one third of surface area,
/// which for these solids puts the inradius at 1.
PlatonicSolid unitize_solid(const PlatonicSolid& s);

/// Table values 8 sqrt3, 8, 4 sqrt3, 20 xi / phi^3, 20 sqrt3 / phi^4 with
/// phi = 2 cos(pi/5) and xi = 2 sin(pi/5).
double tabulated_fundamental_measure(SolidKind kind);

/// Unit-solid measures from vertex models against the tabulated values (1e-9 relative).
VerificationReport table_check();

/// One row per solid: solid,volume,surface_area,inradius,fundamental_measure,tabulated.
std::string solids_table_csv();
/// Two rows in the printed table's layout: a name row and a measure row.
std::string solids_table_csv_wide();
nlohmann::json solids_table_json();

}  // namespace unit_shapes
