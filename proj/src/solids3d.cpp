#include "unit_shapes/solids3d.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "unit_shapes/errors.hpp"

namespace unit_shapes {
namespace {

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

std::vector<Vec3> base_vertices(SolidKind kind) {
  std::vector<Vec3> v;
  const double signs[] = {-1.0, 1.0};
  switch (kind) {
    case SolidKind::Tetrahedron:
      return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    case SolidKind::Cube:
      for (double x : signs)
        for (double y : signs)
          for (double z : signs) v.push_back({x, y, z});
      return v;
    case SolidKind::Octahedron:
      return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    case SolidKind::Dodecahedron:
      for (double x : signs)
        for (double y : signs)
          for (double z : signs) v.push_back({x, y, z});
      for (double a : signs) {
        for (double b : signs) {
          v.push_back({0.0, a / kPhi, b * kPhi});
          v.push_back({a / kPhi, b * kPhi, 0.0});
          v.push_back({a * kPhi, 0.0, b / kPhi});
        }
      }
      return v;
    case SolidKind::Icosahedron:
      for (double a : signs) {
        for (double b : signs) {
          v.push_back({0.0, a, b * kPhi});
          v.push_back({a, b * kPhi, 0.0});
          v.push_back({a * kPhi, 0.0, b});
        }
      }
      return v;
  }
  throw DomainError("unknown solid");
}

double shortest_edge(const std::vector<Vec3>& vertices) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      best = std::min(best, norm(vertices[i] - vertices[j]));
    }
  }
  return best;
}

Vec3 centroid_of(const std::vector<Vec3>& points) {
  Vec3 c;
  for (const auto& p : points) c = c + p;
  return (1.0 / static_cast<double>(points.size())) * c;
}

// Faces of a convex hull by brute force over vertex triples; fine for <= 20 vertices.
std::vector<std::vector<std::size_t>> hull_faces(const std::vector<Vec3>& vertices) {
  const std::size_t n = vertices.size();
  const double scale = shortest_edge(vertices);
  const double tolerance = 1e-9 * scale;
  const Vec3 center = centroid_of(vertices);

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 normal = cross(vertices[j] - vertices[i], vertices[k] - vertices[i]);
        const double length = norm(normal);
        if (length < tolerance * scale) continue;
        normal = (1.0 / length) * normal;
        if (dot(normal, vertices[i] - center) < 0.0) normal = -1.0 * normal;
        const double offset = dot(normal, vertices[i]);

        std::vector<std::size_t> on_plane;
        bool supporting = true;
        for (std::size_t q = 0; q < n && supporting; ++q) {
          const double height = dot(normal, vertices[q]) - offset;
          if (height > tolerance) supporting = false;
          if (std::abs(height) <= tolerance) on_plane.push_back(q);
        }
        if (!supporting || !seen.insert(on_plane).second) continue;

        // Order counterclockwise seen from outside.
        std::vector<Vec3> face_points;
        for (auto q : on_plane) face_points.push_back(vertices[q]);
        const Vec3 face_center = centroid_of(face_points);
        const Vec3 u = (1.0 / norm(face_points[0] - face_center)) * (face_points[0] - face_center);
        const Vec3 w = cross(normal, u);
        std::sort(on_plane.begin(), on_plane.end(), [&](std::size_t a, std::size_t b) {
          const Vec3 da = vertices[a] - face_center;
          const Vec3 db = vertices[b] - face_center;
          return std::atan2(dot(da, w), dot(da, u)) < std::atan2(dot(db, w), dot(db, u));
        });
        faces.push_back(std::move(on_plane));
      }
    }
  }
  return faces;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

std::string to_string(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return "Tetrahedron";
    case SolidKind::Cube: return "Cube";
    case SolidKind::Octahedron: return "Octahedron";
    case SolidKind::Dodecahedron: return "Dodecahedron";
    case SolidKind::Icosahedron: return "Icosahedron";
  }
  return "Unknown";
}

Polyhedron vertex_model(const PlatonicSolid& s) {
  if (!(s.edge_length > 0.0) || !std::isfinite(s.edge_length)) {
    throw DomainError("edge length must be positive");
  }
  auto vertices = base_vertices(s.kind);
  const double factor = s.edge_length / shortest_edge(vertices);
  for (auto& v : vertices) v = factor * v;
  auto faces = hull_faces(vertices);
  return {std::move(vertices), std::move(faces)};
}

SolidMeasures measures(const PlatonicSolid& s) {
  const Polyhedron model = vertex_model(s);
  const Vec3 center = centroid_of(model.vertices);

  double volume = 0.0;
  double surface = 0.0;
  double inradius = std::numeric_limits<double>::infinity();
  for (const auto& face : model.faces) {
    const Vec3 anchor = model.vertices[face[0]];
    Vec3 face_normal;
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      const Vec3 b = model.vertices[face[i]];
      const Vec3 c = model.vertices[face[i + 1]];
      const Vec3 n = cross(b - anchor, c - anchor);
      face_normal = face_normal + n;
      surface += 0.5 * norm(n);
      volume += dot(anchor - center, cross(b - center, c - center)) / 6.0;
    }
    const Vec3 unit_normal = (1.0 / norm(face_normal)) * face_normal;
    inradius = std::min(inradius, std::abs(dot(unit_normal, anchor - center)));
  }

  const double scale_to_unit = surface / (3.0 * volume);
  return {volume, surface, inradius, volume * scale_to_unit * scale_to_unit * scale_to_unit};
}

PlatonicSolid unitize_solid(const PlatonicSolid& s) {
  const SolidMeasures m = measures(s);
  return {s.kind, s.edge_length * m.surface_area / (3.0 * m.volume)};
}

double tabulated_fundamental_measure(SolidKind kind) {
  const double phi = 2.0 * std::cos(std::numbers::pi / 5.0);
  const double xi = 2.0 * std::sin(std::numbers::pi / 5.0);
  const double sqrt3 = std::numbers::sqrt3;
  switch (kind) {
    case SolidKind::Tetrahedron: return 8.0 * sqrt3;
    case SolidKind::Cube: return 8.0;
    case SolidKind::Octahedron: return 4.0 * sqrt3;
    case SolidKind::Dodecahedron: return 20.0 * xi / std::pow(phi, 3);
    case SolidKind::Icosahedron: return 20.0 * sqrt3 / std::pow(phi, 4);
  }
  throw DomainError("unknown solid");
}

VerificationReport table_check() {
  constexpr double kTolerance = 1e-9;
  VerificationReport report;
  report.claim = "platonic_table";
  for (SolidKind kind : kAllSolids) {
    const PlatonicSolid unit = unitize_solid({kind, 1.0});
    const SolidMeasures m = measures(unit);
    const double expected = tabulated_fundamental_measure(kind);
    const double gap = std::abs(m.volume - expected) / expected;
    const double unit_gap = std::abs(m.volume - m.surface_area / 3.0) / m.volume;
    report.record_slack(kTolerance - std::max(gap, unit_gap));
    if (gap > kTolerance || unit_gap > kTolerance) {
      report.fail(to_string(kind) + ": volume " + format_number(m.volume) + " vs table " +
                  format_number(expected) + " (SA/3 = " + format_number(m.surface_area / 3.0) + ")");
    }
  }
  return report;
}

std::string solids_table_csv() {
  std::ostringstream out;
  out << "solid,volume,surface_area,inradius,fundamental_measure,tabulated\n";
  for (SolidKind kind : kAllSolids) {
    const SolidMeasures m = measures(unitize_solid({kind, 1.0}));
    out << to_string(kind) << ',' << format_number(m.volume) << ',' << format_number(m.surface_area) << ','
        << format_number(m.inradius) << ',' << format_number(m.fundamental_measure) << ','
        << format_number(tabulated_fundamental_measure(kind)) << '\n';
  }
  return out.str();
}

std::string solids_table_csv_wide() {
  std::ostringstream names;
  std::ostringstream values;
  names << "Platonic solid";
  values << "Fundamental measure";
  for (SolidKind kind : kAllSolids) {
    names << ',' << to_string(kind);
    values << ',' << format_number(measures(unitize_solid({kind, 1.0})).fundamental_measure);
  }
  return names.str() + '\n' + values.str() + '\n';
}

nlohmann::json solids_table_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (SolidKind kind : kAllSolids) {
    const PlatonicSolid unit = unitize_solid({kind, 1.0});
    const SolidMeasures m = measures(unit);
    rows.push_back({{"solid", to_string(kind)},
                    {"edge_length", unit.edge_length},
                    {"volume", m.volume},
                    {"surface_area", m.surface_area},
                    {"inradius", m.inradius},
                    {"fundamental_measure", m.fundamental_measure},
                    {"tabulated", tabulated_fundamental_measure(kind)}});
  }
  return rows;
}

}  // namespace unit_shapes
