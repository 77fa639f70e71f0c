#include "unit_shapes/shape_json.hpp"

#include <string>

#include "unit_shapes/errors.hpp"

namespace unit_shapes {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ShapeError("point must be a [x, y] array of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw ShapeError(std::string("missing numeric field '") + key + "'");
  }
  return it->get<double>();
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ShapeError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json to_json(const Similarity& s) {
  return {{"rotation_angle", s.motion.rotation_angle},
          {"reflect", s.motion.reflect},
          {"translation", point_json(s.motion.translation)},
          {"scale", s.scale}};
}

Similarity similarity_from_json(const json& j) {
  if (!j.is_object()) throw ShapeError("similarity must be an object");
  Similarity s;
  s.motion.rotation_angle = j.contains("rotation_angle") ? number(j, "rotation_angle") : 0.0;
  if (j.contains("reflect")) {
    if (!j["reflect"].is_boolean()) throw ShapeError("'reflect' must be a boolean");
    s.motion.reflect = j["reflect"].get<bool>();
  }
  if (j.contains("translation")) s.motion.translation = point_from(j["translation"]);
  s.scale = j.contains("scale") ? number(j, "scale") : 1.0;
  return s;
}

json to_json(const CurvePiece& piece) {
  return std::visit(
      Overloaded{
          [](const LineSegment& s) -> json {
            return {{"kind", "line_segment"}, {"start", point_json(s.start)}, {"end", point_json(s.end)}};
          },
          [](const CircularArc& a) -> json {
            return {{"kind", "circular_arc"},
                    {"center", point_json(a.center)},
                    {"radius", a.radius},
                    {"angle_start", a.angle_start},
                    {"angle_end", a.angle_end}};
          },
          [](const EllipticalArc& e) -> json {
            return {{"kind", "elliptical_arc"},
                    {"center", point_json(e.center)},
                    {"semi_axes", json::array({e.semi_axis_a, e.semi_axis_b})},
                    {"rotation", e.rotation},
                    {"t_start", e.t_start},
                    {"t_end", e.t_end}};
          },
          [](const ParabolicArc& p) -> json {
            return {{"kind", "parabolic_arc"}, {"alpha", p.alpha},     {"beta", p.beta},
                    {"gamma", p.gamma},        {"x_start", p.x_start}, {"x_end", p.x_end},
                    {"frame", to_json(p.frame)}};
          },
          [](const RationalArc& r) -> json {
            return {{"kind", "rational_arc"},
                    {"t_start", r.t_start},
                    {"t_end", r.t_end},
                    {"frame", to_json(r.frame)}};
          },
          [](const Polyline& p) -> json {
            json vertices = json::array();
            for (Point v : p.vertices) vertices.push_back(point_json(v));
            return {{"kind", "polyline"}, {"vertices", std::move(vertices)}};
          },
      },
      piece);
}

CurvePiece piece_from_json(const json& j) {
  if (!j.is_object()) throw ShapeError("piece must be an object");
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw ShapeError("'kind' must be a string");
  const auto kind = kind_field.get<std::string>();

  if (kind == "line_segment") {
    return LineSegment{point_from(field(j, "start")), point_from(field(j, "end"))};
  }
  if (kind == "circular_arc") {
    return CircularArc{point_from(field(j, "center")), number(j, "radius"), number(j, "angle_start"),
                       number(j, "angle_end")};
  }
  if (kind == "elliptical_arc") {
    const Point axes = point_from(field(j, "semi_axes"));
    return EllipticalArc{point_from(field(j, "center")), axes.x, axes.y,
                         j.contains("rotation") ? number(j, "rotation") : 0.0, number(j, "t_start"),
                         number(j, "t_end")};
  }
  if (kind == "parabolic_arc") {
    ParabolicArc p;
    p.alpha = number(j, "alpha");
    p.beta = number(j, "beta");
    p.gamma = number(j, "gamma");
    p.x_start = number(j, "x_start");
    p.x_end = number(j, "x_end");
    if (j.contains("frame")) p.frame = similarity_from_json(j["frame"]);
    return p;
  }
  if (kind == "rational_arc") {
    RationalArc r;
    r.t_start = number(j, "t_start");
    r.t_end = number(j, "t_end");
    if (j.contains("frame")) r.frame = similarity_from_json(j["frame"]);
    return r;
  }
  if (kind == "polyline") {
    const json& vertices = field(j, "vertices");
    if (!vertices.is_array()) throw ShapeError("'vertices' must be an array");
    Polyline p;
    for (const auto& v : vertices) p.vertices.push_back(point_from(v));
    return p;
  }
  throw ShapeError("unknown piece kind '" + kind + "'");
}

json to_json(const Shape& shape) {
  json pieces = json::array();
  for (const auto& piece : shape.pieces()) pieces.push_back(to_json(piece));
  return {{"pieces", std::move(pieces)}};
}

Shape shape_from_json(const json& j) {
  if (!j.is_object()) throw ShapeError("shape must be an object");
  const json& pieces_json = field(j, "pieces");
  if (!pieces_json.is_array()) throw ShapeError("'pieces' must be an array");
  std::vector<CurvePiece> pieces;
  for (const auto& p : pieces_json) pieces.push_back(piece_from_json(p));
  return Shape(std::move(pieces));
}

}  // namespace unit_shapes
