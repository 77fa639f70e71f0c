#pragma once

#include <json.hpp>

#include "unit_shapes/curve.hpp"

namespace unit_shapes {

// Wire format: {"pieces": [{"kind": "line_segment", ...}, ...]}.
// Points are [x, y] arrays; frames are similarity objects.

nlohmann::json to_json(const Similarity& s);
Similarity similarity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurvePiece& piece);
CurvePiece piece_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Shape& shape);
/// Throws ShapeError on a missing field, unknown kind, or invalid geometry.
Shape shape_from_json(const nlohmann::json& j);

}  // namespace unit_shapes
