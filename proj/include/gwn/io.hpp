#ifndef GWN_IO_HPP_
#define GWN_IO_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwn/curve.hpp"
#include "gwn/geometry.hpp"

namespace gwn {

/*!
 * Schema of the native shape file: a UTF-8 JSON document with top-level keys
 *
 *   formatVersion  integer, must equal 1
 *   name           string
 *   curves         array of { "points": [[x, y], ...],
 *                             "weights": [w, ...]   (optional) }
 *
 * Weights, when present, match the point count and are strictly positive;
 * absent weights mean a polynomial curve (all 1). The writer emits one curve
 * per line with 17 significant digits, so documents are diffable and numbers
 * round-trip bit for bit.
 */
struct ShapeDocument {
  struct Curve {
    std::vector<std::array<double, 2>> points;
    std::optional<std::vector<double>> weights;
  };

  int formatVersion = 1;
  std::string name;
  std::vector<Curve> curves;
};

ShapeDocument toDocument(const CurveShape& shape);
CurveShape fromDocument(const ShapeDocument& doc);  // validates invariants

/// Parse a native shape document. Throws ParseError with line or curve-index
/// diagnostics on malformed structure, mismatched lengths, or non-positive
/// weights.
CurveShape parseShape(const std::string& text);

/// Serialize a shape; inverse of parseShape up to float formatting.
std::string writeShape(const CurveShape& shape);

/*!
 * Import an SVG path subset: M/m, L/l, H/h, V/v, C/c, Q/q, Z/z with the
 * usual implicit command repetition. Lines become degree-1 curves, Q
 * degree-2, C degree-3, and Z an explicit closing segment back to the
 * subpath start; all weights are 1. Arcs ('A') and shorthand curves ('S',
 * 'T') are rejected with their position, never approximated.
 */
CurveShape parseSvgPathSubset(const std::string& pathData);

/*!
 * Scalar field sampled at pixel centers over an axis-aligned window.
 * Row-major storage with row 0 at the top of the window (maximum y).
 */
struct FieldGrid {
  BoundingBox2 window;
  int width = 0;
  int height = 0;
  std::vector<double> values;  ///< width * height entries

  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
  double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }

  Point2 pixelCenter(int row, int col) const {
    const double dx = (window.max.x - window.min.x) / width;
    const double dy = (window.max.y - window.min.y) / height;
    return {window.min.x + (col + 0.5) * dx, window.max.y - (row + 0.5) * dy};
  }
};

/// Binary PGM (P5, maxval 255). Value v maps to round(255 * clamp((v - lo) /
/// (hi - lo), 0, 1)); row 0 is the top of the window. Requires lo < hi.
std::string writeFieldPGM(const FieldGrid& field, double lo, double hi);

/// CSV with header "x,y,winding", one row per pixel center in storage order,
/// 17 significant digits, LF line endings.
std::string writeFieldCSV(const FieldGrid& field);

}  // namespace gwn

#endif  // GWN_IO_HPP_
