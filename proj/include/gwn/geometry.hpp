#ifndef GWN_GEOMETRY_HPP_
#define GWN_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace gwn {

struct Vector2 {
  double dx = 0.0;
  double dy = 0.0;

  double norm() const { return std::hypot(dx, dy); }
  double squaredNorm() const { return dx * dx + dy * dy; }
};

inline Vector2 operator+(Vector2 a, Vector2 b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline Vector2 operator-(Vector2 a, Vector2 b) { return {a.dx - b.dx, a.dy - b.dy}; }
inline Vector2 operator-(Vector2 a) { return {-a.dx, -a.dy}; }
inline Vector2 operator*(double s, Vector2 a) { return {s * a.dx, s * a.dy}; }
inline Vector2 operator*(Vector2 a, double s) { return {s * a.dx, s * a.dy}; }

inline double dot(Vector2 a, Vector2 b) { return a.dx * b.dx + a.dy * b.dy; }
inline double cross(Vector2 a, Vector2 b) { return a.dx * b.dy - a.dy * b.dx; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vector2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 p, Vector2 v) { return {p.x + v.dx, p.y + v.dy}; }
inline Point2 operator-(Point2 p, Vector2 v) { return {p.x - v.dx, p.y - v.dy}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point2 a, Point2 b) { return !(a == b); }

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }
inline double squaredDistance(Point2 a, Point2 b) { return (a - b).squaredNorm(); }

/// Oriented line segment. A degenerate segment (start == end) is allowed; it
/// arises as the linear closure of a closed curve.
struct Segment {
  Point2 start;
  Point2 end;

  Vector2 direction() const { return end - start; }
  double length() const { return direction().norm(); }
  bool isDegenerate() const { return start == end; }
};

/// Open chain of vertices, at least two.
class Polyline {
public:
  explicit Polyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) {
      throw std::invalid_argument("Polyline requires at least two vertices");
    }
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 operator[](std::size_t i) const { return vertices_[i]; }

private:
  std::vector<Point2> vertices_;
};

/// Closed vertex loop; the edge from the last vertex back to the first is
/// implicit. Vertices may repeat (a polygon traversed twice winds twice).
class Polygon {
public:
  explicit Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw std::invalid_argument("Polygon requires at least three vertices");
    }
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 operator[](std::size_t i) const { return vertices_[i]; }

private:
  std::vector<Point2> vertices_;
};

struct BoundingBox2 {
  Point2 min;
  Point2 max;

  /// Inclusive containment; points on a face count as contained.
  bool contains(Point2 q) const {
    return q.x >= min.x && q.x <= max.x && q.y >= min.y && q.y <= max.y;
  }

  double diagonal() const { return distance(min, max); }

  void expandToInclude(Point2 p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }

  void expandToInclude(const BoundingBox2& other) {
    expandToInclude(other.min);
    expandToInclude(other.max);
  }

  /// Euclidean distance from q to the box, zero for contained points.
  double exteriorDistance(Point2 q) const {
    const double ex = std::max({min.x - q.x, 0.0, q.x - max.x});
    const double ey = std::max({min.y - q.y, 0.0, q.y - max.y});
    return std::hypot(ex, ey);
  }

  static BoundingBox2 ofPoints(std::span<const Point2> pts) {
    if (pts.empty()) {
      throw std::invalid_argument("bounding box of empty point set");
    }
    BoundingBox2 box{pts[0], pts[0]};
    for (const Point2& p : pts.subspan(1)) {
      box.expandToInclude(p);
    }
    return box;
  }
};

namespace detail {

/// Squared distance from q to the segment [a, b]; handles a == b.
inline double squaredDistanceToSegment(Point2 q, Point2 a, Point2 b) {
  const Vector2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) {
    return squaredDistance(q, a);
  }
  double u = dot(q - a, ab) / len2;
  u = std::clamp(u, 0.0, 1.0);
  return squaredDistance(q, a + u * ab);
}

}  // namespace detail

}  // namespace gwn

#endif  // GWN_GEOMETRY_HPP_
