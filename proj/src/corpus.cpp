#include "gwn/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gwn {
namespace corpus {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 onCircle(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

CurveShape circleArcsFrom(int arcCount, double startAngle, const std::string& name) {
  if (arcCount < 3) {
    throw std::invalid_argument("need at least three arcs for a circle");
  }
  // Joints are computed once and shared, so adjacent arcs (including the
  // closing one) meet bit for bit.
  std::vector<Point2> joints(arcCount);
  for (int j = 0; j < arcCount; ++j) {
    joints[j] = onCircle(1.0, startAngle + 2.0 * kPi * j / arcCount);
  }
  const double apexWeight = std::cos(kPi / arcCount);
  CurveShape shape;
  shape.name = name;
  for (int j = 0; j < arcCount; ++j) {
    const Point2 a = joints[j];
    const Point2 b = joints[(j + 1) % arcCount];
    // Tangent intersection of the two endpoints of a unit-circle arc.
    const double scale = 1.0 + (a.x * b.x + a.y * b.y);
    const Point2 apex{(a.x + b.x) / scale, (a.y + b.y) / scale};
    shape.curves.push_back(RationalBezierCurve({a, apex, b}, {1.0, apexWeight, 1.0}));
  }
  return shape;
}

}  // namespace

CurveShape unitCircleArcs(int arcCount) {
  return circleArcsFrom(arcCount, 0.0, "circle" + std::to_string(arcCount));
}

CurveShape unitCircle4() {
  // Exact quarter-circle arcs; the apex weight is cos(pi/4) = sqrt(2)/2.
  return unitCircleArcs(4);
}

RationalBezierCurve quadratureCubic() {
  // Interior nodes bunched toward the middle keep the mid-curve parametric
  // speed low, which is what lets a 50-node rule reach full accuracy
  // everywhere beyond a tenth of the diagonal.
  return RationalBezierCurve({{0.0, 0.0}, {1.45, 0.7}, {1.55, 0.7}, {3.0, 0.0}});
}

CurveShape quadratureCubicShape() {
  CurveShape shape;
  shape.name = "quadrature-cubic";
  shape.curves.push_back(quadratureCubic());
  return shape;
}

CurveShape wobbleRing(int curveCount, double radius, double sway) {
  if (curveCount < 8) {
    throw std::invalid_argument("wobble ring needs at least eight curves");
  }
  std::vector<Point2> joints(curveCount);
  for (int j = 0; j < curveCount; ++j) {
    joints[j] = onCircle(radius, 2.0 * kPi * j / curveCount);
  }
  CurveShape shape;
  shape.name = "wobble-ring";
  for (int j = 0; j < curveCount; ++j) {
    const Point2 a = joints[j];
    const Point2 b = joints[(j + 1) % curveCount];
    const Vector2 chord = b - a;
    const Vector2 normal{-chord.dy, chord.dx};
    const double offset = sway;
    // Zigzag the interior nodes across the chord so the control polygon is
    // never simple-convex; depth-0 queries inside the bounding box always
    // cost at least one bisection.
    const Point2 p1 = a + (1.0 / 3.0) * chord + offset * normal;
    const Point2 p2 = a + (2.0 / 3.0) * chord - offset * normal;
    shape.curves.push_back(RationalBezierCurve({a, p1, p2, b}));
  }
  return shape;
}

CurveShape lopsidedBlob() {
  // Six fat rational quartic petals around the unit circle. The strongly
  // uneven weights skew the parametrization, so uniform-parameter chords are
  // spatially lopsided and linearization errors persist at high segment
  // counts.
  constexpr int kLobes = 6;
  std::vector<Point2> joints(kLobes);
  for (int j = 0; j < kLobes; ++j) {
    joints[j] = onCircle(1.0, 2.0 * kPi * j / kLobes);
  }
  CurveShape shape;
  shape.name = "lopsided-blob";
  const double step = 2.0 * kPi / kLobes;
  for (int j = 0; j < kLobes; ++j) {
    const double a = step * j;
    const Point2 p1 = onCircle(1.45, a + 0.25 * step);
    const Point2 p2 = onCircle(1.75, a + 0.50 * step);
    const Point2 p3 = onCircle(1.45, a + 0.75 * step);
    shape.curves.push_back(RationalBezierCurve({joints[j], p1, p2, p3, joints[(j + 1) % kLobes]},
                                               {1.0, 5.0, 0.3, 5.0, 1.0}));
  }
  return shape;
}

CurveShape gappedRing() {
  // Phase-shifted so one arc is centered on (-1, 0); removing it opens a gap
  // facing -x.
  return circleArcsFrom(8, -kPi / 8.0, "gapped-ring");
}

int gappedRingRemovalIndex() { return 4; }

CurveShape gappedOutline(int arcCount, double gapSize) {
  if (arcCount < 4 || arcCount % 2 != 0) {
    throw std::invalid_argument("gapped outline needs an even arc count of at least four");
  }
  CurveShape shape = unitCircleArcs(arcCount);
  shape.name = "gapped-outline";
  // Scale alternate arcs radially so no two adjacent endpoints meet.
  for (int j = 0; j < arcCount; ++j) {
    const double scale = 1.0 + (j % 2 == 0 ? gapSize : -gapSize);
    std::vector<Point2> pts;
    for (const Point2& p : shape.curves[j].controlPoints()) {
      pts.push_back({scale * p.x, scale * p.y});
    }
    shape.curves[j] = RationalBezierCurve(std::move(pts), shape.curves[j].weights());
  }
  return shape;
}

CurveShape selfIntersectingQuartic() {
  CurveShape shape;
  shape.name = "quartic-pretzel";
  shape.curves.push_back(RationalBezierCurve(
      {{-1.0, 0.0}, {3.0, 2.5}, {0.0, -4.0}, {-3.0, 2.5}, {1.0, 0.0}},
      {1.0, 2.0, 1.5, 2.0, 1.0}));
  return shape;
}

}  // namespace corpus
}  // namespace gwn
