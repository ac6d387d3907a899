#ifndef GWN_TESTS_SUPPORT_HPP_
#define GWN_TESTS_SUPPORT_HPP_

#include <cmath>
#include <vector>

#include "gwn/curve.hpp"
#include "gwn/rng.hpp"

namespace gwn::testsupport {

/// The spec's quarter-circle arc: exact unit circle from (1,0) to (0,1).
inline RationalBezierCurve quarterCircleArc() {
  return RationalBezierCurve({{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                             {1.0, std::sqrt(2.0) / 2.0, 1.0});
}

/// Random rational curve: degree 1..6, control points in [-2, 2]^2, weights
/// in [0.2, 5].
inline RationalBezierCurve randomCurve(CounterRng& rng) {
  const int degree = rng.nextInt(1, 6);
  std::vector<Point2> pts;
  std::vector<double> wts;
  for (int i = 0; i <= degree; ++i) {
    pts.push_back({rng.next(-2.0, 2.0), rng.next(-2.0, 2.0)});
    wts.push_back(rng.next(0.2, 5.0));
  }
  return RationalBezierCurve(std::move(pts), std::move(wts));
}

/// Random closed shape: a loop of curveCount curves with exactly shared
/// endpoints, wandering around a circle so it rarely self-intersects.
inline CurveShape randomClosedShape(CounterRng& rng, int curveCount = 4) {
  std::vector<Point2> joints(curveCount);
  for (int j = 0; j < curveCount; ++j) {
    const double angle = 2.0 * 3.14159265358979323846 * j / curveCount;
    const double radius = rng.next(0.7, 1.3);
    joints[j] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  CurveShape shape;
  shape.name = "random-closed";
  for (int j = 0; j < curveCount; ++j) {
    const Point2 a = joints[j];
    const Point2 b = joints[(j + 1) % curveCount];
    const int degree = rng.nextInt(2, 4);
    std::vector<Point2> pts;
    std::vector<double> wts;
    pts.push_back(a);
    wts.push_back(1.0);
    for (int i = 1; i < degree; ++i) {
      const double u = static_cast<double>(i) / degree;
      const Point2 base{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
      pts.push_back({base.x + rng.next(-0.25, 0.25), base.y + rng.next(-0.25, 0.25)});
      wts.push_back(rng.next(0.5, 2.0));
    }
    pts.push_back(b);
    wts.push_back(1.0);
    shape.curves.emplace_back(std::move(pts), std::move(wts));
  }
  return shape;
}

/// A query point at least minDistance (sampled estimate) from the curve,
/// drawn from the curve's bounding box expanded by half a diagonal.
inline Point2 randomOffCurvePoint(CounterRng& rng, const RationalBezierCurve& curve,
                                  double minDistance, int maxTries = 200) {
  const BoundingBox2 box = curve.boundingBox();
  const double pad = 0.5 * box.diagonal();
  for (int i = 0; i < maxTries; ++i) {
    const Point2 q{rng.next(box.min.x - pad, box.max.x + pad),
                   rng.next(box.min.y - pad, box.max.y + pad)};
    if (distanceToCurveSampled(curve, q, 512) >= minDistance) {
      return q;
    }
  }
  return {box.max.x + pad, box.max.y + pad};  // far corner always qualifies
}

}  // namespace gwn::testsupport

#endif  // GWN_TESTS_SUPPORT_HPP_
