#ifndef GWN_CURVE_HPP_
#define GWN_CURVE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gwn/geometry.hpp"

namespace gwn {

enum class CurveEnd { Start, End };

/*!
 * Rational Bezier curve of arbitrary degree, defined by ordered control
 * points and strictly positive weights.
 *
 * All operations are pure: they never mutate the curve and may be called
 * concurrently. Subdivision and degree elevation are performed in homogeneous
 * coordinates (w_i * P_i, w_i), which keeps them exact up to floating point
 * rounding and never requires renormalization.
 */
class RationalBezierCurve {
public:
  /// Polynomial curve; every weight is 1.
  explicit RationalBezierCurve(std::vector<Point2> controlPoints);
  RationalBezierCurve(std::vector<Point2> controlPoints, std::vector<double> weights);

  int degree() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<Point2>& controlPoints() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  Point2 startPoint() const { return points_.front(); }
  Point2 endPoint() const { return points_.back(); }
  bool isPolynomial() const;
  bool isClosed() const { return startPoint() == endPoint(); }

  /// Point on the curve at parameter t in [0, 1]. The endpoints are
  /// interpolated exactly: evaluate(0) == P0 and evaluate(1) == Pn.
  Point2 evaluate(double t) const;

  /// Point and first derivative at t. The derivative of a rational curve is
  /// assembled from the homogeneous numerator and weight derivatives.
  std::pair<Point2, Vector2> evaluateWithDerivative(double t) const;

  /// Exact subdivision at t = 1/2. The two halves reproduce the parent image,
  /// and left.endPoint() == right.startPoint() bit for bit.
  std::pair<RationalBezierCurve, RationalBezierCurve> bisect() const { return splitAt(0.5); }

  /// Subdivision at an arbitrary interior parameter; used by the clipping
  /// intersector. The adaptive winding algorithm always splits at 1/2.
  std::pair<RationalBezierCurve, RationalBezierCurve> splitAt(double t) const;

  /// Segment from the curve's end back to its start, so that the union of the
  /// curve and its closure is a closed loop.
  Segment linearClosure() const { return {endPoint(), startPoint()}; }

  /// Axis-aligned box of the control points. Contains the curve image by the
  /// convex hull property.
  BoundingBox2 boundingBox() const { return BoundingBox2::ofPoints(points_); }

  /*!
   * Tangent direction at an endpoint: P1 - P0 at the start, Pn - Pn-1 at the
   * end. Control nodes that coincide exactly with the endpoint are skipped,
   * so a curve with a stationary start still reports a usable direction.
   * Only the direction is meaningful, not the magnitude.
   *
   * Throws std::domain_error if every control point is identical.
   */
  Vector2 endpointTangent(CurveEnd end) const;

  /// Control points, in order, as a polyline.
  Polyline controlPolygon() const { return Polyline(points_); }

  /// Curve traversed backwards: evaluate(reversed(), t) == evaluate(1 - t).
  RationalBezierCurve reversed() const;

  /// Same image, degree raised by one.
  RationalBezierCurve degreeElevated() const;

private:
  std::vector<Point2> points_;
  std::vector<double> weights_;
};

/*!
 * Ordered, oriented collection of curves forming a (possibly messy) boundary.
 * No watertightness or orientation consistency is required; that is the
 * point.
 */
struct CurveShape {
  std::vector<RationalBezierCurve> curves;
  std::string name;

  BoundingBox2 boundingBox() const;
};

/// Distance from q to the curve, estimated by dense parameter sampling.
/// Good enough for near/far banding; not a projection.
double distanceToCurveSampled(const RationalBezierCurve& curve, Point2 q, int samples = 256);

/// Minimum sampled distance over all curves of the shape.
double distanceToShapeSampled(const CurveShape& shape, Point2 q, int samplesPerCurve = 256);

}  // namespace gwn

#endif  // GWN_CURVE_HPP_
