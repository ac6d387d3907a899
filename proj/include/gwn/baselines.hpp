#ifndef GWN_BASELINES_HPP_
#define GWN_BASELINES_HPP_

#include <vector>

#include "gwn/curve.hpp"
#include "gwn/winding.hpp"

namespace gwn {

/// Ray with unit direction (validated to within 1e-12).
struct Ray {
  Point2 origin;
  Vector2 direction;

  Ray(Point2 o, Vector2 d);

  Point2 at(double s) const { return origin + s * direction; }
};

/// One transversal ray-curve intersection. sign is +1 when the curve crosses
/// the ray line counterclockwise with respect to the ray direction
/// (cross(direction, tangent) > 0), so that the signed hit count of a ray
/// from q equals the integer winding number at q.
struct RayHit {
  double t = 0.0;  ///< curve parameter in [0, 1]
  double s = 0.0;  ///< ray parameter, >= 0
  int sign = 0;    ///< +1 or -1
};

struct CostCounters {
  long curveEvaluations = 0;
};

struct RayIntersections {
  std::vector<RayHit> hits;  ///< sorted by s ascending
  CostCounters counters;
};

/*!
 * Fixed-order Gauss-Legendre approximation of the winding integral
 *
 *   w(q) = 1/(2 pi) * integral over [0,1] of cross(C(t) - q, C'(t)) / |C(t) - q|^2 dt
 *
 * applied to the q-translated curve. Deliberately unstable near the curve;
 * it exists as the comparison baseline. Nodes and weights are generated per
 * order by Newton iteration on the Legendre recurrence and cached.
 */
double quadratureWinding(const RationalBezierCurve& curve, Point2 q, int nodeCount);

/*!
 * Winding integral evaluated by adaptive interval halving with an embedded
 * error estimate, to absolute tolerance tol on the winding value. Intended
 * as an independent test oracle; requires q well off the curve. Throws
 * QuadratureConvergenceError past depth 60.
 */
double adaptiveQuadratureOracle(const RationalBezierCurve& curve, Point2 q, double tol);

/*!
 * All transversal ray-curve intersections by geometric binary search:
 * subcurves whose bounding boxes miss the ray are discarded, approximately
 * linear subcurves are intersected through their chord. Chord hits use a
 * half-open parameter range so shared subdivision endpoints are counted
 * once. counters.curveEvaluations is the number of bisections performed.
 *
 * Throws GrazingRayError for rays collinear with a chord or past the depth
 * cap.
 */
RayIntersections rayIntersectBisect(const RationalBezierCurve& curve, const Ray& ray,
                                    const ToleranceConfig& cfg = {});

/*!
 * Ray-curve intersections by Bezier clipping: the signed distance to the ray
 * line is expressed in Bernstein form and parameter ranges where its convex
 * hull cannot vanish are clipped away. If a clip shrinks the interval by
 * less than 20%, the interval is split at its midpoint. Terminates on
 * approximately linear subcurves through chord intersection. Each de
 * Casteljau split counts as one curve evaluation.
 */
RayIntersections rayIntersectClip(const RationalBezierCurve& curve, const Ray& ray,
                                  const ToleranceConfig& cfg = {});

enum class RayCastMethod { Bisect, Clip };

/*!
 * Generalized winding number computed with a ray-casting integer winding
 * step instead of the adaptive polyline: for each curve, the signed
 * crossings of a ray cast toward the nearest edge of the curve's bounding
 * box (ties toward +x) with the closed loop give the integer winding, and
 * the closure winding is subtracted as usual. Queries outside a curve's
 * bounding box take the same zero-cost early exit as the primary algorithm.
 *
 * bisections in the result carries the accumulated curve evaluations.
 */
WindingResult generalizedWindingViaRayCast(const CurveShape& shape, Point2 q,
                                           RayCastMethod method,
                                           const ToleranceConfig& cfg = {});

/// Polyline through the curve points at parameters i/k, i = 0..k.
Polyline linearizeUniform(const RationalBezierCurve& curve, int k);

namespace detail {

/// Gauss-Legendre rule on [-1, 1]; cached per order, thread safe.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const QuadratureRule& gaussLegendreRule(int nodeCount);

/// Axis-aligned ray direction toward the nearest edge of the box, ties
/// toward +x.
Vector2 rayDirectionTowardNearestEdge(const BoundingBox2& box, Point2 q);

}  // namespace detail

}  // namespace gwn

#endif  // GWN_BASELINES_HPP_
