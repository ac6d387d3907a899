#ifndef GWN_WINDING_HPP_
#define GWN_WINDING_HPP_

#include <span>

#include "gwn/curve.hpp"
#include "gwn/geometry.hpp"

namespace gwn {

/// Winding value in revolutions, plus the number of curve bisections the
/// query cost and whether the coincident-point convention was applied.
struct WindingResult {
  double value = 0.0;
  long bisections = 0;
  bool coincident = false;
};

enum class ClassificationRule { Nonzero, EvenOdd };

struct Classification {
  double winding = 0.0;
  long rounded = 0;
  bool inside = false;
  /// |winding - rounded|, in [0, 0.5]. Values near 0.5 flag low confidence.
  double confidenceGap = 0.0;
};

/*!
 * Tolerances for the adaptive winding algorithm. The distance fields are
 * relative to the bounding-box diagonal of the queried curve (or, for shape
 * queries, of the whole shape) and are resolved to absolute distances at
 * query time.
 */
struct ToleranceConfig {
  /// Chord-deviation tolerance for the approximate-linearity test, relative
  /// to the bounding-box diagonal. Compared against squared distances after
  /// resolution.
  double epsLinear = 1e-8;
  /// Distance below which a query point counts as coincident with an
  /// endpoint or segment, relative to the bounding-box diagonal.
  double epsCoincident = 1e-12;
  /// Recursion depth cap for curve bisection.
  int maxDepth = 48;
};

/// What to do when the bisection depth cap is reached and the query is not
/// within the coincidence tolerance of a subcurve endpoint.
enum class DepthCapPolicy {
  Signal,          ///< throw DegenerateQueryError
  SnapToEndpoint,  ///< snap to the nearest subcurve endpoint and apply the
                   ///< coincident-point convention
};

/*!
 * Signed angle from vector q->a to vector q->b, in (-pi, pi]. Positive is
 * counterclockwise. Computed as a two-argument arctangent of (cross, dot),
 * which carries the sign and needs no domain clamping.
 *
 * Throws CoincidentPointError if a or b equals q.
 */
double signedAngle(Point2 q, Point2 a, Point2 b);

/*!
 * Winding number of a single segment at q: the subtended signed angle over
 * 2*pi, in (-1/2, 1/2]. Points on the segment within epsCoincident (absolute
 * distance) return exactly 0, the average of the +1/2 and -1/2 one-sided
 * limits. A degenerate segment subtends no angle and returns 0.
 */
double segmentWinding(const Segment& seg, Point2 q, double epsCoincident = 0.0);

/*!
 * Exact integer winding number of a closed polygon at q, by quadrant
 * crossing accumulation; no trigonometric calls. Requires q off the
 * boundary; a query exactly on an edge or vertex resolves deterministically
 * to one side by the crossing rules. Boundary-coincident queries arriving
 * through the curve algorithms are instead handled by the coincident-point
 * convention there.
 */
int polygonWindingNumber(const Polygon& poly, Point2 q);

/*!
 * True iff every control point lies within the given tolerance of the
 * curve's linear closure. epsLinearSq is an absolute squared distance.
 */
bool isApproximatelyLinear(const RationalBezierCurve& curve, double epsLinearSq);

/*!
 * True iff the control polygon is simple and convex, by per-node side tests
 * against the segment joining its neighbours: node i is compared against the
 * far endpoint (Pn for the first half, P0 for the second). Nodes exactly on
 * the test segment do not break convexity. Degree-1 curves pass vacuously.
 */
bool isSimpleConvex(const RationalBezierCurve& curve);

/*!
 * Winding number at a query coinciding with an endpoint of a simple-convex
 * curve: the average of the two one-sided limits across the curve. It equals
 * the angle swept by the curve as seen from the endpoint, which runs from
 * the start tangent to the far endpoint (query at the start) or from the far
 * endpoint to the negated end tangent (query at the end).
 *
 * The query must lie within epsCoincident of one endpoint; otherwise throws
 * std::domain_error. The caller is responsible for the simple-convex
 * precondition, which guarantees the sweep has no full revolution.
 */
double convexEndpointWindingNumber(const RationalBezierCurve& curve, Point2 q,
                                   double epsCoincident = 0.0);

/*!
 * Integer winding number of the closed loop formed by the curve and its
 * linear closure, via an adaptive polyline that provably has the same
 * winding number at q.
 *
 * Subcurves are emitted to the polyline as soon as q provably lies outside
 * their closed hull (simple-convex control polygon not containing q) or they
 * are approximately linear; otherwise they are bisected. Queries coincident
 * with a subcurve endpoint contribute the convexEndpointWindingNumber
 * convention instead, making the result a half-integer.
 *
 * Tolerances resolve against this curve's bounding-box diagonal. Throws
 * DegenerateQueryError if the depth cap is exceeded under the Signal policy.
 */
WindingResult integerWindingNumberCurve(const RationalBezierCurve& curve, Point2 q,
                                        const ToleranceConfig& cfg = {},
                                        DepthCapPolicy policy = DepthCapPolicy::Signal);

/*!
 * Generalized winding number of an open (or closed) curve at q.
 *
 * Queries strictly outside the bounding box return the negated closure
 * winding exactly, with zero bisections. All other queries reduce to the
 * integer winding number of the closed loop minus the closure contribution.
 */
WindingResult windingNumberCurve(const RationalBezierCurve& curve, Point2 q,
                                 const ToleranceConfig& cfg = {},
                                 DepthCapPolicy policy = DepthCapPolicy::Signal);

/*!
 * Generalized winding number of a shape: the sum of the per-curve winding
 * numbers, each computed independently. Tolerances resolve against the
 * shape's bounding-box diagonal, so the result is invariant to how the
 * boundary is split into curves.
 */
WindingResult shapeWindingNumber(const CurveShape& shape, Point2 q,
                                 const ToleranceConfig& cfg = {},
                                 DepthCapPolicy policy = DepthCapPolicy::Signal);

/*!
 * Containment classification from the generalized winding number: round to
 * the nearest integer (ties away from zero) and apply the fill rule.
 * Nonzero: inside iff rounded != 0. EvenOdd: inside iff rounded is odd.
 */
Classification classify(const CurveShape& shape, Point2 q,
                        ClassificationRule rule = ClassificationRule::Nonzero,
                        const ToleranceConfig& cfg = {});

namespace detail {

/// Tolerances resolved to absolute distances for a given bounding-box
/// diagonal.
struct ResolvedTolerances {
  double epsLinearSq = 0.0;
  double epsCoincident = 0.0;
  int maxDepth = 48;
};

ResolvedTolerances resolve(const ToleranceConfig& cfg, double diagonal);

/// Crossing-rule winding number over a cyclic vertex span (closing edge
/// implicit). Deterministic for every q, including boundary hits.
int crossingWindingNumber(std::span<const Point2> vertices, Point2 q);

/// True iff q is inside the closed polygon or within epsOnEdge of its
/// boundary. Used for the conservative control-polygon containment test.
bool pointInClosedPolygon(std::span<const Point2> vertices, Point2 q, double epsOnEdge);

struct BoundaryAwareWinding {
  double value = 0.0;
  bool onBoundary = false;
};

/// Polygon winding that applies the coincident-point convention: edges
/// passing within epsCoincident of q contribute exactly 0 and the rest
/// contribute their subtended angles, yielding the average of the two
/// one-sided values (a half-integer for a simple boundary point). Falls back
/// to the exact crossing rule when q is off the boundary.
BoundaryAwareWinding polygonWindingWithConvention(std::span<const Point2> vertices, Point2 q,
                                                  double epsCoincident);

WindingResult windingNumberCurveResolved(const RationalBezierCurve& curve, Point2 q,
                                         const ResolvedTolerances& tol, DepthCapPolicy policy);

}  // namespace detail

}  // namespace gwn

#endif  // GWN_WINDING_HPP_
