#include "gwn/winding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gwn/errors.hpp"

namespace gwn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Signed angle from u to v in (-pi, pi].
double signedAngleBetween(Vector2 u, Vector2 v) {
  double a = std::atan2(cross(u, v), dot(u, v));
  if (a <= -std::numbers::pi) {
    a = std::numbers::pi;
  }
  return a;
}

struct SegmentWindingResult {
  double value = 0.0;
  bool coincident = false;
};

SegmentWindingResult segmentWindingEx(const Segment& seg, Point2 q, double epsCoincident) {
  if (seg.isDegenerate()) {
    // A zero-length closure subtends no angle.
    return {0.0, distance(q, seg.start) <= epsCoincident};
  }
  const double d2 = detail::squaredDistanceToSegment(q, seg.start, seg.end);
  if (d2 <= epsCoincident * epsCoincident) {
    // Average of the +1/2 and -1/2 one-sided limits.
    return {0.0, true};
  }
  return {signedAngleBetween(seg.start - q, seg.end - q) / kTwoPi, false};
}

}  // namespace

double signedAngle(Point2 q, Point2 a, Point2 b) {
  if (a == q || b == q) {
    throw CoincidentPointError("signedAngle endpoint coincides with the query point");
  }
  return signedAngleBetween(a - q, b - q);
}

double segmentWinding(const Segment& seg, Point2 q, double epsCoincident) {
  return segmentWindingEx(seg, q, epsCoincident).value;
}

namespace detail {

ResolvedTolerances resolve(const ToleranceConfig& cfg, double diagonal) {
  if (!(cfg.epsLinear > 0.0) || !(cfg.epsCoincident > 0.0) || cfg.maxDepth < 1) {
    throw std::invalid_argument("tolerances must be positive and maxDepth >= 1");
  }
  const double epsLin = cfg.epsLinear * diagonal;
  return {epsLin * epsLin, cfg.epsCoincident * diagonal, cfg.maxDepth};
}

int crossingWindingNumber(std::span<const Point2> vertices, Point2 q) {
  // Hormann-Agathos crossing rule: count upward edges with q strictly left
  // and downward edges with q strictly right.
  int wn = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    if (a.y <= q.y) {
      if (b.y > q.y && cross(b - a, q - a) > 0.0) {
        ++wn;
      }
    } else if (b.y <= q.y && cross(b - a, q - a) < 0.0) {
      --wn;
    }
  }
  return wn;
}

bool pointInClosedPolygon(std::span<const Point2> vertices, Point2 q, double epsOnEdge) {
  const std::size_t n = vertices.size();
  const double eps2 = epsOnEdge * epsOnEdge;
  for (std::size_t i = 0; i < n; ++i) {
    if (squaredDistanceToSegment(q, vertices[i], vertices[(i + 1) % n]) <= eps2) {
      return true;  // on-edge counts as inside; the caller will bisect
    }
  }
  return crossingWindingNumber(vertices, q) != 0;
}

BoundaryAwareWinding polygonWindingWithConvention(std::span<const Point2> vertices, Point2 q,
                                                  double epsCoincident) {
  const std::size_t n = vertices.size();
  const double eps2 = epsCoincident * epsCoincident;
  bool onBoundary = false;
  for (std::size_t i = 0; i < n && !onBoundary; ++i) {
    onBoundary = squaredDistanceToSegment(q, vertices[i], vertices[(i + 1) % n]) <= eps2;
  }
  if (!onBoundary) {
    return {static_cast<double>(crossingWindingNumber(vertices, q)), false};
  }
  // Coincident convention: edges through q contribute exactly 0, the rest
  // their subtended angles. The sum is a half-integer up to rounding.
  double angle = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    if (a == b || squaredDistanceToSegment(q, a, b) <= eps2) {
      continue;
    }
    angle += signedAngleBetween(a - q, b - q);
  }
  return {angle / kTwoPi, true};
}

}  // namespace detail

int polygonWindingNumber(const Polygon& poly, Point2 q) {
  return detail::crossingWindingNumber(poly.vertices(), q);
}

bool isApproximatelyLinear(const RationalBezierCurve& curve, double epsLinearSq) {
  const Segment closure = curve.linearClosure();
  for (const Point2& p : curve.controlPoints()) {
    if (detail::squaredDistanceToSegment(p, closure.start, closure.end) >= epsLinearSq) {
      return false;
    }
  }
  return true;
}

bool isSimpleConvex(const RationalBezierCurve& curve) {
  const auto& p = curve.controlPoints();
  const int n = curve.degree();
  for (int i = 1; i <= n - 1; ++i) {
    const Vector2 s = p[i + 1] - p[i - 1];
    const Point2 other = (2 * i <= n) ? p[n] : p[0];
    const double sideNode = cross(s, p[i] - p[i - 1]);
    const double sideOther = cross(s, other - p[i - 1]);
    // A node exactly on the test segment does not break convexity.
    if (sideNode * sideOther > 0.0) {
      return false;
    }
  }
  return true;
}

double convexEndpointWindingNumber(const RationalBezierCurve& curve, Point2 q,
                                   double epsCoincident) {
  const Point2 start = curve.startPoint();
  const Point2 end = curve.endPoint();
  const double dStart = distance(q, start);
  const double dEnd = distance(q, end);
  if (std::min(dStart, dEnd) > epsCoincident) {
    throw std::domain_error("query does not coincide with a curve endpoint");
  }
  // The value is the angle swept by the direction of (curve - q) over the
  // whole parameter range; at the coincident end that direction is the
  // tangent. Simple-convex control polygons guarantee no full revolution, so
  // the principal value is the true sweep.
  if (dStart <= dEnd) {
    const Vector2 far = end - start;
    if (far.squaredNorm() == 0.0) {
      return 0.0;  // closed subcurve pinched to its own endpoint
    }
    return signedAngleBetween(curve.endpointTangent(CurveEnd::Start), far) / kTwoPi;
  }
  const Vector2 far = start - end;
  if (far.squaredNorm() == 0.0) {
    return 0.0;
  }
  return signedAngleBetween(far, -curve.endpointTangent(CurveEnd::End)) / kTwoPi;
}

namespace {

struct IntegerWindingOutcome {
  double value = 0.0;  // half-integer when a coincident contribution occurred
  long bisections = 0;
  bool coincident = false;
};

IntegerWindingOutcome integerWindingResolved(const RationalBezierCurve& curve, Point2 q,
                                             const detail::ResolvedTolerances& tol,
                                             DepthCapPolicy policy) {
  struct Item {
    RationalBezierCurve curve;
    int depth;
    bool knownSimpleConvex;
  };

  std::vector<Point2> polyline;
  polyline.reserve(64);
  polyline.push_back(curve.startPoint());

  std::vector<Item> stack;
  stack.push_back({curve, 0, false});

  IntegerWindingOutcome out;

  auto emitCoincident = [&](const RationalBezierCurve& sub) {
    out.value += convexEndpointWindingNumber(sub, q, tol.epsCoincident);
    out.coincident = true;
    polyline.push_back(sub.endPoint());
  };

  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const RationalBezierCurve& sub = item.curve;
    const bool simpleConvex = item.knownSimpleConvex || isSimpleConvex(sub);

    // Coincidence test first; it is only valid on simple-convex subcurves.
    if (simpleConvex && (distance(q, sub.startPoint()) <= tol.epsCoincident ||
                         distance(q, sub.endPoint()) <= tol.epsCoincident)) {
      emitCoincident(sub);
      continue;
    }

    const bool outsideHull =
        simpleConvex && !detail::pointInClosedPolygon(sub.controlPoints(), q, tol.epsCoincident);
    if (outsideHull || isApproximatelyLinear(sub, tol.epsLinearSq)) {
      polyline.push_back(sub.endPoint());
      continue;
    }

    if (item.depth >= tol.maxDepth) {
      // The query is indistinguishable from the curve interior. Under the
      // snap policy (or when q already sits within the coincidence
      // tolerance) apply the endpoint convention at the nearest endpoint.
      const double dNear = std::min(distance(q, sub.startPoint()), distance(q, sub.endPoint()));
      if (policy == DepthCapPolicy::SnapToEndpoint || dNear <= tol.epsCoincident) {
        const Point2 snapped = distance(q, sub.startPoint()) <= distance(q, sub.endPoint())
                                   ? sub.startPoint()
                                   : sub.endPoint();
        out.value += convexEndpointWindingNumber(sub, snapped, tol.epsCoincident);
        out.coincident = true;
        polyline.push_back(sub.endPoint());
        continue;
      }
      throw DegenerateQueryError("bisection depth cap exceeded; query degenerate with the curve");
    }

    auto [left, right] = sub.bisect();
    ++out.bisections;
    // Children of a simple-convex curve are simple-convex.
    stack.push_back({std::move(right), item.depth + 1, simpleConvex});
    stack.push_back({std::move(left), item.depth + 1, simpleConvex});
  }

  // The polyline runs from curve start to curve end in order; the implicit
  // closing edge is the shared linear closure.
  const auto pw = detail::polygonWindingWithConvention(polyline, q, tol.epsCoincident);
  out.value += pw.value;
  out.coincident = out.coincident || pw.onBoundary;
  return out;
}

}  // namespace

namespace detail {

WindingResult windingNumberCurveResolved(const RationalBezierCurve& curve, Point2 q,
                                         const ResolvedTolerances& tol, DepthCapPolicy policy) {
  const BoundingBox2 box = curve.boundingBox();
  if (box.diagonal() == 0.0) {
    // Point curve: no angle is subtended anywhere.
    return {0.0, 0, q == curve.startPoint()};
  }
  const auto closure = segmentWindingEx(curve.linearClosure(), q, tol.epsCoincident);
  if (!box.contains(q)) {
    return {-closure.value, 0, closure.coincident};
  }
  const IntegerWindingOutcome loop = integerWindingResolved(curve, q, tol, policy);
  return {loop.value - closure.value, loop.bisections, loop.coincident || closure.coincident};
}

}  // namespace detail

WindingResult integerWindingNumberCurve(const RationalBezierCurve& curve, Point2 q,
                                        const ToleranceConfig& cfg, DepthCapPolicy policy) {
  const double diagonal = curve.boundingBox().diagonal();
  if (diagonal == 0.0) {
    return {0.0, 0, q == curve.startPoint()};
  }
  const auto tol = detail::resolve(cfg, diagonal);
  const IntegerWindingOutcome out = integerWindingResolved(curve, q, tol, policy);
  return {out.value, out.bisections, out.coincident};
}

WindingResult windingNumberCurve(const RationalBezierCurve& curve, Point2 q,
                                 const ToleranceConfig& cfg, DepthCapPolicy policy) {
  const auto tol = detail::resolve(cfg, curve.boundingBox().diagonal());
  return detail::windingNumberCurveResolved(curve, q, tol, policy);
}

WindingResult shapeWindingNumber(const CurveShape& shape, Point2 q, const ToleranceConfig& cfg,
                                 DepthCapPolicy policy) {
  if (shape.curves.empty()) {
    throw std::invalid_argument("shape has no curves");
  }
  const auto tol = detail::resolve(cfg, shape.boundingBox().diagonal());
  WindingResult total;
  for (const auto& curve : shape.curves) {
    const WindingResult r = detail::windingNumberCurveResolved(curve, q, tol, policy);
    total.value += r.value;
    total.bisections += r.bisections;
    total.coincident = total.coincident || r.coincident;
  }
  return total;
}

Classification classify(const CurveShape& shape, Point2 q, ClassificationRule rule,
                        const ToleranceConfig& cfg) {
  const double w = shapeWindingNumber(shape, q, cfg).value;
  // Nearest integer, ties away from zero.
  const long rounded = std::lround(w);
  const bool inside =
      rule == ClassificationRule::Nonzero ? rounded != 0 : (rounded % 2 != 0);
  return {w, rounded, inside, std::abs(w - static_cast<double>(rounded))};
}

}  // namespace gwn
