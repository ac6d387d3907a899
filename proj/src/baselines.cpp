#include "gwn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "gwn/errors.hpp"

namespace gwn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double windingIntegrand(const RationalBezierCurve& curve, Point2 q, double t) {
  const auto [p, d] = curve.evaluateWithDerivative(t);
  const Vector2 r = p - q;
  return cross(r, d) / r.squaredNorm();
}

}  // namespace

Ray::Ray(Point2 o, Vector2 d) : origin(o), direction(d) {
  if (std::abs(d.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("ray direction must be a unit vector");
  }
}

namespace detail {

const QuadratureRule& gaussLegendreRule(int nodeCount) {
  if (nodeCount < 2) {
    throw std::invalid_argument("Gauss-Legendre rule needs at least two nodes");
  }
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(nodeCount);
  if (it != cache.end()) {
    return it->second;
  }

  // Roots of the Legendre polynomial by Newton iteration on the three-term
  // recurrence, seeded with the Chebyshev asymptotic estimate.
  QuadratureRule rule;
  rule.nodes.resize(nodeCount);
  rule.weights.resize(nodeCount);
  const int n = nodeCount;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(nodeCount, std::move(rule)).first->second;
}

Vector2 rayDirectionTowardNearestEdge(const BoundingBox2& box, Point2 q) {
  const double dLeft = std::abs(q.x - box.min.x);
  const double dRight = std::abs(box.max.x - q.x);
  const double dBottom = std::abs(q.y - box.min.y);
  const double dTop = std::abs(box.max.y - q.y);
  double best = dRight;  // ties go toward +x
  Vector2 dir{1.0, 0.0};
  if (dLeft < best) {
    best = dLeft;
    dir = {-1.0, 0.0};
  }
  if (dBottom < best) {
    best = dBottom;
    dir = {0.0, -1.0};
  }
  if (dTop < best) {
    dir = {0.0, 1.0};
  }
  return dir;
}

}  // namespace detail

double quadratureWinding(const RationalBezierCurve& curve, Point2 q, int nodeCount) {
  const auto& rule = detail::gaussLegendreRule(nodeCount);
  double sum = 0.0;
  for (int i = 0; i < nodeCount; ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] * windingIntegrand(curve, q, t);
  }
  return 0.5 * sum / kTwoPi;
}

namespace {

double gaussPanel(const RationalBezierCurve& curve, Point2 q, double t0, double t1) {
  static constexpr int kPanelOrder = 11;
  const auto& rule = detail::gaussLegendreRule(kPanelOrder);
  const double mid = 0.5 * (t0 + t1);
  const double half = 0.5 * (t1 - t0);
  double sum = 0.0;
  for (int i = 0; i < kPanelOrder; ++i) {
    sum += rule.weights[i] * windingIntegrand(curve, q, mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double adaptivePanel(const RationalBezierCurve& curve, Point2 q, double t0, double t1,
                     double tol, int depth) {
  if (depth > 60) {
    throw QuadratureConvergenceError("adaptive quadrature did not converge; query too close");
  }
  const double whole = gaussPanel(curve, q, t0, t1);
  const double mid = 0.5 * (t0 + t1);
  const double left = gaussPanel(curve, q, t0, mid);
  const double right = gaussPanel(curve, q, mid, t1);
  if (std::abs(left + right - whole) <= tol) {
    return left + right;
  }
  return adaptivePanel(curve, q, t0, mid, 0.5 * tol, depth + 1) +
         adaptivePanel(curve, q, mid, t1, 0.5 * tol, depth + 1);
}

/// Does the ray { origin + s * dir : s >= 0 } meet the box? Inclusive.
bool rayIntersectsBox(const Ray& ray, const BoundingBox2& box) {
  double sMin = 0.0;
  double sMax = std::numeric_limits<double>::infinity();
  const double o[2] = {ray.origin.x, ray.origin.y};
  const double d[2] = {ray.direction.dx, ray.direction.dy};
  const double lo[2] = {box.min.x, box.min.y};
  const double hi[2] = {box.max.x, box.max.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (o[axis] < lo[axis] || o[axis] > hi[axis]) {
        return false;
      }
      continue;
    }
    double s0 = (lo[axis] - o[axis]) / d[axis];
    double s1 = (hi[axis] - o[axis]) / d[axis];
    if (s0 > s1) {
      std::swap(s0, s1);
    }
    sMin = std::max(sMin, s0);
    sMax = std::min(sMax, s1);
    if (sMin > sMax) {
      return false;
    }
  }
  return true;
}

/*!
 * Transversal intersection of the ray with the chord from a to b, half-open
 * in the chord parameter so that subdivision endpoints shared by adjacent
 * chords count a crossing exactly once. The crossing sign is the sign of
 * cross(direction, chord), which makes signed hit counts equal winding
 * numbers. Throws GrazingRayError when the chord lies on the ray line.
 */
std::optional<RayHit> chordHit(const Ray& ray, Point2 a, Point2 b, double t0, double t1) {
  const Vector2 ab = b - a;
  const Vector2 oa = a - ray.origin;
  const double denom = cross(ray.direction, ab);
  if (denom == 0.0) {
    if (cross(ray.direction, oa) == 0.0 && !(a == b)) {
      throw GrazingRayError("ray collinear with a curve chord");
    }
    return std::nullopt;
  }
  const double u = -cross(ray.direction, oa) / denom;
  if (u < 0.0 || u >= 1.0) {
    return std::nullopt;
  }
  const double s = cross(oa, ab) / denom;
  if (s < 0.0) {
    return std::nullopt;
  }
  RayHit hit;
  hit.t = t0 + u * (t1 - t0);
  hit.s = s;
  hit.sign = denom > 0.0 ? 1 : -1;
  return hit;
}

/*!
 * Refine a transversal chord root by Newton iteration on the signed distance
 * cross(direction, curve(u) - origin), in the subcurve's local parameter.
 * Both intersectors polish their chord hits the same way, so their reported
 * parameters agree to machine precision rather than to the chord tolerance.
 * Refinement evaluations are not subdivisions and do not count toward the
 * cost counters.
 */
void polishChordHit(const RationalBezierCurve& sub, const Ray& ray, double uChord, double t0,
                    double t1, RayHit& hit) {
  double u = std::clamp(uChord, 0.0, 1.0);
  for (int iteration = 0; iteration < 12; ++iteration) {
    const auto [p, dp] = sub.evaluateWithDerivative(u);
    const double f = cross(ray.direction, p - ray.origin);
    const double df = cross(ray.direction, dp);
    if (df == 0.0) {
      break;
    }
    const double step = f / df;
    u = std::clamp(u - step, 0.0, 1.0);
    if (std::abs(step) < 1e-15) {
      break;
    }
  }
  const Point2 p = sub.evaluate(u);
  hit.t = t0 + u * (t1 - t0);
  hit.s = dot(p - ray.origin, ray.direction);
}

void finalizeHits(std::vector<RayHit>& hits) {
  // Splitting exactly at a root can report it from both sides; merge
  // same-sign duplicates at indistinguishable parameters, then order by s.
  std::sort(hits.begin(), hits.end(), [](const RayHit& x, const RayHit& y) { return x.t < y.t; });
  auto last = std::unique(hits.begin(), hits.end(), [](const RayHit& x, const RayHit& y) {
    return x.sign == y.sign && std::abs(x.t - y.t) < 1e-12;
  });
  hits.erase(last, hits.end());
  std::sort(hits.begin(), hits.end(), [](const RayHit& x, const RayHit& y) { return x.s < y.s; });
}

void bisectRecurse(const RationalBezierCurve& sub, const Ray& ray,
                   const detail::ResolvedTolerances& tol, double t0, double t1, int depth,
                   RayIntersections& out) {
  if (!rayIntersectsBox(ray, sub.boundingBox())) {
    return;
  }
  if (isApproximatelyLinear(sub, tol.epsLinearSq)) {
    if (auto hit = chordHit(ray, sub.startPoint(), sub.endPoint(), t0, t1)) {
      const double u = t1 > t0 ? (hit->t - t0) / (t1 - t0) : 0.5;
      polishChordHit(sub, ray, u, t0, t1, *hit);
      out.hits.push_back(*hit);
    }
    return;
  }
  if (depth >= tol.maxDepth) {
    throw GrazingRayError("ray intersection depth cap exceeded");
  }
  auto [left, right] = sub.bisect();
  ++out.counters.curveEvaluations;
  const double tm = 0.5 * (t0 + t1);
  bisectRecurse(left, ray, tol, t0, tm, depth + 1, out);
  bisectRecurse(right, ray, tol, tm, t1, depth + 1, out);
}

RayIntersections rayIntersectBisectResolved(const RationalBezierCurve& curve, const Ray& ray,
                                            const detail::ResolvedTolerances& tol) {
  RayIntersections out;
  bisectRecurse(curve, ray, tol, 0.0, 1.0, 0, out);
  finalizeHits(out.hits);
  return out;
}

/*!
 * Parameter range within [0, 1] where the convex hull of the Bernstein
 * coefficient graph { (i/n, e_i) } can cross zero, or nullopt when every
 * coefficient has the same strict sign. The extreme crossings lie on hull
 * edges, which are a subset of all point pairs, so the min/max over pairs is
 * exact.
 */
std::optional<std::pair<double, double>> hullZeroRange(std::span<const double> e) {
  const std::size_t n = e.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i] == 0.0) {
      const double x = static_cast<double>(i) / (n - 1);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      continue;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (e[i] * e[j] < 0.0) {
        const double xi = static_cast<double>(i) / (n - 1);
        const double xj = static_cast<double>(j) / (n - 1);
        const double x = xi + (xj - xi) * (e[i] / (e[i] - e[j]));
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
  }
  if (lo > hi) {
    return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

/// Clip the curve to the window [a, b] with 0 <= a < b <= 1, counting one
/// evaluation per de Casteljau split actually performed.
RationalBezierCurve clipToWindow(const RationalBezierCurve& sub, double a, double b,
                                 long& evaluations) {
  RationalBezierCurve current = sub;
  if (a > 0.0) {
    current = current.splitAt(a).second;
    ++evaluations;
    b = (b - a) / (1.0 - a);
  }
  if (b < 1.0) {
    current = current.splitAt(b).first;
    ++evaluations;
  }
  return current;
}

RayIntersections rayIntersectClipResolved(const RationalBezierCurve& curve, const Ray& ray,
                                          const detail::ResolvedTolerances& tol) {
  RayIntersections out;

  struct Window {
    RationalBezierCurve curve;
    double t0;
    double t1;
    int depth;
  };
  std::vector<Window> stack;
  stack.push_back({curve, 0.0, 1.0, 0});

  while (!stack.empty()) {
    Window w = std::move(stack.back());
    stack.pop_back();
    if (!rayIntersectsBox(ray, w.curve.boundingBox())) {
      continue;
    }
    if (isApproximatelyLinear(w.curve, tol.epsLinearSq)) {
      if (auto hit = chordHit(ray, w.curve.startPoint(), w.curve.endPoint(), w.t0, w.t1)) {
        const double u = w.t1 > w.t0 ? (hit->t - w.t0) / (w.t1 - w.t0) : 0.5;
        polishChordHit(w.curve, ray, u, w.t0, w.t1, *hit);
        out.hits.push_back(*hit);
      }
      continue;
    }
    if (w.depth >= tol.maxDepth) {
      throw GrazingRayError("clipping depth cap exceeded; clustered or tangential roots");
    }

    // Signed distances of the control points to the ray line in Bernstein
    // form: the numerator of the rational distance has coefficients
    // e_i = w_i * cross(direction, P_i - origin), and positive weights do
    // not disturb the sign pattern.
    const auto& pts = w.curve.controlPoints();
    const auto& wts = w.curve.weights();
    std::vector<double> e(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      e[i] = wts[i] * cross(ray.direction, pts[i] - ray.origin);
    }
    const auto range = hullZeroRange(e);
    if (!range) {
      continue;  // the infinite line misses the curve
    }
    // Widen slightly so roots cannot sit exactly on a clip boundary.
    const double width = range->second - range->first;
    const double margin = 0.05 * width + 1e-4;
    const double a = std::max(0.0, range->first - margin);
    const double b = std::min(1.0, range->second + margin);

    if (b - a > 0.8) {
      // Insufficient shrink; split at the midpoint instead.
      auto [left, right] = w.curve.bisect();
      ++out.counters.curveEvaluations;
      const double tm = 0.5 * (w.t0 + w.t1);
      stack.push_back({std::move(right), tm, w.t1, w.depth + 1});
      stack.push_back({std::move(left), w.t0, tm, w.depth + 1});
      continue;
    }

    RationalBezierCurve clipped = clipToWindow(w.curve, a, b, out.counters.curveEvaluations);
    const double g0 = w.t0 + a * (w.t1 - w.t0);
    const double g1 = w.t0 + b * (w.t1 - w.t0);
    stack.push_back({std::move(clipped), g0, g1, w.depth + 1});
  }

  finalizeHits(out.hits);
  return out;
}

}  // namespace

RayIntersections rayIntersectBisect(const RationalBezierCurve& curve, const Ray& ray,
                                    const ToleranceConfig& cfg) {
  const auto tol = detail::resolve(cfg, curve.boundingBox().diagonal());
  return rayIntersectBisectResolved(curve, ray, tol);
}

RayIntersections rayIntersectClip(const RationalBezierCurve& curve, const Ray& ray,
                                  const ToleranceConfig& cfg) {
  const auto tol = detail::resolve(cfg, curve.boundingBox().diagonal());
  return rayIntersectClipResolved(curve, ray, tol);
}

WindingResult generalizedWindingViaRayCast(const CurveShape& shape, Point2 q,
                                           RayCastMethod method, const ToleranceConfig& cfg) {
  if (shape.curves.empty()) {
    throw std::invalid_argument("shape has no curves");
  }
  const auto tol = detail::resolve(cfg, shape.boundingBox().diagonal());
  WindingResult total;
  for (const auto& curve : shape.curves) {
    const BoundingBox2 box = curve.boundingBox();
    if (box.diagonal() == 0.0) {
      continue;
    }
    const Segment closure = curve.linearClosure();
    const double wC = segmentWinding(closure, q, tol.epsCoincident);
    if (!box.contains(q)) {
      // Same zero-cost early exit as the adaptive algorithm.
      total.value += -wC;
      continue;
    }

    const Ray ray(q, detail::rayDirectionTowardNearestEdge(box, q));
    const RayIntersections crossings = method == RayCastMethod::Bisect
                                           ? rayIntersectBisectResolved(curve, ray, tol)
                                           : rayIntersectClipResolved(curve, ray, tol);

    long signedCount = 0;
    for (const RayHit& hit : crossings.hits) {
      if (hit.s > 0.0) {
        signedCount += hit.sign;
      }
    }
    if (!closure.isDegenerate()) {
      if (auto hit = chordHit(ray, closure.start, closure.end, 0.0, 1.0)) {
        if (hit->s > 0.0) {
          signedCount += hit->sign;
        }
      }
    }

    total.value += static_cast<double>(signedCount) - wC;
    total.bisections += crossings.counters.curveEvaluations;
  }
  return total;
}

double adaptiveQuadratureOracle(const RationalBezierCurve& curve, Point2 q, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  // tol applies to the winding value; the raw integral carries the 2*pi.
  return adaptivePanel(curve, q, 0.0, 1.0, 0.5 * tol * kTwoPi, 0) / kTwoPi;
}

Polyline linearizeUniform(const RationalBezierCurve& curve, int k) {
  if (k < 1) {
    throw std::invalid_argument("linearization needs at least one segment");
  }
  std::vector<Point2> vertices;
  vertices.reserve(k + 1);
  for (int i = 0; i <= k; ++i) {
    vertices.push_back(curve.evaluate(static_cast<double>(i) / k));
  }
  return Polyline(std::move(vertices));
}

}  // namespace gwn
