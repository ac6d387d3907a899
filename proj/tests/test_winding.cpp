#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gwn/baselines.hpp"
#include "gwn/corpus.hpp"
#include "gwn/errors.hpp"
#include "gwn/rng.hpp"
#include "gwn/winding.hpp"
#include "support.hpp"

using namespace gwn;
using testsupport::quarterCircleArc;
using testsupport::randomCurve;
using testsupport::randomOffCurvePoint;

namespace {

/// Mean of the two one-sided winding limits across the curve at an on-curve
/// point, probed along the normal at offset eps. Oracle for the
/// coincident-point convention.
double twoSidedMean(const RationalBezierCurve& curve, Point2 at, Vector2 tangent, double eps) {
  const double len = tangent.norm();
  const Vector2 normal{-tangent.dy / len, tangent.dx / len};
  const double a = windingNumberCurve(curve, at + eps * normal).value;
  const double b = windingNumberCurve(curve, at - eps * normal).value;
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("signedAngle basics") {
  CHECK(signedAngle({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(std::numbers::pi / 2));
  CHECK(signedAngle({0, 0}, {1, 0}, {2, 0}) == 0.0);
  CHECK(signedAngle({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-std::numbers::pi / 2));
  // Opposite collinear directions land on the +pi branch.
  CHECK(signedAngle({0, 0}, {1, 0}, {-2, 0}) == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(signedAngle({1, 0}, {1, 0}, {0, 1}), CoincidentPointError);
}

TEST_CASE("signedAngle is antisymmetric away from the branch cut") {
  CounterRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point2 q{rng.next(-1, 1), rng.next(-1, 1)};
    const Point2 a{rng.next(-1, 1), rng.next(-1, 1)};
    const Point2 b{rng.next(-1, 1), rng.next(-1, 1)};
    if (a == q || b == q) {
      continue;
    }
    const double ab = signedAngle(q, a, b);
    if (std::abs(std::abs(ab) - std::numbers::pi) < 1e-12) {
      continue;
    }
    CHECK(signedAngle(q, b, a) == doctest::Approx(-ab).epsilon(1e-12));
  }
}

TEST_CASE("segmentWinding subtends angles and honors the coincident convention") {
  // The segment spans a quarter turn as seen from the origin: 90/360.
  CHECK(segmentWinding({{1, 0}, {0, 1}}, {0, 0}) == doctest::Approx(0.25));
  CHECK(segmentWinding({{0, 1}, {1, 0}}, {0, 0}) == doctest::Approx(-0.25));
  // On-segment queries are exactly 0, the average across the jump.
  CHECK(segmentWinding({{0, 0}, {1, 0}}, {0.5, 0.0}) == 0.0);
  // Collinear but outside the span: zero angle, not a coincidence.
  CHECK(segmentWinding({{0, 0}, {1, 0}}, {2.0, 0.0}) == 0.0);
  // Degenerate closure.
  CHECK(segmentWinding({{1, 1}, {1, 1}}, {0, 0}) == 0.0);
}

TEST_CASE("polygonWindingNumber counts revolutions without trigonometry") {
  const Polygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(polygonWindingNumber(square, {0.5, 0.5}) == 1);
  CHECK(polygonWindingNumber(square, {2.0, 0.5}) == 0);
  const Polygon twice({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(polygonWindingNumber(twice, {0.5, 0.5}) == 2);
  const Polygon clockwise({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(polygonWindingNumber(clockwise, {0.5, 0.5}) == -1);
}

TEST_CASE("isApproximatelyLinear compares squared distances to the closure") {
  const RationalBezierCurve straight({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(isApproximatelyLinear(straight, 1e-30));

  // Quadratic with apex at distance d = 1 from its chord.
  const RationalBezierCurve bump({{0, 0}, {1, 2}, {2, 0}});
  const double d = 1.0;  // control point (1,2) sits at distance 2, apex at 1
  CHECK_FALSE(isApproximatelyLinear(bump, (d * d) / 4.0));
  CHECK_FALSE(isApproximatelyLinear(bump, 4.0 * d * d));  // node distance is 2, 4 == 2^2 not <
  CHECK(isApproximatelyLinear(bump, 4.0 * d * d + 1e-9));
}

TEST_CASE("isSimpleConvex transcribes the per-node side tests") {
  // Hand-applied side tests: arch cubic passes, crossing polygon fails.
  CHECK(isSimpleConvex(RationalBezierCurve({{0, 0}, {1, 2}, {2, 2}, {3, 0}})));
  CHECK_FALSE(isSimpleConvex(RationalBezierCurve({{0, 0}, {3, 1}, {0, 1}, {3, 0}})));
  // Degree 1 passes vacuously.
  CHECK(isSimpleConvex(RationalBezierCurve({{0, 0}, {1, 0}})));
  // Collinear interior nodes sit exactly on the test segment; still convex.
  CHECK(isSimpleConvex(RationalBezierCurve({{0, 0}, {1, 1}, {2, 2}, {3, 3}})));
  CHECK(isSimpleConvex(quarterCircleArc()));
}

TEST_CASE("convexEndpointWindingNumber matches the two-sided limit oracle") {
  const auto arc = quarterCircleArc();

  // Frozen oracle values: the mean of winding limits at (1 +- eps, 0) and at
  // (0, 1 -+ eps) both converge to +1/8 (the integral sweep from the
  // endpoint tangent to the far endpoint).
  const double atStart = convexEndpointWindingNumber(arc, {1.0, 0.0});
  CHECK(atStart == doctest::Approx(0.125).epsilon(1e-12));
  const double atEnd = convexEndpointWindingNumber(arc, {0.0, 1.0});
  CHECK(atEnd == doctest::Approx(0.125).epsilon(1e-12));

  // Confirm against the live limiting-average oracle.
  CHECK(twoSidedMean(arc, {1.0, 0.0}, arc.endpointTangent(CurveEnd::Start), 1e-6) ==
        doctest::Approx(atStart).epsilon(1e-4));
  CHECK(twoSidedMean(arc, {0.0, 1.0}, arc.endpointTangent(CurveEnd::End), 1e-6) ==
        doctest::Approx(atEnd).epsilon(1e-4));

  // Straight-line cubic: exactly 0 at a coincident endpoint.
  const RationalBezierCurve straight({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(convexEndpointWindingNumber(straight, {0.0, 0.0}) == 0.0);

  CHECK_THROWS_AS(convexEndpointWindingNumber(arc, {0.5, 0.5}), std::domain_error);
}

TEST_CASE("convexEndpoint convention agrees with limits on asymmetric curves") {
  const RationalBezierCurve cubic({{0, 0}, {0.4, 1.1}, {1.9, 1.4}, {3, 0.2}});
  REQUIRE(isSimpleConvex(cubic));
  const double diag = cubic.boundingBox().diagonal();
  for (CurveEnd end : {CurveEnd::Start, CurveEnd::End}) {
    const Point2 at = end == CurveEnd::Start ? cubic.startPoint() : cubic.endPoint();
    const double convention = convexEndpointWindingNumber(cubic, at);
    const double mean = twoSidedMean(cubic, at, cubic.endpointTangent(end), 1e-6 * diag);
    CHECK(convention == doctest::Approx(mean).epsilon(1e-3));
  }
}

TEST_CASE("integerWindingNumberCurve on the closed quarter-circle cap") {
  const auto arc = quarterCircleArc();
  // Inside the cap: x^2 + y^2 < 1 and x + y > 1.
  CHECK(integerWindingNumberCurve(arc, {0.7, 0.6}).value == doctest::Approx(1.0));
  CHECK(integerWindingNumberCurve(arc, {2.0, 2.0}).value == doctest::Approx(0.0));
  CHECK(integerWindingNumberCurve(arc.reversed(), {0.7, 0.6}).value == doctest::Approx(-1.0));

  // Analytic membership over a deterministic sample set.
  CounterRng rng(21);
  for (int i = 0; i < 300; ++i) {
    const Point2 q{rng.next(-0.2, 1.2), rng.next(-0.2, 1.2)};
    const double r2 = q.x * q.x + q.y * q.y;
    const double lineSide = q.x + q.y - 1.0;
    if (std::abs(r2 - 1.0) < 1e-3 || std::abs(lineSide) < 1e-3) {
      continue;  // stay clear of the boundary
    }
    const int expected = (r2 < 1.0 && lineSide > 0.0) ? 1 : 0;
    CHECK(integerWindingNumberCurve(arc, q).value == doctest::Approx(expected));
  }
}

TEST_CASE("windingNumberCurve far-field identity is bit exact") {
  CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto curve = randomCurve(rng);
    const BoundingBox2 box = curve.boundingBox();
    const Point2 q{box.max.x + rng.next(0.1, 3.0), box.min.y - rng.next(0.1, 3.0)};
    const WindingResult r = windingNumberCurve(curve, q);
    CHECK(r.bisections == 0);
    CHECK(r.value == -segmentWinding(curve.linearClosure(), q));
  }
}

TEST_CASE("windingNumberCurve quarter arc at the circle center") {
  const auto arc = quarterCircleArc();
  const WindingResult r = windingNumberCurve(arc, {0.0, 0.0});
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
  // Outside the bounding box: early exit value, zero bisections.
  const WindingResult far = windingNumberCurve(arc, {10.0, 0.0});
  CHECK(far.bisections == 0);
  CHECK(far.value == -segmentWinding(arc.linearClosure(), {10.0, 0.0}));
}

TEST_CASE("closure integrality holds for random curves and points") {
  CounterRng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto curve = randomCurve(rng);
    const double diag = curve.boundingBox().diagonal();
    const Point2 q = randomOffCurvePoint(rng, curve, 1e-9 * diag);
    const double w = windingNumberCurve(curve, q).value;
    const double closed = w + segmentWinding(curve.linearClosure(), q);
    CHECK(std::abs(closed - std::round(closed)) < 1e-10);
  }
}

TEST_CASE("bisection additivity of the generalized winding number") {
  CounterRng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const auto curve = randomCurve(rng);
    const double diag = curve.boundingBox().diagonal();
    const Point2 q = randomOffCurvePoint(rng, curve, 1e-6 * diag);
    const auto [left, right] = curve.bisect();
    const double whole = windingNumberCurve(curve, q).value;
    const double parts = windingNumberCurve(left, q).value + windingNumberCurve(right, q).value;
    CHECK(whole == doctest::Approx(parts).epsilon(1e-10));
  }
}

TEST_CASE("orientation antisymmetry and translation invariance") {
  CounterRng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto curve = randomCurve(rng);
    const double diag = curve.boundingBox().diagonal();
    const Point2 q = randomOffCurvePoint(rng, curve, 1e-6 * diag);
    const double w = windingNumberCurve(curve, q).value;
    CHECK(windingNumberCurve(curve.reversed(), q).value == doctest::Approx(-w).epsilon(1e-12));

    const Vector2 shift{rng.next(-10, 10), rng.next(-10, 10)};
    std::vector<Point2> moved;
    for (const Point2& p : curve.controlPoints()) {
      moved.push_back(p + shift);
    }
    const RationalBezierCurve translated(std::move(moved), curve.weights());
    CHECK(windingNumberCurve(translated, q + shift).value == doctest::Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("representation invariance under elevation and weight scaling") {
  CounterRng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const auto curve = randomCurve(rng);
    const double diag = curve.boundingBox().diagonal();
    const Point2 q = randomOffCurvePoint(rng, curve, 1e-6 * diag);
    const double w = windingNumberCurve(curve, q).value;

    auto lifted = curve;
    for (int lift = 0; lift < 3; ++lift) {
      lifted = lifted.degreeElevated();
      CHECK(windingNumberCurve(lifted, q).value == doctest::Approx(w).epsilon(1e-12));
    }

    const double scale = rng.next(0.1, 10.0);
    std::vector<double> scaled;
    for (double weight : curve.weights()) {
      scaled.push_back(scale * weight);
    }
    const RationalBezierCurve reweighted(curve.controlPoints(), std::move(scaled));
    CHECK(windingNumberCurve(reweighted, q).value == doctest::Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("winding agrees with the adaptive quadrature oracle") {
  CounterRng rng(81);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto curve = randomCurve(rng);
    const double diag = curve.boundingBox().diagonal();
    const Point2 q = randomOffCurvePoint(rng, curve, 1e-3 * diag);
    const double w = windingNumberCurve(curve, q).value;
    const double oracle = adaptiveQuadratureOracle(curve, q, 1e-10);
    CHECK(std::abs(w - oracle) <= 1e-8);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("shapeWindingNumber sums per-curve contributions") {
  const CurveShape circle = corpus::unitCircle4();
  CHECK(shapeWindingNumber(circle, {0.0, 0.0}).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(shapeWindingNumber(circle, {3.0, 0.0}).value == doctest::Approx(0.0).epsilon(1e-12));

  CurveShape openCircle = circle;
  openCircle.curves.pop_back();
  CHECK(shapeWindingNumber(openCircle, {0.0, 0.0}).value ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("watertight shapes produce integer windings matching a fine linearization") {
  CounterRng rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    const CurveShape shape = testsupport::randomClosedShape(rng);
    const BoundingBox2 box = shape.boundingBox();
    for (int i = 0; i < 8; ++i) {
      const Point2 q{rng.next(box.min.x - 0.3, box.max.x + 0.3),
                     rng.next(box.min.y - 0.3, box.max.y + 0.3)};
      if (distanceToShapeSampled(shape, q, 512) < 1e-4 * box.diagonal()) {
        continue;
      }
      const double w = shapeWindingNumber(shape, q).value;
      CHECK(std::abs(w - std::round(w)) < 1e-10);

      std::vector<Point2> vertices;
      for (const auto& curve : shape.curves) {
        const auto poly = linearizeUniform(curve, 4096).vertices();
        vertices.insert(vertices.end(), poly.begin(), poly.end() - 1);
      }
      const int reference = detail::crossingWindingNumber(vertices, q);
      CHECK(std::lround(w) == reference);
    }
  }
}

TEST_CASE("coincident convention: on-segment points give exactly zero") {
  const RationalBezierCurve segment({{0.0, 0.0}, {2.0, 0.0}});
  CHECK(windingNumberCurve(segment, {0.5, 0.0}).value == 0.0);
  CHECK(windingNumberCurve(segment, {0.0, 0.0}).value == 0.0);
  CHECK(windingNumberCurve(segment, {2.0, 0.0}).value == 0.0);
  CHECK(windingNumberCurve(segment, {0.5, 0.0}).coincident);
  // Collinear but off the segment: regular zero, no convention.
  const WindingResult off = windingNumberCurve(segment, {3.0, 0.0});
  CHECK(off.value == 0.0);
  CHECK_FALSE(off.coincident);
}

TEST_CASE("coincident convention at curve endpoints flows through the full query") {
  const auto arc = quarterCircleArc();
  const WindingResult atStart = windingNumberCurve(arc, {1.0, 0.0});
  CHECK(atStart.coincident);
  CHECK(atStart.value == doctest::Approx(0.125).epsilon(1e-12));

  // Dyadic interior point: after one bisection the query is an endpoint of
  // both halves, and the convention value matches the two-sided mean.
  const Point2 mid = arc.evaluate(0.5);
  const WindingResult atMid = windingNumberCurve(arc, mid);
  CHECK(atMid.coincident);
  const auto [p, tangent] = arc.evaluateWithDerivative(0.5);
  CHECK(atMid.value == doctest::Approx(twoSidedMean(arc, mid, tangent, 1e-6)).epsilon(1e-3));
}

TEST_CASE("watertight boundary points average to a half integer") {
  const CurveShape circle = corpus::unitCircle4();
  // (1, 0) is a joint of two arcs; the shape-level sum of the per-curve
  // conventions is the boundary average 1/2.
  const WindingResult r = shapeWindingNumber(circle, {1.0, 0.0});
  CHECK(r.coincident);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("depth cap signals or snaps by policy") {
  const auto arc = quarterCircleArc();
  ToleranceConfig tight;
  tight.epsLinear = 1e-300;  // force endless bisection
  tight.maxDepth = 6;
  const Point2 onCurve = arc.evaluate(0.3);  // non-dyadic
  CHECK_THROWS_AS(windingNumberCurve(arc, onCurve, tight), DegenerateQueryError);
  const WindingResult snapped =
      windingNumberCurve(arc, onCurve, tight, DepthCapPolicy::SnapToEndpoint);
  CHECK(snapped.coincident);
  CHECK(std::isfinite(snapped.value));
}

TEST_CASE("classify rounds and applies fill rules") {
  const CurveShape circle = corpus::unitCircle4();
  const Classification inside = classify(circle, {0.25, 0.1});
  CHECK(inside.inside);
  CHECK(inside.rounded == 1);
  CHECK(inside.confidenceGap < 1e-12);

  const Classification outside = classify(circle, {2.0, 0.0});
  CHECK_FALSE(outside.inside);
  CHECK(outside.rounded == 0);

  CurveShape gapped = circle;
  gapped.curves.pop_back();
  const Classification nearGap = classify(gapped, {0.0, 0.0});
  CHECK(nearGap.winding == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(nearGap.rounded == 1);
  CHECK(nearGap.inside);
  CHECK(nearGap.confidenceGap == doctest::Approx(0.25).epsilon(1e-9));

  // Even-odd rule: winding 2 counts as outside.
  CurveShape doubled = circle;
  for (const auto& curve : circle.curves) {
    doubled.curves.push_back(curve);
  }
  const Classification evenOdd = classify(doubled, {0.0, 0.0}, ClassificationRule::EvenOdd);
  CHECK(evenOdd.rounded == 2);
  CHECK_FALSE(evenOdd.inside);
  const Classification nonzero = classify(doubled, {0.0, 0.0}, ClassificationRule::Nonzero);
  CHECK(nonzero.inside);
}
