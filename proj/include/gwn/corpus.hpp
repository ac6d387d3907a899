#ifndef GWN_CORPUS_HPP_
#define GWN_CORPUS_HPP_

#include "gwn/curve.hpp"

namespace gwn {
namespace corpus {

/// Unit circle as n exact rational quadratic arcs, counterclockwise,
/// starting at (1, 0). Weights (1, cos(pi/n), 1) per arc.
CurveShape unitCircleArcs(int arcCount);

/// The canonical 4-arc unit circle.
CurveShape unitCircle4();

/// Single polynomial cubic used by the quadrature instability study. Gentle
/// curvature so high-order Gauss rules converge fast in the far field while
/// still failing near the curve.
RationalBezierCurve quadratureCubic();

/// quadratureCubic wrapped as a one-curve shape.
CurveShape quadratureCubicShape();

/*!
 * Watertight ring of S-shaped cubics around the unit circle. Every control
 * polygon zigzags across its chord, so no curve passes the simple-convex
 * test at depth 0 and any query inside a curve's bounding box costs at least
 * one bisection under every method. That makes the zero-evaluation bucket of
 * the cost benchmark depend only on the bounding-box gate.
 */
CurveShape wobbleRing(int curveCount = 52, double radius = 1.0, double sway = 0.14);

/*!
 * Closed wavy shape of a few long rational curves with strongly uneven
 * weights. The lopsided parametrization makes uniform-parameter
 * linearizations spatially uneven, so misclassifications persist at high
 * segment counts; built for the linearization study.
 */
CurveShape lopsidedBlob();

/// Watertight 8-arc unit circle; removing the leftmost arc (index
/// gappedRingRemovalIndex) opens a gap facing -x for the gap-locality study.
CurveShape gappedRing();
int gappedRingRemovalIndex();

/// Outline whose adjacent curves are all slightly separated: every joint of
/// an arc ring is pulled alternately in and out, so the shape has no
/// topological interior but reads as closed from a distance.
CurveShape gappedOutline(int arcCount = 12, double gapSize = 6e-3);

/// One closed self-intersecting rational quartic (a figure-eight-like loop);
/// the winding field takes values -1, 0 and 1.
CurveShape selfIntersectingQuartic();

}  // namespace corpus
}  // namespace gwn

#endif  // GWN_CORPUS_HPP_
