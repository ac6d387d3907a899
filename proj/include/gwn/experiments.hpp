#ifndef GWN_EXPERIMENTS_HPP_
#define GWN_EXPERIMENTS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gwn/baselines.hpp"
#include "gwn/io.hpp"
#include "gwn/winding.hpp"

namespace gwn {

/// Winding field plus a sidecar mask of pixels where the coincident-point
/// convention (including depth-cap snapping) was applied.
struct RenderResult {
  FieldGrid field;
  std::vector<std::uint8_t> coincidentMask;  ///< same layout as field.values
};

/// Generalized winding number of the shape at every pixel center. Pixels
/// that hit the bisection depth cap are snapped to the endpoint convention
/// and flagged in the mask rather than failing the render.
RenderResult renderField(const CurveShape& shape, const BoundingBox2& window, int width,
                         int height, const ToleranceConfig& cfg = {});

/// |winding - round(winding)| of a rendered field; the uncertainty map.
FieldGrid gapField(const FieldGrid& winding);

enum class BenchMethod { Proposed, RayBisect, RayClip };
std::string benchMethodLabel(BenchMethod method);

/*!
 * Histogram of per-query curve-evaluation counts for one method. Buckets
 * 0..cap count queries needing exactly that many evaluations; overflow
 * counts the rest. The bucket sum (including overflow) equals samples.
 * Queries aborted by a grazing-ray signal are excluded from the buckets and
 * counted separately.
 */
struct EvalHistogram {
  std::string method;
  std::vector<long> buckets;
  long overflow = 0;
  long samples = 0;
  long excluded = 0;

  long maxNonzeroBucket() const;
  double meanNonzero() const;  ///< mean evaluation count over queries with count > 0
};

/*!
 * Cost benchmark: draw sampleCount points uniformly from the shape's
 * bounding box with the counter-based generator and evaluate the shape
 * winding number with each method on the identical sample list, recording
 * per-query evaluation counts. The zero bucket is retained in the data (it
 * is conventionally omitted only in presentation).
 */
std::vector<EvalHistogram> evalCountBenchmark(const CurveShape& shape, int sampleCount,
                                              std::uint64_t seed,
                                              std::span<const BenchMethod> methods,
                                              int bucketCap = 64,
                                              const ToleranceConfig& cfg = {});

struct MisclassRow {
  int segments = 0;
  long misclassified = 0;
  long samples = 0;
};

/// Linearization misclassification study result. Samples within the
/// coincidence tolerance of a curve are excluded everywhere (classification
/// there is convention, not geometry) and reported.
struct MisclassReport {
  std::string reference;  ///< label of the exact method used as ground truth
  std::vector<MisclassRow> rows;
  long excluded = 0;
};

/*!
 * For each k in kList, replace every curve by its k-segment uniform
 * linearization (closed per curve with the same closure convention), count
 * how many of the seeded samples change classification against the exact
 * method, and report the counts.
 */
MisclassReport misclassificationStudy(const CurveShape& shape, std::span<const int> kList,
                                      int sampleCount, std::uint64_t seed,
                                      ClassificationRule rule = ClassificationRule::Nonzero,
                                      const ToleranceConfig& cfg = {});

struct QuadratureErrorGrid {
  int nodeCount = 0;
  FieldGrid error;  ///< |quadratureWinding - windingNumberCurve| per pixel
};

/// Absolute quadrature error fields for each node count over the window.
std::vector<QuadratureErrorGrid> quadratureErrorStudy(const RationalBezierCurve& curve,
                                                      const BoundingBox2& window, int width,
                                                      int height,
                                                      std::span<const int> nodeCounts,
                                                      const ToleranceConfig& cfg = {});

/*!
 * Gap locality study: remove one curve from a watertight shape and classify
 * seeded samples with (a) single-ray crossing parity, ray toward +x, and
 * (b) rounded generalized winding, against ground truth from the intact
 * shape. Reports each method's misclassified points and how far they stray
 * from the removed curve's bounding box, plus the winding field of the
 * gapped shape over the window.
 */
struct GapLocalityReport {
  struct MethodReport {
    std::string method;
    std::vector<Point2> misclassified;
    double maxDistanceToRemovedBox = 0.0;
  };

  MethodReport rayParity;
  MethodReport roundedWinding;
  BoundingBox2 removedCurveBox;
  double removedBoxDiagonal = 0.0;
  long samples = 0;
  long excluded = 0;
  FieldGrid field;  ///< winding field of the gapped shape
};

GapLocalityReport gapLocalityStudy(const CurveShape& shape, int removedCurveIndex,
                                   const BoundingBox2& window, int width, int height,
                                   int sampleCount, std::uint64_t seed,
                                   const ToleranceConfig& cfg = {});

/*!
 * Orientation reversal study: render the winding field with one curve
 * reversed and mark every pixel whose nonzero-rule classification flips
 * against the unmodified shape.
 */
struct OrientationReversalResult {
  FieldGrid field;                          ///< field of the reversed shape
  std::vector<std::uint8_t> flipMask;       ///< 1 where classification flips
  long flippedPixels = 0;
};

OrientationReversalResult orientationReversalStudy(const CurveShape& shape,
                                                   int reversedCurveIndex,
                                                   const BoundingBox2& window, int width,
                                                   int height, const ToleranceConfig& cfg = {});

/// CSV "method,bucket,count"; the overflow bucket is labeled "overflow".
std::string writeHistogramCSV(std::span<const EvalHistogram> histograms);

/// CSV "k,misclassified,samples".
std::string writeMisclassCSV(const MisclassReport& report);

}  // namespace gwn

#endif  // GWN_EXPERIMENTS_HPP_
