#include "gwn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gwn/errors.hpp"
#include "gwn/rng.hpp"

namespace gwn {

namespace {

long roundHalfAwayFromZero(double v) { return std::lround(v); }

bool insideByRule(long rounded, ClassificationRule rule) {
  return rule == ClassificationRule::Nonzero ? rounded != 0 : (rounded % 2 != 0);
}

}  // namespace

RenderResult renderField(const CurveShape& shape, const BoundingBox2& window, int width,
                         int height, const ToleranceConfig& cfg) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("field dimensions must be positive");
  }
  RenderResult out;
  out.field.window = window;
  out.field.width = width;
  out.field.height = height;
  out.field.values.resize(static_cast<std::size_t>(width) * height);
  out.coincidentMask.assign(out.field.values.size(), 0);
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      const Point2 q = out.field.pixelCenter(row, col);
      // Depth-capped pixels take the snapped convention value and are
      // flagged instead of aborting the render.
      const WindingResult r = shapeWindingNumber(shape, q, cfg, DepthCapPolicy::SnapToEndpoint);
      out.field.at(row, col) = r.value;
      if (r.coincident) {
        out.coincidentMask[static_cast<std::size_t>(row) * width + col] = 1;
      }
    }
  }
  return out;
}

FieldGrid gapField(const FieldGrid& winding) {
  FieldGrid gap = winding;
  for (double& v : gap.values) {
    v = std::abs(v - static_cast<double>(std::lround(v)));
  }
  return gap;
}

std::string benchMethodLabel(BenchMethod method) {
  switch (method) {
    case BenchMethod::Proposed:
      return "proposed";
    case BenchMethod::RayBisect:
      return "bisect";
    case BenchMethod::RayClip:
      return "clip";
  }
  return "unknown";
}

long EvalHistogram::maxNonzeroBucket() const {
  long maxBucket = overflow > 0 ? static_cast<long>(buckets.size()) : 0;
  for (std::size_t b = buckets.size(); b-- > 1;) {
    if (buckets[b] > 0) {
      maxBucket = std::max(maxBucket, static_cast<long>(b));
      break;
    }
  }
  return maxBucket;
}

double EvalHistogram::meanNonzero() const {
  double weighted = 0.0;
  long count = 0;
  for (std::size_t b = 1; b < buckets.size(); ++b) {
    weighted += static_cast<double>(b) * buckets[b];
    count += buckets[b];
  }
  // Overflow entries contribute at least the cap; they are counted at it.
  weighted += static_cast<double>(buckets.size()) * overflow;
  count += overflow;
  return count > 0 ? weighted / count : 0.0;
}

std::vector<EvalHistogram> evalCountBenchmark(const CurveShape& shape, int sampleCount,
                                              std::uint64_t seed,
                                              std::span<const BenchMethod> methods, int bucketCap,
                                              const ToleranceConfig& cfg) {
  if (sampleCount < 1 || bucketCap < 1) {
    throw std::invalid_argument("sample count and bucket cap must be positive");
  }
  const BoundingBox2 box = shape.boundingBox();
  const CounterRng rng(seed);

  std::vector<EvalHistogram> histograms;
  histograms.reserve(methods.size());
  for (BenchMethod method : methods) {
    EvalHistogram h;
    h.method = benchMethodLabel(method);
    h.buckets.assign(static_cast<std::size_t>(bucketCap) + 1, 0);
    for (int i = 0; i < sampleCount; ++i) {
      const Point2 q = rng.pointInBox(box, static_cast<std::uint64_t>(i));
      long evals = 0;
      try {
        switch (method) {
          case BenchMethod::Proposed:
            evals = shapeWindingNumber(shape, q, cfg).bisections;
            break;
          case BenchMethod::RayBisect:
            evals = generalizedWindingViaRayCast(shape, q, RayCastMethod::Bisect, cfg).bisections;
            break;
          case BenchMethod::RayClip:
            evals = generalizedWindingViaRayCast(shape, q, RayCastMethod::Clip, cfg).bisections;
            break;
        }
      } catch (const GrazingRayError&) {
        ++h.excluded;
        continue;
      } catch (const DegenerateQueryError&) {
        ++h.excluded;
        continue;
      }
      if (evals <= bucketCap) {
        ++h.buckets[static_cast<std::size_t>(evals)];
      } else {
        ++h.overflow;
      }
      ++h.samples;
    }
    histograms.push_back(std::move(h));
  }
  return histograms;
}

MisclassReport misclassificationStudy(const CurveShape& shape, std::span<const int> kList,
                                      int sampleCount, std::uint64_t seed,
                                      ClassificationRule rule, const ToleranceConfig& cfg) {
  if (sampleCount < 1) {
    throw std::invalid_argument("sample count must be positive");
  }
  const BoundingBox2 box = shape.boundingBox();
  const CounterRng rng(seed);
  const auto tol = detail::resolve(cfg, box.diagonal());

  // Ground truth and near-boundary exclusion for the identical sample list.
  struct Sample {
    Point2 q;
    bool inside;
  };
  std::vector<Sample> samples;
  samples.reserve(sampleCount);
  long excluded = 0;
  for (int i = 0; i < sampleCount; ++i) {
    const Point2 q = rng.pointInBox(box, static_cast<std::uint64_t>(i));
    if (distanceToShapeSampled(shape, q, 64) <= tol.epsCoincident) {
      ++excluded;  // classification there is convention, not geometry
      continue;
    }
    const Classification truth = classify(shape, q, rule, cfg);
    samples.push_back({q, truth.inside});
  }

  MisclassReport report;
  report.reference = "generalized-winding";
  report.excluded = excluded;
  for (int k : kList) {
    // Per-curve uniform linearizations, closed by the same closure.
    std::vector<std::vector<Point2>> polylines;
    polylines.reserve(shape.curves.size());
    std::vector<BoundingBox2> polyBoxes;
    for (const auto& curve : shape.curves) {
      polylines.push_back(linearizeUniform(curve, k).vertices());
      polyBoxes.push_back(BoundingBox2::ofPoints(polylines.back()));
    }

    long misclassified = 0;
    for (const Sample& s : samples) {
      double winding = 0.0;
      for (std::size_t c = 0; c < polylines.size(); ++c) {
        const auto& verts = polylines[c];
        const Segment closure{verts.back(), verts.front()};
        const double wC = segmentWinding(closure, s.q, tol.epsCoincident);
        if (!polyBoxes[c].contains(s.q)) {
          winding += -wC;  // closed polygon winds zero outside its box
          continue;
        }
        winding += static_cast<double>(detail::crossingWindingNumber(verts, s.q)) - wC;
      }
      const bool inside = insideByRule(roundHalfAwayFromZero(winding), rule);
      if (inside != s.inside) {
        ++misclassified;
      }
    }
    report.rows.push_back({k, misclassified, static_cast<long>(samples.size())});
  }
  return report;
}

std::vector<QuadratureErrorGrid> quadratureErrorStudy(const RationalBezierCurve& curve,
                                                      const BoundingBox2& window, int width,
                                                      int height,
                                                      std::span<const int> nodeCounts,
                                                      const ToleranceConfig& cfg) {
  std::vector<QuadratureErrorGrid> out;
  out.reserve(nodeCounts.size());

  FieldGrid reference;
  reference.window = window;
  reference.width = width;
  reference.height = height;
  reference.values.resize(static_cast<std::size_t>(width) * height);
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      const Point2 q = reference.pixelCenter(row, col);
      reference.at(row, col) =
          windingNumberCurve(curve, q, cfg, DepthCapPolicy::SnapToEndpoint).value;
    }
  }

  for (int nodes : nodeCounts) {
    QuadratureErrorGrid grid;
    grid.nodeCount = nodes;
    grid.error = reference;
    for (int row = 0; row < height; ++row) {
      for (int col = 0; col < width; ++col) {
        const Point2 q = grid.error.pixelCenter(row, col);
        grid.error.at(row, col) =
            std::abs(quadratureWinding(curve, q, nodes) - reference.at(row, col));
      }
    }
    out.push_back(std::move(grid));
  }
  return out;
}

GapLocalityReport gapLocalityStudy(const CurveShape& shape, int removedCurveIndex,
                                   const BoundingBox2& window, int width, int height,
                                   int sampleCount, std::uint64_t seed,
                                   const ToleranceConfig& cfg) {
  if (removedCurveIndex < 0 || removedCurveIndex >= static_cast<int>(shape.curves.size())) {
    throw std::invalid_argument("removed curve index out of range");
  }
  CurveShape gapped;
  gapped.name = shape.name + "-gapped";
  for (int i = 0; i < static_cast<int>(shape.curves.size()); ++i) {
    if (i != removedCurveIndex) {
      gapped.curves.push_back(shape.curves[i]);
    }
  }

  GapLocalityReport report;
  report.removedCurveBox = shape.curves[removedCurveIndex].boundingBox();
  report.removedBoxDiagonal = report.removedCurveBox.diagonal();
  report.rayParity.method = "ray-parity";
  report.roundedWinding.method = "rounded-winding";

  const auto tol = detail::resolve(cfg, shape.boundingBox().diagonal());
  const CounterRng rng(seed);
  const Vector2 rayDir{1.0, 0.0};

  for (int i = 0; i < sampleCount; ++i) {
    const Point2 q = rng.pointInBox(window, static_cast<std::uint64_t>(i));
    if (distanceToShapeSampled(gapped, q, 64) <= tol.epsCoincident) {
      ++report.excluded;
      continue;
    }
    ++report.samples;
    const bool truth = classify(shape, q, ClassificationRule::Nonzero, cfg).inside;

    // (a) single ray toward +x, crossing parity over the gapped shape
    bool parityInside = false;
    try {
      long crossings = 0;
      const Ray ray(q, rayDir);
      for (const auto& curve : gapped.curves) {
        for (const RayHit& hit : rayIntersectBisect(curve, ray, cfg).hits) {
          if (hit.s > 0.0) {
            ++crossings;
          }
        }
      }
      parityInside = (crossings % 2) != 0;
    } catch (const GrazingRayError&) {
      ++report.excluded;
      --report.samples;
      continue;
    }

    // (b) rounded generalized winding of the gapped shape
    const bool windingInside =
        classify(gapped, q, ClassificationRule::Nonzero, cfg).inside;

    if (parityInside != truth) {
      report.rayParity.misclassified.push_back(q);
      report.rayParity.maxDistanceToRemovedBox =
          std::max(report.rayParity.maxDistanceToRemovedBox,
                   report.removedCurveBox.exteriorDistance(q));
    }
    if (windingInside != truth) {
      report.roundedWinding.misclassified.push_back(q);
      report.roundedWinding.maxDistanceToRemovedBox =
          std::max(report.roundedWinding.maxDistanceToRemovedBox,
                   report.removedCurveBox.exteriorDistance(q));
    }
  }

  report.field = renderField(gapped, window, width, height, cfg).field;
  return report;
}

OrientationReversalResult orientationReversalStudy(const CurveShape& shape,
                                                   int reversedCurveIndex,
                                                   const BoundingBox2& window, int width,
                                                   int height, const ToleranceConfig& cfg) {
  if (reversedCurveIndex < 0 || reversedCurveIndex >= static_cast<int>(shape.curves.size())) {
    throw std::invalid_argument("reversed curve index out of range");
  }
  CurveShape reversed = shape;
  reversed.curves[reversedCurveIndex] = shape.curves[reversedCurveIndex].reversed();

  const FieldGrid original = renderField(shape, window, width, height, cfg).field;
  OrientationReversalResult out;
  out.field = renderField(reversed, window, width, height, cfg).field;
  out.flipMask.assign(out.field.values.size(), 0);
  for (std::size_t i = 0; i < out.field.values.size(); ++i) {
    const bool insideBefore = std::lround(original.values[i]) != 0;
    const bool insideAfter = std::lround(out.field.values[i]) != 0;
    if (insideBefore != insideAfter) {
      out.flipMask[i] = 1;
      ++out.flippedPixels;
    }
  }
  return out;
}

std::string writeHistogramCSV(std::span<const EvalHistogram> histograms) {
  std::ostringstream out;
  out << "method,bucket,count\n";
  for (const auto& h : histograms) {
    for (std::size_t b = 0; b < h.buckets.size(); ++b) {
      out << h.method << ',' << b << ',' << h.buckets[b] << '\n';
    }
    out << h.method << ",overflow," << h.overflow << '\n';
  }
  return out.str();
}

std::string writeMisclassCSV(const MisclassReport& report) {
  std::ostringstream out;
  out << "k,misclassified,samples\n";
  for (const auto& row : report.rows) {
    out << row.segments << ',' << row.misclassified << ',' << row.samples << '\n';
  }
  return out.str();
}

}  // namespace gwn
