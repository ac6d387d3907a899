#include "gwn/curve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gwn {

namespace {

struct Homogeneous {
  double wx;
  double wy;
  double w;
};

Homogeneous lerp(const Homogeneous& a, const Homogeneous& b, double t) {
  const double s = 1.0 - t;
  return {s * a.wx + t * b.wx, s * a.wy + t * b.wy, s * a.w + t * b.w};
}

std::vector<Homogeneous> toHomogeneous(const std::vector<Point2>& pts,
                                       const std::vector<double>& wts) {
  std::vector<Homogeneous> h(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    h[i] = {wts[i] * pts[i].x, wts[i] * pts[i].y, wts[i]};
  }
  return h;
}

void validate(const std::vector<Point2>& pts, const std::vector<double>& wts) {
  if (pts.size() < 2) {
    throw std::invalid_argument("curve requires at least two control points");
  }
  if (pts.size() != wts.size()) {
    throw std::invalid_argument("control point and weight counts differ");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
      throw std::invalid_argument("control point " + std::to_string(i) + " is not finite");
    }
    if (!(wts[i] > 0.0) || !std::isfinite(wts[i])) {
      throw std::invalid_argument("weight " + std::to_string(i) + " must be positive");
    }
  }
}

}  // namespace

RationalBezierCurve::RationalBezierCurve(std::vector<Point2> controlPoints)
    : RationalBezierCurve(std::move(controlPoints), {}) {}

RationalBezierCurve::RationalBezierCurve(std::vector<Point2> controlPoints,
                                         std::vector<double> weights)
    : points_(std::move(controlPoints)), weights_(std::move(weights)) {
  if (weights_.empty()) {
    weights_.assign(points_.size(), 1.0);
  }
  validate(points_, weights_);
}

bool RationalBezierCurve::isPolynomial() const {
  for (double w : weights_) {
    if (w != 1.0) {
      return false;
    }
  }
  return true;
}

Point2 RationalBezierCurve::evaluate(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("curve parameter outside [0, 1]");
  }
  // Endpoints are interpolated exactly; dividing w*P by w is not a no-op in
  // floating point.
  if (t == 0.0) {
    return points_.front();
  }
  if (t == 1.0) {
    return points_.back();
  }
  std::vector<Homogeneous> h = toHomogeneous(points_, weights_);
  for (std::size_t level = h.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      h[i] = lerp(h[i], h[i + 1], t);
    }
  }
  return {h[0].wx / h[0].w, h[0].wy / h[0].w};
}

std::pair<Point2, Vector2> RationalBezierCurve::evaluateWithDerivative(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("curve parameter outside [0, 1]");
  }
  const int n = degree();
  std::vector<Homogeneous> h = toHomogeneous(points_, weights_);
  // Reduce to the last two de Casteljau points: the value is their lerp and
  // the homogeneous derivative is n times their difference.
  for (std::size_t level = h.size() - 1; level > 1; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      h[i] = lerp(h[i], h[i + 1], t);
    }
  }
  const Homogeneous a = h[0];
  const Homogeneous b = h[1];
  const Homogeneous v = lerp(a, b, t);
  const double dwx = n * (b.wx - a.wx);
  const double dwy = n * (b.wy - a.wy);
  const double dw = n * (b.w - a.w);
  const Point2 p{v.wx / v.w, v.wy / v.w};
  // Quotient rule for (wx/w, wy/w).
  const Vector2 d{(dwx * v.w - v.wx * dw) / (v.w * v.w), (dwy * v.w - v.wy * dw) / (v.w * v.w)};
  return {p, d};
}

std::pair<RationalBezierCurve, RationalBezierCurve> RationalBezierCurve::splitAt(double t) const {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("split parameter must lie strictly inside (0, 1)");
  }
  const std::size_t count = points_.size();
  std::vector<Homogeneous> h = toHomogeneous(points_, weights_);
  std::vector<Homogeneous> left(count);
  std::vector<Homogeneous> right(count);
  left[0] = h[0];
  right[count - 1] = h[count - 1];
  for (std::size_t level = count - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      h[i] = lerp(h[i], h[i + 1], t);
    }
    left[count - level] = h[0];
    right[level - 1] = h[level - 1];
  }

  auto toCurve = [](const std::vector<Homogeneous>& hs) {
    std::vector<Point2> pts(hs.size());
    std::vector<double> wts(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      pts[i] = {hs[i].wx / hs[i].w, hs[i].wy / hs[i].w};
      wts[i] = hs[i].w;
    }
    return RationalBezierCurve(std::move(pts), std::move(wts));
  };
  return {toCurve(left), toCurve(right)};
}

Vector2 RationalBezierCurve::endpointTangent(CurveEnd end) const {
  const std::size_t count = points_.size();
  if (end == CurveEnd::Start) {
    const Point2 p0 = points_.front();
    for (std::size_t i = 1; i < count; ++i) {
      if (points_[i] != p0) {
        return points_[i] - p0;
      }
    }
  } else {
    const Point2 pn = points_.back();
    for (std::size_t i = count - 1; i-- > 0;) {
      if (points_[i] != pn) {
        return pn - points_[i];
      }
    }
  }
  throw std::domain_error("degenerate tangent: all control points coincide");
}

RationalBezierCurve RationalBezierCurve::reversed() const {
  std::vector<Point2> pts(points_.rbegin(), points_.rend());
  std::vector<double> wts(weights_.rbegin(), weights_.rend());
  return RationalBezierCurve(std::move(pts), std::move(wts));
}

RationalBezierCurve RationalBezierCurve::degreeElevated() const {
  const std::size_t n = points_.size() - 1;
  const std::vector<Homogeneous> h = toHomogeneous(points_, weights_);
  std::vector<Homogeneous> elevated(n + 2);
  elevated[0] = h[0];
  elevated[n + 1] = h[n];
  for (std::size_t i = 1; i <= n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(n + 1);
    elevated[i] = lerp(h[i], h[i - 1], a);
  }
  std::vector<Point2> pts(elevated.size());
  std::vector<double> wts(elevated.size());
  for (std::size_t i = 0; i < elevated.size(); ++i) {
    pts[i] = {elevated[i].wx / elevated[i].w, elevated[i].wy / elevated[i].w};
    wts[i] = elevated[i].w;
  }
  return RationalBezierCurve(std::move(pts), std::move(wts));
}

BoundingBox2 CurveShape::boundingBox() const {
  if (curves.empty()) {
    throw std::invalid_argument("bounding box of empty shape");
  }
  BoundingBox2 box = curves.front().boundingBox();
  for (std::size_t i = 1; i < curves.size(); ++i) {
    box.expandToInclude(curves[i].boundingBox());
  }
  return box;
}

double distanceToCurveSampled(const RationalBezierCurve& curve, Point2 q, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    best = std::min(best, distance(curve.evaluate(t), q));
  }
  return best;
}

double distanceToShapeSampled(const CurveShape& shape, Point2 q, int samplesPerCurve) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& curve : shape.curves) {
    best = std::min(best, distanceToCurveSampled(curve, q, samplesPerCurve));
  }
  return best;
}

}  // namespace gwn
