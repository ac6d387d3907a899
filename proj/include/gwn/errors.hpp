#ifndef GWN_ERRORS_HPP_
#define GWN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gwn {

/// Query point coincides with geometry where an angle is undefined.
class CoincidentPointError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Adaptive subdivision hit its depth cap; the query is degenerate (the point
/// lies on, or numerically indistinguishable from, the curve interior).
class DegenerateQueryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A cast ray grazes the curve tangentially; intersections are ill-defined.
class GrazingRayError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature failed to converge; the query is too close to the
/// curve for the integral oracle to apply.
class QuadratureConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Carries a 1-based line number when the position
/// is known, and 0 otherwise.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace gwn

#endif  // GWN_ERRORS_HPP_
