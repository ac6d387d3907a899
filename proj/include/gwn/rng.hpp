#ifndef GWN_RNG_HPP_
#define GWN_RNG_HPP_

#include <cstdint>

#include "gwn/geometry.hpp"

namespace gwn {

/*!
 * Counter-based deterministic random generator used by every sampling
 * experiment, so that a (seed, counter) pair maps to the same value on every
 * platform.
 *
 * The generator is SplitMix64 evaluated at an explicit counter:
 *
 *   state  = seed + (counter + 1) * 0x9E3779B97F4A7C15
 *   z      = state
 *   z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z      = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   output = z ^ (z >> 31)
 *
 * Doubles in [0, 1) take the top 53 bits: (output >> 11) * 2^-53.
 * Sample i of a 2D point stream uses counters 2i and 2i + 1.
 */
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bitsAt(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniformAt(std::uint64_t counter) const {
    return static_cast<double>(bitsAt(counter) >> 11) * 0x1.0p-53;
  }

  double uniformAt(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniformAt(counter);
  }

  Point2 pointInBox(const BoundingBox2& box, std::uint64_t sampleIndex) const {
    return {uniformAt(2 * sampleIndex, box.min.x, box.max.x),
            uniformAt(2 * sampleIndex + 1, box.min.y, box.max.y)};
  }

  /// Stateful convenience view for ad-hoc draws (tests, shape generation).
  double next() { return uniformAt(cursor_++); }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }
  int nextInt(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(static_cast<double>(hi - lo + 1) * next());
  }

private:
  std::uint64_t seed_;
  std::uint64_t cursor_ = 0;
};

}  // namespace gwn

#endif  // GWN_RNG_HPP_
