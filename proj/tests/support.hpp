#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "geonet/bigreal.hpp"
#include "geonet/math.hpp"
#include "geonet/vec2.hpp"

namespace geonet::testing {

using Real = BigReal;
using V = Vec2<Real>;

inline Real R(const char* s) { return parse_real<Real>(s); }
inline Real R(double x) { return Real(x); }
inline V P(double x, double y) { return {Real(x), Real(y)}; }

/// Runs every test of a suite at a fixed working precision.
template <int Digits>
class AtDigits : public ::testing::Test {
 protected:
  WorkingPrecision wp_{Digits};
};

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Brute-force minimizer of a smooth-ish function of two variables by
/// shrinking pattern search. Slow, simple, and independent of the library.
template <class F>
std::pair<long double, long double> pattern_search(F&& f, long double x, long double y, long double step = 0.5L) {
  long double best = f(x, y);
  while (step > 1e-15L) {
    bool moved = false;
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
      long double nx = x + dx * step, ny = y + dy * step;
      long double v = f(nx, ny);
      if (v < best) best = v, x = nx, y = ny, moved = true;
    }
    if (!moved) step /= 2;
  }
  return {x, y};
}

}  // namespace geonet::testing
