#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <type_traits>

#include "geonet/bigreal.hpp"

namespace geonet {

// Scalar overloads so generic code inside the namespace can call sqrt(x),
// sin(x), ... unqualified for both double and BigReal.
inline double sqrt(double x) { return std::sqrt(x); }
inline double abs(double x) { return std::fabs(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double tan(double x) { return std::tan(x); }
inline double asin(double x) { return std::asin(x); }
inline double acos(double x) { return std::acos(x); }
inline double atan(double x) { return std::atan(x); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double log10(double x) { return std::log10(x); }
inline double floor(double x) { return std::floor(x); }
inline double hypot(double x, double y) { return std::hypot(x, y); }
inline bool isfinite(double x) { return std::isfinite(x); }

template <class Real>
inline constexpr bool is_big_real_v = std::is_same_v<Real, BigReal>;

/// Per-scalar helpers: constants, parsing, formatting and the nominal
/// precision used to derive tolerances.
template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
  static double pi() { return std::numbers::pi; }
  static double pow10(int e) { return std::pow(10.0, e); }
  static double parse(std::string_view s) { return std::stod(std::string(s)); }
  static std::string format(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits > 17 ? 16 : (digits < 1 ? 0 : digits - 1), x);
    return buf;
  }
  static double to_double(double x) { return x; }
  static int digits() { return 15; }
};

template <>
struct RealTraits<BigReal> {
  static BigReal pi() { return BigReal::pi(); }
  static BigReal pow10(int e) { return BigReal::pow10(e); }
  static BigReal parse(std::string_view s) { return BigReal(s); }
  static std::string format(const BigReal& x, int digits) { return x.to_string(digits); }
  static double to_double(const BigReal& x) { return x.to_double(); }
  static int digits() { return working_digits(); }
};

template <class Real>
Real pi() {
  return RealTraits<Real>::pi();
}

template <class Real>
double to_double(const Real& x) {
  return RealTraits<Real>::to_double(x);
}

template <class Real>
Real parse_real(std::string_view s) {
  return RealTraits<Real>::parse(s);
}

template <class Real>
std::string format_real(const Real& x, int digits) {
  return RealTraits<Real>::format(x, digits);
}

/// 10^-(digits/den): the family of precision-scaled tolerances.
template <class Real>
Real scaled_tolerance(int digits, int den) {
  return RealTraits<Real>::pow10(-(digits / den));
}

/// Parses "p/q", a decimal, or a value with a "deg" suffix (converted to radians).
template <class Real>
Real parse_angle(std::string_view s) {
  std::string t(s);
  bool degrees = false;
  if (t.size() > 3 && t.substr(t.size() - 3) == "deg") {
    degrees = true;
    t.resize(t.size() - 3);
  }
  Real v;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    v = parse_real<Real>(t.substr(0, slash)) / parse_real<Real>(t.substr(slash + 1));
  } else {
    v = parse_real<Real>(t);
  }
  if (degrees) v = v * pi<Real>() / Real(180);
  return v;
}

template <class Real>
Real degrees(const Real& radians) {
  return radians * Real(180) / pi<Real>();
}

template <class Real>
Real radians(const Real& deg) {
  return deg * pi<Real>() / Real(180);
}

}  // namespace geonet
