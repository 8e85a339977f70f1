#pragma once

#include "geonet/math.hpp"

namespace geonet {

template <class Real>
struct Vec2 {
  Real x{};
  Real y{};

  Vec2() = default;
  Vec2(Real x_, Real y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Vec2& a, const Real& s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(const Real& s, const Vec2& a) { return {a.x * s, a.y * s}; }
  friend Vec2 operator/(const Vec2& a, const Real& s) { return {a.x / s, a.y / s}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class Real>
Real dot(const Vec2<Real>& a, const Vec2<Real>& b) {
  return a.x * b.x + a.y * b.y;
}

/// z-component of the 3D cross product.
template <class Real>
Real cross(const Vec2<Real>& a, const Vec2<Real>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class Real>
Real norm(const Vec2<Real>& a) {
  return hypot(a.x, a.y);
}

template <class Real>
Real distance(const Vec2<Real>& a, const Vec2<Real>& b) {
  return norm(b - a);
}

template <class Real>
Vec2<Real> unit(const Vec2<Real>& a) {
  return a / norm(a);
}

template <class Real>
Vec2<Real> perp(const Vec2<Real>& a) {
  return {-a.y, a.x};
}

template <class Real>
Vec2<Real> polar(const Real& r, const Real& theta) {
  return {r * cos(theta), r * sin(theta)};
}

template <class Real>
Vec2<Real> rotate(const Vec2<Real>& a, const Real& theta) {
  Real c = cos(theta), s = sin(theta);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

/// Rotation with precomputed cos/sin, used when one angle is applied many times.
template <class Real>
struct Rotation {
  Real c, s;
  explicit Rotation(const Real& theta) : c(cos(theta)), s(sin(theta)) {}
  Vec2<Real> operator()(const Vec2<Real>& a) const { return {c * a.x - s * a.y, s * a.x + c * a.y}; }
  Vec2<Real> inverse(const Vec2<Real>& a) const { return {c * a.x + s * a.y, -s * a.x + c * a.y}; }
};

/// Signed angle in (-pi, pi] rotating `from` onto `to`.
template <class Real>
Real signed_angle(const Vec2<Real>& from, const Vec2<Real>& to) {
  return atan2(cross(from, to), dot(from, to));
}

/// Counterclockwise angle in [0, 2pi) rotating `from` onto `to`.
template <class Real>
Real ccw_angle(const Vec2<Real>& from, const Vec2<Real>& to) {
  Real a = signed_angle(from, to);
  if (a < Real(0)) a += 2 * pi<Real>();
  return a;
}

/// Unsigned angle in [0, pi].
template <class Real>
Real angle_between(const Vec2<Real>& a, const Vec2<Real>& b) {
  return abs(signed_angle(a, b));
}

template <class Real>
Real polar_angle(const Vec2<Real>& a) {
  return atan2(a.y, a.x);
}

template <class Real>
Vec2<double> to_double(const Vec2<Real>& a) {
  return {to_double(a.x), to_double(a.y)};
}

/// Intersection of the lines p + s*u and q + t*w. Returns false when parallel.
template <class Real>
bool line_intersection(const Vec2<Real>& p, const Vec2<Real>& u, const Vec2<Real>& q, const Vec2<Real>& w,
                       Real& s, Real& t) {
  Real den = cross(u, w);
  if (den == Real(0)) return false;
  Vec2<Real> d = q - p;
  s = cross(d, w) / den;
  t = cross(d, u) / den;
  return true;
}

}  // namespace geonet
