#pragma once

#include <optional>
#include <vector>

#include "geonet/error.hpp"
#include "geonet/vec2.hpp"

namespace geonet {

template <class Real>
struct FermatResult {
  Vec2<Real> point;
  Vec2<Real> apex;           // third vertex of the external equilateral triangle on PQ
  Vec2<Real> circle_center;  // circle through P, Q and the apex
  Real circle_radius;
};

/// Apex of the equilateral triangle on PQ lying on the opposite side of line
/// PQ from `away_from`.
template <class Real>
Vec2<Real> equilateral_apex(const Vec2<Real>& p, const Vec2<Real>& q, const Vec2<Real>& away_from) {
  Vec2<Real> mid = (p + q) / Real(2);
  Vec2<Real> n = perp(q - p);
  if (dot(n, away_from - mid) > Real(0)) n = -n;
  return mid + n * (sqrt(Real(3)) / Real(2));
}

/// Fermat point F of triangle PvQ via the external-apex construction: F is the
/// second intersection of segment Xv with the circle through P, Q, X.
template <class Real>
FermatResult<Real> fermat_point_two_hook(const Vec2<Real>& p, const Vec2<Real>& q, const Vec2<Real>& v,
                                         const Real& tol) {
  Vec2<Real> pq = q - p;
  Real base = norm(pq);
  if (base == Real(0) || abs(cross(pq, v - p)) <= tol * base * base)
    throw Error(ErrorCode::degenerate_geometry, "fermat point: P, Q, v are collinear");
  const Real limit = Real(2) * pi<Real>() / Real(3) - tol;
  if (angle_between(p - v, q - v) >= limit || angle_between(q - p, v - p) >= limit ||
      angle_between(p - q, v - q) >= limit)
    throw Error(ErrorCode::precondition, "fermat point: triangle has an angle of at least 120 degrees");

  Vec2<Real> x = equilateral_apex(p, q, v);
  Vec2<Real> c = (p + q + x) / Real(3);
  Real radius = base / sqrt(Real(3));
  Vec2<Real> d = v - x;
  Real t = Real(-2) * dot(x - c, d) / dot(d, d);
  if (!(t > Real(0) && t < Real(1)))
    throw Error(ErrorCode::degenerate_geometry, "fermat point: circle does not meet segment Xv inside the triangle");
  return {x + d * t, std::move(x), std::move(c), std::move(radius)};
}

template <class Real>
struct MedianResult {
  Vec2<Real> point;
  bool at_vertex = false;
  std::optional<std::size_t> vertex;  // index of the input point when at_vertex
  int iterations = 0;
};

template <class Real>
Real sum_of_distances(const std::vector<Vec2<Real>>& pts, const Vec2<Real>& y) {
  Real s(0);
  for (const auto& a : pts) s += distance(a, y);
  return s;
}

/// Minimizer of the sum of distances to `pts`. Uses damped Weiszfeld
/// reweighting followed by Newton polishing; input points are tested directly
/// with the vertex optimality condition |sum of unit vectors| <= multiplicity.
template <class Real>
MedianResult<Real> geometric_median(const std::vector<Vec2<Real>>& pts, const Real& tol, int max_iter = 10000) {
  if (pts.size() < 3) throw Error(ErrorCode::invalid_argument, "geometric median needs at least 3 points");
  bool all_same = true, all_collinear = true;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i] == pts[0])) all_same = false;
  }
  if (all_same) throw Error(ErrorCode::degenerate_geometry, "geometric median: all points coincide");
  {
    std::size_t j = 1;
    while (pts[j] == pts[0]) ++j;
    Vec2<Real> d = pts[j] - pts[0];
    for (const auto& p : pts)
      if (abs(cross(d, p - pts[0])) > tol * dot(d, d)) all_collinear = false;
  }
  if (all_collinear) throw Error(ErrorCode::precondition, "geometric median: points are collinear");

  Real scale(0);
  Vec2<Real> y{Real(0), Real(0)};
  for (const auto& p : pts) y += p;
  y = y / Real(static_cast<long>(pts.size()));
  for (const auto& p : pts) {
    Real d = distance(p, y);
    if (d > scale) scale = d;
  }

  auto vertex_optimal = [&](std::size_t j) {
    Vec2<Real> r{Real(0), Real(0)};
    long mult = 0;
    for (const auto& p : pts) {
      if (p == pts[j]) {
        ++mult;
        continue;
      }
      r += unit(p - pts[j]);
    }
    return norm(r) <= Real(mult) + tol;
  };
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (vertex_optimal(j)) return {pts[j], true, j, 0};

  MedianResult<Real> res;
  const Real snap = tol * scale;
  int it = 0;
  // Weiszfeld to moderate accuracy
  for (; it < max_iter; ++it) {
    Vec2<Real> num{Real(0), Real(0)};
    Real den(0);
    bool snapped = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Real d = distance(pts[i], y);
      if (d <= snap) {
        // iterate landed on an input point that is not optimal: step off it
        // along its descent direction
        Vec2<Real> r{Real(0), Real(0)};
        for (const auto& p : pts)
          if (!(p == pts[i])) r += unit(p - pts[i]);
        y = pts[i] + unit(r) * (scale * Real(1) / Real(1000));
        snapped = true;
        break;
      }
      num += pts[i] / d;
      den += Real(1) / d;
    }
    if (snapped) continue;
    Vec2<Real> next = num / den;
    Real step = distance(next, y);
    y = next;
    if (step <= scale * Real(1) / Real(1000000)) break;
  }
  // Newton polishing on the smooth objective
  for (int k = 0; k < 200; ++k, ++it) {
    Vec2<Real> g{Real(0), Real(0)};
    Real hxx(0), hxy(0), hyy(0);
    for (const auto& p : pts) {
      Vec2<Real> r = y - p;
      Real d = norm(r);
      Vec2<Real> u = r / d;
      g += u;
      hxx += (Real(1) - u.x * u.x) / d;
      hxy += (Real(0) - u.x * u.y) / d;
      hyy += (Real(1) - u.y * u.y) / d;
    }
    if (norm(g) <= tol) break;
    Real det = hxx * hyy - hxy * hxy;
    Vec2<Real> step{(hyy * g.x - hxy * g.y) / det, (hxx * g.y - hxy * g.x) / det};
    Real f0 = sum_of_distances(pts, y);
    Real lam(1);
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      Vec2<Real> cand = y - step * lam;
      if (sum_of_distances(pts, cand) <= f0) {
        y = cand;
        accepted = true;
        break;
      }
      lam = lam / Real(2);
    }
    if (!accepted) break;
  }
  res.point = y;
  res.iterations = it;
  return res;
}

}  // namespace geonet
