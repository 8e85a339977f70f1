#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "geonet/arrangement.hpp"
#include "geonet/fermat.hpp"
#include "geonet/identities.hpp"

namespace geonet {

/// Three boundary vertices joined to their Fermat point.
template <class Real>
PlanarNet<Real> y_net(const Vec2<Real>& a, const Vec2<Real>& b, const Vec2<Real>& c, const Real& tol) {
  auto f = fermat_point_two_hook(a, b, c, tol);
  PlanarNet<Real> net(tol);
  net.add_vertex("A", a, VertexKind::boundary);
  net.add_vertex("B", b, VertexKind::boundary);
  net.add_vertex("C", c, VertexKind::boundary);
  net.add_vertex("F", f.point, VertexKind::interior);
  for (const char* p : {"A", "B", "C"}) net.add_edge("F", p);
  return net;
}

/// Triangle whose half-angles have rational cosines m_i/n_i, nested k times.
struct WeightedTriangleSpec {
  std::array<long, 3> m{12, 12, 120};
  std::array<long, 3> n{13, 13, 169};
  std::vector<std::string> ratios;  // decimal strings, strictly increasing in (0, 1)

  long big_n() const { return n[0] * n[1] * n[2]; }
  long weight(int i) const { return m[i] * (big_n() / n[i]); }

  /// The 5-12-13 family with k evenly spaced homotheties r_j = j/(k+1).
  static WeightedTriangleSpec pythagorean(int k) {
    WeightedTriangleSpec s;
    for (int j = 1; j <= k; ++j) s.ratios.push_back(std::to_string(j) + "/" + std::to_string(k + 1));
    return s;
  }
};

template <class Real>
Real parse_ratio(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_real<Real>(s);
  return parse_real<Real>(s.substr(0, slash)) / parse_real<Real>(s.substr(slash + 1));
}

template <class Real>
PlanarNet<Real> build_weighted_triangle(const WeightedTriangleSpec& spec, const Real& tol) {
  if (spec.ratios.empty()) throw Error(ErrorCode::invalid_argument, "weighted triangle needs at least one homothety");
  std::array<Real, 3> half;
  Real sum(0);
  for (int i = 0; i < 3; ++i) {
    if (spec.m[i] <= 0 || spec.n[i] <= 0 || spec.m[i] >= spec.n[i])
      throw Error(ErrorCode::invalid_argument, "half-angle cosine m/n must lie in (0, 1)");
    half[i] = acos(Real(spec.m[i]) / Real(spec.n[i]));
    sum += half[i];
  }
  if (abs(sum * Real(2) - pi<Real>()) > tol)
    throw Error(ErrorCode::invalid_argument, "triangle angles do not sum to pi");
  std::vector<Real> r;
  for (const auto& s : spec.ratios) {
    r.push_back(parse_ratio<Real>(s));
    if (!(r.back() > Real(0) && r.back() < Real(1)) || (r.size() > 1 && !(r.back() > r[r.size() - 2])))
      throw Error(ErrorCode::invalid_argument, "homothety ratios must increase strictly inside (0, 1)");
  }
  const int k = static_cast<int>(r.size());

  // incenter at the origin, inradius 1
  std::array<Vec2<Real>, 3> a;
  Real theta = pi<Real>() / Real(2);
  for (int i = 0; i < 3; ++i) {
    a[i] = polar(Real(1) / sin(half[i]), theta);
    theta += pi<Real>() - half[i] - half[(i + 1) % 3];
  }

  PlanarNet<Real> net(tol);
  auto name = [](int i, int j) { return "A" + std::to_string(i + 1) + (j ? "_" + std::to_string(j) : ""); };
  for (int i = 0; i < 3; ++i) net.add_vertex(name(i, 0), a[i], VertexKind::boundary);
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < 3; ++i) net.add_vertex(name(i, j), a[i] * r[j - 1], VertexKind::interior);
  for (int i = 0; i < 3; ++i) {
    const long w = spec.weight(i);
    for (int j = 1; j <= k; ++j) {
      long mult = 2 * j * w;
      if (mult > std::numeric_limits<int>::max()) throw Error(ErrorCode::invalid_argument, "edge weight overflows");
      net.add_edge(name(i, j), j < k ? name(i, j + 1) : name(i, 0), static_cast<int>(mult));
    }
  }
  if (spec.big_n() > std::numeric_limits<int>::max()) throw Error(ErrorCode::invalid_argument, "edge weight overflows");
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < 3; ++i) net.add_edge(name(i, j), name((i + 1) % 3, j), static_cast<int>(spec.big_n()));
  return net;
}

/// Regular N-gon on the unit circle united with its copy rotated by pi/(2N);
/// the 2N side crossings become balanced degree-4 vertices.
template <class Real>
PlanarNet<Real> build_double_polygon(int n, const Real& tol, ArrangementStats<Real>* stats = nullptr) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "double polygon needs N >= 3");
  PlanarNet<Real> raw(tol);
  const Real step = Real(2) * pi<Real>() / Real(n);
  const Real shift = pi<Real>() / Real(2 * n);
  for (int copy = 0; copy < 2; ++copy)
    for (int k = 0; k < n; ++k)
      raw.add_vertex(std::string(copy ? "Q" : "P") + std::to_string(k),
                     polar(Real(1), step * Real(k) + (copy ? shift : Real(0))), VertexKind::boundary);
  for (int copy = 0; copy < 2; ++copy)
    for (int k = 0; k < n; ++k) raw.add_edge(copy * n + k, copy * n + (k + 1) % n);
  return materialize_crossings(raw, tol, stats);
}

template <class Real>
struct FourPointNets {
  PlanarNet<Real> x_net;
  std::optional<PlanarNet<Real>> tree_ab;  // A, B share a Steiner vertex
  std::optional<PlanarNet<Real>> tree_bc;  // B, C share a Steiner vertex
  std::string tree_ab_error;
  std::string tree_bc_error;
};

namespace detail {

template <class Real>
PlanarNet<Real> steiner_tree4(const std::array<Vec2<Real>, 4>& q, int first, const Real& tol) {
  // pair (p0, p1) hangs on S1, pair (p2, p3) on S2
  const Vec2<Real>& p0 = q[first];
  const Vec2<Real>& p1 = q[(first + 1) % 4];
  const Vec2<Real>& p2 = q[(first + 2) % 4];
  const Vec2<Real>& p3 = q[(first + 3) % 4];
  Vec2<Real> e2 = equilateral_apex(p2, p3, (p0 + p1) / Real(2));
  auto s1 = fermat_point_two_hook(p0, p1, e2, tol);
  auto s2 = fermat_point_two_hook(p2, p3, s1.point, tol);
  PlanarNet<Real> net(tol);
  static const char* names[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 4; ++i) net.add_vertex(names[i], q[i], VertexKind::boundary);
  net.add_vertex("S1", s1.point, VertexKind::interior);
  net.add_vertex("S2", s2.point, VertexKind::interior);
  net.add_edge("S1", names[first]);
  net.add_edge("S1", names[(first + 1) % 4]);
  net.add_edge("S2", names[(first + 2) % 4]);
  net.add_edge("S2", names[(first + 3) % 4]);
  net.add_edge("S1", "S2");
  return net;
}

}  // namespace detail

/// The X-shaped net through the diagonal intersection and the two Steiner
/// topologies of a convex quadrilateral ABCD (counterclockwise).
template <class Real>
FourPointNets<Real> build_four_point_trees(const std::array<Vec2<Real>, 4>& q, const Real& tol) {
  for (int i = 0; i < 4; ++i) {
    Vec2<Real> d1 = q[(i + 1) % 4] - q[i], d2 = q[(i + 2) % 4] - q[(i + 1) % 4];
    if (!(cross(d1, d2) > Real(0)))
      throw Error(ErrorCode::precondition, "four points must form a counterclockwise convex quadrilateral");
  }
  Real s, t;
  if (!line_intersection(q[0], q[2] - q[0], q[1], q[3] - q[1], s, t))
    throw Error(ErrorCode::degenerate_geometry, "diagonals are parallel");
  FourPointNets<Real> out{PlanarNet<Real>(tol), std::nullopt, std::nullopt, {}, {}};
  static const char* names[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 4; ++i) out.x_net.add_vertex(names[i], q[i], VertexKind::boundary);
  out.x_net.add_vertex("O", q[0] + (q[2] - q[0]) * s, VertexKind::interior);
  for (const char* p : names) out.x_net.add_edge("O", p);

  try {
    out.tree_ab = detail::steiner_tree4(q, 0, tol);
  } catch (const Error& e) {
    out.tree_ab_error = e.what();
  }
  try {
    out.tree_bc = detail::steiner_tree4(q, 1, tol);
  } catch (const Error& e) {
    out.tree_bc_error = e.what();
  }
  return out;
}

}  // namespace geonet
