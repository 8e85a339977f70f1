#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "geonet/net.hpp"

namespace geonet {

template <class Real>
struct ImbalanceRecord {
  std::string vertex;
  Vec2<Real> vector;
  Real norm;
};

/// Sum of multiplicity-weighted unit vectors from vertex `v` along its incident edges.
template <class Real>
Vec2<Real> imbalance_vector(const PlanarNet<Real>& net, std::size_t v) {
  Vec2<Real> sum{Real(0), Real(0)};
  const auto& p = net.vertex(v).position;
  for (std::size_t e : net.incident(v)) {
    const Edge& ed = net.edge(e);
    Vec2<Real> d = net.vertex(ed.other(v)).position - p;
    Real len = norm(d);
    if (len == Real(0))
      throw Error(ErrorCode::degenerate_edge, "zero-length edge at vertex '" + net.vertex(v).id + "'");
    sum += d * (Real(ed.multiplicity) / len);
  }
  return sum;
}

template <class Real>
ImbalanceRecord<Real> imbalance(const PlanarNet<Real>& net, const std::string& id) {
  std::size_t v = net.index_of(id);
  Vec2<Real> vec = imbalance_vector(net, v);
  Real n = norm(vec);
  return {id, std::move(vec), std::move(n)};
}

/// Sum of Imb(v) over every vertex. Each edge contributes two opposite unit
/// vectors, so the result is zero up to rounding for any net.
template <class Real>
Vec2<Real> total_imbalance_vector(const PlanarNet<Real>& net) {
  Vec2<Real> sum{Real(0), Real(0)};
  for (std::size_t v = 0; v < net.vertex_count(); ++v) sum += imbalance_vector(net, v);
  return sum;
}

/// Total imbalance: sum of imbalance norms over boundary vertices.
template <class Real>
Real total_imbalance(const PlanarNet<Real>& net) {
  Real sum(0);
  for (std::size_t v = 0; v < net.vertex_count(); ++v)
    if (net.vertex(v).kind == VertexKind::boundary) sum += norm(imbalance_vector(net, v));
  return sum;
}

template <class Real>
Real length(const PlanarNet<Real>& net) {
  Real sum(0);
  for (std::size_t e = 0; e < net.edge_count(); ++e) sum += Real(net.edge(e).multiplicity) * norm(net.edge_vector(e));
  return sum;
}

template <class Real>
Real max_interior_residual(const PlanarNet<Real>& net) {
  Real worst(0);
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    if (net.vertex(v).kind != VertexKind::interior) continue;
    Real n = norm(imbalance_vector(net, v));
    if (n > worst) worst = n;
  }
  return worst;
}

/// Length from boundary data alone: -sum over boundary vertices of <v, Imb(v)>.
/// Only meaningful when every interior vertex is balanced.
template <class Real>
Real length_via_imbalance(const PlanarNet<Real>& net) {
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    if (net.vertex(v).kind != VertexKind::interior) continue;
    Real n = norm(imbalance_vector(net, v));
    if (n > net.tolerance())
      throw Error(ErrorCode::unbalanced_net, "interior vertex '" + net.vertex(v).id + "' is unbalanced (imb = " +
                                                 format_real(n, 6) + ")");
  }
  Real sum(0);
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    if (net.vertex(v).kind != VertexKind::boundary) continue;
    sum -= dot(net.vertex(v).position, imbalance_vector(net, v));
  }
  return sum;
}

namespace detail {

template <class Real>
std::vector<Vec2<Real>> convex_hull(std::vector<Vec2<Real>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2<Real>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= Real(0)) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= Real(0)) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <class Real>
Real point_segment_distance(const Vec2<Real>& p, const Vec2<Real>& a, const Vec2<Real>& b) {
  Vec2<Real> d = b - a;
  Real dd = dot(d, d);
  if (dd == Real(0)) return distance(p, a);
  Real t = dot(p - a, d) / dd;
  if (t < Real(0)) t = Real(0);
  if (t > Real(1)) t = Real(1);
  return distance(p, a + d * t);
}

}  // namespace detail

template <class Real>
struct ValidationReport {
  std::vector<ImbalanceRecord<Real>> residuals;  // one per vertex
  std::vector<VertexKind> kinds;
  Real max_interior_residual{0};
  std::vector<std::string> unbalanced;       // interior vertices above tolerance
  std::vector<std::string> outside_hull;     // vertices outside hull of boundary vertices
  std::vector<std::size_t> boundary_edges;   // edges joining two boundary vertices
  std::size_t components = 0;
  Real tolerance{0};

  bool balanced() const { return unbalanced.empty(); }
  bool connected() const { return components <= 1; }
  bool ok() const { return balanced() && outside_hull.empty() && boundary_edges.empty() && connected(); }
};

/// Checks balance, the convex-hull property, the boundary-edge convention and
/// connectivity. Never throws on a malformed net; violations are reported.
template <class Real>
ValidationReport<Real> validate(const PlanarNet<Real>& net) {
  ValidationReport<Real> rep;
  rep.tolerance = net.tolerance();
  const std::size_t n = net.vertex_count();

  Real scale(1);
  for (const auto& v : net.vertices()) {
    Real r = norm(v.position);
    if (r > scale) scale = r;
  }

  for (std::size_t v = 0; v < n; ++v) {
    const auto& vx = net.vertex(v);
    Vec2<Real> imb = imbalance_vector(net, v);
    Real nrm = norm(imb);
    if (vx.kind == VertexKind::interior) {
      if (nrm > rep.max_interior_residual) rep.max_interior_residual = nrm;
      if (nrm > net.tolerance()) rep.unbalanced.push_back(vx.id);
    }
    rep.residuals.push_back({vx.id, std::move(imb), std::move(nrm)});
    rep.kinds.push_back(vx.kind);
  }

  std::vector<Vec2<Real>> bpts;
  for (const auto& v : net.vertices())
    if (v.kind == VertexKind::boundary) bpts.push_back(v.position);
  auto hull = detail::convex_hull(bpts);
  const Real slack = net.tolerance() * scale;
  for (const auto& v : net.vertices()) {
    bool inside = true;
    if (hull.empty()) {
      inside = false;
    } else if (hull.size() == 1) {
      inside = distance(v.position, hull[0]) <= slack;
    } else if (hull.size() == 2) {
      inside = detail::point_segment_distance(v.position, hull[0], hull[1]) <= slack;
    } else {
      for (std::size_t i = 0; i < hull.size() && inside; ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        Vec2<Real> d = b - a;
        // signed distance of the point to the left of edge a->b
        if (cross(d, v.position - a) / norm(d) < -slack) inside = false;
      }
    }
    if (!inside) rep.outside_hull.push_back(v.id);
  }

  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (net.vertex(ed.a).kind == VertexKind::boundary && net.vertex(ed.b).kind == VertexKind::boundary)
      rep.boundary_edges.push_back(e);
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& ed : net.edges()) parent[find(ed.a)] = find(ed.b);
  for (std::size_t v = 0; v < n; ++v) rep.components += find(v) == v;
  return rep;
}

template <class Real>
struct DiskIdentity {
  Real lhs;  // length of the net inside the disk
  Real rhs;  // boundary flux minus enclosed <v, Imb(v)>
};

/// Truncated length identity about a fixed origin. Per-edge and per-vertex
/// quantities are computed once so that many radii can be probed cheaply.
template <class Real>
class DiskProbe {
 public:
  DiskProbe(const PlanarNet<Real>& net, const Vec2<Real>& origin) : tol_(net.tolerance()) {
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      if (detail::point_segment_distance(origin, net.vertex(ed.a).position, net.vertex(ed.b).position) <= tol_)
        throw Error(ErrorCode::invalid_argument, "origin lies on the net");
    }
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
      Vec2<Real> rel = net.vertex(v).position - origin;
      vertices_.push_back({norm(rel), dot(rel, imbalance_vector(net, v)), net.vertex(v).id});
    }
    for (const Edge& ed : net.edges()) {
      Vec2<Real> p = net.vertex(ed.a).position - origin;
      Vec2<Real> d = net.vertex(ed.b).position - net.vertex(ed.a).position;
      Real len = norm(d);
      Vec2<Real> u = d / len;
      Real b = dot(p, u);
      edges_.push_back({Real(ed.multiplicity), b, dot(p, p) - b * b, abs(cross(p, u)), len});
    }
  }

  /// Both sides at radius r. Each crossing point e(r) contributes <e(r), u>
  /// with u the unit edge direction pointing out of the disk.
  DiskIdentity<Real> operator()(const Real& r) const {
    if (!(r > Real(0))) throw Error(ErrorCode::invalid_argument, "disk radius must be positive");
    const Real tol = tol_ * (r > Real(1) ? r : Real(1));
    Real lhs(0), rhs(0);
    for (const auto& v : vertices_) {
      if (abs(v.dist - r) <= tol) throw Error(ErrorCode::special_radius, "circle passes through vertex '" + v.id + "'");
      if (v.dist < r) rhs -= v.weighted;
    }
    const Real r2 = r * r;
    for (const auto& e : edges_) {
      // with t the arclength from endpoint a, |p + t u|^2 = r^2 reads (t + b)^2 = r^2 - h^2
      if (abs(e.foot - r) <= tol && -e.b > Real(0) && -e.b < e.len)
        throw Error(ErrorCode::special_radius, "circle is tangent to an edge");
      Real disc = r2 - e.h2;
      if (disc <= Real(0)) continue;
      Real sq = sqrt(disc);
      Real t1 = -e.b - sq, t2 = -e.b + sq;
      Real lo = t1 > Real(0) ? t1 : Real(0);
      Real hi = t2 < e.len ? t2 : e.len;
      if (hi > lo) lhs += e.mult * (hi - lo);
      // <p + t u, u> = b + t
      if (t1 > Real(0) && t1 < e.len) rhs += e.mult * sq;
      if (t2 > Real(0) && t2 < e.len) rhs += e.mult * sq;
    }
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  struct V {
    Real dist, weighted;
    std::string id;
  };
  struct E {
    Real mult, b, h2, foot, len;
  };
  Real tol_;
  std::vector<V> vertices_;
  std::vector<E> edges_;
};

template <class Real>
DiskIdentity<Real> disk_length_identity(const PlanarNet<Real>& net, const Real& r, const Vec2<Real>& origin) {
  return DiskProbe<Real>(net, origin)(r);
}

}  // namespace geonet
