#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "geonet/arrangement.hpp"

namespace geonet {

struct OverlapGroup {
  std::vector<std::size_t> edges;
  int merged_multiplicity = 0;  // largest total multiplicity stacked on one sub-segment
  std::set<EdgeRole> roles;
};

struct OverlapReport {
  std::vector<OverlapGroup> groups;

  bool empty() const { return groups.empty(); }
  std::size_t grouped_edges() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.edges.size();
    return n;
  }
  bool has_role(EdgeRole r) const {
    for (const auto& g : groups)
      if (g.roles.count(r)) return true;
    return false;
  }
};

template <class Real>
struct OverlapTolerance {
  Real angular;  // max angle between supporting lines (radians)
  Real offset;   // max perpendicular offset, relative to segment length

  static OverlapTolerance for_digits(int digits) {
    Real t = scaled_tolerance<Real>(digits, 3);
    return {t, t};
  }
};

/// Groups edges that lie on a common line and share a sub-segment of positive
/// length. Groups are the connected components of the pairwise overlap relation.
template <class Real>
OverlapReport detect_overlaps(const PlanarNet<Real>& net, const OverlapTolerance<Real>& tol) {
  const std::size_t m = net.edge_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(m, false);

  double pad = 0;
  for (const auto& v : net.vertices()) pad = std::max({pad, std::fabs(to_double(v.position.x)), std::fabs(to_double(v.position.y))});
  pad = std::max(pad, 1.0) * std::max(to_double(tol.offset), 1e-15) * 4;

  for (auto [e, f] : detail::candidate_pairs(net, pad)) {
    const Vec2<Real>& A = net.vertex(net.edge(e).a).position;
    Vec2<Real> de = net.edge_vector(e), df = net.edge_vector(f);
    Real le = norm(de), lf = norm(df);
    if (abs(cross(de, df)) / (le * lf) >= tol.angular) continue;
    const Vec2<Real>& C = net.vertex(net.edge(f).a).position;
    const Vec2<Real>& D = net.vertex(net.edge(f).b).position;
    Real shorter = le < lf ? le : lf;
    if (abs(cross(de, C - A)) / le >= tol.offset * shorter) continue;
    if (abs(cross(de, D - A)) / le >= tol.offset * shorter) continue;
    Real t0 = dot(C - A, de) / le, t1 = dot(D - A, de) / le;
    if (t0 > t1) std::swap(t0, t1);
    Real lo = t0 > Real(0) ? t0 : Real(0);
    Real hi = t1 < le ? t1 : le;
    if (hi - lo <= tol.offset * shorter) continue;
    touched[e] = touched[f] = true;
    parent[find(e)] = find(f);
  }

  std::map<std::size_t, OverlapGroup> by_root;
  for (std::size_t e = 0; e < m; ++e) {
    if (!touched[e]) continue;
    auto& g = by_root[find(e)];
    g.edges.push_back(e);
    g.roles.insert(net.edge(e).role);
  }

  OverlapReport rep;
  for (auto& [root, g] : by_root) {
    // stack multiplicities along the shared line
    const std::size_t e0 = g.edges.front();
    const Vec2<Real>& A = net.vertex(net.edge(e0).a).position;
    Vec2<Real> dir = unit(net.edge_vector(e0));
    std::vector<std::pair<double, int>> events;
    for (std::size_t e : g.edges) {
      double t0 = to_double(dot(net.vertex(net.edge(e).a).position - A, dir));
      double t1 = to_double(dot(net.vertex(net.edge(e).b).position - A, dir));
      if (t0 > t1) std::swap(t0, t1);
      events.emplace_back(t0, net.edge(e).multiplicity);
      events.emplace_back(t1, -net.edge(e).multiplicity);
    }
    // close before open at equal coordinates so abutting edges do not stack
    std::sort(events.begin(), events.end(), [](const auto& x, const auto& y) {
      if (std::fabs(x.first - y.first) > 1e-12 * (1 + std::fabs(x.first))) return x.first < y.first;
      return x.second < y.second;
    });
    int cur = 0;
    for (auto& [t, d] : events) {
      cur += d;
      g.merged_multiplicity = std::max(g.merged_multiplicity, cur);
    }
    rep.groups.push_back(std::move(g));
  }
  return rep;
}

/// A net is a multinet when some edge carries multiplicity > 1 or some edges overlap.
template <class Real>
bool is_multinet(const PlanarNet<Real>& net, const OverlapReport& rep) {
  for (const Edge& e : net.edges())
    if (e.multiplicity > 1) return true;
  return !rep.empty();
}

}  // namespace geonet
