#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "geonet/identities.hpp"

namespace geonet {

template <class Real>
struct WingResult {
  Vec2<Real> first;   // outgoing unit directions
  Vec2<Real> second;
  int degree = 0;     // vertex degree after winging
  Real beta;          // smaller angle between the two wings
};

/// Balances a degree-2 vertex by extending both incident edges through it.
/// `d1`, `d2` are unit vectors pointing from the vertex to its neighbours.
template <class Real>
WingResult<Real> wing_degree2(const Vec2<Real>& d1, const Vec2<Real>& d2, const Real& tol) {
  Real inner = angle_between(d1, d2);
  Real alpha = Real(2) * pi<Real>() - inner;  // the larger angle, >= pi
  if (abs(alpha - pi<Real>()) <= tol)
    throw Error(ErrorCode::dispatch_ambiguous, "wing_degree2: incident edges are opposite (alpha = pi)");
  return {-d1, -d2, 4, std::move(inner)};
}

/// The unique unordered pair of unit vectors summing to `target` (|target| < 2).
/// For a vanishing target the pair is taken perpendicular to `axis`.
template <class Real>
std::pair<Vec2<Real>, Vec2<Real>> unit_pair_summing_to(const Vec2<Real>& target, const Vec2<Real>& axis,
                                                        const Real& tol) {
  Real m = norm(target);
  if (m >= Real(2) - tol)
    throw Error(ErrorCode::precondition, "no unit pair sums to a vector of length >= 2 (length " + format_real(m, 8) + ")");
  if (m <= tol) {
    Vec2<Real> w = unit(perp(axis));
    return {w, -w};
  }
  Vec2<Real> dir = target / m;
  Real half = acos(m / Real(2));
  return {rotate(dir, half), rotate(dir, -half)};
}

/// Balances a degree-3 vertex with two new edges whose unit vectors sum to the
/// negated imbalance. The third direction `d3` doubles as the reference axis
/// when the imbalance vanishes.
template <class Real>
WingResult<Real> wing_degree3(const Vec2<Real>& d1, const Vec2<Real>& d2, const Vec2<Real>& d3, const Real& tol) {
  Vec2<Real> imb = d1 + d2 + d3;
  if (norm(imb) >= Real(2) - tol)
    throw Error(ErrorCode::precondition, "wing_degree3: imbalance is not below 2");
  auto [w1, w2] = unit_pair_summing_to(-imb, d3, tol);
  for (const auto* d : {&d1, &d2, &d3})
    for (const auto* w : {&w1, &w2})
      if (angle_between(*d, *w) <= tol)
        throw Error(ErrorCode::wing_coincidence, "wing_degree3: a wing coincides with an incoming edge");
  Real beta = angle_between(w1, w2);
  return {std::move(w1), std::move(w2), 5, std::move(beta)};
}

template <class Real>
struct RebalanceResult {
  PlanarNet<Real> net;
  std::vector<std::string> added_vertices;
  std::vector<Vec2<Real>> directions;
};

/// Number of unit edges used to cancel an imbalance of norm b.
inline int rebalance_edge_count(double b) {
  if (b < 1) return 3;
  return std::max(3, static_cast<int>(std::ceil(b)) + 1);
}

/// Balances vertex `id` by attaching new edges of length `edge_length` to new
/// boundary vertices. The unit directions sum to -Imb(v): n-2 of them form a
/// narrow fan and the remaining two are the unique unit pair closing the sum.
/// The fan orientation is chosen to maximize the smallest angular gap between
/// any two edges at the vertex.
template <class Real>
RebalanceResult<Real> rebalance_vertex(const PlanarNet<Real>& net, const std::string& id, const Real& edge_length,
                                       int samples = 720) {
  const std::size_t v = net.index_of(id);
  const Real& tol = net.tolerance();
  Vec2<Real> imb = imbalance_vector(net, v);
  Real b = norm(imb);
  RebalanceResult<Real> res{net, {}, {}};
  if (b <= tol) return res;

  const int n = rebalance_edge_count(to_double(b));
  const int fan = n - 2;
  std::vector<Vec2<Real>> existing;
  for (std::size_t e : net.incident(v)) existing.push_back(unit(net.vertex(net.edge(e).other(v)).position - net.vertex(v).position));

  const Vec2<Real> target = -imb;
  const Real two_pi = Real(2) * pi<Real>();
  const Real spread = two_pi / Real(8 * n);  // angular spacing inside the fan
  const Real base_angle = polar_angle(target);

  auto candidate = [&](const Real& psi, std::vector<Vec2<Real>>& dirs) -> bool {
    dirs.clear();
    Vec2<Real> sum{Real(0), Real(0)};
    for (int j = 0; j < fan; ++j) {
      Real a = psi + spread * (Real(2 * j - (fan - 1)) / Real(2));
      dirs.push_back(polar(Real(1), a));
      sum += dirs.back();
    }
    Vec2<Real> rest = target - sum;
    if (norm(rest) >= Real(2) - Real(1) / Real(100)) return false;
    auto [w1, w2] = unit_pair_summing_to(rest, dirs.front(), tol);
    dirs.push_back(w1);
    dirs.push_back(w2);
    return true;
  };
  auto min_gap = [&](const std::vector<Vec2<Real>>& dirs) {
    Real best = pi<Real>();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (const auto& e : existing) best = std::min(best, angle_between(dirs[i], e));
      for (std::size_t j = i + 1; j < dirs.size(); ++j) best = std::min(best, angle_between(dirs[i], dirs[j]));
    }
    return best;
  };

  std::vector<Vec2<Real>> dirs, best_dirs;
  Real best_gap(-1);
  for (int k = 0; k < samples; ++k) {
    Real psi = base_angle + two_pi * Real(k) / Real(samples);
    if (!candidate(psi, dirs)) continue;
    Real gap = min_gap(dirs);
    if (gap > best_gap) {
      best_gap = gap;
      best_dirs = dirs;
    }
  }
  if (best_dirs.empty() || !(best_gap > tol))
    throw Error(ErrorCode::wing_coincidence, "rebalance_vertex: cannot avoid coincidence with existing edges");

  res.net.set_kind(v, VertexKind::interior);
  for (std::size_t j = 0; j < best_dirs.size(); ++j) {
    std::string nid = id + "~r" + std::to_string(j);
    while (res.net.contains(nid)) nid += "'";
    std::size_t w = res.net.add_vertex(nid, net.vertex(v).position + best_dirs[j] * edge_length, VertexKind::boundary);
    res.net.add_edge(v, w);
    res.added_vertices.push_back(nid);
  }
  res.directions = std::move(best_dirs);
  return res;
}

}  // namespace geonet
