#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geonet/net.hpp"

namespace geonet {

namespace detail {

struct BBox {
  double x0, y0, x1, y1;
};

template <class Real>
BBox edge_bbox(const PlanarNet<Real>& net, std::size_t e, double pad) {
  auto a = to_double(net.vertex(net.edge(e).a).position);
  auto b = to_double(net.vertex(net.edge(e).b).position);
  return {std::min(a.x, b.x) - pad, std::min(a.y, b.y) - pad, std::max(a.x, b.x) + pad, std::max(a.y, b.y) + pad};
}

/// Pairs of edges whose padded bounding boxes overlap (sort-and-sweep on x).
template <class Real>
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const PlanarNet<Real>& net, double pad) {
  const std::size_t m = net.edge_count();
  std::vector<BBox> boxes(m);
  for (std::size_t e = 0; e < m; ++e) boxes[e] = edge_bbox(net, e, pad);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].x0 < boxes[b].x0; });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i) {
    const BBox& bi = boxes[order[i]];
    for (std::size_t j = i + 1; j < m; ++j) {
      const BBox& bj = boxes[order[j]];
      if (bj.x0 > bi.x1) break;
      if (bj.y0 > bi.y1 || bj.y1 < bi.y0) continue;
      out.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    }
  }
  return out;
}

/// Spatial hash over double coordinates; exact comparisons are done by the caller.
class PointGrid {
 public:
  explicit PointGrid(double cell) : cell_(cell) {}
  void insert(double x, double y, std::size_t id) { cells_[key(cell_of(x), cell_of(y))].push_back(id); }
  template <class Fn>
  void for_near(double x, double y, Fn&& fn) const {
    std::int64_t cx = cell_of(x), cy = cell_of(y);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (std::size_t id : it->second)
          if (fn(id)) return;
      }
  }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ull) ^ static_cast<std::uint64_t>(b);
  }
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace detail

template <class Real>
struct ArrangementStats {
  std::size_t merged_vertices = 0;
  std::size_t crossing_vertices = 0;
  std::size_t split_edges = 0;
};

/// Turns a net whose edges may cross into an embedded net: coincident
/// vertices are merged, every transversal crossing becomes a new interior
/// vertex, and edges passing through a vertex are split there. Collinear
/// overlapping edges are split at each other's endpoints and otherwise kept
/// (they show up later in detect_overlaps).
template <class Real>
PlanarNet<Real> materialize_crossings(const PlanarNet<Real>& in, const Real& snap, ArrangementStats<Real>* stats = nullptr,
                                      const std::string& crossing_prefix = "x") {
  const double snap_d = std::max(to_double(snap), 1e-300);
  double scale = 1.0;
  for (const auto& v : in.vertices()) scale = std::max({scale, std::fabs(to_double(v.position.x)), std::fabs(to_double(v.position.y))});
  const double cell = std::max(1e-9 * scale, 64 * snap_d);

  // 1. merge coincident vertices
  PlanarNet<Real> base(in.tolerance());
  std::vector<std::size_t> remap(in.vertex_count());
  detail::PointGrid grid(cell);
  ArrangementStats<Real> st;
  for (std::size_t v = 0; v < in.vertex_count(); ++v) {
    const auto& vx = in.vertex(v);
    auto pd = to_double(vx.position);
    std::size_t found = static_cast<std::size_t>(-1);
    grid.for_near(pd.x, pd.y, [&](std::size_t id) {
      if (distance(base.vertex(id).position, vx.position) <= snap) {
        found = id;
        return true;
      }
      return false;
    });
    if (found != static_cast<std::size_t>(-1)) {
      remap[v] = found;
      if (vx.kind == VertexKind::boundary) base.set_kind(found, VertexKind::boundary);
      ++st.merged_vertices;
    } else {
      remap[v] = base.add_vertex(vx.id, vx.position, vx.kind);
      grid.insert(pd.x, pd.y, remap[v]);
    }
  }
  for (const Edge& e : in.edges()) {
    if (remap[e.a] == remap[e.b])
      throw Error(ErrorCode::degenerate_edge, "edge collapses after merging coincident vertices");
    base.add_edge(remap[e.a], remap[e.b], e.multiplicity, e.role);
  }

  // 2. find split points
  const std::size_t m = base.edge_count();
  std::vector<std::vector<std::size_t>> splits(m);
  std::vector<Vec2<Real>> new_points;  // crossing vertices, indexed after base vertices
  auto position_of = [&](std::size_t id) -> const Vec2<Real>& {
    return id < base.vertex_count() ? base.vertex(id).position : new_points[id - base.vertex_count()];
  };
  auto register_point = [&](const Vec2<Real>& p) {
    auto pd = to_double(p);
    std::size_t found = static_cast<std::size_t>(-1);
    grid.for_near(pd.x, pd.y, [&](std::size_t id) {
      if (distance(position_of(id), p) <= snap) {
        found = id;
        return true;
      }
      return false;
    });
    if (found != static_cast<std::size_t>(-1)) return found;
    std::size_t id = base.vertex_count() + new_points.size();
    new_points.push_back(p);
    grid.insert(pd.x, pd.y, id);
    return id;
  };

  const Real one(1), zero(0);
  for (auto [e, f] : detail::candidate_pairs(base, 4 * snap_d + 1e-12 * scale)) {
    const Edge& E = base.edge(e);
    const Edge& F = base.edge(f);
    const Vec2<Real>& A = base.vertex(E.a).position;
    const Vec2<Real>& B = base.vertex(E.b).position;
    const Vec2<Real>& C = base.vertex(F.a).position;
    const Vec2<Real>& D = base.vertex(F.b).position;
    Vec2<Real> de = B - A, df = D - C;
    Real le = norm(de), lf = norm(df);
    Real sin_angle = cross(de, df) / (le * lf);
    const bool share = E.a == F.a || E.a == F.b || E.b == F.a || E.b == F.b;

    if (abs(sin_angle) <= snap) {
      // parallel: only collinear overlaps matter
      if (abs(cross(de, C - A)) / le > snap || abs(cross(de, D - A)) / le > snap) continue;
      auto inside = [&](const Vec2<Real>& p, const Vec2<Real>& o, const Vec2<Real>& d, const Real& l) {
        Real t = dot(p - o, d) / l;
        return t > snap && t < l - snap;
      };
      if (inside(C, A, de, le)) splits[e].push_back(F.a);
      if (inside(D, A, de, le)) splits[e].push_back(F.b);
      if (inside(A, C, df, lf)) splits[f].push_back(E.a);
      if (inside(B, C, df, lf)) splits[f].push_back(E.b);
      continue;
    }

    Real s, t;
    if (!line_intersection(A, de, C, df, s, t)) continue;
    Real es = snap / le, et = snap / lf;
    if (s < -es || s > one + es || t < -et || t > one + et) continue;
    Vec2<Real> X = A + de * s;
    auto near_end = [&](const Edge& ed, const Vec2<Real>& p) -> std::size_t {
      if (distance(base.vertex(ed.a).position, p) <= snap) return ed.a;
      if (distance(base.vertex(ed.b).position, p) <= snap) return ed.b;
      return static_cast<std::size_t>(-1);
    };
    std::size_t ve = near_end(E, X), vf = near_end(F, X);
    const std::size_t none = static_cast<std::size_t>(-1);
    if (ve != none && vf != none) continue;
    if (share) continue;  // transversal edges sharing an endpoint meet only there
    if (ve != none) {
      splits[f].push_back(ve);
    } else if (vf != none) {
      splits[e].push_back(vf);
    } else {
      if (s <= zero || s >= one || t <= zero || t >= one) continue;
      std::size_t id = register_point(X);
      splits[e].push_back(id);
      splits[f].push_back(id);
    }
  }

  // 3. rebuild
  PlanarNet<Real> out(in.tolerance());
  for (const auto& v : base.vertices()) out.add_vertex(v.id, v.position, v.kind);
  for (std::size_t i = 0; i < new_points.size(); ++i) {
    std::string id = crossing_prefix + std::to_string(i);
    while (out.contains(id)) id += "'";
    out.add_vertex(id, new_points[i], VertexKind::interior);
  }
  st.crossing_vertices = new_points.size();
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& E = base.edge(e);
    auto& sp = splits[e];
    if (sp.empty()) {
      out.add_edge(E.a, E.b, E.multiplicity, E.role);
      continue;
    }
    ++st.split_edges;
    const Vec2<Real>& A = out.vertex(E.a).position;
    Vec2<Real> d = out.vertex(E.b).position - A;
    std::vector<std::pair<Real, std::size_t>> chain;
    chain.emplace_back(Real(0), E.a);
    for (std::size_t id : sp)
      if (id != E.a && id != E.b) chain.emplace_back(dot(out.vertex(id).position - A, d), id);
    chain.emplace_back(dot(d, d), E.b);
    std::sort(chain.begin() + 1, chain.end() - 1, [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t prev = chain.front().second;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      std::size_t cur = chain[k].second;
      if (cur == prev) continue;
      out.add_edge(prev, cur, E.multiplicity, E.role);
      prev = cur;
    }
  }
  if (stats) *stats = st;
  return out;
}

}  // namespace geonet
