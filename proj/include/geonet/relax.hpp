#pragma once

#include <map>
#include <string>
#include <vector>

#include "geonet/identities.hpp"

namespace geonet {

template <class Real>
struct RelaxVertex {
  std::string id;
  Vec2<Real> position;  // fixed for pinned vertices, initial guess otherwise
  bool pinned = false;
};

struct RelaxEdge {
  std::string a, b;
  int multiplicity = 1;
};

template <class Real>
struct RelaxProblem {
  std::vector<RelaxVertex<Real>> vertices;
  std::vector<RelaxEdge> edges;
  int max_iterations = 20000;
  Real gradient_tolerance;  // stop when every free vertex has |grad| below this
  Real merge_threshold;     // 0 selects 1e-9 x diameter
  Real armijo = Real(1) / Real(10000);
};

enum class RelaxEventKind { edge_collapse, vertex_merge };

inline const char* to_string(RelaxEventKind k) {
  return k == RelaxEventKind::edge_collapse ? "edge_collapse" : "vertex_merge";
}

struct RelaxEvent {
  RelaxEventKind kind;
  int iteration = 0;
  std::string a, b;  // merged: b absorbed into a
};

template <class Real>
struct RelaxTrace {
  int iterations = 0;
  bool converged = false;
  std::vector<Real> lengths;  // objective after each iteration, entry 0 is the start
  std::vector<RelaxEvent> events;
  PlanarNet<Real> net;
  Real gradient_norm;
};

namespace detail {

template <class Real>
struct RelaxGraph {
  std::vector<std::string> ids;
  std::vector<Vec2<Real>> pos;
  std::vector<bool> pinned;
  std::vector<bool> alive;
  struct E {
    std::size_t a, b;
    int m;
    bool alive;
  };
  std::vector<E> edges;

  Real objective(const std::vector<Vec2<Real>>& p) const {
    Real f(0);
    for (const auto& e : edges)
      if (e.alive) f += Real(e.m) * distance(p[e.a], p[e.b]);
    return f;
  }

  /// Gradient of the length with respect to free positions. Coincident
  /// endpoints contribute nothing (the zero subgradient of |x|).
  std::vector<Vec2<Real>> gradient(const std::vector<Vec2<Real>>& p) const {
    std::vector<Vec2<Real>> g(p.size(), Vec2<Real>{Real(0), Real(0)});
    for (const auto& e : edges) {
      if (!e.alive) continue;
      Vec2<Real> d = p[e.a] - p[e.b];
      Real len = norm(d);
      if (len == Real(0)) continue;
      Vec2<Real> u = d * (Real(e.m) / len);
      g[e.a] += u;
      g[e.b] -= u;
    }
    for (std::size_t v = 0; v < p.size(); ++v)
      if (pinned[v] || !alive[v]) g[v] = {Real(0), Real(0)};
    return g;
  }
};

}  // namespace detail

/// Gradient descent with backtracking on the total length, boundary vertices
/// pinned. Edges shorter than the merge threshold are collapsed and their
/// endpoints merged, with pinned vertices absorbing free ones.
template <class Real>
RelaxTrace<Real> relax(const RelaxProblem<Real>& pb) {
  detail::RelaxGraph<Real> G;
  std::map<std::string, std::size_t> index;
  bool any_pinned = false;
  for (const auto& v : pb.vertices) {
    if (!index.emplace(v.id, G.ids.size()).second) throw Error(ErrorCode::duplicate_vertex, "duplicate vertex id '" + v.id + "'");
    G.ids.push_back(v.id);
    G.pos.push_back(v.position);
    G.pinned.push_back(v.pinned);
    G.alive.push_back(true);
    any_pinned = any_pinned || v.pinned;
  }
  if (!any_pinned) throw Error(ErrorCode::invalid_argument, "relax needs at least one pinned vertex");
  for (const auto& e : pb.edges) {
    auto ia = index.find(e.a), ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) throw Error(ErrorCode::unknown_vertex, "edge refers to an unknown vertex");
    if (ia->second == ib->second || e.multiplicity < 1) throw Error(ErrorCode::invalid_argument, "invalid edge");
    G.edges.push_back({ia->second, ib->second, e.multiplicity, true});
  }
  {
    std::vector<std::size_t> parent(G.ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : G.edges) parent[find(e.a)] = find(e.b);
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) != find(0)) throw Error(ErrorCode::invalid_argument, "relax problem graph is disconnected");
  }

  Real diameter(0);
  for (std::size_t i = 0; i < G.pos.size(); ++i)
    for (std::size_t j = i + 1; j < G.pos.size(); ++j) diameter = std::max(diameter, distance(G.pos[i], G.pos[j]));
  const Real merge = pb.merge_threshold > Real(0) ? pb.merge_threshold : diameter / Real(1000000000);
  const Real gtol = pb.gradient_tolerance;

  RelaxTrace<Real> tr;
  auto gnorm = [&](const std::vector<Vec2<Real>>& g) {
    Real worst(0);
    for (const auto& x : g) worst = std::max(worst, norm(x));
    return worst;
  };
  auto collapse_short_edges = [&](int it) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& e : G.edges) {
        if (!e.alive || distance(G.pos[e.a], G.pos[e.b]) > merge) continue;
        std::size_t keep = e.a, gone = e.b;
        if (G.pinned[gone] && !G.pinned[keep]) std::swap(keep, gone);
        if (G.pinned[gone]) continue;  // two pinned vertices stay put
        tr.events.push_back({RelaxEventKind::edge_collapse, it, G.ids[e.a], G.ids[e.b]});
        tr.events.push_back({RelaxEventKind::vertex_merge, it, G.ids[keep], G.ids[gone]});
        G.alive[gone] = false;
        for (auto& f : G.edges) {
          if (!f.alive) continue;
          if (f.a == gone) f.a = keep;
          if (f.b == gone) f.b = keep;
          if (f.a == f.b) f.alive = false;
        }
        changed = true;
        break;
      }
    }
  };

  collapse_short_edges(0);
  Real f = G.objective(G.pos);
  tr.lengths.push_back(f);
  Real step(1);
  int it = 0;
  for (; it < pb.max_iterations; ++it) {
    auto g = G.gradient(G.pos);
    Real gn = gnorm(g);
    tr.gradient_norm = gn;
    if (gn <= gtol) {
      tr.converged = true;
      break;
    }
    Real gg(0);
    for (const auto& x : g) gg += dot(x, x);
    step = step * Real(2);
    bool accepted = false;
    std::vector<Vec2<Real>> trial(G.pos);
    for (int ls = 0; ls < 200; ++ls) {
      for (std::size_t v = 0; v < trial.size(); ++v) trial[v] = G.pos[v] - g[v] * step;
      Real ft = G.objective(trial);
      if (ft <= f - pb.armijo * step * gg) {
        G.pos = trial;
        f = ft;
        accepted = true;
        break;
      }
      step = step / Real(2);
    }
    if (!accepted) break;  // no decrease possible at this precision
    collapse_short_edges(it + 1);
    f = G.objective(G.pos);
    tr.lengths.push_back(f);
  }
  tr.iterations = it;
  if (!tr.converged) {
    tr.gradient_norm = gnorm(G.gradient(G.pos));
    tr.converged = tr.gradient_norm <= gtol;
  }

  tr.net = PlanarNet<Real>(gtol > Real(0) ? gtol * Real(10) : scaled_tolerance<Real>(RealTraits<Real>::digits(), 2));
  std::vector<std::size_t> out_index(G.ids.size());
  for (std::size_t v = 0; v < G.ids.size(); ++v)
    if (G.alive[v]) out_index[v] = tr.net.add_vertex(G.ids[v], G.pos[v], G.pinned[v] ? VertexKind::boundary : VertexKind::interior);
  for (const auto& e : G.edges)
    if (e.alive && !(G.pos[e.a] == G.pos[e.b])) tr.net.add_edge(out_index[e.a], out_index[e.b], e.m);
  return tr;
}

}  // namespace geonet
