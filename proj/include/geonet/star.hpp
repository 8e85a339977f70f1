#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "geonet/arrangement.hpp"
#include "geonet/fermat.hpp"
#include "geonet/identities.hpp"
#include "geonet/overlaps.hpp"
#include "geonet/sequences.hpp"
#include "geonet/wing.hpp"

namespace geonet {

struct StarConfig {
  std::string alpha0 = "88/21";  // radians, "p/q", decimal or "...deg"
  std::string phi = "0";         // deviation angle
  int layers = 0;                // n: layers V_0..V_n
  int digits = 50;               // requested precision; tolerances derive from it
  int guard_digits = -1;         // extra working digits, -1 = automatic

  /// Round-off that breaks the reflection symmetry is amplified by roughly
  /// 10^0.62 per layer, so the engine carries extra digits.
  int working_digits() const {
    int guard = guard_digits >= 0 ? guard_digits : static_cast<int>(std::ceil(0.65 * layers)) + 10;
    return digits + guard;
  }
};

enum class StarCase { none, A, B1, B2 };

inline const char* to_string(StarCase c) {
  switch (c) {
    case StarCase::none: return "none";
    case StarCase::A: return "A";
    case StarCase::B1: return "B1";
    case StarCase::B2: return "B2";
  }
  return "none";
}

template <class Real>
struct LayerRecord {
  int index = 0;
  std::array<Vec2<Real>, 7> vertices;
  StarCase step = StarCase::none;  // how this layer was winged to produce the next one
  Real alpha;                      // incoming angle
  Real beta;                       // wing angle, set once winged
  Real x;                          // radius of vertex 0
  Real phi;                        // measured suspension angle
  std::vector<std::string> hooks;  // ids of hook vertices used by vertex 0
  std::optional<Vec2<Real>> fermat;
};

template <class Real>
struct StarState {
  StarConfig config;
  Real alpha0, phi, outer_radius;
  Real tolerance;  // balance tolerance of the requested precision
  Real guard;      // dispatch guard
  std::array<Vec2<Real>, 7> outer;
  std::vector<LayerRecord<Real>> layers;
  PlanarNet<Real> net;  // raw construction: crossing edges are not split

  int n() const { return static_cast<int>(layers.size()) - 1; }
};

namespace detail {

inline std::string layer_id(int i, int k) { return "L" + std::to_string(i) + "_" + std::to_string(k); }
inline std::string outer_id(int k) { return "P" + std::to_string(((k % 7) + 7) % 7); }

template <class Real>
const std::array<Rotation<Real>, 7>& sector_rotations() {
  // recomputed whenever the working precision changes
  thread_local std::optional<std::array<Rotation<Real>, 7>> cache;
  thread_local int cached_digits = -1;
  if (!cache || cached_digits != RealTraits<Real>::digits()) {
    const Real step = Real(2) * pi<Real>() / Real(7);
    cache.emplace(std::array<Rotation<Real>, 7>{Rotation<Real>(Real(0)), Rotation<Real>(step), Rotation<Real>(step * Real(2)),
                                                Rotation<Real>(step * Real(3)), Rotation<Real>(step * Real(4)),
                                                Rotation<Real>(step * Real(5)), Rotation<Real>(step * Real(6))});
    cached_digits = RealTraits<Real>::digits();
  }
  return *cache;
}

template <class Real>
std::array<Vec2<Real>, 7> replicate(const Vec2<Real>& v) {
  const auto& rot = sector_rotations<Real>();
  std::array<Vec2<Real>, 7> out;
  out[0] = v;
  for (int k = 1; k < 7; ++k) out[k] = rot[k](v);
  return out;
}

template <class Real>
Vec2<Real> outer_apex(const StarState<Real>& s, int k) {
  return equilateral_apex(s.outer[k % 7], s.outer[(k + 1) % 7], Vec2<Real>{Real(0), Real(0)});
}

/// Suspension angle of vertex 0 of layer i: measured at the apex X of the
/// hook pair for even i and at the single hook P for odd i.
template <class Real>
Real suspension_angle(const StarState<Real>& s, int i, const Vec2<Real>& v) {
  const Vec2<Real> origin{Real(0), Real(0)};
  if (i % 2 == 0) {
    Vec2<Real> x = outer_apex(s, i / 2);
    return signed_angle(origin - x, v - x);
  }
  const Vec2<Real>& p = s.outer[((i + 1) / 2) % 7];
  return signed_angle(origin - p, v - p);
}

template <class Real>
int bisection_steps() {
  return static_cast<int>(std::ceil(RealTraits<Real>::digits() * 3.3219280948873623)) + 16;
}

}  // namespace detail

/// Places layer 0. For the outer pair (P0, P1) with external apex X, the
/// segment XO is rotated about X by phi and v is the point on it where the
/// angle PvQ (inside the triangle) equals 2pi - alpha0.
template <class Real>
StarState<Real> build_inner_circle(const StarConfig& cfg) {
  if (cfg.layers < 0) throw Error(ErrorCode::invalid_argument, "layer count must be non-negative");
  if (cfg.digits < 5) throw Error(ErrorCode::invalid_argument, "star construction needs at least 5 digits");
  StarState<Real> s;
  s.config = cfg;
  s.alpha0 = parse_angle<Real>(cfg.alpha0);
  s.phi = parse_angle<Real>(cfg.phi);
  const Real p = pi<Real>();
  if (!(s.alpha0 > Real(4) * p / Real(3) && s.alpha0 < Real(2) * p))
    throw Error(ErrorCode::invalid_argument, "alpha0 must lie in (240, 360) degrees");
  s.tolerance = scaled_tolerance<Real>(cfg.digits, 2);
  s.guard = scaled_tolerance<Real>(cfg.digits, 3);
  s.net = PlanarNet<Real>(s.tolerance);

  // outer radius chosen so that the symmetric inner circle has radius 1
  s.outer_radius = sin(s.alpha0 / Real(2)) / sin(p / Real(7) + s.alpha0 / Real(2));
  s.outer = detail::replicate(Vec2<Real>{s.outer_radius, Real(0)});
  for (int k = 0; k < 7; ++k) s.net.add_vertex(detail::outer_id(k), s.outer[k], VertexKind::boundary);

  const Vec2<Real>& P = s.outer[0];
  const Vec2<Real>& Q = s.outer[1];
  const Vec2<Real> origin{Real(0), Real(0)};
  Vec2<Real> X = detail::outer_apex(s, 0);
  Vec2<Real> d = rotate(origin - X, s.phi);
  Real t_line, u;
  if (!line_intersection(X, d, P, Q - P, t_line, u) || !(t_line > Real(0) && t_line < Real(1)))
    throw Error(ErrorCode::no_intersection, "rotated segment XO does not cross PQ (|phi| too large)");
  const Real target = Real(2) * p - s.alpha0;
  auto angle_at = [&](const Real& t) {
    Vec2<Real> v = X + d * t;
    return angle_between(P - v, Q - v);
  };
  Real lo = t_line, hi(1);
  if (!(angle_at(hi) < target))
    throw Error(ErrorCode::no_intersection, "no point on the rotated segment sees PQ at the required angle");
  for (int it = 0, steps = detail::bisection_steps<Real>(); it < steps; ++it) {
    Real mid = (lo + hi) / Real(2);
    if (angle_at(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  Vec2<Real> v = X + d * ((lo + hi) / Real(2));

  LayerRecord<Real> L;
  L.index = 0;
  L.vertices = detail::replicate(v);
  L.x = norm(v);
  L.alpha = ccw_angle(unit(Q - v), unit(P - v));
  L.phi = detail::suspension_angle(s, 0, v);
  for (int k = 0; k < 7; ++k) {
    s.net.add_vertex(detail::layer_id(0, k), L.vertices[k], VertexKind::boundary);
    s.net.add_edge(detail::layer_id(0, k), detail::outer_id(k), 1, EdgeRole::layer);
    s.net.add_edge(detail::layer_id(0, k), detail::outer_id(k + 1), 1, EdgeRole::layer);
  }
  s.layers.push_back(std::move(L));
  return s;
}

/// Wings the newest layer and intersects neighbouring wings to place the next one.
template <class Real>
void advance_layer(StarState<Real>& s) {
  const int i = s.n();
  LayerRecord<Real>& cur = s.layers.back();
  const Vec2<Real>& v = cur.vertices[0];
  const Vec2<Real> a = i == 0 ? s.outer[0] : s.layers[i - 1].vertices[0];
  const Vec2<Real> b = i == 0 ? s.outer[1] : s.layers[i - 1].vertices[1];
  const Vec2<Real> ua = unit(a - v), ub = unit(b - v);
  const Real p = pi<Real>();
  const std::string tag = "layer " + std::to_string(i);

  if (abs(cur.alpha - p) <= s.guard)
    throw Error(ErrorCode::dispatch_ambiguous, tag + ": incoming angle is within the guard of pi");

  WingResult<Real> w;
  std::string hook_p, hook_q;
  if (cur.alpha > p) {
    cur.step = StarCase::A;
    w = wing_degree2(ua, ub, s.guard);
  } else if (i % 2 == 0) {
    cur.step = StarCase::B1;
    const int k = i / 2;
    auto f = fermat_point_two_hook(s.outer[k % 7], s.outer[(k + 1) % 7], v, s.guard);
    cur.fermat = f.point;
    hook_p = detail::outer_id(k);
    hook_q = detail::outer_id(k + 1);
    w = wing_degree3(ua, ub, unit(f.point - v), s.guard);
  } else {
    cur.step = StarCase::B2;
    const int k = (i + 1) / 2;
    hook_p = detail::outer_id(k);
    w = wing_degree3(ua, ub, unit(s.outer[k % 7] - v), s.guard);
  }
  cur.beta = w.beta;

  const Vec2<Real>& ccw = cross(v, w.first) > Real(0) ? w.first : w.second;
  const Vec2<Real>& cw = cross(v, w.first) > Real(0) ? w.second : w.first;
  const auto& rot = detail::sector_rotations<Real>();
  Vec2<Real> v1 = cur.vertices[1], cw1 = rot[1](cw);
  Real s_par, t_par;
  if (!line_intersection(v, ccw, v1, cw1, s_par, t_par) || !(s_par > Real(0) && t_par > Real(0)))
    throw Error(ErrorCode::no_intersection, tag + ": neighbouring wings do not meet s=" + format_real(s_par, 6) + " t=" + format_real(t_par, 6));
  Vec2<Real> next = v + ccw * s_par;

  LayerRecord<Real> L;
  L.index = i + 1;
  L.vertices = detail::replicate(next);
  L.x = norm(next);
  L.alpha = ccw_angle(unit(v1 - next), unit(v - next));
  L.phi = detail::suspension_angle(s, i + 1, next);

  // record hooks and grow the raw net
  for (int k = 0; k < 7; ++k) s.net.set_kind(s.net.index_of(detail::layer_id(i, k)), VertexKind::interior);
  if (cur.step == StarCase::B1) {
    const auto fs = detail::replicate(*cur.fermat);
    for (int k = 0; k < 7; ++k) {
      std::string fid = "F" + std::to_string(i) + "_" + std::to_string(k);
      int shift = (k + i / 2) % 7;  // vertex k hooks onto the outer pair rotated by k
      s.net.add_vertex(fid, fs[k], VertexKind::interior);
      s.net.add_edge(detail::layer_id(i, k), fid, 1, EdgeRole::suspension);
      s.net.add_edge(fid, detail::outer_id(shift), 1, EdgeRole::hook);
      s.net.add_edge(fid, detail::outer_id(shift + 1), 1, EdgeRole::hook);
    }
    cur.hooks = {"F" + std::to_string(i) + "_0", hook_p, hook_q};
  } else if (cur.step == StarCase::B2) {
    for (int k = 0; k < 7; ++k)
      s.net.add_edge(detail::layer_id(i, k), detail::outer_id(k + (i + 1) / 2), 1, EdgeRole::suspension);
    cur.hooks = {hook_p};
  }
  for (int k = 0; k < 7; ++k) {
    s.net.add_vertex(detail::layer_id(i + 1, k), L.vertices[k], VertexKind::boundary);
    s.net.add_edge(detail::layer_id(i, k), detail::layer_id(i + 1, k), 1, EdgeRole::layer);
    s.net.add_edge(detail::layer_id(i, (k + 1) % 7), detail::layer_id(i + 1, k), 1, EdgeRole::layer);
  }
  s.layers.push_back(std::move(L));
}

/// Builds G_n(phi). Runs at the config's working precision with guard digits;
/// the caller's precision is restored on return.
template <class Real>
StarState<Real> build_star(const StarConfig& cfg) {
  auto run = [&] {
    StarState<Real> s = build_inner_circle<Real>(cfg);
    for (int i = 0; i < cfg.layers; ++i) advance_layer(s);
    return s;
  };
  if constexpr (is_big_real_v<Real>) {
    WorkingPrecision wp(cfg.working_digits());
    return run();
  } else {
    return run();
  }
}

/// The embedded net: coincident vertices merged and crossings materialized.
template <class Real>
PlanarNet<Real> star_net(const StarState<Real>& s, ArrangementStats<Real>* stats = nullptr) {
  return materialize_crossings(s.net, scaled_tolerance<Real>(s.config.digits, 3), stats);
}

template <class Real>
std::vector<Real> measure_suspension_angles(const StarState<Real>& s) {
  std::vector<Real> out;
  for (const auto& L : s.layers) out.push_back(L.phi);
  return out;
}

template <class Real>
struct CrosscheckResult {
  Real max_alpha_dev;
  Real max_x_dev;
  int worst_alpha_layer = 0;
  int worst_x_layer = 0;
};

/// Compares measured incoming angles and layer radii with the analytic
/// symmetric-case recursion.
template <class Real>
CrosscheckResult<Real> geometric_vs_analytic_crosscheck(const StarState<Real>& s) {
  auto seq = alpha_beta_x_sequences(s.alpha0, s.n(), s.guard);
  CrosscheckResult<Real> r{Real(0), Real(0), 0, 0};
  for (int i = 0; i <= s.n(); ++i) {
    Real da = abs(s.layers[i].alpha - seq.alpha[i]);
    Real dx = abs(s.layers[i].x - seq.x[i]);
    if (da > r.max_alpha_dev) r.max_alpha_dev = da, r.worst_alpha_layer = i;
    if (dx > r.max_x_dev) r.max_x_dev = dx, r.worst_x_layer = i;
  }
  return r;
}

/// Counts of the pieces of G_n(phi).
struct StarCounts {
  std::size_t boundary = 0;
  std::size_t layer_vertices = 0;           // all layers
  std::size_t balanced_layer_vertices = 0;  // layers 0..n-1
  std::size_t fermat_vertices = 0;
  std::size_t crossing_vertices = 0;        // created when materializing
  std::size_t merged_vertices = 0;
};

template <class Real>
StarCounts star_counts(const StarState<Real>& s, const PlanarNet<Real>& embedded, const ArrangementStats<Real>& st) {
  StarCounts c;
  c.boundary = embedded.boundary_count();
  c.layer_vertices = 7 * s.layers.size();
  c.balanced_layer_vertices = 7 * (s.layers.size() - 1);
  for (const auto& L : s.layers) c.fermat_vertices += L.fermat ? 7 : 0;
  c.crossing_vertices = st.crossing_vertices;
  c.merged_vertices = st.merged_vertices;
  return c;
}

}  // namespace geonet
