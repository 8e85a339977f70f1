#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "geonet/error.hpp"
#include "geonet/vec2.hpp"

namespace geonet {

enum class VertexKind { boundary, interior };

inline const char* to_string(VertexKind k) { return k == VertexKind::boundary ? "boundary" : "interior"; }

/// Provenance of an edge inside a generated net. Only used for diagnostics.
enum class EdgeRole { plain, layer, hook, suspension, wing_extension };

inline const char* to_string(EdgeRole r) {
  switch (r) {
    case EdgeRole::plain: return "plain";
    case EdgeRole::layer: return "layer";
    case EdgeRole::hook: return "hook";
    case EdgeRole::suspension: return "suspension";
    case EdgeRole::wing_extension: return "wing_extension";
  }
  return "plain";
}

template <class Real>
struct Vertex {
  std::string id;
  Vec2<Real> position;
  VertexKind kind = VertexKind::interior;
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  int multiplicity = 1;
  EdgeRole role = EdgeRole::plain;

  std::size_t other(std::size_t v) const { return v == a ? b : a; }
};

/// A straight-line (multi)net in the plane. Vertices are addressed by index
/// internally and by string id at the boundary of the library.
template <class Real>
class PlanarNet {
 public:
  PlanarNet() = default;
  explicit PlanarNet(Real tolerance) : tolerance_(std::move(tolerance)) {}

  std::size_t add_vertex(std::string id, Vec2<Real> position, VertexKind kind) {
    if (!isfinite(position.x) || !isfinite(position.y))
      throw Error(ErrorCode::non_finite, "vertex '" + id + "' has a non-finite coordinate");
    if (index_.count(id)) throw Error(ErrorCode::duplicate_vertex, "duplicate vertex id '" + id + "'");
    std::size_t i = vertices_.size();
    index_.emplace(id, i);
    vertices_.push_back({std::move(id), std::move(position), kind});
    incident_.emplace_back();
    return i;
  }

  std::size_t add_edge(std::size_t a, std::size_t b, int multiplicity = 1, EdgeRole role = EdgeRole::plain) {
    if (a >= vertices_.size() || b >= vertices_.size())
      throw Error(ErrorCode::unknown_vertex, "edge endpoint index out of range");
    if (a == b) throw Error(ErrorCode::degenerate_edge, "edge endpoints coincide at '" + vertices_[a].id + "'");
    if (multiplicity < 1) throw Error(ErrorCode::invalid_argument, "edge multiplicity must be >= 1");
    if (vertices_[a].position == vertices_[b].position)
      throw Error(ErrorCode::degenerate_edge,
                  "zero-length edge '" + vertices_[a].id + "'-'" + vertices_[b].id + "'");
    std::size_t e = edges_.size();
    edges_.push_back({a, b, multiplicity, role});
    incident_[a].push_back(e);
    incident_[b].push_back(e);
    return e;
  }

  std::size_t add_edge(const std::string& a, const std::string& b, int multiplicity = 1,
                       EdgeRole role = EdgeRole::plain) {
    return add_edge(index_of(a), index_of(b), multiplicity, role);
  }

  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::unknown_vertex, "unknown vertex id '" + id + "'");
    return it->second;
  }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  void set_kind(std::size_t v, VertexKind k) { vertices_.at(v).kind = k; }
  void set_multiplicity(std::size_t e, int m) {
    if (m < 1) throw Error(ErrorCode::invalid_argument, "edge multiplicity must be >= 1");
    edges_.at(e).multiplicity = m;
  }

  const std::vector<Vertex<Real>>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex<Real>& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t boundary_count() const {
    std::size_t n = 0;
    for (const auto& v : vertices_) n += v.kind == VertexKind::boundary;
    return n;
  }

  Vec2<Real> edge_vector(std::size_t e) const {
    const Edge& ed = edges_.at(e);
    return vertices_[ed.b].position - vertices_[ed.a].position;
  }

  const Real& tolerance() const { return tolerance_; }
  void set_tolerance(Real t) { tolerance_ = std::move(t); }

 private:
  std::vector<Vertex<Real>> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::unordered_map<std::string, std::size_t> index_;
  Real tolerance_ = scaled_tolerance<Real>(RealTraits<Real>::digits(), 2);
};

}  // namespace geonet
