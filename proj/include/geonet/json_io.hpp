#pragma once

#include <string>

#include "geonet/overlaps.hpp"
#include "geonet/relax.hpp"
#include "json.hpp"

namespace geonet {

using json = nlohmann::json;

namespace detail {

/// Numbers are carried as decimal strings; plain JSON numbers are accepted on input.
template <class Real>
Real real_field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  try {
    if (v.is_string()) return parse_real<Real>(v.get<std::string>());
    if (v.is_number()) return parse_real<Real>(v.dump());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("field '") + key + "': " + e.what());
  }
  throw Error(ErrorCode::parse_error, std::string("field '") + key + "' must be a decimal string");
}

inline EdgeRole role_from_string(const std::string& s) {
  for (EdgeRole r : {EdgeRole::plain, EdgeRole::layer, EdgeRole::hook, EdgeRole::suspension, EdgeRole::wing_extension})
    if (s == to_string(r)) return r;
  throw Error(ErrorCode::parse_error, "unknown edge role '" + s + "'");
}

}  // namespace detail

template <class Real>
json vec_to_json(const Vec2<Real>& v, int digits) {
  return json::array({format_real(v.x, digits), format_real(v.y, digits)});
}

template <class Real>
json net_to_json(const PlanarNet<Real>& net, int digits) {
  json j;
  j["digits"] = digits;
  j["vertices"] = json::array();
  for (const auto& v : net.vertices())
    j["vertices"].push_back({{"id", v.id},
                             {"x", format_real(v.position.x, digits)},
                             {"y", format_real(v.position.y, digits)},
                             {"kind", to_string(v.kind)}});
  j["edges"] = json::array();
  for (const Edge& e : net.edges()) {
    json je = {{"a", net.vertex(e.a).id}, {"b", net.vertex(e.b).id}, {"mult", e.multiplicity}};
    if (e.role != EdgeRole::plain) je["role"] = to_string(e.role);
    j["edges"].push_back(std::move(je));
  }
  return j;
}

/// Reads a net; the tolerance defaults to 1e-(digits/2) of the file's digits.
template <class Real>
PlanarNet<Real> net_from_json(const json& j, std::optional<Real> tolerance = std::nullopt) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(ErrorCode::parse_error, "net JSON needs 'vertices' and 'edges'");
  int digits = j.value("digits", RealTraits<Real>::digits());
  PlanarNet<Real> net(tolerance ? *tolerance : scaled_tolerance<Real>(digits, 2));
  for (const json& v : j.at("vertices")) {
    std::string kind = v.value("kind", "interior");
    if (kind != "boundary" && kind != "interior") throw Error(ErrorCode::parse_error, "vertex kind must be boundary or interior");
    net.add_vertex(v.at("id").get<std::string>(),
                   Vec2<Real>{detail::real_field<Real>(v, "x"), detail::real_field<Real>(v, "y")},
                   kind == "boundary" ? VertexKind::boundary : VertexKind::interior);
  }
  for (const json& e : j.at("edges")) {
    EdgeRole role = e.contains("role") ? detail::role_from_string(e.at("role").get<std::string>()) : EdgeRole::plain;
    net.add_edge(e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.value("mult", 1), role);
  }
  return net;
}

template <class Real>
json validation_to_json(const PlanarNet<Real>& net, const ValidationReport<Real>& rep, int digits) {
  json j;
  j["ok"] = rep.ok();
  j["balanced"] = rep.balanced();
  j["connected"] = rep.connected();
  j["components"] = rep.components;
  j["tolerance"] = format_real(rep.tolerance, 6);
  j["max_interior_residual"] = format_real(rep.max_interior_residual, 6);
  j["unbalanced"] = rep.unbalanced;
  j["outside_hull"] = rep.outside_hull;
  j["boundary_edges"] = json::array();
  for (std::size_t e : rep.boundary_edges)
    j["boundary_edges"].push_back({net.vertex(net.edge(e).a).id, net.vertex(net.edge(e).b).id});
  j["vertices"] = json::array();
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    const auto& r = rep.residuals[i];
    j["vertices"].push_back({{"id", r.vertex},
                             {"kind", to_string(rep.kinds[i])},
                             {"imbalance_vector", vec_to_json(r.vector, digits)},
                             {"imbalance", format_real(r.norm, digits)}});
  }
  j["total_imbalance"] = format_real(total_imbalance(net), digits);
  j["total_imbalance_vector"] = vec_to_json(total_imbalance_vector(net), 6);
  Real len = length(net);
  j["length"] = format_real(len, digits);
  if (rep.balanced()) j["length_via_imbalance"] = format_real(length_via_imbalance(net), digits);
  return j;
}

inline json overlaps_to_json(const OverlapReport& rep) {
  json j;
  j["multinet_by_overlap"] = !rep.empty();
  j["groups"] = json::array();
  for (const auto& g : rep.groups) {
    json roles = json::array();
    for (EdgeRole r : g.roles) roles.push_back(to_string(r));
    j["groups"].push_back({{"edges", g.edges}, {"merged_multiplicity", g.merged_multiplicity}, {"roles", roles}});
  }
  return j;
}

template <class Real>
RelaxProblem<Real> relax_problem_from_json(const json& j) {
  RelaxProblem<Real> pb;
  int digits = j.value("digits", RealTraits<Real>::digits());
  for (const json& v : j.at("vertices"))
    pb.vertices.push_back({v.at("id").get<std::string>(),
                           Vec2<Real>{detail::real_field<Real>(v, "x"), detail::real_field<Real>(v, "y")},
                           v.value("pinned", false)});
  for (const json& e : j.at("edges"))
    pb.edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.value("mult", 1)});
  pb.max_iterations = j.value("max_iterations", pb.max_iterations);
  pb.gradient_tolerance =
      j.contains("gradient_tolerance") ? detail::real_field<Real>(j, "gradient_tolerance") : scaled_tolerance<Real>(digits, 2);
  pb.merge_threshold = j.contains("merge_threshold") ? detail::real_field<Real>(j, "merge_threshold") : Real(0);
  return pb;
}

template <class Real>
json relax_problem_to_json(const RelaxProblem<Real>& pb, int digits) {
  json j;
  j["digits"] = digits;
  for (const auto& v : pb.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"x", format_real(v.position.x, digits)},
                             {"y", format_real(v.position.y, digits)},
                             {"pinned", v.pinned}});
  for (const auto& e : pb.edges) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"mult", e.multiplicity}});
  j["max_iterations"] = pb.max_iterations;
  j["gradient_tolerance"] = format_real(pb.gradient_tolerance, 6);
  j["merge_threshold"] = format_real(pb.merge_threshold, 6);
  return j;
}

template <class Real>
json trace_to_json(const RelaxTrace<Real>& tr, int digits) {
  json j;
  j["iterations"] = tr.iterations;
  j["converged"] = tr.converged;
  j["gradient_norm"] = format_real(tr.gradient_norm, 6);
  j["lengths"] = json::array();
  for (const auto& l : tr.lengths) j["lengths"].push_back(format_real(l, digits));
  j["events"] = json::array();
  for (const auto& e : tr.events)
    j["events"].push_back({{"kind", to_string(e.kind)}, {"iteration", e.iteration}, {"a", e.a}, {"b", e.b}});
  j["net"] = net_to_json(tr.net, digits);
  return j;
}

}  // namespace geonet
