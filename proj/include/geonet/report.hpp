#pragma once

#include <string>

#include "geonet/derivseq.hpp"
#include "geonet/json_io.hpp"
#include "geonet/star.hpp"

namespace geonet {

struct ReportConfig {
  StarConfig star{.layers = 100};
  int lemma_range = 1000;  // angle-window and contraction checks run over 1..lemma_range
  int sequence_length = 100;
};

inline json error_json(const std::exception& e) {
  json j;
  if (auto* ge = dynamic_cast<const Error*>(&e))
    j["code"] = to_string(ge->code());
  else
    j["code"] = "internal";
  j["message"] = e.what();
  return j;
}

template <class Real>
json star_layers_json(const StarState<Real>& s, int digits) {
  json layers = json::array();
  for (const auto& L : s.layers) {
    json j = {{"i", L.index},
              {"case", to_string(L.step)},
              {"alpha_deg", format_real(degrees(L.alpha), digits)},
              {"x", format_real(L.x, digits)},
              {"phi", format_real(L.phi, digits)}};
    if (L.step != StarCase::none) j["beta_deg"] = format_real(degrees(L.beta), digits);
    if (!L.hooks.empty()) j["hooks"] = L.hooks;
    layers.push_back(std::move(j));
  }
  return layers;
}

/// Runs the Star pipeline, lemma checks and derivative-sequence analysis and
/// collects everything in one JSON document. Sub-step failures are recorded
/// and the remaining steps still run.
inline json run_report(const ReportConfig& cfg) {
  json rep;
  json checks = json::object();
  const int digits = cfg.star.digits;
  WorkingPrecision wp(digits);
  rep["config"] = {{"alpha0", cfg.star.alpha0},
                   {"phi", cfg.star.phi},
                   {"layers", cfg.star.layers},
                   {"digits", digits},
                   {"working_digits", cfg.star.working_digits()},
                   {"lemma_range", cfg.lemma_range},
                   {"sequence_length", cfg.sequence_length}};
  BigReal alpha0;
  try {
    alpha0 = parse_angle<BigReal>(cfg.star.alpha0);
    if (!(alpha0 > BigReal(4) * pi<BigReal>() / BigReal(3) && alpha0 < BigReal(2) * pi<BigReal>()))
      throw Error(ErrorCode::invalid_argument, "alpha0 must lie in (240, 360) degrees");
    if (cfg.star.layers < 0 || cfg.lemma_range < 1 || cfg.sequence_length < 1)
      throw Error(ErrorCode::invalid_argument, "counts must be positive");
  } catch (const std::exception& e) {
    rep["error"] = error_json(e);
    rep["ok"] = false;
    return rep;
  }
  const BigReal guard = scaled_tolerance<BigReal>(digits, 3);

  try {
    ArrangementStats<BigReal> st;
    StarState<BigReal> s = build_star<BigReal>(cfg.star);
    PlanarNet<BigReal> net = star_net(s, &st);
    auto v = validate(net);
    auto ov = detect_overlaps(net, OverlapTolerance<BigReal>::for_digits(digits));
    auto counts = star_counts(s, net, st);
    json js;
    js["layers"] = star_layers_json(s, 12);
    js["counts"] = {{"boundary", counts.boundary},
                    {"layer_vertices", counts.layer_vertices},
                    {"balanced_layer_vertices", counts.balanced_layer_vertices},
                    {"fermat_vertices", counts.fermat_vertices},
                    {"crossing_vertices", counts.crossing_vertices},
                    {"merged_vertices", counts.merged_vertices},
                    {"vertices", net.vertex_count()},
                    {"edges", net.edge_count()}};
    js["validation"] = {{"ok", v.ok()},
                        {"max_interior_residual", format_real(v.max_interior_residual, 6)},
                        {"unbalanced", v.unbalanced.size()},
                        {"outside_hull", v.outside_hull.size()},
                        {"boundary_edges", v.boundary_edges.size()},
                        {"components", v.components}};
    js["length"] = format_real(length(net), digits);
    if (v.balanced()) js["length_via_imbalance"] = format_real(length_via_imbalance(net), digits);
    json groups = overlaps_to_json(ov);
    js["overlaps"] = {{"groups", ov.groups.size()},
                      {"grouped_edges", ov.grouped_edges()},
                      {"suspension", ov.has_role(EdgeRole::suspension)},
                      {"hook", ov.has_role(EdgeRole::hook)},
                      {"layer", ov.has_role(EdgeRole::layer)}};
    // G_0 is the bare 14-gon, every edge of which joins two boundary vertices
    if (s.n() > 0) checks["star_validates"] = v.ok();
    checks["star_14_boundary_vertices"] = counts.boundary == 14;
    if (s.phi == BigReal(0)) {
      auto cc = geometric_vs_analytic_crosscheck(s);
      js["crosscheck"] = {{"max_alpha_dev", format_real(cc.max_alpha_dev, 6)}, {"max_x_dev", format_real(cc.max_x_dev, 6)}};
      checks["geometric_matches_analytic"] = cc.max_alpha_dev <= scaled_tolerance<BigReal>(digits, 2) &&
                                             cc.max_x_dev <= scaled_tolerance<BigReal>(digits, 2);
    } else {
      checks["deviated_net_has_no_overlaps"] = ov.empty();
    }
    rep["star"] = std::move(js);
  } catch (const std::exception& e) {
    rep["star"] = {{"error", error_json(e)}};
    checks["star_builds"] = false;
  }

  try {
    auto seq = alpha_beta_x_sequences(alpha0, cfg.lemma_range + 10, guard);
    auto win = angle_window_check(seq, 1, cfg.lemma_range);
    json jl;
    jl["alpha_deg_range"] = {win.alpha_min_deg, win.alpha_max_deg};
    jl["beta_deg_range"] = {win.beta_min_deg, win.beta_max_deg};
    jl["x_max"] = win.x_max;
    jl["first_violation"] = win.first_violation;
    checks["angle_window"] = win.ok;
    checks["x_below_one"] = win.x_below_one;
    if (seq.size() > 9) {
      jl["x9"] = format_real(seq.x[9], 15);
      jl["alpha9_deg"] = format_real(degrees(seq.alpha[9]), 15);
      checks["x9_below_0.7"] = seq.x[9] < BigReal(7) / BigReal(10);
      checks["alpha9_in_180_190"] = seq.alpha[9] > pi<BigReal>() && seq.alpha[9] < radians(BigReal(190));
      auto cs = contraction_sweep(seq, 9, cfg.lemma_range);
      jl["contraction"] = {{"ok", cs.ok}, {"loops", cs.steps.size()}, {"failure", cs.failure}};
      checks["contraction_claim"] = cs.ok;
    }
    rep["lemmas"] = std::move(jl);
  } catch (const std::exception& e) {
    rep["lemmas"] = {{"error", error_json(e)}};
    checks["lemmas"] = false;
  }

  try {
    auto ds = derivative_sequence(alpha0, cfg.sequence_length, guard);
    auto g = gap_analysis(ds.phi_prime());
    rep["derivseq"] = {{"min_gap", format_real(g.min_gap, 15)},
                       {"argmin", {g.argmin.first, g.argmin.second}},
                       {"min_gap_even", format_real(g.min_gap_even, 15)},
                       {"argmin_even", {g.argmin_even.first, g.argmin_even.second}},
                       {"min_gap_odd", format_real(g.min_gap_odd, 15)},
                       {"argmin_odd", {g.argmin_odd.first, g.argmin_odd.second}},
                       {"log10_growth_slope", g.growth_slope},
                       {"last", format_real(ds.rows.back().phi_prime, 15)}};
    checks["derivative_values_distinct"] = g.distinct;
    checks["log_magnitude_grows"] = g.growth_slope > 0;
  } catch (const std::exception& e) {
    rep["derivseq"] = {{"error", error_json(e)}};
    checks["derivseq"] = false;
  }

  bool ok = true;
  for (auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
  rep["checks"] = checks;
  rep["ok"] = ok;
  return rep;
}

}  // namespace geonet
