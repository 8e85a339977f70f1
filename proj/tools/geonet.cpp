// Command-line front end for the geonet library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geonet/generators.hpp"
#include "geonet/report.hpp"
#include "geonet/svg.hpp"

using namespace geonet;
using Real = BigReal;

namespace {

struct Globals {
  int digits = 50;
  std::string tolerance;  // empty: 1e-(digits/2)
};

Real tolerance_of(const Globals& g) {
  return g.tolerance.empty() ? scaled_tolerance<Real>(g.digits, 2) : parse_real<Real>(g.tolerance);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void emit_net(const PlanarNet<Real>& net, const Globals& g, const std::string& json_path, const std::string& svg_path) {
  if (!json_path.empty()) write_json(json_path, net_to_json(net, g.digits));
  if (!svg_path.empty()) write_text(svg_path, render_svg(net));
}

void print_validation(const PlanarNet<Real>& net, const ValidationReport<Real>& v) {
  std::cout << "vertices " << net.vertex_count() << " (boundary " << net.boundary_count() << "), edges "
            << net.edge_count() << "\n";
  std::cout << "max interior residual " << format_real(v.max_interior_residual, 6) << " (tolerance "
            << format_real(v.tolerance, 3) << ")\n";
  std::cout << "unbalanced " << v.unbalanced.size() << ", outside hull " << v.outside_hull.size()
            << ", boundary edges " << v.boundary_edges.size() << ", components " << v.components << "\n";
  std::cout << "total imbalance " << format_real(total_imbalance(net), 12) << "\n";
  std::cout << "length " << format_real(length(net), 20) << "\n";
  std::cout << (v.ok() ? "valid" : "INVALID") << "\n";
}

Vec2<Real> parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::parse_error, "point must be written x,y: '" + s + "'");
  return {parse_real<Real>(s.substr(0, comma)), parse_real<Real>(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic nets in the plane: identities, constructions and the Star family"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("GEONET_DIGITS")) g.digits = std::atoi(env);
  app.add_option("--digits", g.digits, "significant decimal digits (env GEONET_DIGITS)")->check(CLI::Range(5, 2000));
  app.add_option("--tolerance", g.tolerance, "balance tolerance, default 1e-(digits/2)");

  // validate
  auto* val = app.add_subcommand("validate", "check balance, hull, boundary-edge rule and connectivity of a net");
  std::string val_net, val_report;
  bool val_overlaps = false;
  val->add_option("--net", val_net, "net JSON")->required();
  val->add_option("--report", val_report, "write the full report as JSON");
  val->add_flag("--overlaps", val_overlaps, "also scan for overlapping edges");

  // gen
  auto* gen = app.add_subcommand("gen", "generate one of the example nets");
  std::string gen_kind, gen_emit, gen_svg, gen_topology = "ab";
  int gen_n = 7, gen_k = 1;
  std::vector<std::string> gen_points;
  gen->add_option("--kind", gen_kind, "y | triangle | polygon | four-point")
      ->required()
      ->check(CLI::IsMember({"y", "triangle", "polygon", "four-point"}));
  gen->add_option("--n", gen_n, "polygon: number of sides")->check(CLI::Range(3, 100000));
  gen->add_option("--k", gen_k, "triangle: number of nested homotheties")->check(CLI::Range(1, 1000));
  gen->add_option("--points", gen_points, "y: three points, four-point: four points, each as x,y");
  gen->add_option("--topology", gen_topology, "four-point: x | ab | bc")->check(CLI::IsMember({"x", "ab", "bc"}));
  gen->add_option("--emit", gen_emit, "write the net as JSON");
  gen->add_option("--svg", gen_svg, "write an SVG drawing");

  // star
  auto* star = app.add_subcommand("star", "build the Star net G_n(phi)");
  StarConfig scfg;
  std::string star_emit, star_svg, star_report;
  bool star_raw = false;
  star->add_option("--layers", scfg.layers, "number of layers n")->check(CLI::Range(0, 100000));
  star->add_option("--phi", scfg.phi, "deviation angle (radians, p/q, or with deg suffix)");
  star->add_option("--alpha0", scfg.alpha0, "seed angle (radians, p/q, or with deg suffix)");
  star->add_option("--guard-digits", scfg.guard_digits, "extra working digits, default grows with n");
  star->add_option("--emit", star_emit, "write the net as JSON");
  star->add_option("--svg", star_svg, "write an SVG drawing");
  star->add_option("--report", star_report, "write per-layer data, overlaps and checks as JSON");
  star->add_flag("--raw", star_raw, "emit the construction without splitting crossing edges");

  // derivseq
  auto* der = app.add_subcommand("derivseq", "evaluate phi_i'(0) and its gap statistics");
  int der_n = 100;
  std::string der_alpha0 = "88/21", der_csv, der_gap;
  der->add_option("--n", der_n, "last index")->check(CLI::Range(1, 1000000));
  der->add_option("--alpha0", der_alpha0, "seed angle");
  der->add_option("--csv", der_csv, "write the sequence as CSV");
  der->add_option("--gap", der_gap, "write the gap report as JSON");

  // relax
  auto* rel = app.add_subcommand("relax", "minimize length over free vertex positions");
  std::string rel_problem, rel_trace, rel_emit;
  rel->add_option("--problem", rel_problem, "problem JSON")->required();
  rel->add_option("--trace", rel_trace, "write the trace as JSON");
  rel->add_option("--emit", rel_emit, "write the final net as JSON");

  // render
  auto* ren = app.add_subcommand("render", "draw a net as SVG");
  std::string ren_net, ren_svg;
  RenderStyle style;
  ren->add_option("--net", ren_net, "net JSON")->required();
  ren->add_option("--svg", ren_svg, "output SVG")->required();
  ren->add_option("--canvas", style.canvas, "canvas size in px");
  ren->add_option("--stroke", style.stroke, "width of a multiplicity-1 edge");
  ren->add_option("--decimals", style.decimals, "decimal places of coordinates")->check(CLI::Range(0, 12));
  ren->add_flag("--labels", style.labels, "label boundary vertices");

  // report
  auto* rpt = app.add_subcommand("report", "run the full pipeline and summarize it as JSON");
  ReportConfig rcfg;
  std::string rpt_out;
  rpt->add_option("--layers", rcfg.star.layers, "Star layers")->check(CLI::Range(0, 100000));
  rpt->add_option("--phi", rcfg.star.phi, "deviation angle");
  rpt->add_option("--alpha0", rcfg.star.alpha0, "seed angle");
  rpt->add_option("--lemma-range", rcfg.lemma_range, "index range of the lemma checks");
  rpt->add_option("--sequence-length", rcfg.sequence_length, "last index of the derivative sequence");
  rpt->add_option("--out", rpt_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    WorkingPrecision wp(g.digits);

    if (*val) {
      auto net = net_from_json<Real>(read_json(val_net), tolerance_of(g));
      auto v = validate(net);
      print_validation(net, v);
      bool ok = v.ok();
      json j = validation_to_json(net, v, g.digits);
      if (val_overlaps) {
        auto ov = detect_overlaps(net, OverlapTolerance<Real>::for_digits(g.digits));
        std::cout << "overlap groups " << ov.groups.size() << (is_multinet(net, ov) ? " (multinet)" : "") << "\n";
        j["overlaps"] = overlaps_to_json(ov);
      }
      if (!val_report.empty()) write_json(val_report, j);
      return ok ? 0 : 1;
    }

    if (*gen) {
      const Real tol = tolerance_of(g);
      PlanarNet<Real> net;
      if (gen_kind == "y") {
        std::vector<Vec2<Real>> p;
        for (const auto& s : gen_points) p.push_back(parse_point(s));
        if (p.empty()) p = {polar(Real(1), pi<Real>() / Real(2)), polar(Real(1), Real(7) * pi<Real>() / Real(6)),
                            polar(Real(1), Real(11) * pi<Real>() / Real(6))};
        if (p.size() != 3) throw Error(ErrorCode::invalid_argument, "y needs exactly three points");
        net = y_net(p[0], p[1], p[2], tol);
      } else if (gen_kind == "triangle") {
        net = build_weighted_triangle(WeightedTriangleSpec::pythagorean(gen_k), tol);
      } else if (gen_kind == "polygon") {
        net = build_double_polygon(gen_n, tol);
      } else {
        std::array<Vec2<Real>, 4> q{Vec2<Real>{Real(0), Real(0)}, {Real(1), Real(0)}, {Real(1), Real(1)}, {Real(0), Real(1)}};
        if (!gen_points.empty()) {
          if (gen_points.size() != 4) throw Error(ErrorCode::invalid_argument, "four-point needs exactly four points");
          for (int i = 0; i < 4; ++i) q[i] = parse_point(gen_points[i]);
        }
        auto nets = build_four_point_trees(q, tol);
        if (gen_topology == "x") {
          net = nets.x_net;
        } else {
          auto& t = gen_topology == "ab" ? nets.tree_ab : nets.tree_bc;
          if (!t) throw Error(ErrorCode::precondition, gen_topology == "ab" ? nets.tree_ab_error : nets.tree_bc_error);
          net = *t;
        }
      }
      auto v = validate(net);
      print_validation(net, v);
      emit_net(net, g, gen_emit, gen_svg);
      return v.ok() ? 0 : 1;
    }

    if (*star) {
      scfg.digits = g.digits;
      auto s = build_star<Real>(scfg);
      ArrangementStats<Real> st;
      PlanarNet<Real> net = star_raw ? s.net : star_net(s, &st);
      auto v = validate(net);
      auto ov = detect_overlaps(net, OverlapTolerance<Real>::for_digits(g.digits));
      std::cout << "G_" << s.n() << "(" << scfg.phi << "), working digits " << scfg.working_digits() << "\n";
      for (const auto& L : s.layers)
        std::cout << "  layer " << L.index << "  case " << to_string(L.step) << "  alpha " << format_real(degrees(L.alpha), 12)
                  << " deg  x " << format_real(L.x, 12) << "  phi " << format_real(L.phi, 6) << "\n";
      print_validation(net, v);
      std::cout << "crossing vertices " << st.crossing_vertices << ", merged vertices " << st.merged_vertices
                << ", overlap groups " << ov.groups.size() << "\n";
      emit_net(net, g, star_emit, star_svg);
      if (!star_report.empty()) {
        json j;
        j["layers"] = star_layers_json(s, g.digits);
        j["validation"] = validation_to_json(net, v, g.digits);
        j["overlaps"] = overlaps_to_json(ov);
        j["crossing_vertices"] = st.crossing_vertices;
        j["merged_vertices"] = st.merged_vertices;
        if (s.phi == Real(0)) {
          auto cc = geometric_vs_analytic_crosscheck(s);
          j["crosscheck"] = {{"max_alpha_dev", format_real(cc.max_alpha_dev, 6)}, {"max_x_dev", format_real(cc.max_x_dev, 6)}};
        }
        write_json(star_report, j);
      }
      return v.ok() ? 0 : 1;
    }

    if (*der) {
      const Real guard = scaled_tolerance<Real>(g.digits, 3);
      auto ds = derivative_sequence(parse_angle<Real>(der_alpha0), der_n, guard);
      auto gap = gap_analysis(ds.phi_prime());
      if (!der_csv.empty()) {
        std::ostringstream csv;
        csv << "i,phi_prime,alpha_i,x_i,tau_i,sigma_i,a_i,b_i,c_i\n";
        for (std::size_t i = 0; i < ds.rows.size(); ++i) {
          const auto& r = ds.rows[i];
          // sigma_i is produced by the step from i - 1; there is none for i = 0
          std::string sigma = i == 0 ? "" : format_real(ds.rows[i - 1].coef.sigma_next, g.digits);
          csv << r.i << "," << format_real(r.phi_prime, g.digits) << "," << format_real(r.alpha, g.digits) << ","
              << format_real(r.x, g.digits) << "," << format_real(r.coef.tau, g.digits) << "," << sigma << ","
              << format_real(r.coef.a, g.digits) << "," << format_real(r.coef.b, g.digits) << ","
              << format_real(r.coef.c, g.digits) << "\n";
        }
        write_text(der_csv, csv.str());
      }
      json j = {{"n", der_n},
                {"digits", g.digits},
                {"min_gap", format_real(gap.min_gap, g.digits)},
                {"argmin", {gap.argmin.first, gap.argmin.second}},
                {"min_gap_even", format_real(gap.min_gap_even, g.digits)},
                {"argmin_even", {gap.argmin_even.first, gap.argmin_even.second}},
                {"min_gap_odd", format_real(gap.min_gap_odd, g.digits)},
                {"argmin_odd", {gap.argmin_odd.first, gap.argmin_odd.second}},
                {"log10_growth_slope", gap.growth_slope},
                {"distinct", gap.distinct}};
      if (!der_gap.empty()) write_json(der_gap, j);
      std::cout << j.dump(2) << "\n";
      return gap.distinct ? 0 : 1;
    }

    if (*rel) {
      auto pb = relax_problem_from_json<Real>(read_json(rel_problem));
      if (!g.tolerance.empty()) pb.gradient_tolerance = parse_real<Real>(g.tolerance);
      auto tr = relax(pb);
      std::cout << "iterations " << tr.iterations << ", converged " << (tr.converged ? "yes" : "no") << ", gradient "
                << format_real(tr.gradient_norm, 3) << ", events " << tr.events.size() << "\n";
      std::cout << "length " << format_real(tr.lengths.front(), 15) << " -> " << format_real(tr.lengths.back(), 15) << "\n";
      if (!rel_trace.empty()) write_json(rel_trace, trace_to_json(tr, g.digits));
      if (!rel_emit.empty()) write_json(rel_emit, net_to_json(tr.net, g.digits));
      return tr.converged ? 0 : 1;
    }

    if (*ren) {
      auto net = net_from_json<Real>(read_json(ren_net), tolerance_of(g));
      write_text(ren_svg, render_svg(net, style));
      return 0;
    }

    if (*rpt) {
      rcfg.star.digits = g.digits;
      json j = run_report(rcfg);
      if (rpt_out.empty())
        std::cout << j.dump(2) << "\n";
      else
        write_json(rpt_out, j);
      return j.value("ok", false) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
