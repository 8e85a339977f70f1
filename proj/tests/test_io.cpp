#include "support.hpp"

#include "geonet/generators.hpp"
#include "geonet/report.hpp"
#include "geonet/svg.hpp"

namespace geonet::testing {
namespace {

using Io = AtDigits<50>;

const Real kTol = R("1e-25");

TEST_F(Io, NetRoundTripPreservesCoordinatesAndMultiplicities) {
  auto net = build_weighted_triangle(WeightedTriangleSpec::pythagorean(2), kTol);
  json j = net_to_json(net, 50);
  std::string text = j.dump();
  auto back = net_from_json<Real>(json::parse(text));
  ASSERT_EQ(back.vertex_count(), net.vertex_count());
  ASSERT_EQ(back.edge_count(), net.edge_count());
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    EXPECT_EQ(back.vertex(v).id, net.vertex(v).id);
    EXPECT_EQ(back.vertex(v).kind, net.vertex(v).kind);
    EXPECT_LE(norm(back.vertex(v).position - net.vertex(v).position), R("1e-48"));
  }
  for (std::size_t e = 0; e < net.edge_count(); ++e) EXPECT_EQ(back.edge(e).multiplicity, net.edge(e).multiplicity);
  EXPECT_EQ(net_to_json(back, 50).dump(), text);
}

TEST_F(Io, NumbersAreDecimalStrings) {
  auto net = y_net(P(0, 1), P(-1, -1), P(1, -1), kTol);
  json j = net_to_json(net, 50);
  for (const auto& v : j["vertices"]) {
    EXPECT_TRUE(v["x"].is_string());
    EXPECT_TRUE(v["y"].is_string());
  }
}

TEST_F(Io, RolesSurviveRoundTrip) {
  StarConfig c;
  c.layers = 4;
  auto s = build_star<Real>(c);
  auto back = net_from_json<Real>(net_to_json(s.net, 50));
  for (std::size_t e = 0; e < s.net.edge_count(); ++e) EXPECT_EQ(back.edge(e).role, s.net.edge(e).role);
}

TEST_F(Io, AcceptsPlainNumbersAndRejectsMalformedNets) {
  auto ok = json::parse(R"({"vertices":[{"id":"a","x":0,"y":0,"kind":"boundary"},{"id":"b","x":1.5,"y":"2"}],
                            "edges":[{"a":"a","b":"b","mult":3}]})");
  auto net = net_from_json<Real>(ok);
  EXPECT_EQ(net.edge(0).multiplicity, 3);
  EXPECT_EQ(net.vertex(1).kind, VertexKind::interior);

  for (const char* text : {R"({"vertices":[]})",
                           R"({"vertices":[{"id":"a","x":"oops","y":0}],"edges":[]})",
                           R"({"vertices":[{"id":"a","y":0}],"edges":[]})",
                           R"({"vertices":[{"id":"a","x":0,"y":0}],"edges":[{"a":"a","b":"z"}]})",
                           R"({"vertices":[{"id":"a","x":0,"y":0,"kind":"odd"}],"edges":[]})",
                           R"({"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":1,"y":0}],"edges":[{"a":"a","b":"b","role":"x"}]})"})
    EXPECT_THROW(net_from_json<Real>(json::parse(text)), Error) << text;
}

TEST_F(Io, RelaxProblemRoundTrip) {
  RelaxProblem<Real> pb;
  pb.vertices = {{"A", P(0, 1), true}, {"B", P(-1, -1), true}, {"F", P(0.1, 0.2), false}};
  pb.edges = {{"A", "F", 2}, {"B", "F", 1}};
  pb.gradient_tolerance = R("1e-15");
  auto back = relax_problem_from_json<Real>(relax_problem_to_json(pb, 50));
  ASSERT_EQ(back.vertices.size(), 3u);
  EXPECT_EQ(back.vertices[2].pinned, false);
  EXPECT_EQ(back.edges[0].multiplicity, 2);
  EXPECT_EQ(back.gradient_tolerance, pb.gradient_tolerance);
  EXPECT_LE(norm(back.vertices[2].position - pb.vertices[2].position), R("1e-48"));
}

TEST_F(Io, TraceJsonListsEvents) {
  RelaxProblem<Real> pb;
  pb.vertices = {{"A", P(0, 0), true}, {"B", P(1, 0), true}, {"C", P(3, 0), true}, {"F", P(1.2, 0.5), false}};
  pb.edges = {{"A", "F"}, {"B", "F"}, {"C", "F"}};
  pb.gradient_tolerance = R("1e-20");
  json j = trace_to_json(relax(pb), 30);
  ASSERT_TRUE(j["events"].is_array());
  ASSERT_FALSE(j["events"].empty());
  EXPECT_EQ(j["lengths"].size(), static_cast<std::size_t>(j["iterations"].get<int>() + 1));
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

TEST_F(Io, SingleSegmentRendersOneLine) {
  PlanarNet<Real> net(kTol);
  net.add_vertex("a", P(0, 0), VertexKind::boundary);
  net.add_vertex("b", P(1, 2), VertexKind::boundary);
  net.add_edge(0, 1);
  std::string svg = render_svg(net);
  EXPECT_EQ(count(svg, "<line "), 1u);
  EXPECT_EQ(count(svg, "<circle "), 2u);
  EXPECT_NE(svg.find("viewBox="), std::string::npos);
}

TEST_F(Io, RenderingIsDeterministic) {
  StarConfig c;
  c.layers = 6;
  auto net = star_net(build_star<Real>(c));
  RenderStyle st;
  st.labels = true;
  EXPECT_EQ(render_svg(net, st), render_svg(net, st));
  std::string svg = render_svg(net, st);
  EXPECT_EQ(count(svg, "<line "), net.edge_count());
  EXPECT_EQ(count(svg, "stroke=\"red\""), 1u);
  EXPECT_EQ(count(svg, "<text "), 14u);
}

TEST_F(Io, StrokeWidthGrowsWithMultiplicity) {
  PlanarNet<Real> net(kTol);
  net.add_vertex("a", P(0, 0), VertexKind::boundary);
  net.add_vertex("b", P(1, 0), VertexKind::boundary);
  net.add_vertex("c", P(0, 1), VertexKind::boundary);
  net.add_edge(0, 1, 1);
  net.add_edge(0, 2, 4);
  std::string svg = render_svg(net);
  EXPECT_NE(svg.find("stroke-width=\"1.000\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"3.000\""), std::string::npos);
  EXPECT_THROW(render_svg(PlanarNet<Real>(kTol)), Error);
}

TEST(Report, EmptyStarIsValid) {
  ReportConfig cfg;
  cfg.star.layers = 0;
  cfg.lemma_range = 20;
  cfg.sequence_length = 10;
  json r = run_report(cfg);
  EXPECT_FALSE(r.contains("error"));
  EXPECT_EQ(r["star"]["layers"].size(), 1u);
  EXPECT_FALSE(r["checks"].contains("star_validates"));
  EXPECT_TRUE(r["ok"].get<bool>());
  EXPECT_TRUE(r["lemmas"].contains("x9"));
  EXPECT_TRUE(r["derivseq"].contains("min_gap"));
}

TEST(Report, BadSeedAngleIsRejected) {
  ReportConfig cfg;
  cfg.star.alpha0 = "230deg";
  json r = run_report(cfg);
  EXPECT_FALSE(r["ok"].get<bool>());
  EXPECT_EQ(r["error"]["code"], "invalid_argument");
}

TEST(Report, SubStepFailureIsRecorded) {
  ReportConfig cfg;
  cfg.star.layers = 30;
  cfg.star.phi = "1e-3";
  cfg.lemma_range = 20;
  cfg.sequence_length = 10;
  json r = run_report(cfg);
  EXPECT_TRUE(r["star"].contains("error"));
  EXPECT_FALSE(r["ok"].get<bool>());
  EXPECT_TRUE(r["checks"]["angle_window"].get<bool>());
}

}  // namespace
}  // namespace geonet::testing
