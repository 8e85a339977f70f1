#include "support.hpp"

#include "geonet/derivseq.hpp"
#include "geonet/overlaps.hpp"
#include "geonet/star.hpp"

namespace geonet::testing {
namespace {

using Star = AtDigits<50>;

StarConfig config(int layers, const char* phi = "0") {
  StarConfig c;
  c.layers = layers;
  c.phi = phi;
  return c;
}

// Symmetric-case recursion in long double, written out independently.
struct LdSeq {
  std::vector<long double> alpha, x;
};

LdSeq ld_recursion(int n) {
  const long double pi = 3.141592653589793238462643383279502884L;
  LdSeq s;
  long double a = 88.0L / 21.0L, x = 1;
  for (int i = 0; i <= n; ++i) {
    s.alpha.push_back(a);
    s.x.push_back(x);
    long double b = a > pi ? 2 * pi - a : 2 * std::acos(0.5L - std::cos(a / 2));
    x *= std::sin(b / 2) / std::sin(6 * pi / 7 - b / 2);
    a = 12 * pi / 7 - b;
  }
  return s;
}

TEST_F(Star, InnerCircleHasUnitRadiusAndSeedAngle) {
  auto s = build_star<Real>(config(0));
  ASSERT_EQ(s.n(), 0);
  EXPECT_LE(abs(s.layers[0].x - Real(1)), R("1e-40"));
  EXPECT_LE(abs(s.layers[0].alpha - Real(88) / Real(21)), R("1e-40"));
  EXPECT_LE(abs(s.layers[0].phi), R("1e-40"));
  EXPECT_EQ(s.net.boundary_count(), 14u);
}

TEST_F(Star, GeometryMatchesLongDoubleRecursion) {
  auto s = build_star<Real>(config(20));
  auto o = ld_recursion(20);
  for (int i = 0; i <= 20; ++i) {
    EXPECT_NEAR(to_double(s.layers[i].alpha), static_cast<double>(o.alpha[i]), 1e-12) << "layer " << i;
    EXPECT_NEAR(to_double(s.layers[i].x), static_cast<double>(o.x[i]), 1e-12) << "layer " << i;
  }
}

TEST_F(Star, GeometricMatchesAnalyticToHighPrecision) {
  auto s = build_star<Real>(config(30));
  auto cc = geometric_vs_analytic_crosscheck(s);
  EXPECT_LE(cc.max_alpha_dev, R("1e-25"));
  EXPECT_LE(cc.max_x_dev, R("1e-25"));
}

TEST_F(Star, CaseDispatchFollowsIncomingAngle) {
  auto s = build_star<Real>(config(20));
  for (int i = 0; i < 20; ++i) {
    const auto& L = s.layers[i];
    if (L.alpha > pi<Real>())
      EXPECT_EQ(L.step, StarCase::A) << i;
    else
      EXPECT_EQ(L.step, i % 2 == 0 ? StarCase::B1 : StarCase::B2) << i;
    EXPECT_EQ(L.fermat.has_value(), L.step == StarCase::B1) << i;
  }
  EXPECT_EQ(s.layers[20].step, StarCase::none);
  EXPECT_EQ(s.layers[0].step, StarCase::A);  // alpha_0 is about 240 degrees
}

TEST_F(Star, LayersAreSevenFoldSymmetric) {
  auto s = build_star<Real>(config(10, "1/1000000000000000000000000000000"));
  const Rotation<Real> r(Real(2) * pi<Real>() / Real(7));
  for (const auto& L : s.layers)
    for (int k = 0; k < 7; ++k) EXPECT_LE(norm(r(L.vertices[k]) - L.vertices[(k + 1) % 7]), R("1e-40"));
}

TEST_F(Star, UndeviatedSuspensionAnglesVanish) {
  auto s = build_star<Real>(config(15));
  for (const auto& L : s.layers) EXPECT_LE(abs(L.phi), R("1e-40")) << L.index;
}

TEST_F(Star, SmallDeviationFollowsDerivativeSequence) {
  const Real h = R("1e-20");
  auto s = build_star<Real>(config(10, "1e-20"));
  auto ds = derivative_sequence(Real(88) / Real(21), 10, R("1e-16"));
  for (int i = 0; i <= 10; ++i) {
    Real predicted = ds.rows[i].phi_prime * h;
    EXPECT_LE(abs(s.layers[i].phi - predicted), abs(predicted) * R("1e-6") + R("1e-45")) << "layer " << i;
  }
}

TEST_F(Star, RawNetIsBalancedAwayFromTheLastLayer) {
  for (const char* phi : {"0", "1e-30"}) {
    auto s = build_star<Real>(config(12, phi));
    auto v = validate(s.net);
    EXPECT_TRUE(v.balanced()) << phi << " residual " << format_real(v.max_interior_residual, 5);
    EXPECT_TRUE(v.connected());
    EXPECT_EQ(s.net.boundary_count(), 14u);
  }
}

TEST_F(Star, EmbeddedNetValidatesAndCountsMatch) {
  for (int n : {1, 3, 12}) {
    auto s = build_star<Real>(config(n));
    ArrangementStats<Real> st;
    auto net = star_net(s, &st);
    auto v = validate(net);
    EXPECT_TRUE(v.ok()) << "n = " << n;
    auto c = star_counts(s, net, st);
    EXPECT_EQ(c.boundary, 14u);
    EXPECT_EQ(c.layer_vertices, static_cast<std::size_t>(7 * (n + 1)));
    EXPECT_EQ(c.balanced_layer_vertices, static_cast<std::size_t>(7 * n));
  }
}

// The three-layer picture: layers 0..2 carry the 21 balanced constructed vertices.
TEST_F(Star, ThreeLayersHaveTwentyOneBalancedConstructedVertices) {
  auto s = build_star<Real>(config(3));
  auto net = star_net(s);
  int balanced = 0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 7; ++k)
      if (norm(imbalance_vector(net, net.index_of(detail::layer_id(i, k)))) <= s.tolerance) ++balanced;
  EXPECT_EQ(balanced, 21);
  for (int k = 0; k < 7; ++k) EXPECT_GT(norm(imbalance_vector(net, net.index_of(detail::layer_id(3, k)))), Real(0));
}

TEST_F(Star, UndeviatedOverlapsAreSuspensionAndHookOnly) {
  auto s = build_star<Real>(config(20));
  auto net = star_net(s);
  auto ov = detect_overlaps(net, OverlapTolerance<Real>::for_digits(50));
  EXPECT_FALSE(ov.empty());
  EXPECT_TRUE(ov.has_role(EdgeRole::suspension));
  EXPECT_TRUE(ov.has_role(EdgeRole::hook));
  EXPECT_FALSE(ov.has_role(EdgeRole::layer));
  EXPECT_TRUE(is_multinet(net, ov));
}

TEST_F(Star, LengthIdentityOnDeviatedRawNets) {
  for (int n : {5, 20, 30}) {
    auto s = build_star<Real>(config(n, "1e-30"));
    EXPECT_LE(norm(total_imbalance_vector(s.net)), R("1e-25"));
    EXPECT_LE(abs(length_via_imbalance(s.net) - length(s.net)) / length(s.net), R("1e-20"));
  }
}

TEST_F(Star, BuildIsDeterministic) {
  auto a = build_star<Real>(config(8, "1e-25")), b = build_star<Real>(config(8, "1e-25"));
  ASSERT_EQ(a.net.vertex_count(), b.net.vertex_count());
  for (std::size_t v = 0; v < a.net.vertex_count(); ++v) EXPECT_EQ(a.net.vertex(v).position, b.net.vertex(v).position);
}

TEST_F(Star, WorkingPrecisionIsRestored) {
  build_star<Real>(config(10));
  EXPECT_EQ(working_digits(), 50);
}

TEST_F(Star, RejectsBadConfigs) {
  auto bad = config(3);
  bad.alpha0 = "200deg";
  EXPECT_THROW(build_star<Real>(bad), Error);
  bad = config(-1);
  EXPECT_THROW(build_star<Real>(bad), Error);
  bad = config(3);
  bad.digits = 3;
  EXPECT_THROW(build_star<Real>(bad), Error);
}

// A deviation of 1e-3 grows by roughly a factor 4 per layer; within a few
// layers neighbouring wings stop meeting.
TEST_F(Star, LargeDeviationBreaksDown) {
  try {
    build_star<Real>(config(100, "1e-3"));
    FAIL() << "expected the construction to break down";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_intersection);
  }
}

}  // namespace
}  // namespace geonet::testing
