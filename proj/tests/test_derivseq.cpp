#include "support.hpp"

#include "geonet/derivseq.hpp"

namespace geonet::testing {
namespace {

using Sequences = AtDigits<50>;

const Real kGuard = R("1e-16");

AngleSeqState<Real> default_sequence(int n) { return alpha_beta_x_sequences(default_alpha0<Real>(), n, kGuard); }

TEST_F(Sequences, AngleWindowHoldsForAThousandLayers) {
  auto s = default_sequence(1000);
  auto w = angle_window_check(s, 1, 1000);
  EXPECT_TRUE(w.ok) << "first violation at " << w.first_violation;
  EXPECT_GT(w.alpha_min_deg, 120);
  EXPECT_LT(w.alpha_max_deg, 190);
  EXPECT_GT(w.beta_min_deg, 120);
  EXPECT_LT(w.beta_max_deg, 180);
  EXPECT_TRUE(w.x_below_one) << "first x >= 1 at " << w.first_x_violation;
}

TEST_F(Sequences, NinthLayerRadiusAndAngle) {
  auto s = default_sequence(12);
  EXPECT_LT(s.x[9], R("0.7"));
  EXPECT_GT(s.alpha[9], pi<Real>());
  EXPECT_LT(degrees(s.alpha[9]), Real(190));
  EXPECT_NEAR(to_double(degrees(s.alpha[9])), 186.317, 1e-3);
  EXPECT_NEAR(to_double(s.x[9]), 0.69714, 1e-5);
}

TEST_F(Sequences, ContractionLoopsUpToOneThousand) {
  auto s = default_sequence(1010);
  auto rep = contraction_sweep(s, 9, 1000);
  EXPECT_TRUE(rep.ok) << rep.failure;
  int reached = 9;
  for (const auto& st : rep.steps) {
    EXPECT_TRUE(st.ell == 8 || st.ell == 9) << "N = " << st.base;
    EXPECT_LE(st.max_ratio, 1.3);
    EXPECT_LT(st.final_ratio, 0.96);
    reached = st.base + st.ell;
  }
  EXPECT_GT(reached + 9, 1000);
}

TEST_F(Sequences, PropertyFourteenGonAngleSum) {
  auto s = default_sequence(300);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    EXPECT_LE(abs(s.alpha[i + 1] + s.beta[i] - Real(12) * pi<Real>() / Real(7)), R("1e-45"));
    if (s.case_a[i]) EXPECT_LE(abs(s.alpha[i] + s.beta[i] - Real(2) * pi<Real>()), R("1e-45"));
  }
}

TEST_F(Sequences, ContractionClaimRejectsBadBases) {
  auto s = default_sequence(40);
  EXPECT_FALSE(check_contraction_claim(s, 2).ok);  // alpha_2 is below 180 degrees
  EXPECT_FALSE(check_contraction_claim(s, 35).ok);
  EXPECT_FALSE(check_contraction_claim(s, 500).ok);
}

TEST_F(Sequences, GuardsRejectSingularSeeds) {
  try {
    alpha_beta_x_sequences(pi<Real>(), 3, kGuard);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dispatch_ambiguous);
  }
  try {
    alpha_beta_x_sequences(Real(2) * acos(Real(1) / Real(4)), 3, kGuard);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::wing_coincidence);
  }
}

TEST_F(Sequences, DerivativeStartsAtOne) {
  auto ds = derivative_sequence(default_alpha0<Real>(), 5, kGuard);
  EXPECT_EQ(ds.rows[0].phi_prime, Real(1));
  EXPECT_EQ(ds.rows.size(), 6u);
}

TEST_F(Sequences, MinimumGapOfFirstHundred) {
  auto ds = derivative_sequence(default_alpha0<Real>(), 100, kGuard);
  auto g = gap_analysis(ds.phi_prime());
  EXPECT_NEAR(to_double(g.min_gap), 3.743673268, 1e-6);
  EXPECT_EQ(g.argmin, std::make_pair(0, 2));
  EXPECT_TRUE(g.distinct);
  EXPECT_GT(g.min_gap_odd, Real(0));
  EXPECT_GT(g.growth_slope, 0.3);  // exponential growth of the magnitude
}

TEST(DerivativeSequencePrecision, GapStableFromTenToHundredDigits) {
  std::vector<std::string> values;
  for (int d : {10, 30, 50, 100}) {
    WorkingPrecision wp(d);
    auto ds = derivative_sequence(default_alpha0<Real>(), 100, scaled_tolerance<Real>(d, 3));
    auto g = gap_analysis(ds.phi_prime());
    EXPECT_EQ(g.argmin, std::make_pair(0, 2)) << d << " digits";
    values.push_back(format_real(g.min_gap, 9));
  }
  for (const auto& v : values) EXPECT_EQ(v, values.front());
}

TEST_F(Sequences, GapAnalysisEdgeCases) {
  EXPECT_THROW(gap_analysis(std::vector<Real>{Real(1)}), Error);
  auto g = gap_analysis(std::vector<Real>{Real(1), Real(5), Real(1)});
  EXPECT_FALSE(g.distinct);
  EXPECT_EQ(g.argmin, std::make_pair(0, 2));
  auto h = gap_analysis(std::vector<Real>{Real(1), Real(10), Real(100), Real(1000)});
  EXPECT_NEAR(h.growth_slope, 1.0, 1e-12);
}

TEST_F(Sequences, CoefficientsNeedTheNextAngle) {
  auto s = default_sequence(4);
  EXPECT_NO_THROW(coefficients(3, s, kGuard));
  EXPECT_THROW(coefficients(4, s, kGuard), Error);
  auto k = coefficients(0, s, kGuard);
  EXPECT_EQ(k.c, Real(-1));  // alpha_0 > 180 degrees
  EXPECT_LE(abs(k.tau - pi<Real>() / Real(6)), R("1e-45"));
}

// Central differences of the geometric suspension angles converge to the
// analytic derivatives at second order.
TEST(FiniteDifference, SecondOrderAgainstGeometry) {
  auto fd = finite_difference_crosscheck<Real>("1e-10", 6, 60, 2);
  EXPECT_TRUE(fd.second_order) << "worst order " << fd.worst_order;
  ASSERT_EQ(fd.rows.size(), 7u);
  WorkingPrecision wp(60);
  for (const auto& r : fd.rows) EXPECT_LE(r.errors.back(), abs(r.analytic) * R("1e-8")) << "i = " << r.i;
}

}  // namespace
}  // namespace geonet::testing
