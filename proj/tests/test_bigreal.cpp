#include "support.hpp"

namespace geonet::testing {
namespace {

using BigRealTest = AtDigits<100>;

constexpr const char* kPi100 =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117068";

TEST_F(BigRealTest, PiMatchesKnownDigits) {
  std::string s = format_real(pi<Real>(), 100);
  EXPECT_EQ(s.substr(0, 99), std::string(kPi100).substr(0, 99));
}

TEST_F(BigRealTest, ParseFormatRoundTrip) {
  for (const char* text : {"0.1", "-2.5e-40", "123456789.987654321", "1e300"}) {
    Real x = R(text);
    Real y = parse_real<Real>(format_real(x, 100));
    EXPECT_EQ(x, y) << text;
  }
}

TEST_F(BigRealTest, PythagoreanIdentityAtRandomArguments) {
  const Real tol = scaled_tolerance<Real>(100, 1) * Real(10);
  for (int k = 0; k < 200; ++k) {
    Real x = Real(uniform(-50, 50)) / Real(7);
    Real s = sin(x), c = cos(x);
    EXPECT_LE(abs(s * s + c * c - Real(1)), tol);
  }
}

TEST_F(BigRealTest, InverseTrigRoundTrip) {
  const Real tol = scaled_tolerance<Real>(100, 1) * Real(100);
  for (int k = 0; k < 100; ++k) {
    Real x = Real(uniform(-0.99, 0.99));
    EXPECT_LE(abs(sin(asin(x)) - x), tol);
    EXPECT_LE(abs(cos(acos(x)) - x), tol);
    EXPECT_LE(abs(tan(atan(x * Real(30))) - x * Real(30)), tol * Real(1000));
  }
}

TEST_F(BigRealTest, Atan2QuadrantsAgreeWithDouble) {
  for (int k = 0; k < 100; ++k) {
    double y = uniform(-3, 3), x = uniform(-3, 3);
    EXPECT_NEAR(to_double(atan2(Real(y), Real(x))), std::atan2(y, x), 1e-15);
  }
}

TEST(WorkingPrecision, ScopesNestAndRestore) {
  int outer = working_digits();
  {
    WorkingPrecision a(30);
    EXPECT_EQ(working_digits(), 30);
    {
      WorkingPrecision b(200);
      EXPECT_EQ(working_digits(), 200);
      Real third = Real(1) / Real(3);
      EXPECT_GE(third.precision_bits(), 660);
    }
    EXPECT_EQ(working_digits(), 30);
  }
  EXPECT_EQ(working_digits(), outer);
}

TEST(WorkingPrecision, HigherPrecisionShrinksRoundoff) {
  auto err = [](int d) {
    WorkingPrecision wp(d);
    Real x = Real(1) / Real(3);
    return abs(x * Real(3) - Real(1)) + abs(sqrt(Real(2)) * sqrt(Real(2)) - Real(2));
  };
  EXPECT_LT(to_double(err(60)), 1e-58);
  EXPECT_LT(to_double(err(120)), 1e-118);
}

TEST_F(BigRealTest, ParseAngleForms) {
  const Real tol = scaled_tolerance<Real>(100, 1) * Real(10);
  EXPECT_LE(abs(parse_angle<Real>("88/21") - Real(88) / Real(21)), tol);
  EXPECT_LE(abs(parse_angle<Real>("180deg") - pi<Real>()), tol);
  EXPECT_LE(abs(parse_angle<Real>("-1.5") + Real(3) / Real(2)), tol);
  EXPECT_LE(abs(degrees(radians(Real(37))) - Real(37)), tol * Real(100));
}

TEST_F(BigRealTest, RejectsMalformedNumbers) {
  EXPECT_ANY_THROW(parse_real<Real>("1.2.3"));
  EXPECT_ANY_THROW(parse_real<Real>(""));
  EXPECT_ANY_THROW(parse_angle<Real>("1/x"));
}

TEST(ScaledTolerance, PowersOfTen) {
  WorkingPrecision wp(50);
  EXPECT_EQ(scaled_tolerance<Real>(50, 2), R("1e-25"));
  EXPECT_EQ(scaled_tolerance<Real>(50, 3), R("1e-16"));
  EXPECT_DOUBLE_EQ(scaled_tolerance<double>(30, 2), 1e-15);
}

}  // namespace
}  // namespace geonet::testing
