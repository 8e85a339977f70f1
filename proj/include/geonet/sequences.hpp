#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "geonet/error.hpp"
#include "geonet/math.hpp"

namespace geonet {

/// Default seed angle of the Star construction (radians).
template <class Real>
Real default_alpha0() {
  return Real(88) / Real(21);
}

/// Symmetric-case angle and radius sequences of the Star construction.
template <class Real>
struct AngleSeqState {
  Real alpha0;
  std::vector<Real> alpha;  // incoming angle at layer i
  std::vector<Real> beta;   // angle between the two wings at layer i
  std::vector<Real> x;      // layer radius, x_0 = 1
  std::vector<bool> case_a; // alpha_i > pi: winged by extension

  std::size_t size() const { return alpha.size(); }
};

/// beta as a function of alpha: 2pi - alpha when alpha > pi, otherwise the
/// opening of the degree-3 wings in the symmetric configuration.
template <class Real>
Real beta_of_alpha(const Real& alpha) {
  if (alpha > pi<Real>()) return Real(2) * pi<Real>() - alpha;
  return Real(2) * acos(Real(1) / Real(2) - cos(alpha / Real(2)));
}

/// Computes alpha_i, beta_i, x_i for i = 0..n. `guard` rejects alpha_i within
/// that distance of pi (case dispatch) or of 2 arccos(1/4) (wing coincidence).
template <class Real>
AngleSeqState<Real> alpha_beta_x_sequences(const Real& alpha0, int n, const Real& guard) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "sequence length must be non-negative");
  const Real p = pi<Real>();
  const Real coincide = Real(2) * acos(Real(1) / Real(4));
  AngleSeqState<Real> s;
  s.alpha0 = alpha0;
  Real a = alpha0, x(1);
  for (int i = 0; i <= n; ++i) {
    if (abs(a - p) <= guard)
      throw Error(ErrorCode::dispatch_ambiguous, "alpha_" + std::to_string(i) + " is within the guard of pi");
    if (abs(a - coincide) <= guard)
      throw Error(ErrorCode::wing_coincidence, "alpha_" + std::to_string(i) + " is within the guard of 2 arccos(1/4)");
    Real b = beta_of_alpha(a);
    s.alpha.push_back(a);
    s.beta.push_back(b);
    s.x.push_back(x);
    s.case_a.push_back(a > p);
    x = x * sin(b / Real(2)) / sin(Real(6) * p / Real(7) - b / Real(2));
    a = Real(12) * p / Real(7) - b;
  }
  return s;
}

struct ContractionStep {
  int base = 0;       // N
  int ell = 0;        // steps until the next angle above pi
  bool wide = false;  // alpha_N >= 183 degrees
  double alpha_base_deg = 0;
  double max_ratio = 0;    // max x_{N+j}/x_N over 1 <= j < ell
  double final_ratio = 0;  // x_{N+ell}/x_N
  bool ok = false;
  std::string note;
};

struct ContractionReport {
  std::vector<ContractionStep> steps;
  bool ok = true;
  std::string failure;
};

/// Verifies one loop of the radius contraction argument starting at N:
/// 180 < alpha_N < 190 degrees, the next angle above 180 degrees appears after
/// ell in {8, 9} steps, intermediate radii stay within 1.3 x_N and x_{N+ell} < 0.96 x_N.
template <class Real>
ContractionStep check_contraction_claim(const AngleSeqState<Real>& s, int N) {
  ContractionStep st;
  st.base = N;
  if (N < 0 || static_cast<std::size_t>(N) >= s.size()) {
    st.note = "base index out of range";
    return st;
  }
  const Real deg = pi<Real>() / Real(180);
  st.alpha_base_deg = to_double(s.alpha[N] / deg);
  st.wide = s.alpha[N] >= Real(183) * deg;
  if (!(s.alpha[N] > Real(180) * deg && s.alpha[N] < Real(190) * deg)) {
    st.note = "alpha_N outside (180, 190) degrees";
    return st;
  }
  int ell = 0;
  for (int j = 1; N + j < static_cast<int>(s.size()) && j <= 9; ++j)
    if (s.alpha[N + j] > pi<Real>()) {
      ell = j;
      break;
    }
  st.ell = ell;
  if (ell == 0) {
    st.note = static_cast<std::size_t>(N + 9) >= s.size() ? "sequence too short" : "no angle above 180 degrees within 9 steps";
    return st;
  }
  if (ell < 8) {
    st.note = "angle above 180 degrees after fewer than 8 steps";
    return st;
  }
  if (!st.wide && ell != 9) {
    st.note = "alpha_N < 183 degrees requires ell = 9";
    return st;
  }
  for (int j = 1; j < ell; ++j) st.max_ratio = std::max(st.max_ratio, to_double(s.x[N + j] / s.x[N]));
  st.final_ratio = to_double(s.x[N + ell] / s.x[N]);
  bool bounded = true;
  for (int j = 1; j < ell; ++j) bounded = bounded && s.x[N + j] <= Real(13) / Real(10) * s.x[N];
  bool contracted = s.x[N + ell] < Real(96) / Real(100) * s.x[N];
  st.ok = bounded && contracted;
  if (!bounded) st.note = "intermediate radius exceeds 1.3 x_N";
  if (!contracted) st.note = "x_{N+ell} is not below 0.96 x_N";
  return st;
}

/// Chains check_contraction_claim over consecutive loops N, N + ell, ...
/// while N + 9 stays within `last`.
template <class Real>
ContractionReport contraction_sweep(const AngleSeqState<Real>& s, int first, int last) {
  ContractionReport rep;
  int N = first;
  while (N + 9 <= last && static_cast<std::size_t>(N + 9) < s.size()) {
    ContractionStep st = check_contraction_claim(s, N);
    rep.steps.push_back(st);
    if (!st.ok) {
      rep.ok = false;
      rep.failure = "N = " + std::to_string(N) + ": " + st.note;
      break;
    }
    N += st.ell;
  }
  if (rep.steps.empty()) {
    rep.ok = false;
    rep.failure = "no loop fits in the requested range";
  }
  return rep;
}

struct AngleWindowReport {
  bool ok = true;  // angles inside their windows
  double alpha_min_deg = 0, alpha_max_deg = 0;
  double beta_min_deg = 0, beta_max_deg = 0;
  double x_max = 0;       // largest x_i over the range
  bool x_below_one = true;
  int first_violation = -1;    // first angle outside its window
  int first_x_violation = -1;  // first x_i >= 1
};

/// 120 < alpha_i < 190 and 120 < beta_i < 180 degrees for first <= i <= last;
/// also records whether x_i < 1 over the same range.
template <class Real>
AngleWindowReport angle_window_check(const AngleSeqState<Real>& s, int first, int last) {
  AngleWindowReport r;
  if (first < 0 || last >= static_cast<int>(s.size()) || first > last)
    throw Error(ErrorCode::invalid_argument, "angle window range outside the computed sequence");
  const Real deg = pi<Real>() / Real(180);
  const Real a_lo = Real(120) * deg, a_hi = Real(190) * deg, b_hi = Real(180) * deg;
  r.alpha_min_deg = r.beta_min_deg = 1e9;
  r.alpha_max_deg = r.beta_max_deg = -1e9;
  for (int i = first; i <= last; ++i) {
    double a = to_double(s.alpha[i] / deg), b = to_double(s.beta[i] / deg);
    r.alpha_min_deg = std::min(r.alpha_min_deg, a), r.alpha_max_deg = std::max(r.alpha_max_deg, a);
    r.beta_min_deg = std::min(r.beta_min_deg, b), r.beta_max_deg = std::max(r.beta_max_deg, b);
    r.x_max = std::max(r.x_max, to_double(s.x[i]));
    bool in = s.alpha[i] > a_lo && s.alpha[i] < a_hi && s.beta[i] > a_lo && s.beta[i] < b_hi;
    bool small = s.x[i] < Real(1);
    r.x_below_one = r.x_below_one && small;
    if (!in && r.first_violation < 0) r.first_violation = i;
    if (!small && r.first_x_violation < 0) r.first_x_violation = i;
    r.ok = r.ok && in;
  }
  return r;
}

}  // namespace geonet
