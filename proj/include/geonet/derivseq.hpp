#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geonet/sequences.hpp"
#include "geonet/star.hpp"

namespace geonet {

template <class Real>
struct Coefficients {
  Real tau, sigma_next, a, b, c;
};

/// Coefficients of the derivative recursion at layer i. Needs alpha_{i+1}.
template <class Real>
Coefficients<Real> coefficients(int i, const AngleSeqState<Real>& s, const Real& guard) {
  if (i < 0 || static_cast<std::size_t>(i + 1) >= s.size())
    throw Error(ErrorCode::invalid_argument, "coefficients need alpha_" + std::to_string(i + 1));
  const Real p = pi<Real>();
  const Real p7 = p / Real(7);
  const Real& a0 = s.alpha0;
  const Real& al = s.alpha[i];
  auto singular = [&](const Real& den, const char* what) {
    if (abs(den) <= guard)
      throw Error(ErrorCode::singular_coefficient, std::string(what) + " vanishes at i = " + std::to_string(i));
  };

  Coefficients<Real> k;
  k.tau = i % 2 == 0 ? p / Real(6) : Real(29) * p / Real(42);

  Real ratio = sin(a0 / Real(2)) / (s.x[i] * sin(p7 + a0 / Real(2)));
  if (i % 2) ratio = ratio * sin(p7 + p / Real(6)) / sin(p / Real(6));
  Real den = ratio - cos(p7);
  singular(den, "sigma denominator");
  k.sigma_next = atan(sin(p7) / den);

  if (al > p) {
    k.c = Real(-1);
  } else {
    Real h = Real(2) * cos(al / Real(2));
    singular(Real(1) - h, "c_i denominator");
    k.c = h / (Real(1) - h);
  }

  const Real half = s.alpha[i + 1] / Real(2);
  const Real t_half = tan(half);
  const Real t_diff = tan(half - k.sigma_next);
  singular(t_diff, "tan(alpha_{i+1}/2 - sigma_{i+1})");
  k.b = -t_half / t_diff;
  const Real st = sin(k.tau);
  k.a = -t_half * (sin(p7 + k.sigma_next) * sin(p7 + k.sigma_next + k.tau) / st +
                   (Real(1) / Real(2) - sin(k.tau + Real(2) * p7 + Real(2) * k.sigma_next) / (Real(2) * st)) / t_diff);
  return k;
}

template <class Real>
struct DerivativeRow {
  int i = 0;
  Real phi_prime, psi_prime, gamma_prime;
  Real alpha, x;
  Coefficients<Real> coef;  // coefficients used to step from i to i + 1
};

template <class Real>
struct DerivativeSequence {
  std::vector<DerivativeRow<Real>> rows;  // i = 0..n
  AngleSeqState<Real> angles;

  std::vector<Real> phi_prime() const {
    std::vector<Real> out;
    for (const auto& r : rows) out.push_back(r.phi_prime);
    return out;
  }
};

/// phi_i'(0) for i = 0..n, evaluated at the caller's working precision.
template <class Real>
DerivativeSequence<Real> derivative_sequence(const Real& alpha0, int n, const Real& guard) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  DerivativeSequence<Real> out;
  out.angles = alpha_beta_x_sequences(alpha0, n + 1, guard);
  Real phi(1);
  Real psi = Real(1) / Real(2) - sin(pi<Real>() / Real(6) - alpha0);
  for (int i = 0; i <= n; ++i) {
    Coefficients<Real> k = coefficients(i, out.angles, guard);
    Real gamma = k.c * psi;
    out.rows.push_back({i, phi, psi, gamma, out.angles.alpha[i], out.angles.x[i], k});
    Real psi_next = k.b * gamma + k.a * phi;
    phi = phi + gamma + psi_next;
    psi = std::move(psi_next);
  }
  return out;
}

template <class Real>
struct GapReport {
  Real min_gap;
  std::pair<int, int> argmin{0, 0};
  Real min_gap_even, min_gap_odd;
  std::pair<int, int> argmin_even{0, 0}, argmin_odd{0, 0};
  double growth_slope = 0;      // least-squares slope of log10|phi_i'| against i
  double growth_intercept = 0;
  bool distinct = false;        // min gap > 0
};

/// Exact pairwise scan of the sequence plus a log-magnitude linear fit.
template <class Real>
GapReport<Real> gap_analysis(const std::vector<Real>& seq) {
  if (seq.size() < 2) throw Error(ErrorCode::invalid_argument, "gap analysis needs at least two values");
  GapReport<Real> g;
  std::optional<Real> best, best_even, best_odd;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      Real d = abs(seq[i] - seq[j]);
      std::pair<int, int> ij{static_cast<int>(i), static_cast<int>(j)};
      if (!best || d < *best) best = d, g.argmin = ij;
      if (i % 2 == j % 2) {
        auto& slot = i % 2 ? best_odd : best_even;
        auto& arg = i % 2 ? g.argmin_odd : g.argmin_even;
        if (!slot || d < *slot) slot = d, arg = ij;
      }
    }
  g.min_gap = *best;
  g.min_gap_even = best_even.value_or(Real(0));
  g.min_gap_odd = best_odd.value_or(Real(0));
  g.distinct = g.min_gap > Real(0);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == Real(0)) continue;
    double y = to_double(log10(abs(seq[i])));
    double x = static_cast<double>(i);
    sx += x, sy += y, sxx += x * x, sxy += x * y, ++m;
  }
  if (m >= 2 && m * sxx - sx * sx != 0) {
    g.growth_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    g.growth_intercept = (sy - g.growth_slope * sx) / m;
  }
  return g;
}

template <class Real>
struct FdRow {
  int i = 0;
  Real analytic;
  std::vector<Real> estimates;  // one per step size
  std::vector<Real> errors;     // |estimate - analytic|
  std::vector<double> orders;   // log2 of successive error ratios
};

template <class Real>
struct FdResult {
  std::vector<std::string> steps;  // h, h/2, h/4, ...
  std::vector<FdRow<Real>> rows;
  Real max_deviation;              // at the finest step
  bool second_order = false;       // every resolved order within [1.8, 2.2]
  double worst_order = 0;
};

/// Central differences of the measured suspension angles of G_m(+-h) against
/// the analytic phi_i'(0), repeated with h halved `refinements` times.
template <class Real>
FdResult<Real> finite_difference_crosscheck(const std::string& h, int m, int digits, int refinements = 3) {
  if (m < 0 || refinements < 1) throw Error(ErrorCode::invalid_argument, "finite difference needs m >= 0 and a refinement");
  StarConfig cfg;
  cfg.layers = m;
  cfg.digits = digits;
  FdResult<Real> out;
  auto run = [&] {
    const Real h0 = parse_real<Real>(h);
    auto seq = derivative_sequence(parse_angle<Real>(cfg.alpha0), m, scaled_tolerance<Real>(digits, 3));
    for (int i = 0; i <= m; ++i) out.rows.push_back({i, seq.rows[i].phi_prime, {}, {}, {}});
    Real hk = h0;
    for (int k = 0; k <= refinements; ++k, hk = hk / Real(2)) {
      out.steps.push_back(format_real(hk, 6));
      cfg.phi = format_real(hk, RealTraits<Real>::digits());
      auto plus = measure_suspension_angles(build_star<Real>(cfg));
      cfg.phi = format_real(-hk, RealTraits<Real>::digits());
      auto minus = measure_suspension_angles(build_star<Real>(cfg));
      for (int i = 0; i <= m; ++i) {
        Real est = (plus[i] - minus[i]) / (Real(2) * hk);
        out.rows[i].errors.push_back(abs(est - out.rows[i].analytic));
        out.rows[i].estimates.push_back(std::move(est));
      }
    }
    out.max_deviation = Real(0);
    out.second_order = true;
    out.worst_order = 2;
    const Real floor_err = scaled_tolerance<Real>(digits, 2);
    for (auto& r : out.rows) {
      if (r.errors.back() > out.max_deviation) out.max_deviation = r.errors.back();
      for (std::size_t k = 0; k + 1 < r.errors.size(); ++k) {
        // errors at round-off level carry no order information
        if (r.errors[k + 1] <= floor_err * (Real(1) + abs(r.analytic))) continue;
        double ord = to_double(log10(r.errors[k] / r.errors[k + 1])) / std::log10(2.0);
        r.orders.push_back(ord);
        if (std::fabs(ord - 2) > std::fabs(out.worst_order - 2)) out.worst_order = ord;
        if (ord < 1.8 || ord > 2.2) out.second_order = false;
      }
    }
  };
  if constexpr (is_big_real_v<Real>) {
    WorkingPrecision wp(digits);
    run();
  } else {
    run();
  }
  return out;
}

}  // namespace geonet
