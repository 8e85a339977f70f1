#pragma once

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geonet {

/// Converts significant decimal digits to a binary mantissa size.
inline mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

namespace detail {
inline int& thread_working_digits() {
  thread_local int digits = 50;
  return digits;
}
}  // namespace detail

/// Current working precision (significant decimal digits) of this thread.
inline int working_digits() { return detail::thread_working_digits(); }

/// RAII scope that sets the working precision for BigReal values created on
/// this thread. Results of arithmetic are rounded to the working precision
/// that is active when the operation runs.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(int digits) : saved_(working_digits()) {
    if (digits < 2) throw std::invalid_argument("working precision must be at least 2 digits");
    detail::thread_working_digits() = digits;
  }
  ~WorkingPrecision() { detail::thread_working_digits() = saved_; }
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  int saved_;
};

/// Arbitrary-precision binary floating point number backed by MPFR.
class BigReal {
 public:
  BigReal() { init(); mpfr_set_zero(v_, 1); }
  BigReal(int x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }        // NOLINT
  BigReal(long x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }       // NOLINT
  BigReal(long long x) { init(); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }  // NOLINT
  BigReal(unsigned x) { init(); mpfr_set_ui(v_, x, MPFR_RNDN); }   // NOLINT
  BigReal(unsigned long x) { init(); mpfr_set_ui(v_, x, MPFR_RNDN); }  // NOLINT
  explicit BigReal(double x) { init(); mpfr_set_d(v_, x, MPFR_RNDN); }

  /// Parses a decimal string such as "-1.25e-3". Throws on malformed input.
  explicit BigReal(std::string_view text) {
    init();
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end == s.c_str() || *end != '\0') {
      mpfr_clear(v_);
      live_ = false;
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    if (o.live_) {
      *v_ = *o.v_;
      o.live_ = false;
    } else {
      init();
      mpfr_set_zero(v_, 1);
    }
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      if (!live_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        live_ = true;
      } else if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      }
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) {
      if (live_ && o.live_) {
        mpfr_swap(v_, o.v_);
      } else if (o.live_) {
        *v_ = *o.v_;
        live_ = true;
        o.live_ = false;
      }
    }
    return *this;
  }
  ~BigReal() {
    if (live_) mpfr_clear(v_);
  }

  static BigReal pi() {
    BigReal r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// Returns `10^e` at working precision.
  static BigReal pow10(int e) {
    BigReal r(10);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Decimal scientific representation with `digits` significant digits.
  std::string to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (digits < 1) digits = 1;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigReal& operator+=(const BigReal& o) { return assign_op(mpfr_add, o); }
  BigReal& operator-=(const BigReal& o) { return assign_op(mpfr_sub, o); }
  BigReal& operator*=(const BigReal& o) { return assign_op(mpfr_mul, o); }
  BigReal& operator/=(const BigReal& o) { return assign_op(mpfr_div, o); }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(mpfr_add, a, b); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(mpfr_sub, a, b); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(mpfr_mul, a, b); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binary(mpfr_div, a, b); }
  friend BigReal operator-(const BigReal& a) {
    BigReal r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend BigReal operator*(const BigReal& a, int b) {
    BigReal r;
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(int b, const BigReal& a) { return a * b; }
  friend BigReal operator/(const BigReal& a, int b) {
    BigReal r;
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x) {
    return os << x.to_string(static_cast<int>(os.precision() > 0 ? os.precision() : 6));
  }

  template <class Fn>
  friend BigReal unary(Fn fn, const BigReal& a) {
    BigReal r;
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  void init() { mpfr_init2(v_, digits_to_bits(working_digits())); }

  template <class Fn>
  static BigReal binary(Fn fn, const BigReal& a, const BigReal& b) {
    BigReal r;
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class Fn>
  BigReal& assign_op(Fn fn, const BigReal& o) {
    mpfr_prec_t want = digits_to_bits(working_digits());
    if (mpfr_get_prec(v_) != want) {
      BigReal r = binary(fn, *this, o);
      return *this = std::move(r);
    }
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
  bool live_ = true;
};

inline BigReal sqrt(const BigReal& x) { return unary(mpfr_sqrt, x); }
inline BigReal abs(const BigReal& x) { return unary(mpfr_abs, x); }
inline BigReal sin(const BigReal& x) { return unary(mpfr_sin, x); }
inline BigReal cos(const BigReal& x) { return unary(mpfr_cos, x); }
inline BigReal tan(const BigReal& x) { return unary(mpfr_tan, x); }
inline BigReal asin(const BigReal& x) { return unary(mpfr_asin, x); }
inline BigReal acos(const BigReal& x) { return unary(mpfr_acos, x); }
inline BigReal atan(const BigReal& x) { return unary(mpfr_atan, x); }
inline BigReal exp(const BigReal& x) { return unary(mpfr_exp, x); }
inline BigReal log(const BigReal& x) { return unary(mpfr_log, x); }
inline BigReal log10(const BigReal& x) { return unary(mpfr_log10, x); }
inline BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.get(), x.get());
  return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline bool isfinite(const BigReal& x) { return x.is_finite(); }

}  // namespace geonet
