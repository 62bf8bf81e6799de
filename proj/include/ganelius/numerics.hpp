#pragma once

// Precision backend and the scalar kernels every other module is built on.
//
// All numerical code is templated on the working real type T, which is
// either `double` or `ganelius::quad` (IEEE binary128 via libquadmath).  The
// `math` namespace below is the single place where transcendental calls are
// dispatched, so both precisions run the same code paths.

#include <quadmath.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ganelius {

using quad = __float128;

enum class Precision { binary64, extended };

Precision parse_precision(std::string_view name);
const char* precision_name(Precision p);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. atanh(1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two sampling nodes coincide, so the interpolation coefficients blow up.
class NodeCollision : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Math layer
// ---------------------------------------------------------------------------

namespace math {

inline double exp(double x) { return std::exp(x); }
inline double expm1(double x) { return std::expm1(x); }
inline double log(double x) { return std::log(x); }
inline double log1p(double x) { return std::log1p(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double tanh(double x) { return std::tanh(x); }
inline double atanh(double x) { return std::atanh(x); }
inline double sinh(double x) { return std::sinh(x); }
inline double cosh(double x) { return std::cosh(x); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double pow(double x, double y) { return std::pow(x, y); }
inline double abs(double x) { return std::fabs(x); }
inline double ceil(double x) { return std::ceil(x); }
inline double floor(double x) { return std::floor(x); }
inline double round(double x) { return std::round(x); }
inline double fmod(double x, double y) { return std::fmod(x, y); }
inline bool isfinite(double x) { return std::isfinite(x); }
inline bool isnan(double x) { return std::isnan(x); }

inline quad exp(quad x) { return expq(x); }
inline quad expm1(quad x) { return expm1q(x); }
inline quad log(quad x) { return logq(x); }
inline quad log1p(quad x) { return log1pq(x); }
inline quad sqrt(quad x) { return sqrtq(x); }
inline quad sin(quad x) { return sinq(x); }
inline quad cos(quad x) { return cosq(x); }
inline quad tanh(quad x) { return tanhq(x); }
inline quad atanh(quad x) { return atanhq(x); }
inline quad sinh(quad x) { return sinhq(x); }
inline quad cosh(quad x) { return coshq(x); }
inline quad atan2(quad y, quad x) { return atan2q(y, x); }
inline quad pow(quad x, quad y) { return powq(x, y); }
inline quad abs(quad x) { return fabsq(x); }
inline quad ceil(quad x) { return ceilq(x); }
inline quad floor(quad x) { return floorq(x); }
inline quad round(quad x) { return roundq(x); }
inline quad fmod(quad x, quad y) { return fmodq(x, y); }
inline bool isfinite(quad x) { return finiteq(x) != 0; }
inline bool isnan(quad x) { return isnanq(x) != 0; }

template <class T>
T pi();
template <>
inline double pi<double>() {
  return 3.14159265358979323846;
}
template <>
inline quad pi<quad>() {
  return M_PIq;
}

template <class T>
T epsilon();
template <>
inline double epsilon<double>() {
  return std::numeric_limits<double>::epsilon();
}
template <>
inline quad epsilon<quad>() {
  return FLT128_EPSILON;
}

template <class T>
T infinity() {
  return T(std::numeric_limits<double>::infinity());
}

template <class T>
T quiet_nan() {
  return T(std::numeric_limits<double>::quiet_NaN());
}

template <class T>
int sign(T x) {
  return (x > T(0)) - (x < T(0));
}

/// Parses a decimal literal directly in working precision (so "1.57" is
/// the nearest quad to 1.57, not the nearest double widened).
template <class T>
T from_string(const std::string& text);

/// k * 10^-ell, rounded once in working precision.
template <class T>
T decimal(std::int64_t k, int ell);

/// 17 significant digits for double, 36 for quad.
std::string to_string(double x);
std::string to_string(quad x);
int significant_digits(Precision p);

}  // namespace math

// ---------------------------------------------------------------------------
// UnitPoint
// ---------------------------------------------------------------------------

/// A point of [-1, 1] stored so that both x and its endpoint distance
/// delta = 1 - |x| are accurate.  Points with |x| >= 1/2 are authoritative
/// in delta, which lets grid points such as 1 - 10^-16 (not representable
/// as a binary64 value of x) be carried exactly.
template <class T>
class UnitPoint {
 public:
  UnitPoint() = default;

  /// Plain value x with |x| <= 1.
  static UnitPoint interior(T x);
  /// sign * (1 - delta), delta in [0, 1].
  static UnitPoint near_endpoint(int sign, T delta);
  /// sign * (1 - k * 10^-ell), the decimal-coded form of the reference grid.
  static UnitPoint decimal_endpoint(int sign, std::int64_t k, int ell);
  /// tanh(theta), with delta computed from theta without cancellation.
  static UnitPoint from_atanh(T theta);

  T value() const { return x_; }
  T delta() const { return delta_; }
  int sign() const { return sign_; }
  bool endpoint_coded() const { return coded_; }
  /// True when delta (not x) is the accurate coordinate.
  bool near_boundary() const { return delta_ <= T(0.5); }
  bool at_endpoint() const { return delta_ == T(0); }

 private:
  UnitPoint(T x, T delta, int sign, bool coded) : x_(x), delta_(delta), sign_(sign), coded_(coded) {}

  T x_{0};
  T delta_{1};
  int sign_{0};
  bool coded_{false};
};

/// 1 - x^2, as delta (2 - delta) near the endpoints.
template <class T>
T one_minus_x_sq(const UnitPoint<T>& p);

/// arctanh x via logarithms of delta and 2 - delta; DomainError at x = +-1.
template <class T>
T atanh_stable(const UnitPoint<T>& p);

// ---------------------------------------------------------------------------
// Sign / log-magnitude products
// ---------------------------------------------------------------------------

template <class T>
struct SignedLog {
  int sign = 1;  // -1, 0 or +1
  T log_magnitude = T(0);

  T value() const { return sign == 0 ? T(0) : T(sign) * math::exp(log_magnitude); }
};

template <class T>
SignedLog<T> signed_log_product(std::span<const T> factors);

/// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (math::abs(sum_) >= math::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + carry_; }

 private:
  T sum_{0};
  T carry_{0};
};

extern template class UnitPoint<double>;
extern template class UnitPoint<quad>;

}  // namespace ganelius
