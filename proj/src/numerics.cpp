#include "ganelius/numerics.hpp"

#include <cstdio>
#include <cstdlib>

namespace ganelius {

Precision parse_precision(std::string_view name) {
  if (name == "binary64" || name == "double") return Precision::binary64;
  if (name == "extended" || name == "quad") return Precision::extended;
  throw InvalidArgument("unknown precision '" + std::string(name) + "' (expected binary64 or extended)");
}

const char* precision_name(Precision p) {
  return p == Precision::binary64 ? "binary64" : "extended";
}

namespace math {

template <>
double from_string<double>(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw InvalidArgument("not a number: '" + text + "'");
  return v;
}

template <>
quad from_string<quad>(const std::string& text) {
  char* end = nullptr;
  const quad v = strtoflt128(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw InvalidArgument("not a number: '" + text + "'");
  return v;
}

template <class T>
T decimal(std::int64_t k, int ell) {
  if (k < 0 || ell < 0) throw InvalidArgument("decimal(k, ell) requires k >= 0 and ell >= 0");
  // 10^ell is exact in both formats for the exponents used by the reference grid.
  T scale(1);
  for (int i = 0; i < ell; ++i) scale *= T(10);
  return T(k) / scale;
}

template double decimal<double>(std::int64_t, int);
template quad decimal<quad>(std::int64_t, int);

std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_string(quad x) {
  char buf[96];
  quadmath_snprintf(buf, sizeof buf, "%.36Qg", x);
  return buf;
}

int significant_digits(Precision p) { return p == Precision::binary64 ? 17 : 36; }

}  // namespace math

template <class T>
UnitPoint<T> UnitPoint<T>::interior(T x) {
  if (!(math::abs(x) <= T(1))) throw InvalidArgument("UnitPoint::interior requires |x| <= 1");
  return UnitPoint(x, T(1) - math::abs(x), math::sign(x), false);
}

template <class T>
UnitPoint<T> UnitPoint<T>::near_endpoint(int sign, T delta) {
  if (sign != 1 && sign != -1) throw InvalidArgument("UnitPoint::near_endpoint requires sign = +-1");
  if (!(delta >= T(0) && delta <= T(1))) throw InvalidArgument("UnitPoint::near_endpoint requires 0 <= delta <= 1");
  return UnitPoint(T(sign) * (T(1) - delta), delta, sign, true);
}

template <class T>
UnitPoint<T> UnitPoint<T>::decimal_endpoint(int sign, std::int64_t k, int ell) {
  return near_endpoint(sign, math::decimal<T>(k, ell));
}

template <class T>
UnitPoint<T> UnitPoint<T>::from_atanh(T theta) {
  // atanh(1/2) = 0.5493...; below it tanh is well conditioned as a value of x.
  if (math::abs(theta) < T(0.54)) return interior(math::tanh(theta));
  const T e = math::exp(T(-2) * math::abs(theta));
  return near_endpoint(math::sign(theta), T(2) * e / (T(1) + e));
}

template <class T>
T one_minus_x_sq(const UnitPoint<T>& p) {
  if (p.near_boundary()) return p.delta() * (T(2) - p.delta());
  return (T(1) - p.value()) * (T(1) + p.value());
}

template <class T>
T atanh_stable(const UnitPoint<T>& p) {
  if (p.at_endpoint()) throw DomainError("atanh is unbounded at x = +-1");
  if (p.near_boundary()) return T(p.sign()) * T(0.5) * math::log((T(2) - p.delta()) / p.delta());
  return math::atanh(p.value());
}

template <class T>
SignedLog<T> signed_log_product(std::span<const T> factors) {
  SignedLog<T> out;
  CompensatedSum<T> sum;
  for (const T f : factors) {
    if (f == T(0)) return {0, -math::infinity<T>()};
    if (f < T(0)) out.sign = -out.sign;
    sum.add(math::log(math::abs(f)));
  }
  out.log_magnitude = sum.value();
  return out;
}

template class UnitPoint<double>;
template class UnitPoint<quad>;
template double one_minus_x_sq<double>(const UnitPoint<double>&);
template quad one_minus_x_sq<quad>(const UnitPoint<quad>&);
template double atanh_stable<double>(const UnitPoint<double>&);
template quad atanh_stable<quad>(const UnitPoint<quad>&);
template SignedLog<double> signed_log_product<double>(std::span<const double>);
template SignedLog<quad> signed_log_product<quad>(std::span<const quad>);

}  // namespace ganelius
