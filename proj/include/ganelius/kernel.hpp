#pragma once

// Geometry of the eye-shaped region, the conformal maps, the generalized
// Blaschke product B_N and the cardinal basis functions built from it.

#include <cstdint>
#include <span>

#include "ganelius/numerics.hpp"
#include "ganelius/sampling.hpp"

namespace ganelius {

/// (d, mu) identifying the weighted Hardy space on the region
/// { z : |arg((1+z)/(1-z))| < d } with weight (1 - z^2)^(mu/2).
template <class T>
struct SpaceParams {
  T d{};
  T mu{};

  static SpaceParams make(T d, T mu) {
    if (!(d > T(0) && d < math::pi<T>())) throw InvalidArgument("d must lie in (0, pi)");
    if (!(mu > T(0)) || !math::isfinite(mu)) throw InvalidArgument("mu must be positive");
    return {d, mu};
  }
  /// r = d mu / pi, the decay exponent fed to the node construction.
  T node_exponent() const { return d * mu / math::pi<T>(); }
};

template <class T>
struct Complex {
  T re{};
  T im{};
};

/// |arg((1+z)/(1-z))| < d.  DomainError at z = +-1.
template <class T>
bool in_region(Complex<T> z, T d);

/// arctanh for complex z off the cuts (-inf, -1] and [1, inf).
template <class T>
Complex<T> complex_atanh(Complex<T> z);

/// psi(t) = tanh(t / 2), delta-coded away from the origin.
template <class T>
UnitPoint<T> se_map(T t);

/// psi^{-1}(x) = 2 arctanh x.  DomainError at x = +-1.
template <class T>
T se_map_inv(const UnitPoint<T>& p);

/// sin(pi (t/h - j)) / (pi (t/h - j)), equal to 1 at t = j h.
template <class T>
T sinc_kernel(std::int64_t j, T h, T t);

enum class BlaschkeForm { tanh_form, rational_form };

/// B_N(z) = prod'_k tanh[(pi/2d)(arctanh z - arctanh beta_k)].
///
/// Holds a non-owning pointer to the node set, which must outlive it.
/// The rational form prod' (z - b_k)/(1 - b_k z) is only valid for d = pi/2
/// and is provided as a real-axis cross-check.
template <class T>
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(const TransformedNodes<T>& nodes, BlaschkeForm form = BlaschkeForm::tanh_form);

  BlaschkeForm form() const { return form_; }

  /// Real axis, |x| <= 1.  At x = +-1 the limit value 1 is returned.
  SignedLog<T> eval(const UnitPoint<T>& p) const;
  T value(const UnitPoint<T>& p) const { return eval(p).value(); }

  struct ComplexValue {
    T log_modulus;
    T phase;
  };
  /// z inside the region (DomainError otherwise).  Tanh form only.
  ComplexValue eval(Complex<T> z) const;
  T modulus(Complex<T> z) const { return math::exp(eval(z).log_modulus); }

 private:
  const TransformedNodes<T>* nodes_;
  BlaschkeForm form_;
};

/// |arctanh x - arctanh beta_k| below which the factor quotient
/// tanh(c D)/sinh(D) switches to its Taylor series: 2^-26 for binary64,
/// 2^-55 for extended.
template <class T>
T crossover_threshold();

enum class QuotientPath { automatic, direct, series };

/// q(D) = tanh(c D) / sinh(D), the finite quotient B_N factor / (x - beta_k)
/// after the cosh weights are split off.  Exposed for consistency tests.
template <class T>
T factor_quotient(T delta_theta, T c, QuotientPath path = QuotientPath::automatic);

/// All 2N basis values
///   (2 d sigma_k / pi) (1-x^2)^nu / (1-beta_k^2)^(nu-1) B_N(x) / (x - beta_k)
/// at one point, in node-slot order, in O(N) operations.
template <class T>
void basis_values(const UnitPoint<T>& p, const TransformedNodes<T>& nodes, T nu, std::span<T> out);

/// Single basis function for signed index k.
template <class T>
T basis_function(int k, const UnitPoint<T>& p, const TransformedNodes<T>& nodes, T nu);

extern template class BlaschkeProduct<double>;
extern template class BlaschkeProduct<quad>;

}  // namespace ganelius
