#include "ganelius/kernel.hpp"

#include <vector>

namespace ganelius {

template <class T>
Complex<T> complex_atanh(Complex<T> z) {
  const T x = z.re;
  const T y = z.im;
  const T num = (T(1) + x) * (T(1) + x) + y * y;
  const T den = (T(1) - x) * (T(1) - x) + y * y;
  // arg((1+z)/(1-z)) = atan2(2y, 1 - x^2 - y^2)
  return {T(0.25) * math::log(num / den), T(0.5) * math::atan2(T(2) * y, (T(1) - x) * (T(1) + x) - y * y)};
}

template <class T>
bool in_region(Complex<T> z, T d) {
  if (z.im == T(0) && (z.re == T(1) || z.re == T(-1))) throw DomainError("z = +-1 is a boundary vertex of the region");
  const T arg = math::atan2(T(2) * z.im, (T(1) - z.re) * (T(1) + z.re) - z.im * z.im);
  return math::abs(arg) < d;
}

template <class T>
UnitPoint<T> se_map(T t) {
  return UnitPoint<T>::from_atanh(t / T(2));
}

template <class T>
T se_map_inv(const UnitPoint<T>& p) {
  return T(2) * atanh_stable(p);
}

template <class T>
T sinc_kernel(std::int64_t j, T h, T t) {
  const T w = t / h - T(j);
  if (w == T(0)) return T(1);
  const T n = math::round(w);
  T s = math::sin(math::pi<T>() * (w - n));
  if (math::fmod(n, T(2)) != T(0)) s = -s;
  return s / (math::pi<T>() * w);
}

template <class T>
T crossover_threshold();
template <>
double crossover_threshold<double>() {
  return 0x1p-26;
}
template <>
quad crossover_threshold<quad>() {
  return quad(0x1p-55);
}

template <class T>
T factor_quotient(T delta_theta, T c, QuotientPath path) {
  if (path == QuotientPath::automatic) {
    path = math::abs(delta_theta) < crossover_threshold<T>() ? QuotientPath::series : QuotientPath::direct;
  }
  if (path == QuotientPath::series) {
    // tanh(cD)/sinh(D) = c (1 - (2c^2 + 1) D^2 / 6) + O(D^4)
    return c * (T(1) - (T(2) * c * c + T(1)) * delta_theta * delta_theta / T(6));
  }
  return math::tanh(c * delta_theta) / math::sinh(delta_theta);
}

namespace {

template <class T>
struct FactorScan {
  std::vector<T> delta;
  std::vector<T> factor;
  CompensatedSum<T> log_sum;
  int sign = 1;  // sign over the nonzero factors
  int zeros = 0;
};

// tanh(c (theta_x - theta_k)) for every node, with the shared theta_x.
template <class T>
void scan_factors(T theta_x, const TransformedNodes<T>& nodes, FactorScan<T>& scan) {
  const std::size_t m = static_cast<std::size_t>(nodes.size());
  const T c = math::pi<T>() / (T(2) * nodes.d);
  scan.delta.resize(m);
  scan.factor.resize(m);
  scan.log_sum = {};
  scan.sign = 1;
  scan.zeros = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const T dk = theta_x - nodes.beta_atanh[k];
    const T f = math::tanh(c * dk);
    scan.delta[k] = dk;
    scan.factor[k] = f;
    if (f == T(0)) {
      ++scan.zeros;
    } else {
      if (f < T(0)) scan.sign = -scan.sign;
      scan.log_sum.add(math::log(math::abs(f)));
    }
  }
}

}  // namespace

template <class T>
BlaschkeProduct<T>::BlaschkeProduct(const TransformedNodes<T>& nodes, BlaschkeForm form) : nodes_(&nodes), form_(form) {
  if (form == BlaschkeForm::rational_form &&
      math::abs(nodes.d - math::pi<T>() / T(2)) > T(1000) * math::epsilon<T>()) {
    throw InvalidArgument("the rational Blaschke form requires d = pi/2");
  }
}

template <class T>
SignedLog<T> BlaschkeProduct<T>::eval(const UnitPoint<T>& p) const {
  if (form_ == BlaschkeForm::rational_form) {
    const T x = p.value();
    std::vector<T> factors(static_cast<std::size_t>(nodes_->size()));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      factors[k] = (x - nodes_->b[k]) / (T(1) - nodes_->b[k] * x);
    }
    return signed_log_product<T>(factors);
  }
  // Every factor tends to sign(x); there is an even number of them.
  if (p.at_endpoint()) return {1, T(0)};
  FactorScan<T> scan;
  scan_factors(atanh_stable(p), *nodes_, scan);
  if (scan.zeros > 0) return {0, -math::infinity<T>()};
  return {scan.sign, scan.log_sum.value()};
}

template <class T>
typename BlaschkeProduct<T>::ComplexValue BlaschkeProduct<T>::eval(Complex<T> z) const {
  if (form_ != BlaschkeForm::tanh_form) throw InvalidArgument("complex evaluation is available in tanh form only");
  if (!in_region(z, nodes_->d)) throw DomainError("z lies outside the region Lambda_d");
  const T c = math::pi<T>() / (T(2) * nodes_->d);
  const Complex<T> w = complex_atanh(z);
  const T q = c * w.im;
  const T sq = math::sin(q) * math::sin(q);
  const T cq = math::cos(q) * math::cos(q);
  CompensatedSum<T> log_mod;
  CompensatedSum<T> phase;
  for (std::size_t k = 0; k < static_cast<std::size_t>(nodes_->size()); ++k) {
    const T p = c * (w.re - nodes_->beta_atanh[k]);
    // |tanh(p + iq)|^2 = (sinh^2 p + sin^2 q) / (sinh^2 p + cos^2 q)
    if (math::abs(p) > T(20)) {
      const T e = math::exp(T(-2) * math::abs(p));
      const T inv_sinh_sq = T(4) * e / ((T(1) - e) * (T(1) - e));
      log_mod.add(T(0.5) * (math::log1p(sq * inv_sinh_sq) - math::log1p(cq * inv_sinh_sq)));
    } else {
      const T sh = math::sinh(p);
      log_mod.add(T(0.5) * (math::log(sh * sh + sq) - math::log(sh * sh + cq)));
    }
    phase.add(math::atan2(math::sin(T(2) * q), math::sinh(T(2) * p)));
  }
  return {log_mod.value(), phase.value()};
}

template <class T>
void basis_values(const UnitPoint<T>& p, const TransformedNodes<T>& nodes, T nu, std::span<T> out) {
  const std::size_t m = static_cast<std::size_t>(nodes.size());
  if (out.size() != m) throw InvalidArgument("basis_values: output span has the wrong length");
  if (p.at_endpoint()) {
    for (T& v : out) v = T(0);
    return;
  }
  thread_local FactorScan<T> scan;
  scan_factors(atanh_stable(p), nodes, scan);

  const T c = math::pi<T>() / (T(2) * nodes.d);
  const T log_weight = math::log(one_minus_x_sq(p));
  const T base = math::log(T(2) * nodes.d / math::pi<T>()) + (nu - T(0.5)) * log_weight;
  const T total = scan.log_sum.value();

  for (std::size_t k = 0; k < m; ++k) {
    const T f = scan.factor[k];
    T excluded;
    int sign;
    if (f == T(0)) {
      if (scan.zeros > 1) {
        out[k] = T(0);
        continue;
      }
      excluded = total;
      sign = scan.sign;
    } else {
      if (scan.zeros > 0) {
        out[k] = T(0);
        continue;
      }
      excluded = total - math::log(math::abs(f));
      sign = f < T(0) ? -scan.sign : scan.sign;
    }
    const T dk = scan.delta[k];
    const T q = math::abs(dk) < crossover_threshold<T>() ? factor_quotient(dk, c, QuotientPath::series)
                                                          : f / math::sinh(dk);
    const T log_mag = base + nodes.sigma[k].log_magnitude + (T(0.5) - nu) * nodes.log_one_minus_beta_sq[k] +
                      excluded + math::log(q);
    out[k] = T(sign * nodes.sigma[k].sign) * math::exp(log_mag);
  }
}

template <class T>
T basis_function(int k, const UnitPoint<T>& p, const TransformedNodes<T>& nodes, T nu) {
  if (k == 0 || k > nodes.n || k < -nodes.n) throw InvalidArgument("basis index out of range");
  std::vector<T> values(static_cast<std::size_t>(nodes.size()));
  basis_values<T>(p, nodes, nu, values);
  return values[static_cast<std::size_t>(nodes.slot(k))];
}

template class BlaschkeProduct<double>;
template class BlaschkeProduct<quad>;

#define GANELIUS_KERNEL_INSTANTIATE(T)                                                   \
  template Complex<T> complex_atanh<T>(Complex<T>);                                      \
  template bool in_region<T>(Complex<T>, T);                                             \
  template UnitPoint<T> se_map<T>(T);                                                    \
  template T se_map_inv<T>(const UnitPoint<T>&);                                         \
  template T sinc_kernel<T>(std::int64_t, T, T);                                         \
  template T factor_quotient<T>(T, T, QuotientPath);                                     \
  template void basis_values<T>(const UnitPoint<T>&, const TransformedNodes<T>&, T, std::span<T>); \
  template T basis_function<T>(int, const UnitPoint<T>&, const TransformedNodes<T>&, T);

GANELIUS_KERNEL_INSTANTIATE(double)
GANELIUS_KERNEL_INSTANTIATE(quad)

#undef GANELIUS_KERNEL_INSTANTIATE

}  // namespace ganelius
