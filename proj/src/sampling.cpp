#include "ganelius/sampling.hpp"

#include <algorithm>
#include <string>

namespace ganelius {

template <class T>
GaneliusNodes<T> ganelius_nodes(int n, T r) {
  if (n < 1) throw InvalidArgument("N must be a positive integer");
  if (!(r > T(0)) || !math::isfinite(r)) throw InvalidArgument("r must be a positive finite number");

  const T quarter_pi = math::pi<T>() / T(4);
  const int n0 = n - static_cast<int>(math::ceil(quarter_pi * math::sqrt(T(n) * r)));
  if (n0 < 1) {
    throw InvalidArgument("split index N0 = " + std::to_string(n0) + " is below 1 for N = " + std::to_string(n) +
                          "; increase N or decrease r");
  }

  GaneliusNodes<T> out;
  out.n = n;
  out.r = r;
  out.n0 = n0;
  out.a.reserve(static_cast<std::size_t>(n));

  // phi(x)/phi(n0) = exp(pi (sqrt(x) - sqrt(n0)) / sqrt(r)), never forming phi(n0) itself.
  const T scale = math::pi<T>() / math::sqrt(r);
  const T sqrt_n0 = math::sqrt(T(n0));
  auto phi_ratio = [&](T x) { return math::exp(scale * (math::sqrt(x) - sqrt_n0)); };

  for (int k = 1; k <= n0; ++k) out.a.push_back(phi_ratio(T(k - 1)));
  if (n0 + 1 <= n) out.a.push_back(phi_ratio(T(n0) - T(0.5)));
  const int tail = n - n0 - 1;
  for (int k = n0 + 2; k <= n; ++k) out.a.push_back(T(1) - T(k - n0 - 1) / (T(5) * T(tail)));

  std::vector<T> sorted = out.a;
  std::sort(sorted.begin(), sorted.end());
  const T tol = T(4) * math::epsilon<T>();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= tol * sorted[i]) {
      throw NodeCollision("modified Ganelius nodes coincide for N = " + std::to_string(n) + " near a = " +
                          math::to_string(sorted[i]));
    }
  }
  return out;
}

template <class T>
T node_atanh_from_a(T a) {
  return T(-0.5) * math::log(math::tanh(math::atanh(a) / T(2)));
}

template <class T>
TransformedNodes<T> transform_nodes(const GaneliusNodes<T>& nodes, T d) {
  if (!(d > T(0) && d < math::pi<T>())) throw InvalidArgument("d must lie in (0, pi)");
  const int n = nodes.n;
  if (n < 1 || static_cast<int>(nodes.a.size()) != n) throw InvalidArgument("malformed node set");

  TransformedNodes<T> out;
  out.d = d;
  out.n = n;
  const std::size_t m = static_cast<std::size_t>(2 * n);
  out.b.resize(m);
  out.beta.resize(m);
  out.b_atanh.resize(m);
  out.beta_atanh.resize(m);
  out.log_one_minus_beta_sq.resize(m);
  out.beta_point.resize(m);
  out.sigma.resize(m);

  const T stretch = T(2) * d / math::pi<T>();
  for (int i = 0; i < n; ++i) {
    const T a = nodes.a[static_cast<std::size_t>(i)];
    const T b = math::sqrt((T(1) - a) / (T(1) + a));
    const T t = node_atanh_from_a(a);
    const T theta = stretch * t;
    const UnitPoint<T> p = UnitPoint<T>::from_atanh(theta);

    for (const int sgn : {1, -1}) {
      const std::size_t s = static_cast<std::size_t>(sgn > 0 ? i : n + i);
      out.b[s] = T(sgn) * b;
      out.b_atanh[s] = T(sgn) * t;
      out.beta_point[s] = sgn > 0 ? p : (p.near_boundary() ? UnitPoint<T>::near_endpoint(-p.sign(), p.delta())
                                                             : UnitPoint<T>::interior(-p.value()));
      out.beta[s] = out.beta_point[s].value();
      // Recomputed from the stored point, so that evaluating at a node gives
      // a zero B_N factor and the same weight as the node itself.
      out.beta_atanh[s] = atanh_stable(out.beta_point[s]);
      out.log_one_minus_beta_sq[s] = math::log(one_minus_x_sq(out.beta_point[s]));
    }
  }

  // (1 - b_l b_k)/(b_k - b_l) = coth(t_k - t_l) with t = arctanh b = c theta.
  const T c = math::pi<T>() / (T(2) * d);
  std::vector<T> factors(m - 1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t j = 0;
    for (std::size_t l = 0; l < m; ++l) {
      if (l == k) continue;
      factors[j++] = math::tanh(c * (out.beta_atanh[k] - out.beta_atanh[l]));
    }
    SignedLog<T> p = signed_log_product<T>(factors);
    if (p.sign == 0) throw NodeCollision("transformed nodes coincide; sigma_k is unbounded");
    p.log_magnitude = -p.log_magnitude;
    out.sigma[k] = p;
  }
  return out;
}

template GaneliusNodes<double> ganelius_nodes<double>(int, double);
template GaneliusNodes<quad> ganelius_nodes<quad>(int, quad);
template TransformedNodes<double> transform_nodes<double>(const GaneliusNodes<double>&, double);
template TransformedNodes<quad> transform_nodes<quad>(const GaneliusNodes<quad>&, quad);
template double node_atanh_from_a<double>(double);
template quad node_atanh_from_a<quad>(quad);

}  // namespace ganelius
