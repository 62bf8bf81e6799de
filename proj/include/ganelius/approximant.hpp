#pragma once

// The optimal approximant built on Ganelius nodes and the SE-Sinc baseline.

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "ganelius/corpus.hpp"
#include "ganelius/kernel.hpp"
#include "ganelius/sampling.hpp"

namespace ganelius {

enum class Scheme { ganelius, sesinc };

Scheme parse_scheme(std::string_view name);
const char* scheme_name(Scheme s);

/// ceil(mu/2), or mu/2 + 1/2 when mu is an even integer (where ceil(mu/2)
/// would sit on the boundary of the admissible open interval).
template <class T>
T default_nu(T mu);

/// True iff mu/2 < nu < mu/2 + 1.
template <class T>
bool nu_admissible(T mu, T nu) {
  return mu / T(2) < nu && nu < mu / T(2) + T(1);
}

/// f(x) ~ sum'_k f(beta_k) * basis_k(x) over the 2N transformed Ganelius nodes
/// with r = d mu / pi.
template <class T>
class GaneliusApproximant {
 public:
  GaneliusApproximant(const TestFunction<T>& f, SpaceParams<T> params, T nu, int n);

  T operator()(const UnitPoint<T>& p) const;

  int n() const { return n_; }
  T nu() const { return nu_; }
  const SpaceParams<T>& params() const { return params_; }
  const GaneliusNodes<T>& raw_nodes() const { return *raw_; }
  const TransformedNodes<T>& nodes() const { return *nodes_; }
  const std::vector<T>& samples() const { return samples_; }

 private:
  SpaceParams<T> params_;
  T nu_;
  int n_;
  std::shared_ptr<const GaneliusNodes<T>> raw_;
  std::shared_ptr<const TransformedNodes<T>> nodes_;
  std::vector<T> samples_;
};

/// f(x) ~ sum_{j=-N}^{N} f(psi(jh)) S(j,h)(psi^{-1}(x)), h = sqrt(2 pi d / (mu N)).
template <class T>
class SincApproximant {
 public:
  SincApproximant(const TestFunction<T>& f, SpaceParams<T> params, int n);

  T operator()(const UnitPoint<T>& p) const;

  int n() const { return n_; }
  T h() const { return h_; }
  const SpaceParams<T>& params() const { return params_; }
  const std::vector<UnitPoint<T>>& points() const { return points_; }
  const std::vector<T>& samples() const { return samples_; }

 private:
  SpaceParams<T> params_;
  int n_;
  T h_;
  std::vector<UnitPoint<T>> points_;
  std::vector<T> samples_;
};

template <class T>
class Approximant {
 public:
  explicit Approximant(GaneliusApproximant<T> a) : impl_(std::move(a)) {}
  explicit Approximant(SincApproximant<T> a) : impl_(std::move(a)) {}

  Scheme scheme() const { return impl_.index() == 0 ? Scheme::ganelius : Scheme::sesinc; }
  int n() const;
  const SpaceParams<T>& params() const;
  /// Number of function samples: 2N (Ganelius) or 2N + 1 (SE-Sinc).
  std::size_t sample_count() const;

  T operator()(const UnitPoint<T>& p) const;

  const GaneliusApproximant<T>* ganelius() const { return std::get_if<GaneliusApproximant<T>>(&impl_); }
  const SincApproximant<T>* sesinc() const { return std::get_if<SincApproximant<T>>(&impl_); }

 private:
  std::variant<GaneliusApproximant<T>, SincApproximant<T>> impl_;
};

template <class T>
Approximant<T> build_ganelius(const TestFunction<T>& f, SpaceParams<T> params, T nu, int n) {
  return Approximant<T>(GaneliusApproximant<T>(f, params, nu, n));
}

template <class T>
Approximant<T> build_sesinc(const TestFunction<T>& f, SpaceParams<T> params, int n) {
  return Approximant<T>(SincApproximant<T>(f, params, n));
}

/// Builds with the function's own (d, mu) and, for Ganelius, its default nu.
template <class T>
Approximant<T> build_approximant(const TestFunction<T>& f, Scheme scheme, int n);

/// InvalidArgument if A is not of the requested scheme.
template <class T>
T eval_ganelius(const Approximant<T>& a, const UnitPoint<T>& p);
template <class T>
T eval_sesinc(const Approximant<T>& a, const UnitPoint<T>& p);

extern template class GaneliusApproximant<double>;
extern template class GaneliusApproximant<quad>;
extern template class SincApproximant<double>;
extern template class SincApproximant<quad>;
extern template class Approximant<double>;
extern template class Approximant<quad>;

}  // namespace ganelius
