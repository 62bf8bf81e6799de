#include "ganelius/approximant.hpp"

#include <string>

namespace ganelius {

Scheme parse_scheme(std::string_view name) {
  if (name == "ganelius") return Scheme::ganelius;
  if (name == "sesinc" || name == "se-sinc") return Scheme::sesinc;
  throw InvalidArgument("unknown scheme '" + std::string(name) + "' (expected ganelius or sesinc)");
}

const char* scheme_name(Scheme s) { return s == Scheme::ganelius ? "ganelius" : "sesinc"; }

template <class T>
T default_nu(T mu) {
  if (!(mu > T(0))) throw InvalidArgument("mu must be positive");
  const T half = mu / T(2);
  if (math::fmod(mu, T(2)) == T(0)) return half + T(0.5);
  return math::ceil(half);
}

template <class T>
GaneliusApproximant<T>::GaneliusApproximant(const TestFunction<T>& f, SpaceParams<T> params, T nu, int n)
    : params_(SpaceParams<T>::make(params.d, params.mu)), nu_(nu), n_(n) {
  if (!nu_admissible(params_.mu, nu)) {
    throw InvalidArgument("nu = " + math::to_string(nu) + " is outside (mu/2, mu/2 + 1) for mu = " +
                          math::to_string(params_.mu));
  }
  raw_ = std::make_shared<const GaneliusNodes<T>>(ganelius_nodes<T>(n, params_.node_exponent()));
  nodes_ = std::make_shared<const TransformedNodes<T>>(transform_nodes<T>(*raw_, params_.d));
  samples_.reserve(static_cast<std::size_t>(nodes_->size()));
  for (const auto& p : nodes_->beta_point) samples_.push_back(f(p));
}

template <class T>
T GaneliusApproximant<T>::operator()(const UnitPoint<T>& p) const {
  if (p.at_endpoint()) return T(0);
  thread_local std::vector<T> basis;
  basis.resize(samples_.size());
  basis_values<T>(p, *nodes_, nu_, basis);
  CompensatedSum<T> sum;
  for (std::size_t k = 0; k < samples_.size(); ++k) sum.add(samples_[k] * basis[k]);
  return sum.value();
}

template <class T>
SincApproximant<T>::SincApproximant(const TestFunction<T>& f, SpaceParams<T> params, int n)
    : params_(SpaceParams<T>::make(params.d, params.mu)), n_(n) {
  if (n < 1) throw InvalidArgument("N must be a positive integer");
  h_ = math::sqrt(T(2) * math::pi<T>() * params_.d / (params_.mu * T(n)));
  for (int j = -n; j <= n; ++j) {
    points_.push_back(se_map(T(j) * h_));
    samples_.push_back(f(points_.back()));
  }
}

template <class T>
T SincApproximant<T>::operator()(const UnitPoint<T>& p) const {
  if (p.at_endpoint()) return T(0);
  const T w = se_map_inv(p) / h_;
  const T nearest = math::round(w);
  // sin(pi (w - j)) = (-1)^j sin(pi w), and sin(pi w) = (-1)^n sin(pi (w - n)).
  T s = math::sin(math::pi<T>() * (w - nearest));
  if (math::fmod(nearest, T(2)) != T(0)) s = -s;
  CompensatedSum<T> sum;
  for (int j = -n_; j <= n_; ++j) {
    const T sample = samples_[static_cast<std::size_t>(j + n_)];
    const T arg = w - T(j);
    if (arg == T(0)) {
      sum.add(sample);
      continue;
    }
    const T sj = (j % 2 == 0) ? s : -s;
    sum.add(sample * sj / (math::pi<T>() * arg));
  }
  return sum.value();
}

template <class T>
int Approximant<T>::n() const {
  return std::visit([](const auto& a) { return a.n(); }, impl_);
}

template <class T>
const SpaceParams<T>& Approximant<T>::params() const {
  return std::visit([](const auto& a) -> const SpaceParams<T>& { return a.params(); }, impl_);
}

template <class T>
std::size_t Approximant<T>::sample_count() const {
  return std::visit([](const auto& a) { return a.samples().size(); }, impl_);
}

template <class T>
T Approximant<T>::operator()(const UnitPoint<T>& p) const {
  return std::visit([&](const auto& a) { return a(p); }, impl_);
}

template <class T>
Approximant<T> build_approximant(const TestFunction<T>& f, Scheme scheme, int n) {
  if (scheme == Scheme::ganelius) return build_ganelius(f, f.params, f.nu_default, n);
  return build_sesinc(f, f.params, n);
}

template <class T>
T eval_ganelius(const Approximant<T>& a, const UnitPoint<T>& p) {
  const auto* g = a.ganelius();
  if (g == nullptr) throw InvalidArgument("approximant is not a Ganelius approximant");
  return (*g)(p);
}

template <class T>
T eval_sesinc(const Approximant<T>& a, const UnitPoint<T>& p) {
  const auto* s = a.sesinc();
  if (s == nullptr) throw InvalidArgument("approximant is not an SE-Sinc approximant");
  return (*s)(p);
}

template class GaneliusApproximant<double>;
template class GaneliusApproximant<quad>;
template class SincApproximant<double>;
template class SincApproximant<quad>;
template class Approximant<double>;
template class Approximant<quad>;
template double default_nu<double>(double);
template quad default_nu<quad>(quad);
template Approximant<double> build_approximant<double>(const TestFunction<double>&, Scheme, int);
template Approximant<quad> build_approximant<quad>(const TestFunction<quad>&, Scheme, int);
template double eval_ganelius<double>(const Approximant<double>&, const UnitPoint<double>&);
template quad eval_ganelius<quad>(const Approximant<quad>&, const UnitPoint<quad>&);
template double eval_sesinc<double>(const Approximant<double>&, const UnitPoint<double>&);
template quad eval_sesinc<quad>(const Approximant<quad>&, const UnitPoint<quad>&);

}  // namespace ganelius
