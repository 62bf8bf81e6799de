#pragma once

// Numerical verification harness: the benchmark grid, error sweeps with
// convergence-rate statistics, and numerical checks of the product bound
// on the Ganelius nodes and of the cosh-convolution integral bound.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ganelius/approximant.hpp"
#include "ganelius/corpus.hpp"
#include "ganelius/numerics.hpp"

namespace ganelius {

// ---------------------------------------------------------------------------
// Evaluation grid
// ---------------------------------------------------------------------------

template <class T>
struct GridPoint {
  UnitPoint<T> point;
  std::string label;  // "0.123" for interior points, "1-3e-16" / "-1+3e-16" near the ends
};

/// X = { i/1000 : i = -999..999 } followed by
/// Y = { +-(1 - k 10^-l) : l = 4..16, k = 1..9 }, the latter decimal-coded.
template <class T>
std::vector<GridPoint<T>> reference_grid();

/// n equispaced interior points of (-1, 1), endpoints excluded.
template <class T>
std::vector<GridPoint<T>> uniform_grid(int n);

/// {4, 9, ..., 144}
std::vector<int> square_n_list();

// ---------------------------------------------------------------------------
// Product bound on the nodes
// ---------------------------------------------------------------------------

/// log of s^r prod_k |(s - a_k)/(s + a_k)|, -inf at s = 0 and at the nodes.
template <class T>
T ganelius_log_objective(const GaneliusNodes<T>& nodes, T s);

/// log of (1 - t^2)^r prod'_k |(t - b_k)/(1 - b_k t)| written in v = 1 - t^2,
/// so that t close to +-1 loses nothing to cancellation.
template <class T>
T blaschke_log_objective(const GaneliusNodes<T>& nodes, T v);

template <class T>
struct Maximum {
  T value{};
  T argmax{};
};

/// max over s in [0, 1] of s^r prod |(s - a_k)/(s + a_k)|: log-spaced seeds
/// on [min(1e-12, a_min/10), 1] plus midpoints between consecutive nodes,
/// every local seed maximum refined by golden section to relative 1e-8.
template <class T>
Maximum<T> ganelius_lhs_max(int n, T r);

template <class T>
T ganelius_lhs(int n, T r) {
  return ganelius_lhs_max<T>(n, r).value;
}

/// max over t in [-1, 1] of (1 - t^2)^r prod' |(t - b_k)/(1 - b_k t)|.  The
/// argmax is reported as v = 1 - t^2.  Under s = (1 - t^2)/(1 + t^2) the
/// integrand equals (2/(1+s))^r times the s-form one, so the two maxima
/// differ by a factor in [1, 2^r].
template <class T>
Maximum<T> blaschke_bound_lhs_max(int n, T r);

template <class T>
T blaschke_bound_lhs(int n, T r) {
  return blaschke_bound_lhs_max<T>(n, r).value;
}

// ---------------------------------------------------------------------------
// cosh convolution integral
// ---------------------------------------------------------------------------

/// J(alpha, beta; t) = int ds / (cosh^alpha(s - t) cosh^beta(s)), by adaptive
/// Gauss-Kronrod on the range where the integrand exceeds 1e-18 of its peak.
/// InvalidArgument when alpha + beta <= 0.
double j_integral(double alpha, double beta, double t);

/// max{2^(a+1), 2^(a+b+1)} / (a^2 - b^2) * (-b e^{-a|t|} + a e^{-b|t|}) with
/// a = max(alpha, beta), b = min(alpha, beta).  InvalidArgument when
/// alpha == beta or alpha + beta <= 0.
double j_bound(double alpha, double beta, double t);

struct JSample {
  double alpha;
  double beta;
  double t;
};

/// 50 deterministic (alpha, beta, t) triples.  The first 20 are
/// (1/2, (mu - 2 nu + 1)/2) for the five benchmark parameter sets at four t.
std::vector<JSample> j_sample_suite();

// ---------------------------------------------------------------------------
// Error sweeps
// ---------------------------------------------------------------------------

/// exp(sqrt(pi d mu)) for Ganelius, exp(sqrt(pi d mu / 2)) for SE-Sinc.
template <class T>
T theoretical_rate(const SpaceParams<T>& params, Scheme scheme);

/// Least-squares slope of y against x.  NaN for fewer than two points.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

template <class T>
struct ErrorRow {
  int n = 0;
  T max_error{};
  std::string argmax;
  std::optional<T> ratio;  // error((m-1)^2) / error(m^2) when the previous row is N = (m-1)^2
};

template <class T>
struct ErrorReport {
  std::string function_id;
  Scheme scheme = Scheme::ganelius;
  Precision precision = Precision::binary64;
  T d{};
  T mu{};
  T nu{};  // NaN for SE-Sinc
  std::vector<ErrorRow<T>> rows;
  T theoretical_ratio{};
  double fitted_slope = 0;  // slope of ln(max_error) against sqrt(N)
  int skipped_points = 0;   // grid points whose delta underflowed to zero
};

struct SweepOptions {
  unsigned threads = 0;         // 0: hardware concurrency
  std::optional<double> nu;     // Ganelius only; default_nu-style default otherwise
};

/// Max of |f - approx| over the benchmark grid for every N in n_list.
/// Deterministic regardless of the number of threads.
template <class T>
ErrorReport<T> error_sweep(const TestFunction<T>& f, Scheme scheme, std::span<const int> n_list,
                           const SweepOptions& options = {});

template <class T>
ErrorReport<T> error_sweep(const TestFunction<T>& f, Scheme scheme, std::span<const int> n_list,
                           const std::vector<GridPoint<T>>& grid, const SweepOptions& options);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Header `N,max_error,argmax,ratio` then one row per N.
template <class T>
std::string report_csv(const ErrorReport<T>& report);

/// Fields function, scheme, precision, d, mu, nu, rows[], theoretical_ratio, fitted_slope.
template <class T>
nlohmann::json report_json(const ErrorReport<T>& report);

/// `scheme,N,sqrt_N,log10_error` rows for every report; empty string when
/// all reports are empty.
template <class T>
std::string plotdata_csv(std::span<const ErrorReport<T>> reports);

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json details;
};

/// For each r: slope of ln(ganelius_lhs) against sqrt(N) over N = 4..100
/// (squares) within 20% of -pi sqrt(r), and ganelius_lhs * exp(pi sqrt(N r))
/// at most 100.
CheckResult check_ganelius_bound(std::span<const double> r_values, Precision precision = Precision::binary64);

/// j_integral <= j_bound + 1e-8 over j_sample_suite().
CheckResult check_j_bound();

/// basis_j(beta_k) = delta_jk to 1e-10 and |f(beta_k) - approx(beta_k)| <=
/// 1e3 eps ||samples||_inf.
CheckResult check_cardinal(std::span<const std::string> function_ids, std::span<const int> n_list,
                           Precision precision = Precision::binary64);

/// |B_N(z)| < 1 + 1e-10 on 1000 deterministic interior points per (d, N), plus
/// tanh/rational agreement at d = pi/2 on 1000 real points.
CheckResult check_blaschke_modulus(std::span<const double> d_values, std::span<const int> n_list);

/// Pointwise identity between the s-form and t-form integrands and the
/// bracket ganelius_lhs <= blaschke_bound_lhs <= 2^r ganelius_lhs.
CheckResult check_lhs_equivalence(std::span<const int> n_list, std::span<const double> r_values);

/// Deterministic interior points of the region: rays in the strip coordinate.
std::vector<Complex<double>> region_sample_points(double d, int count);

extern template std::vector<GridPoint<double>> reference_grid<double>();
extern template std::vector<GridPoint<quad>> reference_grid<quad>();
extern template ErrorReport<double> error_sweep<double>(const TestFunction<double>&, Scheme, std::span<const int>,
                                                        const SweepOptions&);
extern template ErrorReport<quad> error_sweep<quad>(const TestFunction<quad>&, Scheme, std::span<const int>,
                                                    const SweepOptions&);

}  // namespace ganelius
