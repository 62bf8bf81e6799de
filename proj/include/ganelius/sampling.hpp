#pragma once

// Modified Ganelius sampling points on (0, 1), their images on (-1, 1),
// and the interpolation coefficients sigma_k.

#include <vector>

#include "ganelius/numerics.hpp"

namespace ganelius {

template <class T>
struct GaneliusNodes {
  int n = 0;   // number of nodes
  T r{};       // decay exponent
  int n0 = 0;  // split index: a_1..a_{n0} geometric-type, a_{n0+1} bridge, rest linear tail
  std::vector<T> a;  // a_1..a_n, stored at a[k-1]

  /// The split is small enough that the asymptotic node layout has not set
  /// in yet (n0 <= 3); results are valid but pre-asymptotic.
  bool short_head() const { return n0 <= 3; }
};

/// Builds a_1..a_n.  Throws InvalidArgument when the split index
/// n0 = n - ceil((pi/4) sqrt(n r)) is below 1, NodeCollision when two nodes
/// coincide to within 4 ulp.
template <class T>
GaneliusNodes<T> ganelius_nodes(int n, T r);

/// Symmetric node set on (-1, 1) for strip half-width d.
///
/// Signed indices k = +-1..+-n are stored in one array of length 2n:
/// slot i < n holds k = i + 1 and slot n + i holds k = -(i + 1).  Besides the
/// plain values b_k and beta_k the set keeps their inverse hyperbolic tangents,
/// which carry the full information for nodes within 1e-20 of +-1.
template <class T>
struct TransformedNodes {
  T d{};
  int n = 0;
  std::vector<T> b;            // sqrt((1 - a_k) / (1 + a_k))
  std::vector<T> beta;         // tanh((2d/pi) arctanh b_k)
  std::vector<T> b_atanh;      // arctanh b_k
  std::vector<T> beta_atanh;   // arctanh beta_k
  std::vector<T> log_one_minus_beta_sq;
  std::vector<UnitPoint<T>> beta_point;
  std::vector<SignedLog<T>> sigma;

  int size() const { return 2 * n; }
  int signed_index(int slot) const { return slot < n ? slot + 1 : -(slot - n + 1); }
  int slot(int k) const { return k > 0 ? k - 1 : n - k - 1; }
};

/// b_k = sqrt((1 - a_k)/(1 + a_k)), beta_k = tanh((2d/pi) arctanh b_k) and
/// sigma_k = prod'_{l != k} (1 - b_l b_k)/(b_k - b_l), the last evaluated as
/// prod' coth((pi/2d)(arctanh beta_k - arctanh beta_l)) in sign/log form.
/// arctanh beta_k is taken from the stored point beta_point[k], so a basis
/// function evaluated at that point sees an exactly vanishing factor.
template <class T>
TransformedNodes<T> transform_nodes(const GaneliusNodes<T>& nodes, T d);

/// arctanh(sqrt((1 - a)/(1 + a))) = -log(tanh(arctanh(a) / 2)) / 2, accurate
/// for a down to the smallest normal number.
template <class T>
T node_atanh_from_a(T a);

extern template GaneliusNodes<double> ganelius_nodes<double>(int, double);
extern template GaneliusNodes<quad> ganelius_nodes<quad>(int, quad);
extern template TransformedNodes<double> transform_nodes<double>(const GaneliusNodes<double>&, double);
extern template TransformedNodes<quad> transform_nodes<quad>(const GaneliusNodes<quad>&, quad);

}  // namespace ganelius
