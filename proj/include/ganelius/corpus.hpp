#pragma once

// The five benchmark functions and a registry for user-supplied ones.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ganelius/kernel.hpp"
#include "ganelius/numerics.hpp"

namespace ganelius {

template <class T>
struct TestFunction {
  std::string id;
  std::function<T(const UnitPoint<T>&)> evaluator;  // must be delta-aware near +-1
  SpaceParams<T> params;
  T nu_default{};
  std::string singularities;  // documentation only

  T operator()(const UnitPoint<T>& p) const { return evaluator(p); }
};

/// f1..f5 with the strip widths d = 1.57, 1.047, 2.094, pi/2, 1.57 and
/// mu = 1, 1, 1, sqrt(2), 3.  Throws InvalidArgument for any other id.
template <class T>
TestFunction<T> test_function(std::string_view id);

template <class T>
T eval_test_function(const TestFunction<T>& f, const UnitPoint<T>& p) {
  return f.evaluator(p);
}

/// Copy of f with a different strip half-width, for sensitivity studies.
template <class T>
TestFunction<T> with_strip_width(TestFunction<T> f, T d) {
  f.params = SpaceParams<T>::make(d, f.params.mu);
  return f;
}

std::vector<std::string> builtin_function_ids();

/// Builtins plus anything registered at run time.  Custom entries must come
/// with their own (d, mu, nu); membership in the Hardy space is the caller's
/// responsibility.
template <class T>
class FunctionRegistry {
 public:
  FunctionRegistry();

  void add(TestFunction<T> f);
  const TestFunction<T>& get(std::string_view id) const;
  bool contains(std::string_view id) const;
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, TestFunction<T>, std::less<>> functions_;
};

extern template TestFunction<double> test_function<double>(std::string_view);
extern template TestFunction<quad> test_function<quad>(std::string_view);
extern template class FunctionRegistry<double>;
extern template class FunctionRegistry<quad>;

}  // namespace ganelius
