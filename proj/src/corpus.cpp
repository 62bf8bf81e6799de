#include "ganelius/corpus.hpp"

namespace ganelius {

namespace {

// Every function is written in terms of w = 1 - x^2, so 1 + x^2 = 2 - w etc.
template <class T>
T f1(const UnitPoint<T>& p) {
  const T w = one_minus_x_sq(p);
  return math::sqrt(w / (T(2) - w));
}

template <class T>
T f2(const UnitPoint<T>& p) {
  const T w = one_minus_x_sq(p);
  return math::sqrt(T(3) * w / (T(4) - T(3) * w));
}

template <class T>
T f3(const UnitPoint<T>& p) {
  const T w = one_minus_x_sq(p);
  return math::sqrt(w / (T(4) - w));
}

template <class T>
T f4(const UnitPoint<T>& p) {
  if (p.at_endpoint()) return T(0);
  const T w = one_minus_x_sq(p);
  const T theta = atanh_stable(p);
  return math::pow(w, T(1) / math::sqrt(T(2))) * math::sqrt(math::cos(T(4) * theta) + math::cosh(math::pi<T>()));
}

template <class T>
T f5(const UnitPoint<T>& p) {
  const T w = one_minus_x_sq(p);
  const T v = w / (T(2) - w);
  return v * math::sqrt(v);
}

}  // namespace

std::vector<std::string> builtin_function_ids() { return {"f1", "f2", "f3", "f4", "f5"}; }

template <class T>
TestFunction<T> test_function(std::string_view id) {
  using math::from_string;
  const T one(1);
  if (id == "f1") {
    return {"f1", f1<T>, SpaceParams<T>::make(from_string<T>("1.57"), one), one, "+-i"};
  }
  if (id == "f2") {
    return {"f2", f2<T>, SpaceParams<T>::make(from_string<T>("1.047"), one), one, "+-i/sqrt(3)"};
  }
  if (id == "f3") {
    return {"f3", f3<T>, SpaceParams<T>::make(from_string<T>("2.094"), one), one, "+-i sqrt(3)"};
  }
  if (id == "f4") {
    return {"f4", f4<T>, SpaceParams<T>::make(math::pi<T>() / T(2), math::sqrt(T(2))), one,
            "tanh[(m + (1 +- i) pi/2) / 2], m integer"};
  }
  if (id == "f5") {
    return {"f5", f5<T>, SpaceParams<T>::make(from_string<T>("1.57"), T(3)), T(2), "+-i"};
  }
  throw InvalidArgument("unknown test function '" + std::string(id) + "' (expected f1..f5)");
}

template <class T>
FunctionRegistry<T>::FunctionRegistry() {
  for (const auto& id : builtin_function_ids()) functions_.emplace(id, test_function<T>(id));
}

template <class T>
void FunctionRegistry<T>::add(TestFunction<T> f) {
  if (f.id.empty()) throw InvalidArgument("custom function needs a non-empty id");
  if (!f.evaluator) throw InvalidArgument("custom function '" + f.id + "' has no evaluator");
  f.params = SpaceParams<T>::make(f.params.d, f.params.mu);
  const std::string key = f.id;
  functions_.insert_or_assign(key, std::move(f));
}

template <class T>
const TestFunction<T>& FunctionRegistry<T>::get(std::string_view id) const {
  const auto it = functions_.find(id);
  if (it == functions_.end()) throw InvalidArgument("unknown test function '" + std::string(id) + "'");
  return it->second;
}

template <class T>
bool FunctionRegistry<T>::contains(std::string_view id) const {
  return functions_.find(id) != functions_.end();
}

template <class T>
std::vector<std::string> FunctionRegistry<T>::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, f] : functions_) out.push_back(id);
  return out;
}

template TestFunction<double> test_function<double>(std::string_view);
template TestFunction<quad> test_function<quad>(std::string_view);
template class FunctionRegistry<double>;
template class FunctionRegistry<quad>;

}  // namespace ganelius
