#include "ganelius/ganelius.h"

#include <cmath>
#include <cstring>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ganelius/verify.hpp"

using namespace ganelius;

struct gan_nodes {
  std::variant<TransformedNodes<double>, TransformedNodes<quad>> nodes;
  int n0;
};

struct gan_approximant {
  std::variant<std::pair<TestFunction<double>, Approximant<double>>, std::pair<TestFunction<quad>, Approximant<quad>>>
      impl;
};

struct gan_report {
  std::variant<ErrorReport<double>, ErrorReport<quad>> report;
};

namespace {

thread_local std::string last_error;

gan_status fail(gan_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
gan_status guarded(F&& body) {
  try {
    return body();
  } catch (const NodeCollision& e) {
    return fail(GAN_ERR_NODE_COLLISION, e.what());
  } catch (const DomainError& e) {
    return fail(GAN_ERR_DOMAIN, e.what());
  } catch (const InvalidArgument& e) {
    return fail(GAN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(GAN_ERR_INVALID_ARGUMENT, std::string("bad options: ") + e.what());
  } catch (const std::exception& e) {
    return fail(GAN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GAN_ERR_INTERNAL, "unknown exception");
  }
}

gan_status write_text(const std::string& text, char* buf, size_t capacity, size_t* required) {
  if (required != nullptr) *required = text.size();
  if (buf == nullptr || capacity < text.size() + 1) {
    return fail(GAN_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
  }
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return GAN_OK;
}

Precision to_precision(gan_precision p) {
  if (p == GAN_BINARY64) return Precision::binary64;
  if (p == GAN_EXTENDED) return Precision::extended;
  throw InvalidArgument("unknown precision code " + std::to_string(static_cast<int>(p)));
}

Scheme to_scheme(gan_scheme s) {
  if (s == GAN_SCHEME_GANELIUS) return Scheme::ganelius;
  if (s == GAN_SCHEME_SESINC) return Scheme::sesinc;
  throw InvalidArgument("unknown scheme code " + std::to_string(static_cast<int>(s)));
}

template <class T>
std::optional<T> parse_optional(const char* text, const char* what) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  const T value = math::from_string<T>(text);
  if (math::isnan(value)) throw InvalidArgument(std::string("cannot parse ") + what + " '" + text + "'");
  return value;
}

template <class T>
UnitPoint<T> point_from_value(T x) {
  if (!(math::abs(x) <= T(1))) throw DomainError("x = " + math::to_string(x) + " lies outside [-1, 1]");
  if (math::abs(x) >= T(0.5)) return UnitPoint<T>::near_endpoint(math::sign(x), T(1) - math::abs(x));
  return UnitPoint<T>::interior(x);
}

template <class T>
std::vector<GridPoint<T>> parse_grid(const char* spec) {
  const std::string s = spec == nullptr ? "paper" : spec;
  if (s.empty() || s == "paper") return reference_grid<T>();
  if (s.rfind("uniform:", 0) == 0) {
    const std::string count = s.substr(8);
    char* end = nullptr;
    const long n = std::strtol(count.c_str(), &end, 10);
    if (count.empty() || *end != '\0' || n < 1 || n > 10000000) {
      throw InvalidArgument("bad uniform grid size '" + count + "'");
    }
    return uniform_grid<T>(static_cast<int>(n));
  }
  if (s.rfind("points:", 0) == 0) {
    std::vector<GridPoint<T>> grid;
    std::string rest = s.substr(7);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t next = rest.find(';', pos);
      const std::string item = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!item.empty()) {
        const T x = math::from_string<T>(item);
        if (math::isnan(x)) throw InvalidArgument("cannot parse grid point '" + item + "'");
        grid.push_back({point_from_value(x), item});
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (grid.empty()) throw InvalidArgument("explicit grid has no points");
    return grid;
  }
  throw InvalidArgument("unknown grid '" + s + "' (expected paper, uniform:<n> or points:<x1>;<x2>;...)");
}

template <class T>
TestFunction<T> resolve_function(const char* id, const char* d) {
  if (id == nullptr) throw InvalidArgument("function id is required");
  TestFunction<T> f = test_function<T>(id);
  if (const auto dv = parse_optional<T>(d, "d")) f = with_strip_width(std::move(f), *dv);
  return f;
}

template <class T>
gan_approximant* make_approx(const char* id, Scheme scheme, int n, const char* nu, const char* d) {
  TestFunction<T> f = resolve_function<T>(id, d);
  const T nu_value = parse_optional<T>(nu, "nu").value_or(f.nu_default);
  Approximant<T> a = scheme == Scheme::ganelius ? build_ganelius(f, f.params, nu_value, n) : build_sesinc(f, f.params, n);
  return new gan_approximant{std::pair<TestFunction<T>, Approximant<T>>(std::move(f), std::move(a))};
}

template <class T>
std::string nodes_csv(const TransformedNodes<T>& nodes) {
  std::string out = "k,a_k,b_k,beta_k,sigma_sign,sigma_logmag\n";
  for (int i = 0; i < nodes.n; ++i) {
    const auto slot = static_cast<std::size_t>(i);
    out += std::to_string(i + 1) + ',';
    // a_k = (1 - b^2)/(1 + b^2) = 1/cosh(2 arctanh b).
    out += math::to_string(T(1) / math::cosh(T(2) * nodes.b_atanh[slot])) + ',';
    out += math::to_string(nodes.b[slot]) + ',';
    out += math::to_string(nodes.beta[slot]) + ',';
    out += std::to_string(nodes.sigma[slot].sign) + ',';
    out += math::to_string(nodes.sigma[slot].log_magnitude) + '\n';
  }
  return out;
}

template <class T>
std::string grid_csv(const TestFunction<T>& f, const Approximant<T>& a, const char* spec) {
  const auto grid = parse_grid<T>(spec);
  std::string out = "x,f,approx,abs_error\n";
  for (const auto& g : grid) {
    const T fx = f(g.point);
    const T ax = a(g.point);
    out += g.label + ',' + math::to_string(fx) + ',' + math::to_string(ax) + ',' + math::to_string(math::abs(fx - ax)) +
           '\n';
  }
  return out;
}

std::vector<double> number_list(const nlohmann::json& options, const char* key, std::vector<double> fallback) {
  if (!options.contains(key)) return fallback;
  return options.at(key).get<std::vector<double>>();
}

}  // namespace

extern "C" {

const char* gan_last_error(void) { return last_error.c_str(); }

const char* gan_status_string(gan_status status) {
  switch (status) {
    case GAN_OK: return "ok";
    case GAN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GAN_ERR_DOMAIN: return "domain error";
    case GAN_ERR_NODE_COLLISION: return "node collision";
    case GAN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case GAN_ERR_NULL_POINTER: return "null pointer";
    case GAN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gan_version(void) { return "0.1.0"; }

gan_status gan_parse_precision(const char* name, gan_precision* out) {
  if (name == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    *out = parse_precision(name) == Precision::binary64 ? GAN_BINARY64 : GAN_EXTENDED;
    return GAN_OK;
  });
}

gan_status gan_parse_scheme(const char* name, gan_scheme* out) {
  if (name == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    *out = parse_scheme(name) == Scheme::ganelius ? GAN_SCHEME_GANELIUS : GAN_SCHEME_SESINC;
    return GAN_OK;
  });
}

gan_status gan_nodes_create(int n, const char* r, const char* d, const char* mu, gan_precision precision,
                            gan_nodes** out) {
  if (out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    auto build = [&]<class T>(T) {
      const auto dv = parse_optional<T>(d, "d");
      T rv;
      if (const auto given = parse_optional<T>(r, "r")) {
        rv = *given;
      } else {
        const auto mv = parse_optional<T>(mu, "mu");
        if (!dv || !mv) throw InvalidArgument("either r or both d and mu are required");
        rv = SpaceParams<T>::make(*dv, *mv).node_exponent();
      }
      if (!(rv > T(0))) throw InvalidArgument("r must be positive");
      const T width = dv.value_or(math::pi<T>() / T(2));
      const GaneliusNodes<T> raw = ganelius_nodes<T>(n, rv);
      *out = new gan_nodes{transform_nodes<T>(raw, width), raw.n0};
    };
    if (to_precision(precision) == Precision::binary64) {
      build(0.0);
    } else {
      build(quad(0));
    }
    return GAN_OK;
  });
}

void gan_nodes_destroy(gan_nodes* nodes) { delete nodes; }

gan_status gan_nodes_info(const gan_nodes* nodes, int* n, int* n0) {
  if (nodes == nullptr) return fail(GAN_ERR_NULL_POINTER, "null nodes handle");
  if (n != nullptr) *n = std::visit([](const auto& t) { return t.n; }, nodes->nodes);
  if (n0 != nullptr) *n0 = nodes->n0;
  return GAN_OK;
}

gan_status gan_nodes_csv(const gan_nodes* nodes, char* buf, size_t capacity, size_t* required) {
  if (nodes == nullptr) return fail(GAN_ERR_NULL_POINTER, "null nodes handle");
  return guarded([&] {
    return write_text(std::visit([](const auto& t) { return nodes_csv(t); }, nodes->nodes), buf, capacity, required);
  });
}

gan_status gan_approx_create(const char* function_id, gan_scheme scheme, int n, const char* nu, const char* d,
                             gan_precision precision, gan_approximant** out) {
  if (out == nullptr || function_id == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    const Scheme s = to_scheme(scheme);
    *out = to_precision(precision) == Precision::binary64 ? make_approx<double>(function_id, s, n, nu, d)
                                                          : make_approx<quad>(function_id, s, n, nu, d);
    return GAN_OK;
  });
}

gan_status gan_approx_create_custom(gan_function_cb f, void* user, gan_scheme scheme, int n, double d, double mu,
                                    double nu, gan_approximant** out) {
  if (out == nullptr || f == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    TestFunction<double> tf{"custom",
                            [f, user](const UnitPoint<double>& p) { return f(p.value(), p.delta(), user); },
                            SpaceParams<double>::make(d, mu), std::isnan(nu) ? default_nu(mu) : nu, ""};
    Approximant<double> a = to_scheme(scheme) == Scheme::ganelius ? build_ganelius(tf, tf.params, tf.nu_default, n)
                                                                  : build_sesinc(tf, tf.params, n);
    *out = new gan_approximant{std::pair<TestFunction<double>, Approximant<double>>(std::move(tf), std::move(a))};
    return GAN_OK;
  });
}

void gan_approx_destroy(gan_approximant* approx) { delete approx; }

gan_status gan_approx_sample_count(const gan_approximant* approx, size_t* out) {
  if (approx == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  *out = std::visit([](const auto& p) { return p.second.sample_count(); }, approx->impl);
  return GAN_OK;
}

gan_status gan_approx_eval(const gan_approximant* approx, double x, double* out) {
  if (approx == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    *out = std::visit(
        [x](const auto& p) {
          using T = std::decay_t<decltype(p.first.nu_default)>;
          return static_cast<double>(p.second(point_from_value<T>(T(x))));
        },
        approx->impl);
    return GAN_OK;
  });
}

gan_status gan_approx_eval_endpoint(const gan_approximant* approx, int sign, long k, int ell, double* out) {
  if (approx == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  if (sign != 1 && sign != -1) return fail(GAN_ERR_INVALID_ARGUMENT, "sign must be +1 or -1");
  return guarded([&] {
    *out = std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p.first.nu_default)>;
          return static_cast<double>(p.second(UnitPoint<T>::decimal_endpoint(sign, k, ell)));
        },
        approx->impl);
    return GAN_OK;
  });
}

gan_status gan_approx_grid_csv(const gan_approximant* approx, const char* grid, char* buf, size_t capacity,
                               size_t* required) {
  if (approx == nullptr) return fail(GAN_ERR_NULL_POINTER, "null approximant handle");
  return guarded([&] {
    const std::string text = std::visit([&](const auto& p) { return grid_csv(p.first, p.second, grid); }, approx->impl);
    return write_text(text, buf, capacity, required);
  });
}

gan_status gan_sweep(const char* function_id, gan_scheme scheme, const int* n_list, size_t n_count, const char* nu,
                     const char* d, const char* grid, gan_precision precision, unsigned threads, gan_report** out) {
  if (out == nullptr || function_id == nullptr || (n_list == nullptr && n_count > 0)) {
    return fail(GAN_ERR_NULL_POINTER, "null argument");
  }
  return guarded([&] {
    const std::span<const int> ns(n_list, n_count);
    const Scheme s = to_scheme(scheme);
    auto run = [&]<class T>(T) {
      const TestFunction<T> f = resolve_function<T>(function_id, d);
      SweepOptions options;
      options.threads = threads;
      if (const auto v = parse_optional<T>(nu, "nu")) options.nu = static_cast<double>(*v);
      ErrorReport<T> report = error_sweep<T>(f, s, ns, parse_grid<T>(grid), options);
      if (const auto v = parse_optional<T>(nu, "nu"); v && s == Scheme::ganelius) report.nu = *v;
      *out = new gan_report{std::move(report)};
    };
    if (to_precision(precision) == Precision::binary64) {
      run(0.0);
    } else {
      run(quad(0));
    }
    return GAN_OK;
  });
}

void gan_report_destroy(gan_report* report) { delete report; }

gan_status gan_report_row_count(const gan_report* report, size_t* out) {
  if (report == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  *out = std::visit([](const auto& r) { return r.rows.size(); }, report->report);
  return GAN_OK;
}

gan_status gan_report_row(const gan_report* report, size_t index, int* n, double* max_error) {
  if (report == nullptr) return fail(GAN_ERR_NULL_POINTER, "null report handle");
  return std::visit(
      [&](const auto& r) {
        if (index >= r.rows.size()) return fail(GAN_ERR_INVALID_ARGUMENT, "row index out of range");
        if (n != nullptr) *n = r.rows[index].n;
        if (max_error != nullptr) *max_error = static_cast<double>(r.rows[index].max_error);
        return GAN_OK;
      },
      report->report);
}

gan_status gan_report_fitted_slope(const gan_report* report, double* out) {
  if (report == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  *out = std::visit([](const auto& r) { return r.fitted_slope; }, report->report);
  return GAN_OK;
}

gan_status gan_report_csv(const gan_report* report, char* buf, size_t capacity, size_t* required) {
  if (report == nullptr) return fail(GAN_ERR_NULL_POINTER, "null report handle");
  return guarded([&] {
    return write_text(std::visit([](const auto& r) { return report_csv(r); }, report->report), buf, capacity,
                      required);
  });
}

gan_status gan_report_json(const gan_report* report, char* buf, size_t capacity, size_t* required) {
  if (report == nullptr) return fail(GAN_ERR_NULL_POINTER, "null report handle");
  return guarded([&] {
    return write_text(std::visit([](const auto& r) { return report_json(r).dump(2); }, report->report) + "\n", buf,
                      capacity, required);
  });
}

gan_status gan_plotdata_csv(const gan_report* const* reports, size_t count, char* buf, size_t capacity,
                            size_t* required) {
  if (reports == nullptr && count > 0) return fail(GAN_ERR_NULL_POINTER, "null report list");
  return guarded([&] {
    std::vector<ErrorReport<double>> doubles;
    std::vector<ErrorReport<quad>> quads;
    for (size_t i = 0; i < count; ++i) {
      if (reports[i] == nullptr) return fail(GAN_ERR_NULL_POINTER, "null report in list");
      if (const auto* r = std::get_if<ErrorReport<double>>(&reports[i]->report)) {
        doubles.push_back(*r);
      } else {
        quads.push_back(std::get<ErrorReport<quad>>(reports[i]->report));
      }
    }
    if (!doubles.empty() && !quads.empty()) return fail(GAN_ERR_INVALID_ARGUMENT, "reports mix precisions");
    const std::string text = quads.empty() ? plotdata_csv<double>(doubles) : plotdata_csv<quad>(quads);
    return write_text(text, buf, capacity, required);
  });
}

gan_status gan_function_params(const char* function_id, double* d, double* mu, double* nu) {
  if (function_id == nullptr) return fail(GAN_ERR_NULL_POINTER, "null function id");
  return guarded([&] {
    const TestFunction<double> f = test_function<double>(function_id);
    if (d != nullptr) *d = f.params.d;
    if (mu != nullptr) *mu = f.params.mu;
    if (nu != nullptr) *nu = f.nu_default;
    return GAN_OK;
  });
}

gan_status gan_theoretical_rate(const char* function_id, gan_scheme scheme, const char* d, double* out) {
  if (function_id == nullptr || out == nullptr) return fail(GAN_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    const TestFunction<double> f = resolve_function<double>(function_id, d);
    *out = theoretical_rate(f.params, to_scheme(scheme));
    return GAN_OK;
  });
}

gan_status gan_verify_run(const char* options, int* passed, char* buf, size_t capacity, size_t* required) {
  if (options == nullptr) return fail(GAN_ERR_NULL_POINTER, "null options");
  return guarded([&] {
    const nlohmann::json opts = nlohmann::json::parse(options);
    const std::string check = opts.at("check").get<std::string>();
    const Precision precision = parse_precision(opts.value("precision", std::string("binary64")));
    std::vector<int> ns;
    if (opts.contains("N")) ns = opts.at("N").get<std::vector<int>>();
    CheckResult result;
    if (check == "ganelius-bound") {
      const auto rs = number_list(opts, "r", {0.5, 1.0, 1.5, 3.0});
      result = check_ganelius_bound(rs, precision);
    } else if (check == "j-bound") {
      result = check_j_bound();
    } else if (check == "cardinal") {
      const auto ids = opts.contains("functions") ? opts.at("functions").get<std::vector<std::string>>()
                                                  : builtin_function_ids();
      if (ns.empty()) ns = {4, 16, 64};
      result = check_cardinal(ids, ns, precision);
    } else if (check == "blaschke-modulus") {
      const double pi = math::pi<double>();
      const auto ds = number_list(opts, "d", {pi / 3, pi / 2, 2 * pi / 3});
      if (ns.empty()) ns = {4, 16};
      result = check_blaschke_modulus(ds, ns);
    } else if (check == "lhs-equivalence") {
      const auto rs = number_list(opts, "r", {0.5, 1.5});
      if (ns.empty()) ns = {4, 9, 16};
      result = check_lhs_equivalence(ns, rs);
    } else {
      throw InvalidArgument("unknown check '" + check +
                            "' (expected ganelius-bound, j-bound, cardinal, blaschke-modulus or lhs-equivalence)");
    }
    if (passed != nullptr) *passed = result.passed ? 1 : 0;
    const nlohmann::json doc = {{"check", result.name}, {"passed", result.passed}, {"details", result.details}};
    return write_text(doc.dump(2) + "\n", buf, capacity, required);
  });
}

}  // extern "C"
