// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run everything
//   acceptance --only AC3 run one criterion
//
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "ganelius/verify.hpp"

using namespace ganelius;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Published maximum errors for N = 4, 9, ..., 144: Ganelius column then SE-Sinc column.
struct Published {
  const char* id;
  double ganelius[11];
  double sesinc[11];
};

const Published kPublished[] = {
    {"f1",
     {7.73e-3, 1.47e-3, 1.06e-4, 9.57e-6, 1.10e-6, 1.07e-7, 1.25e-8, 1.25e-9, 2.78e-11, 2.31e-12, 2.55e-13},
     {3.48e-2, 7.49e-3, 1.88e-3, 3.38e-4, 9.67e-5, 1.98e-5, 2.85e-6, 9.23e-7, 2.04e-7, 2.92e-8, 1.30e-9}},
    {"f2",
     {1.89e-1, 5.17e-3, 1.44e-3, 9.13e-5, 1.28e-5, 2.34e-6, 3.57e-7, 6.06e-8, 9.46e-9, 1.40e-9, 6.17e-11},
     {8.96e-2, 2.40e-2, 8.56e-3, 2.27e-3, 6.41e-4, 1.94e-4, 3.91e-5, 1.15e-5, 4.58e-6, 1.25e-6, 3.39e-7}},
    {"f3",
     {3.63e-3, 4.35e-4, 2.36e-5, 1.85e-6, 1.22e-7, 1.00e-8, 7.97e-10, 5.76e-12, 3.60e-13, 2.33e-14, 1.83e-15},
     {1.33e-2, 2.33e-3, 5.06e-4, 8.04e-5, 1.52e-5, 2.49e-6, 4.25e-7, 7.14e-8, 1.17e-8, 2.82e-10, 4.39e-11}},
    {"f4",
     {5.83e-2, 1.90e-3, 3.41e-4, 3.35e-5, 6.26e-7, 9.30e-8, 5.77e-9, 6.14e-10, 5.04e-11, 1.23e-12, 2.55e-14},
     {1.06e-1, 1.81e-2, 3.14e-3, 5.59e-4, 5.95e-5, 1.47e-5, 2.54e-6, 3.78e-7, 5.88e-8, 7.63e-9, 1.01e-9}},
    {"f5",
     {1.64e-2, 1.30e-4, 2.98e-6, 6.43e-8, 1.38e-9, 2.93e-11, 6.29e-13, 1.33e-14, 2.85e-16, 6.06e-18, 1.30e-19},
     {1.24e-2, 9.91e-4, 7.37e-5, 5.38e-6, 3.85e-7, 2.72e-8, 1.91e-9, 1.33e-10, 9.23e-12, 6.36e-13, 4.36e-14}},
};

const double* published(const Published& p, Scheme s) { return s == Scheme::ganelius ? p.ganelius : p.sesinc; }

struct Outcome {
  bool passed;
  std::string summary;
};

std::string fmt(const char* format, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Extended-precision sweeps are shared between criteria within one run.
std::map<std::pair<std::string, Scheme>, std::vector<double>> extended_cache;

const std::vector<double>& extended_errors(const std::string& id, Scheme scheme) {
  const auto key = std::make_pair(id, scheme);
  auto it = extended_cache.find(key);
  if (it != extended_cache.end()) return it->second;
  const auto report = error_sweep<quad>(test_function<quad>(id), scheme, square_n_list());
  std::vector<double> errors;
  for (const auto& row : report.rows) errors.push_back(static_cast<double>(row.max_error));
  return extended_cache.emplace(key, std::move(errors)).first->second;
}

Outcome ac1() {
  const auto t0 = Clock::now();
  const std::vector<int> ns{4, 9, 16, 25, 36, 49};
  double worst = 0;
  for (const Scheme s : {Scheme::ganelius, Scheme::sesinc}) {
    const auto report = error_sweep<double>(test_function<double>("f1"), s, ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      worst = std::max(worst, std::fabs(report.rows[i].max_error / published(kPublished[0], s)[i] - 1));
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 0.10 && elapsed < 5,
          fmt("f1 binary64, both schemes, N <= 49: worst relative deviation %.4f (limit 0.10), %.2f s (limit 5 s)",
              worst, elapsed)};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  double worst = 1;
  std::string where;
  int compared = 0;
  for (const auto& p : kPublished) {
    for (const Scheme s : {Scheme::ganelius, Scheme::sesinc}) {
      const auto& errors = extended_errors(p.id, s);
      for (std::size_t i = 0; i < errors.size(); ++i) {
        const double ref = published(p, s)[i];
        // Entries down to 1e-18 are required; the deeper 1.30e-19 is checked too.
        if (ref < 1e-20) continue;
        ++compared;
        const double factor = std::max(errors[i] / ref, ref / errors[i]);
        if (factor > worst) {
          worst = factor;
          where = std::string(p.id) + " " + scheme_name(s) + " N=" + std::to_string((i + 2) * (i + 2));
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 2 && elapsed < 600,
          fmt("extended, %.0f entries: worst factor %.4f (limit 2)", compared, worst) + " at " + where +
              fmt(", %.1f s (limit 600 s)", elapsed)};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::vector<double> xs;
  for (const int n : square_n_list()) xs.push_back(std::sqrt(static_cast<double>(n)));
  for (const auto& p : kPublished) {
    const auto params = test_function<double>(p.id).params;
    for (const Scheme s : {Scheme::ganelius, Scheme::sesinc}) {
      // binary64 entries where the error is at least 1e-12, extended entries below it;
      // the extended sweep decides, since binary64 stalls on round-off first
      const auto binary = error_sweep<double>(test_function<double>(p.id), s, square_n_list());
      const auto& ext = extended_errors(p.id, s);
      std::vector<double> errors;
      int deep = 0;
      for (std::size_t i = 0; i < ext.size(); ++i) {
        const bool use_ext = ext[i] < 1e-12;
        deep += use_ext;
        errors.push_back(use_ext ? ext[i] : binary.rows[i].max_error);
      }
      std::vector<double> ys;
      for (const double e : errors) ys.push_back(std::log(e));
      const double slope = least_squares_slope(xs, ys);
      const double expected = -std::log(theoretical_rate(params, s));
      const double dev = std::fabs(slope / expected - 1);
      const double limit = s == Scheme::ganelius ? 0.25 : 0.35;
      ok = ok && dev <= limit;
      detail += std::string(" ") + p.id + "/" + (s == Scheme::ganelius ? "G" : "S") +
                fmt(" %.3f vs %.3f (%.1f%%", slope, expected, 100 * dev) + fmt(", %.0f of 11 extended);", deep);
    }
  }
  return {ok, "slopes of ln(max error) vs sqrt(N), limits 25% / 35%:" + detail +
                  fmt(" %.1f s", seconds_since(t0))};
}

Outcome ac4() {
  const auto t0 = Clock::now();
  const std::vector<double> rs{0.5, 1.0, 1.5, 3.0};
  const CheckResult r = check_ganelius_bound(rs, Precision::binary64);
  const double elapsed = seconds_since(t0);
  std::string detail;
  for (const auto& e : r.details) {
    detail += fmt(" r=%.1f slope %.3f vs %.3f", e["r"].get<double>(), e["slope"].get<double>(),
                  e["expected_slope"].get<double>()) +
              fmt(" (%.1f%%), max scaled %.1f;", 100 * e["deviation"].get<double>(), e["max_scaled"].get<double>()) +
              (e["passed"].get<bool>() ? "" : " <- FAILS");
  }
  return {r.passed && elapsed < 60, "slope within 20% of -pi sqrt(r), scaled maximum <= 100:" + detail +
                                        fmt(" %.2f s (limit 60 s)", elapsed)};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  const CheckResult r = check_j_bound();
  const double elapsed = seconds_since(t0);
  double tightest = 0;
  int failures = 0;
  for (const auto& e : r.details) {
    tightest = std::max(tightest, e["integral"].get<double>() / e["bound"].get<double>());
    failures += e["passed"].get<bool>() ? 0 : 1;
  }
  return {r.passed && elapsed < 10,
          fmt("%.0f samples, %.0f violations, largest J/bound %.4f", static_cast<double>(r.details.size()), failures,
              tightest) +
              fmt(", %.2f s (limit 10 s)", elapsed)};
}

Outcome ac6() {
  const std::vector<std::string> ids = builtin_function_ids();
  const std::vector<int> ns{4, 16, 64};
  bool ok = true;
  std::string detail;
  for (const Precision p : {Precision::binary64, Precision::extended}) {
    const CheckResult r = check_cardinal(ids, ns, p);
    double card = 0, ratio = 0;
    for (const auto& e : r.details) {
      card = std::max(card, e["max_cardinal_deviation"].get<double>());
      ratio = std::max(ratio, e["max_interpolation_error"].get<double>() / e["interpolation_tolerance"].get<double>());
    }
    ok = ok && r.passed;
    detail += std::string(" ") + precision_name(p) +
              fmt(": max |basis - delta| %.2e (limit 1e-10), interpolation error / limit %.3f;", card, ratio);
  }
  return {ok, "f1..f5, N in {4, 16, 64}:" + detail};
}

Outcome ac7() {
  const double pi = std::acos(-1.0);
  const std::vector<double> ds{pi / 3, pi / 2, 2 * pi / 3};
  const std::vector<int> ns{4, 16};
  const CheckResult r = check_blaschke_modulus(ds, ns);
  double modulus = 0, forms = 0;
  for (const auto& e : r.details) {
    modulus = std::max(modulus, e["max_modulus"].get<double>());
    if (e.contains("max_relative_form_difference")) {
      forms = std::max(forms, e["max_relative_form_difference"].get<double>());
    }
  }
  return {r.passed, fmt("max |B_N| %.12f (limit 1 + 1e-10), tanh vs rational at d = pi/2: %.2e (limit 1e-12)", modulus,
                        forms)};
}

// Brute force: plain products on 10^6 points, half uniform on (0, 1], half
// log-spaced on [1e-16, 1].
double brute_force_lhs(int n, double r) {
  const auto nodes = ganelius_nodes<double>(n, r);
  auto value = [&](double s) {
    double p = std::pow(s, r);
    for (const double a : nodes.a) p *= std::fabs((s - a) / (s + a));
    return p;
  };
  constexpr int kHalf = 500000;
  double best = 0;
  for (int i = 1; i <= kHalf; ++i) {
    best = std::max(best, value(static_cast<double>(i) / kHalf));
    best = std::max(best, value(std::pow(10.0, -16.0 + 16.0 * (i - 1) / (kHalf - 1))));
  }
  return best;
}

Outcome ac8() {
  double worst = 0;
  for (const int n : {4, 9, 16}) {
    for (const double r : {0.5, 1.5}) {
      const double fast = ganelius_lhs<double>(n, r);
      const double brute = brute_force_lhs(n, r);
      worst = std::max(worst, std::fabs(fast / brute - 1));
    }
  }
  return {worst <= 1e-4, fmt("(N, r) in {4, 9, 16} x {0.5, 1.5}: worst relative difference %.2e (limit 1e-4)", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const char* only = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[++i];
  }
  const std::pair<const char*, Outcome (*)()> criteria[] = {{"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
                                                            {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  bool all = true;
  bool ran = false;
  for (const auto& [name, fn] : criteria) {
    if (only != nullptr && std::strcmp(only, name) != 0) continue;
    ran = true;
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s  %s\n", name, o.passed ? "PASS" : "FAIL", o.summary.c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  if (!ran) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
