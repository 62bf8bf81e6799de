// ganelius-cli: node tables, approximant values, error sweeps and numerical
// checks from the command line.  Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or parameter error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ganelius/ganelius.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(gan_status status) {
  if (status != GAN_OK) throw UsageError(std::string(gan_status_string(status)) + ": " + gan_last_error());
}

// Runs a buffer-idiom call twice: once to size, once to fill.
template <class F>
std::string fetch_text(F&& call) {
  size_t required = 0;
  const gan_status probe = call(nullptr, 0, &required);
  if (probe != GAN_OK && probe != GAN_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string text(required + 1, '\0');
  check(call(text.data(), text.size(), &required));
  text.resize(required);
  return text;
}

template <class Handle, void (*Destroy)(Handle*)>
struct Owned {
  Handle* ptr = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  Owned(Owned&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  ~Owned() { Destroy(ptr); }
};

using NodesHandle = Owned<gan_nodes, gan_nodes_destroy>;
using ApproxHandle = Owned<gan_approximant, gan_approx_destroy>;
using ReportHandle = Owned<gan_report, gan_report_destroy>;

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<int> parse_n_list(const std::optional<std::string>& text) {
  if (!text) {
    std::vector<int> squares;
    for (int m = 2; m <= 12; ++m) squares.push_back(m * m);
    return squares;
  }
  std::vector<int> out;
  for (const auto& item : split(*text, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0' || v < 1 || v > 1000000) throw UsageError("bad N value '" + item + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (*end != '\0') throw UsageError("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

gan_precision resolve_precision(const std::optional<std::string>& flag) {
  std::string name = "binary64";
  if (const char* env = std::getenv("GANELIUS_PRECISION"); env != nullptr && *env != '\0') name = env;
  if (flag) name = *flag;
  gan_precision p;
  check(gan_parse_precision(name.c_str(), &p));
  return p;
}

gan_scheme resolve_scheme(const std::string& name) {
  gan_scheme s;
  check(gan_parse_scheme(name.c_str(), &s));
  return s;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + *path + "' for writing");
  out << text;
}

// "dir/report.csv" -> "dir/report_ganelius.csv"
std::string suffixed(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

struct Common {
  std::optional<std::string> precision;
  std::optional<std::string> output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--precision", c.precision, "binary64 or extended (default: $GANELIUS_PRECISION or binary64)");
  cmd->add_option("-o,--output", c.output, "Output file (default: stdout)");
}

struct SweepArgs {
  Common common;
  std::string function = "f1";
  std::string scheme = "ganelius";
  std::optional<std::string> n_list;
  std::optional<std::string> nu;
  std::optional<std::string> d;
  std::string grid = "paper";
  std::string format = "csv";
  unsigned threads = 0;
};

std::vector<std::string> schemes_for(const std::string& scheme) {
  if (scheme == "both") return {"ganelius", "sesinc"};
  return {scheme};
}

ReportHandle run_sweep(const SweepArgs& a, const std::string& scheme, const std::vector<int>& ns) {
  ReportHandle report;
  check(gan_sweep(a.function.c_str(), resolve_scheme(scheme), ns.data(), ns.size(), opt(a.nu), opt(a.d),
                  a.grid.c_str(), resolve_precision(a.common.precision), a.threads, &report.ptr));
  return report;
}

int cmd_nodes(int n, const std::optional<std::string>& r, const std::optional<std::string>& d,
              const std::optional<std::string>& mu, const Common& c) {
  if (!r && !(d && mu)) throw UsageError("nodes needs --r, or --d together with --mu");
  NodesHandle nodes;
  check(gan_nodes_create(n, opt(r), opt(d), opt(mu), resolve_precision(c.precision), &nodes.ptr));
  emit(fetch_text([&](char* b, size_t cap, size_t* req) { return gan_nodes_csv(nodes.ptr, b, cap, req); }), c.output);
  return kExitOk;
}

int cmd_approx(const SweepArgs& a, int n) {
  if (a.scheme == "both") throw UsageError("approx takes a single scheme");
  ApproxHandle approx;
  check(gan_approx_create(a.function.c_str(), resolve_scheme(a.scheme), n, opt(a.nu), opt(a.d),
                          resolve_precision(a.common.precision), &approx.ptr));
  emit(fetch_text([&](char* b, size_t cap, size_t* req) {
         return gan_approx_grid_csv(approx.ptr, a.grid.c_str(), b, cap, req);
       }),
       a.common.output);
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a) {
  const std::vector<int> ns = parse_n_list(a.n_list);
  if (ns.empty()) throw UsageError("sweep needs at least one N");
  const auto schemes = schemes_for(a.scheme);
  std::string stdout_text;
  for (const auto& scheme : schemes) {
    const ReportHandle report = run_sweep(a, scheme, ns);
    const std::string text = fetch_text([&](char* b, size_t cap, size_t* req) {
      return a.format == "json" ? gan_report_json(report.ptr, b, cap, req) : gan_report_csv(report.ptr, b, cap, req);
    });
    if (schemes.size() == 1) {
      emit(text, a.common.output);
    } else if (a.common.output) {
      emit(text, suffixed(*a.common.output, "_" + scheme));
    } else {
      stdout_text += "# " + scheme + "\n" + text;
    }
  }
  if (!stdout_text.empty()) emit(stdout_text, std::nullopt);
  return kExitOk;
}

int cmd_plotdata(const SweepArgs& a) {
  const std::vector<int> ns = parse_n_list(a.n_list);
  std::string text;
  if (!ns.empty()) {
    std::vector<ReportHandle> reports;
    for (const auto& scheme : schemes_for(a.scheme)) reports.push_back(run_sweep(a, scheme, ns));
    std::vector<const gan_report*> ptrs;
    for (const auto& r : reports) ptrs.push_back(r.ptr);
    text = fetch_text([&](char* b, size_t cap, size_t* req) {
      return gan_plotdata_csv(ptrs.data(), ptrs.size(), b, cap, req);
    });
  }
  emit(text, a.common.output);
  return kExitOk;
}

int cmd_rates(const std::vector<std::string>& functions, const std::optional<std::string>& d, const Common& c) {
  std::string out = "function,scheme,d,mu,nu,theoretical_ratio\n";
  char line[256];
  for (const auto& id : functions) {
    double fd = 0, mu = 0, nu = 0;
    check(gan_function_params(id.c_str(), &fd, &mu, &nu));
    if (d) fd = std::strtod(d->c_str(), nullptr);
    for (const auto scheme : {GAN_SCHEME_GANELIUS, GAN_SCHEME_SESINC}) {
      double rate = 0;
      check(gan_theoretical_rate(id.c_str(), scheme, opt(d), &rate));
      std::snprintf(line, sizeof line, "%s,%s,%.17g,%.17g,%.17g,%.17g\n", id.c_str(),
                    scheme == GAN_SCHEME_GANELIUS ? "ganelius" : "sesinc", fd, mu, nu, rate);
      out += line;
    }
  }
  emit(out, c.output);
  return kExitOk;
}

struct VerifyArgs {
  Common common;
  std::vector<std::string> checks;
  std::optional<std::string> r;
  std::optional<std::string> n_list;
  std::optional<std::string> functions;
  std::optional<std::string> d;
};

int cmd_verify(const VerifyArgs& v) {
  std::vector<std::string> checks = v.checks;
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
    checks = {"ganelius-bound", "j-bound", "cardinal", "blaschke-modulus", "lhs-equivalence"};
  }
  const gan_precision precision = resolve_precision(v.common.precision);
  nlohmann::json results = nlohmann::json::array();
  bool all_passed = true;
  for (const auto& name : checks) {
    nlohmann::json options = {{"check", name}, {"precision", precision == GAN_BINARY64 ? "binary64" : "extended"}};
    if (v.r) options["r"] = parse_number_list(*v.r);
    if (v.n_list) options["N"] = parse_n_list(v.n_list);
    if (v.functions) options["functions"] = split(*v.functions, ',');
    if (v.d) options["d"] = parse_number_list(*v.d);
    const std::string text_options = options.dump();
    int passed = 0;
    const std::string text = fetch_text([&](char* b, size_t cap, size_t* req) {
      return gan_verify_run(text_options.c_str(), &passed, b, cap, req);
    });
    all_passed = all_passed && passed != 0;
    results.push_back(nlohmann::json::parse(text));
  }
  const nlohmann::json doc = {{"passed", all_passed}, {"checks", results}};
  emit(doc.dump(2) + "\n", v.common.output);
  for (const auto& r : results) {
    std::cerr << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["check"].get<std::string>() << "\n";
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

void add_function_options(CLI::App* cmd, SweepArgs& a, bool multi_scheme) {
  cmd->add_option("-f,--function", a.function, "Test function f1..f5")->capture_default_str();
  cmd->add_option("-s,--scheme", a.scheme, multi_scheme ? "ganelius, sesinc or both" : "ganelius or sesinc")
      ->capture_default_str();
  cmd->add_option("--nu", a.nu, "Weight exponent nu (Ganelius only)");
  cmd->add_option("--d", a.d, "Override the strip half-width d");
  add_common(cmd, a.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal approximation on Ganelius nodes versus SE-Sinc"};
  app.require_subcommand(1);

  Common nodes_common;
  int nodes_n = 0;
  std::optional<std::string> nodes_r, nodes_d, nodes_mu;
  auto* nodes = app.add_subcommand("nodes", "Modified Ganelius nodes and their images");
  nodes->add_option("-N,--N", nodes_n, "Number of positive nodes")->required();
  nodes->add_option("--r", nodes_r, "Decay exponent r");
  nodes->add_option("--d", nodes_d, "Strip half-width d (maps b_k to beta_k; default pi/2)");
  nodes->add_option("--mu", nodes_mu, "Weight exponent mu (with --d, sets r = d mu / pi)");
  add_common(nodes, nodes_common);

  SweepArgs approx_args;
  int approx_n = 0;
  auto* approx = app.add_subcommand("approx", "Evaluate one approximant on a grid");
  add_function_options(approx, approx_args, false);
  approx->add_option("-N,--N", approx_n, "Number of nodes per side")->required();
  approx->add_option("--grid", approx_args.grid, "paper, uniform:<n> or points:<x1>;<x2>;...")->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Max-error table over a list of N");
  add_function_options(sweep, sweep_args, true);
  sweep->add_option("-N,--N", sweep_args.n_list, "Comma-separated N list (default 4,9,...,144)");
  sweep->add_option("--grid", sweep_args.grid, "paper, uniform:<n> or points:<x1>;<x2>;...")->capture_default_str();
  sweep->add_option("--format", sweep_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: all cores)");

  SweepArgs plot_args;
  plot_args.scheme = "both";
  auto* plot = app.add_subcommand("plotdata", "sqrt(N) against log10(max error), per scheme");
  add_function_options(plot, plot_args, true);
  plot->add_option("-N,--N", plot_args.n_list, "Comma-separated N list (default 4,9,...,144); bare --N for none")
      ->expected(0, 1);
  plot->add_option("--grid", plot_args.grid, "paper, uniform:<n> or points:<x1>;<x2>;...")->capture_default_str();
  plot->add_option("--threads", plot_args.threads, "Worker threads (0: all cores)");

  Common rates_common;
  std::string rates_functions = "f1,f2,f3,f4,f5";
  std::optional<std::string> rates_d;
  auto* rates = app.add_subcommand("rates", "Predicted error ratios exp(sqrt(pi d mu)) and exp(sqrt(pi d mu / 2))");
  rates->add_option("-f,--function", rates_functions, "Comma-separated function ids")->capture_default_str();
  rates->add_option("--d", rates_d, "Override the strip half-width d");
  add_common(rates, rates_common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Numerical checks; exit 1 when any fails");
  verify->add_option("--check", verify_args.checks,
                     "ganelius-bound, j-bound, cardinal, blaschke-modulus, lhs-equivalence or all")
      ->delimiter(',');
  verify->add_option("--r", verify_args.r, "Comma-separated r values");
  verify->add_option("-N,--N", verify_args.n_list, "Comma-separated N list");
  verify->add_option("-f,--function", verify_args.functions, "Comma-separated function ids");
  verify->add_option("--d", verify_args.d, "Comma-separated d values");
  add_common(verify, verify_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*nodes) return cmd_nodes(nodes_n, nodes_r, nodes_d, nodes_mu, nodes_common);
    if (*approx) return cmd_approx(approx_args, approx_n);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*plot) return cmd_plotdata(plot_args);
    if (*rates) return cmd_rates(split(rates_functions, ','), rates_d, rates_common);
    if (*verify) return cmd_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
