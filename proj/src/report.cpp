#include <string>

#include "ganelius/verify.hpp"

namespace ganelius {

namespace {

template <class T>
nlohmann::json number_or_null(T v) {
  if (!math::isfinite(v)) return nullptr;
  return static_cast<double>(v);
}

}  // namespace

template <class T>
std::string report_csv(const ErrorReport<T>& report) {
  std::string out = "N,max_error,argmax,ratio\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += math::to_string(row.max_error);
    out += ',';
    out += row.argmax;
    out += ',';
    if (row.ratio) out += math::to_string(*row.ratio);
    out += '\n';
  }
  return out;
}

template <class T>
nlohmann::json report_json(const ErrorReport<T>& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"N", row.n},
                    {"max_error", number_or_null(row.max_error)},
                    {"max_error_text", math::to_string(row.max_error)},
                    {"argmax", row.argmax},
                    {"ratio", row.ratio ? number_or_null(*row.ratio) : nlohmann::json(nullptr)}});
  }
  return {{"function", report.function_id},
          {"scheme", scheme_name(report.scheme)},
          {"precision", precision_name(report.precision)},
          {"d", static_cast<double>(report.d)},
          {"mu", static_cast<double>(report.mu)},
          {"nu", number_or_null(report.nu)},
          {"rows", std::move(rows)},
          {"theoretical_ratio", static_cast<double>(report.theoretical_ratio)},
          {"fitted_slope", std::isfinite(report.fitted_slope) ? nlohmann::json(report.fitted_slope) : nullptr},
          {"skipped_points", report.skipped_points}};
}

template <class T>
std::string plotdata_csv(std::span<const ErrorReport<T>> reports) {
  bool any = false;
  for (const auto& r : reports) any = any || !r.rows.empty();
  if (!any) return {};
  std::string out = "scheme,N,sqrt_N,log10_error\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      out += scheme_name(r.scheme);
      out += ',';
      out += std::to_string(row.n);
      out += ',';
      out += math::to_string(math::sqrt(T(row.n)));
      out += ',';
      out += math::to_string(math::log(row.max_error) / math::log(T(10)));
      out += '\n';
    }
  }
  return out;
}

template std::string report_csv<double>(const ErrorReport<double>&);
template std::string report_csv<quad>(const ErrorReport<quad>&);
template nlohmann::json report_json<double>(const ErrorReport<double>&);
template nlohmann::json report_json<quad>(const ErrorReport<quad>&);
template std::string plotdata_csv<double>(std::span<const ErrorReport<double>>);
template std::string plotdata_csv<quad>(std::span<const ErrorReport<quad>>);

}  // namespace ganelius
