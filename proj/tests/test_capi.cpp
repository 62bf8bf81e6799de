#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "ganelius/ganelius.h"

namespace {

template <class F>
std::string text_of(F&& call) {
  size_t required = 0;
  REQUIRE(call(nullptr, 0, &required) == GAN_ERR_BUFFER_TOO_SMALL);
  std::string buf(required + 1, '\0');
  REQUIRE(call(buf.data(), buf.size(), &required) == GAN_OK);
  buf.resize(required);
  return buf;
}

double sqrt_weight(double x, double delta, void*) {
  const double w = x * x < 0.25 ? (1 - x) * (1 + x) : delta * (2 - delta);
  return std::sqrt(w / (2 - w));
}

}  // namespace

TEST_CASE("node handles") {
  gan_nodes* nodes = nullptr;
  REQUIRE(gan_nodes_create(4, "0.5", nullptr, nullptr, GAN_BINARY64, &nodes) == GAN_OK);
  int n = 0, n0 = 0;
  CHECK(gan_nodes_info(nodes, &n, &n0) == GAN_OK);
  CHECK(n == 4);
  CHECK(n0 == 2);
  const std::string csv = text_of([&](char* b, size_t c, size_t* r) { return gan_nodes_csv(nodes, b, c, r); });
  CHECK(csv.rfind("k,a_k,b_k,beta_k,sigma_sign,sigma_logmag\n1,0.00186744273170798", 0) == 0);
  char small[8];
  size_t required = 0;
  CHECK(gan_nodes_csv(nodes, small, sizeof small, &required) == GAN_ERR_BUFFER_TOO_SMALL);
  CHECK(required == csv.size());
  gan_nodes_destroy(nodes);

  REQUIRE(gan_nodes_create(4, nullptr, "1.5707963267948966", "1", GAN_EXTENDED, &nodes) == GAN_OK);
  gan_nodes_destroy(nodes);

  CHECK(gan_nodes_create(1, "0.5", nullptr, nullptr, GAN_BINARY64, &nodes) == GAN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gan_last_error()).find("N0") != std::string::npos);
  CHECK(gan_nodes_create(4, nullptr, "1.0", nullptr, GAN_BINARY64, &nodes) == GAN_ERR_INVALID_ARGUMENT);
  CHECK(gan_nodes_create(4, "0.5", nullptr, nullptr, GAN_BINARY64, nullptr) == GAN_ERR_NULL_POINTER);
  gan_nodes_destroy(nullptr);
}

TEST_CASE("approximant handles") {
  gan_approximant* a = nullptr;
  REQUIRE(gan_approx_create("f1", GAN_SCHEME_GANELIUS, 4, nullptr, nullptr, GAN_BINARY64, &a) == GAN_OK);
  double v = 0;
  CHECK(gan_approx_eval(a, 0.3, &v) == GAN_OK);
  CHECK(std::fabs(v - 0.9127974923344602518) < 1e-15);
  CHECK(gan_approx_eval_endpoint(a, 1, 1, 10, &v) == GAN_OK);
  CHECK(std::fabs(v - 4.231093547887716155830e-9) < 1e-21);
  CHECK(gan_approx_eval(a, 1.5, &v) == GAN_ERR_DOMAIN);
  CHECK(gan_approx_eval_endpoint(a, 0, 1, 10, &v) == GAN_ERR_INVALID_ARGUMENT);
  size_t count = 0;
  CHECK(gan_approx_sample_count(a, &count) == GAN_OK);
  CHECK(count == 8);
  const std::string csv =
      text_of([&](char* b, size_t c, size_t* r) { return gan_approx_grid_csv(a, "points:0.3;-1", b, c, r); });
  CHECK(csv.rfind("x,f,approx,abs_error\n0.3,", 0) == 0);
  CHECK(csv.find("\n-1,0,0,0\n") != std::string::npos);
  size_t req = 0;
  CHECK(gan_approx_grid_csv(a, "weird", nullptr, 0, &req) == GAN_ERR_INVALID_ARGUMENT);
  gan_approx_destroy(a);

  REQUIRE(gan_approx_create("f5", GAN_SCHEME_SESINC, 9, nullptr, nullptr, GAN_EXTENDED, &a) == GAN_OK);
  CHECK(gan_approx_eval(a, 0.0, &v) == GAN_OK);
  CHECK(std::fabs(v - 1.0) < 1e-2);
  gan_approx_destroy(a);

  CHECK(gan_approx_create("f1", GAN_SCHEME_GANELIUS, 4, "0.5", nullptr, GAN_BINARY64, &a) == GAN_ERR_INVALID_ARGUMENT);
  CHECK(gan_approx_create("zz", GAN_SCHEME_GANELIUS, 4, nullptr, nullptr, GAN_BINARY64, &a) ==
        GAN_ERR_INVALID_ARGUMENT);
  CHECK(gan_approx_create("f1", GAN_SCHEME_GANELIUS, 4, nullptr, "9", GAN_BINARY64, &a) == GAN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("custom function through a callback") {
  gan_approximant* a = nullptr;
  REQUIRE(gan_approx_create_custom(sqrt_weight, nullptr, GAN_SCHEME_GANELIUS, 4, 1.57, 1.0, NAN, &a) == GAN_OK);
  double v = 0;
  CHECK(gan_approx_eval(a, 0.3, &v) == GAN_OK);
  CHECK(std::fabs(v - 0.9127974923344602518) < 1e-15);
  gan_approx_destroy(a);
  CHECK(gan_approx_create_custom(nullptr, nullptr, GAN_SCHEME_GANELIUS, 4, 1.57, 1.0, NAN, &a) ==
        GAN_ERR_NULL_POINTER);
}

TEST_CASE("sweep reports") {
  const int ns[] = {4, 9};
  gan_report* r = nullptr;
  REQUIRE(gan_sweep("f1", GAN_SCHEME_SESINC, ns, 2, nullptr, nullptr, nullptr, GAN_BINARY64, 0, &r) == GAN_OK);
  size_t rows = 0;
  CHECK(gan_report_row_count(r, &rows) == GAN_OK);
  CHECK(rows == 2);
  int n = 0;
  double err = 0;
  CHECK(gan_report_row(r, 0, &n, &err) == GAN_OK);
  CHECK(n == 4);
  CHECK(std::fabs(err - 0.034812613185885906108) < 1e-15);
  CHECK(gan_report_row(r, 5, &n, &err) == GAN_ERR_INVALID_ARGUMENT);
  double slope = 0;
  CHECK(gan_report_fitted_slope(r, &slope) == GAN_OK);
  CHECK(slope < 0);
  const std::string json = text_of([&](char* b, size_t c, size_t* q) { return gan_report_json(r, b, c, q); });
  CHECK(nlohmann::json::parse(json)["scheme"] == "sesinc");
  const std::string csv = text_of([&](char* b, size_t c, size_t* q) { return gan_report_csv(r, b, c, q); });
  CHECK(csv.rfind("N,max_error,argmax,ratio\n", 0) == 0);

  const gan_report* list[] = {r};
  const std::string plot = text_of([&](char* b, size_t c, size_t* q) { return gan_plotdata_csv(list, 1, b, c, q); });
  CHECK(plot.rfind("scheme,N,sqrt_N,log10_error\nsesinc,4,2,", 0) == 0);

  gan_report* e = nullptr;
  REQUIRE(gan_sweep("f1", GAN_SCHEME_GANELIUS, ns, 1, nullptr, nullptr, "uniform:11", GAN_EXTENDED, 1, &e) == GAN_OK);
  const gan_report* mixed[] = {r, e};
  size_t req = 0;
  CHECK(gan_plotdata_csv(mixed, 2, nullptr, 0, &req) == GAN_ERR_INVALID_ARGUMENT);
  gan_report_destroy(e);
  gan_report_destroy(r);

  CHECK(gan_sweep("f1", GAN_SCHEME_GANELIUS, ns, 0, nullptr, nullptr, nullptr, GAN_BINARY64, 0, &r) ==
        GAN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parameters and rates") {
  double d = 0, mu = 0, nu = 0;
  CHECK(gan_function_params("f4", &d, &mu, &nu) == GAN_OK);
  CHECK(d == M_PI / 2);
  CHECK(mu == std::sqrt(2.0));
  CHECK(nu == 1.0);
  double rate = 0;
  CHECK(gan_theoretical_rate("f1", GAN_SCHEME_GANELIUS, nullptr, &rate) == GAN_OK);
  CHECK(std::fabs(rate - 9.2154213055821224) < 1e-13);
  gan_precision p;
  CHECK(gan_parse_precision("extended", &p) == GAN_OK);
  CHECK(p == GAN_EXTENDED);
  gan_scheme s;
  CHECK(gan_parse_scheme("se-sinc", &s) == GAN_OK);
  CHECK(s == GAN_SCHEME_SESINC);
  CHECK(gan_parse_scheme("x", &s) == GAN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gan_status_string(GAN_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("verification entry point") {
  int passed = -1;
  const std::string out = text_of([&](char* b, size_t c, size_t* q) {
    return gan_verify_run(R"({"check": "cardinal", "N": [9], "functions": ["f2"]})", &passed, b, c, q);
  });
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(out)["passed"] == true);
  size_t req = 0;
  CHECK(gan_verify_run("{not json", &passed, nullptr, 0, &req) == GAN_ERR_INVALID_ARGUMENT);
  CHECK(gan_verify_run(R"({"check": "nope"})", &passed, nullptr, 0, &req) == GAN_ERR_INVALID_ARGUMENT);
}
