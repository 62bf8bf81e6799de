#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ganelius/verify.hpp"

using namespace ganelius;

TEST_CASE("benchmark grid") {
  const auto grid = reference_grid<double>();
  CHECK(grid.size() == 1999 + 234);
  CHECK(grid.front().label == "-0.999");
  CHECK(grid[999].label == "0.000");
  CHECK(grid[1998].label == "0.999");
  const auto it = std::find_if(grid.begin(), grid.end(), [](const auto& g) { return g.label == "-1+3e-16"; });
  REQUIRE(it != grid.end());
  CHECK(it->point.delta() == 3e-16);
  CHECK(it->point.sign() == -1);
  CHECK(square_n_list() == std::vector<int>{4, 9, 16, 25, 36, 49, 64, 81, 100, 121, 144});
  const auto u = uniform_grid<double>(3);
  CHECK(u.size() == 3);
  CHECK(u[1].point.value() == 0.0);
  CHECK_THROWS_AS(uniform_grid<double>(0), InvalidArgument);
}

TEST_CASE("cosh convolution integral") {
  CHECK(std::fabs(j_integral(1, 1, 0) - 2) < 1e-12);
  // J(1, 1; t) = 2t / sinh t
  CHECK(std::fabs(j_integral(1, 1, 3) - 0.59892941801293639711) < 1e-12);
  CHECK(std::fabs(j_integral(0.5, 0, 1) - 5.2441151085842396209) < 1e-11);
  CHECK(std::fabs(j_integral(0.75, -0.25, 4) - 10.171685103257087879) < 1e-10);
  CHECK(j_integral(2, 0.5, -7) == doctest::Approx(j_integral(0.5, 2, 7)).epsilon(1e-12));
  CHECK_THROWS_AS(j_integral(0.5, -0.5, 0), InvalidArgument);
}

TEST_CASE("cosh convolution bound") {
  CHECK(std::fabs(j_bound(1, 0.5, 0) - std::pow(2.0, 2.5) / 0.75 * 0.5) < 1e-14);
  CHECK(j_bound(1, 0.5, 2) == j_bound(0.5, 1, -2));
  CHECK_THROWS_AS(j_bound(1, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(j_bound(-1, 0.5, 0), InvalidArgument);
  const auto suite = j_sample_suite();
  CHECK(suite.size() == 50);
  for (int i = 0; i < 20; ++i) CHECK(suite[i].alpha == 0.5);
  CHECK(suite[16].beta == 0.0);  // mu = 3, nu = 2
}

TEST_CASE("theoretical rates") {
  CHECK(theoretical_rate(test_function<double>("f1").params, Scheme::ganelius) ==
        doctest::Approx(9.2154213055821224).epsilon(1e-14));
  CHECK(theoretical_rate(test_function<double>("f5").params, Scheme::ganelius) ==
        doctest::Approx(46.837027204423748).epsilon(1e-14));
  CHECK(theoretical_rate(test_function<double>("f3").params, Scheme::sesinc) ==
        doctest::Approx(6.1326580651363436).epsilon(1e-14));
}

TEST_CASE("least squares slope") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 1, -1, -3};
  CHECK(least_squares_slope(x, y) == doctest::Approx(-2));
  CHECK(std::isnan(least_squares_slope(std::vector<double>{1}, std::vector<double>{1})));
}

TEST_CASE("product-bound maximum matches a fine scan") {
  for (const double r : {0.5, 2.0}) {
    const auto nodes = ganelius_nodes<double>(9, r);
    double best = 0;
    for (int i = 1; i <= 200000; ++i) {
      const double s = std::pow(10.0, -12.0 * (1 - i / 200000.0));
      best = std::max(best, std::exp(ganelius_log_objective(nodes, s)));
    }
    const auto m = ganelius_lhs_max<double>(9, r);
    CHECK(m.value >= best * (1 - 1e-12));
    CHECK(m.value <= best * (1 + 1e-6));
    CHECK(std::exp(ganelius_log_objective(nodes, m.argmax)) == doctest::Approx(m.value).epsilon(1e-12));
  }
  const auto nodes = ganelius_nodes<double>(4, 0.5);
  CHECK(std::isinf(ganelius_log_objective(nodes, 0.0)));
  CHECK(std::isinf(ganelius_log_objective(nodes, nodes.a[2])));
}

TEST_CASE("s-form and t-form maxima bracket each other") {
  const std::vector<int> ns{4, 9};
  const std::vector<double> rs{0.5, 3.0};
  CHECK(check_lhs_equivalence(ns, rs).passed);
  const double s = ganelius_lhs<double>(9, 3.0);
  const double t = blaschke_bound_lhs<double>(9, 3.0);
  CHECK(s <= t);
  CHECK(t <= 8 * s);
}

TEST_CASE("sweep rows, ratios and determinism") {
  const auto f = test_function<double>("f1");
  const std::vector<int> ns{4, 9, 25};
  SweepOptions one;
  one.threads = 1;
  SweepOptions four;
  four.threads = 4;
  const auto a = error_sweep<double>(f, Scheme::ganelius, ns, one);
  const auto b = error_sweep<double>(f, Scheme::ganelius, ns, four);
  REQUIRE(a.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.rows[i].max_error == b.rows[i].max_error);
    CHECK(a.rows[i].argmax == b.rows[i].argmax);
  }
  CHECK_FALSE(a.rows[0].ratio.has_value());
  CHECK(a.rows[1].ratio.has_value());
  CHECK_FALSE(a.rows[2].ratio.has_value());  // 16 was skipped
  CHECK(std::fabs(a.rows[0].max_error - 0.0077305567751978299669) < 1e-15);
  CHECK(report_csv(a) == report_csv(b));
  CHECK(report_csv(a).rfind("N,max_error,argmax,ratio\n4,", 0) == 0);
  CHECK_THROWS_AS(error_sweep<double>(f, Scheme::ganelius, std::vector<int>{}), InvalidArgument);

  const auto sinc = error_sweep<double>(f, Scheme::sesinc, std::vector<int>{4});
  CHECK(std::fabs(sinc.rows[0].max_error - 0.034812613185885906108) < 1e-15);
  CHECK(std::isnan(sinc.nu));
}

TEST_CASE("extended sweep reaches below binary64 resolution") {
  const auto f = test_function<quad>("f5");
  const auto r = error_sweep<quad>(f, Scheme::ganelius, std::vector<int>{4});
  CHECK(math::abs(r.rows[0].max_error - math::from_string<quad>("0.016479374504976147488")) < quad(1e-20));
  CHECK(r.precision == Precision::extended);
}

TEST_CASE("report formats") {
  const auto f = test_function<double>("f2");
  const auto r = error_sweep<double>(f, Scheme::ganelius, std::vector<int>{4, 9});
  const auto j = report_json(r);
  CHECK(j["function"] == "f2");
  CHECK(j["scheme"] == "ganelius");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["ratio"].is_null());
  CHECK(j.contains("theoretical_ratio"));
  CHECK(j.contains("fitted_slope"));
  const std::vector<ErrorReport<double>> reports{r};
  const std::string plot = plotdata_csv<double>(reports);
  CHECK(plot.rfind("scheme,N,sqrt_N,log10_error\nganelius,4,2,", 0) == 0);
  ErrorReport<double> empty;
  const std::vector<ErrorReport<double>> none{empty};
  CHECK(plotdata_csv<double>(none).empty());
}

TEST_CASE("region sample points lie inside the region") {
  for (const double d : {0.5, 1.5, 2.5}) {
    const auto pts = region_sample_points(d, 1000);
    CHECK(pts.size() == 1000);
    for (const auto& z : pts) CHECK(in_region(z, d));
  }
}
