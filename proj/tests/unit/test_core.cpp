#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "doctest.h"
#include "edgeflow/quadrature.hpp"
#include "edgeflow/rng.hpp"
#include "edgeflow/stats.hpp"

using namespace edgeflow;

TEST_CASE("stream is reproducible and keyed") {
  Stream a(7, 1), b(7, 1), c(7, 2);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs |= x != c();
  }
  CHECK(differs);
  CHECK(hash_key(1, 2, 3) == hash_key(1, 2, 3));
  CHECK(hash_key(1, 2, 3) != hash_key(1, 3, 2));
}

TEST_CASE("uniform draws stay in the open unit interval") {
  CHECK(unit_open(0) > 0.0);
  CHECK(unit_open(~0ULL) < 1.0);
  Stream s(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("distribution helpers have the right laws") {
  Stream s(11);
  const int m = 200000;
  RunningStats e, g2, gum, logi;
  std::vector<double> ex;
  for (int i = 0; i < m; ++i) {
    const double x = s.exponential(2.0);
    e.add(x);
    ex.push_back(x);
    g2.add(s.gamma2());
    gum.add(s.gumbel());
    logi.add(s.logistic());
  }
  CHECK(std::abs(e.mean() - 0.5) < 3 * e.standard_error());
  CHECK(std::abs(g2.mean() - 2.0) < 3 * g2.standard_error());
  CHECK(std::abs(gum.mean() - 0.5772156649) < 3 * gum.standard_error());
  CHECK(std::abs(logi.mean()) < 3 * logi.standard_error());
  // 1.63/sqrt(m) is the 1% critical value of the one-sample KS statistic.
  CHECK(ks_statistic(ex, [](double x) { return 1.0 - std::exp(-2.0 * x); }) <
        1.63 / std::sqrt(m));
}

TEST_CASE("geometric draws pass a chi-square test") {
  Stream s(5);
  const double p = 0.3;
  const int m = 100000;
  std::vector<double> obs(12, 0.0), expv(12, 0.0);
  for (int i = 0; i < m; ++i) {
    const auto k = s.geometric(p);
    REQUIRE(k >= 1);
    obs[std::min<std::size_t>(k, 12) - 1] += 1.0;
  }
  double tail = 1.0;
  for (int k = 1; k < 12; ++k) {
    expv[k - 1] = m * p * std::pow(1 - p, k - 1);
    tail -= p * std::pow(1 - p, k - 1);
  }
  expv[11] = m * tail;
  CHECK(chi_square_gof(obs, expv).p_value > 0.001);
  CHECK(s.geometric(1.0) == 1);
}

TEST_CASE("bounded integers are uniform") {
  Stream s(9);
  std::vector<double> obs(7, 0.0);
  for (int i = 0; i < 70000; ++i) obs[s.below(7)] += 1.0;
  const std::vector<double> expv(7, 10000.0);
  CHECK(chi_square_gof(obs, expv).p_value > 0.001);
}

TEST_CASE("running stats match direct formulas") {
  const std::vector<double> xs{1.0, 4.0, 2.0, 8.0, 5.0};
  const auto s = summarize(xs);
  CHECK(s.mean() == doctest::Approx(4.0));
  CHECK(s.variance() == doctest::Approx(7.5));
  CHECK(s.standard_error() == doctest::Approx(std::sqrt(7.5 / 5)));
}

TEST_CASE("ks statistics on hand-checked samples") {
  // Sample {0.1, 0.6} vs uniform: gaps 0.1, 0.4, 0.1, 0.4 -> 0.4.
  CHECK(ks_statistic({0.6, 0.1}, [](double x) { return x; }) == doctest::Approx(0.4));
  CHECK(ks_two_sample({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(ks_two_sample({1, 2}, {3, 4}) == 1.0);
}

TEST_CASE("chi-square survival agrees with Boost") {
  for (std::size_t dof : {1u, 4u, 17u}) {
    for (double x : {0.5, 3.0, 20.0}) {
      const boost::math::chi_squared_distribution<double> d(static_cast<double>(dof));
      CHECK(chi_square_survival(x, dof) == doctest::Approx(cdf(complement(d, x))).epsilon(1e-10));
    }
  }
}

TEST_CASE("pearson correlation and total variation") {
  CHECK(pearson_correlation(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}) ==
        doctest::Approx(1.0));
  CHECK(pearson_correlation(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}) ==
        doctest::Approx(-1.0));
  CHECK(total_variation(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0}) ==
        doctest::Approx(0.5));
}

TEST_CASE("adaptive quadrature") {
  CHECK(integrate([](double x) { return x * x; }, 0, 1).value == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_real_line([](double x) { return std::exp(-x * x); }, 0).value ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  // Integrable log singularity at 0.
  CHECK(integrate([](double x) { return std::log(x); }, 0, 1).value ==
        doctest::Approx(-1.0).epsilon(1e-9));
}
