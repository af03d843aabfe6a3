#include <doctest.h>

#include <cmath>

#include "cubelab/rng.hpp"
#include "cubelab/weights.hpp"

using namespace clab;

TEST_CASE("gamma bump values") {
  CHECK(gamma_bump(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(gamma_bump(1.0) == 0.0);
  CHECK(gamma_bump(-1.0) == 0.0);
  CHECK(gamma_bump(2.5) == 0.0);
  for (double x : {0.1, 0.37, 0.99}) CHECK(gamma_bump(x) == gamma_bump(-x));
}

TEST_CASE("product weight") {
  auto w2 = product_weight(2);
  CHECK(w2.support_radius == 1.0);
  std::vector<double> origin{0.0, 0.0};
  CHECK(w2(origin) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

  std::vector<double> outside{1.0, 0.3};
  CHECK(w2(outside) == 0.0);

  auto w1 = product_weight(1);
  for (double x : {0.0, 0.2, 0.9, 1.4}) {
    std::vector<double> p{x};
    CHECK(w1(p) == gamma_bump(x));
  }
  CHECK_THROWS_AS(product_weight(0), std::domain_error);
}

TEST_CASE("support and non-negativity") {
  auto w = product_weight(3);
  SplitMix64 rng(5);
  for (int t = 0; t < 100000; ++t) {
    std::vector<double> x(3);
    for (auto& c : x) c = (rng.uniform01() - 0.5) * 3.0;
    double v = w(x);
    CHECK(v >= 0.0);
    double m = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
    if (m >= 1.0) CHECK(v == 0.0);
  }
}

TEST_CASE("box-smooth rescaling") {
  auto w = box_smooth_weight(2, 3.0);
  CHECK(w.support_radius == 3.0);
  std::vector<double> in{2.9, 0.0}, out{3.0, 0.0};
  CHECK(w(in) > 0.0);
  CHECK(w(out) == 0.0);
  CHECK_THROWS_AS(weight_by_name("no-such", 2), std::invalid_argument);
  auto named = weight_by_name("box-smooth:2.5", 1);
  CHECK(named.support_radius == doctest::Approx(2.5));
}

TEST_CASE("derivative sup estimates") {
  auto w1 = product_weight(1);
  auto j0 = derivative_sup(w1, 0);
  CHECK(j0.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));

  // analytic oracle for j = 1: maximize |gamma'(x)| on a fine grid
  double best = 0;
  for (int i = 0; i <= 200000; ++i) {
    double x = -1.0 + 2.0 * i / 200000.0;
    best = std::max(best, std::abs(gamma_bump_derivative(x)));
  }
  auto j1 = derivative_sup(w1, 1);
  CHECK(j1.value == doctest::Approx(best).epsilon(1e-4));

  auto wz = product_weight(1);
  wz.eval = [](const double*) { return 0.0; };
  CHECK(derivative_sup(wz, 0).value == 0.0);

  CHECK_THROWS_AS(derivative_sup(w1, 7), std::domain_error);
}

TEST_CASE("derivative estimates vanish toward the support boundary") {
  auto w1 = product_weight(1);
  // |gamma'(x)| estimated at x = 1 - 2^-k decays monotonically in the tail
  double prev = 1e300;
  for (int k = 3; k <= 10; ++k) {
    double x = 1.0 - std::pow(2.0, -k);
    double h = 1e-4;
    double est = std::abs((gamma_bump(x + h) - gamma_bump(x - h)) / (2 * h));
    CHECK(est <= prev + 1e-12);
    prev = est;
  }
  CHECK(prev <= 1e-6);
}

TEST_CASE("composed weight matches direct evaluation") {
  auto w = product_weight(2);
  std::vector<double> shift{0.25, -0.5};
  std::vector<std::vector<double>> B{{1.0}, {-1.0}};
  auto w0 = composed_weight(w, shift, B, 2.0);
  CHECK(w0.n == 1);
  for (double u : {-0.6, 0.0, 0.4}) {
    std::vector<double> uv{u};
    std::vector<double> x{shift[0] + u, shift[1] - u};
    CHECK(w0(uv) == w(x));
  }
}
