#include <doctest.h>

#include "cubelab/poly.hpp"
#include "cubelab/rng.hpp"

using namespace clab;

TEST_CASE("parser builds the documented examples") {
  auto g = CubicPolynomial::parse("x1^3 + 2*x2", 2);
  CHECK(g.to_string() == "x1^3 + 2*x2");
  CHECK(g.dimension() == 2);
  CHECK(g.degree() == 3);

  CHECK_THROWS_AS(CubicPolynomial::parse("x1^4", 1), std::domain_error);
  CHECK_THROWS_AS(CubicPolynomial::parse("x3", 2), std::out_of_range);
  CHECK_THROWS_AS(CubicPolynomial::parse("x1 + + x2", 2),
                  std::invalid_argument);

  auto zero = CubicPolynomial::parse("x1^3 - x1^3", 1);
  CHECK(zero.is_zero());
  CHECK(zero.to_string() == "0");
}

TEST_CASE("canonical printing is graded-lex descending") {
  auto g = CubicPolynomial::parse("5 + x1^3 - 2*x1*x2^2", 2);
  CHECK(g.to_string() == "x1^3 - 2*x1*x2^2 + 5");
  auto r = CubicPolynomial::parse(g.to_string(), 2);
  CHECK(r.to_string() == g.to_string());
}

TEST_CASE("cubic part extraction") {
  auto g = CubicPolynomial::parse("x1^3 + 7*x1^2 + 3", 1);
  CHECK(g.cubic_part().to_string() == "x1^3");
  auto h = CubicPolynomial::parse("x1^2*x2 + x1^3", 2);
  CHECK(h.cubic_part().to_string() == h.to_string());
  auto k = CubicPolynomial::parse("x1*x2 + 5", 2);
  CHECK(k.cubic_part().is_zero());
}

TEST_CASE("sup norm") {
  CHECK(CubicPolynomial::parse("x1^3 - 7*x2", 2).sup_norm() == 7);
  CHECK(CubicPolynomial::zero(2).sup_norm() == 0);
  auto g = CubicPolynomial::parse("x1^3 - 7*x2 + 2*x1*x2", 2);
  CHECK(g.scaled(6).sup_norm() == 6 * g.sup_norm());
}

TEST_CASE("scaled norm matches the full-expansion oracle") {
  // oracle: expand P^{-3} g(P x) term by term in exact rationals
  auto oracle = [](const CubicPolynomial& g, const Rat& P) {
    Rat best = 0;
    for (auto& t : g.terms()) {
      Rat v = Rat(abs(t.coeff));
      for (int e = 0; e < t.degree(); ++e) v *= P;
      v /= P * P * P;
      if (v > best) best = v;
    }
    return best;
  };
  auto g = CubicPolynomial::parse("x1^3 + 7*x1^2 + 3", 1);
  CHECK(g.scaled_norm_exact(Rat(10)) == Rat(1));
  CHECK(g.scaled_norm(10) == doctest::Approx(1.0));
  auto c = CubicPolynomial::parse("3", 1);
  CHECK(c.scaled_norm_exact(Rat(10)) == Rat(3, 1000));

  SplitMix64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto r = random_cubic(rng, 1 + static_cast<int>(rng.uniform(0, 2)), 9);
    Rat P(rng.uniform(1, 40));
    CHECK(r.scaled_norm_exact(P) == oracle(r, P));
  }
  // homogeneous: ||g||_P = ||g|| for every P
  auto h = CubicPolynomial::parse("4*x1^3 - 2*x1*x2^2", 2);
  CHECK(h.scaled_norm_exact(Rat(17)) == Rat(4));
  // sandwich ||g0|| <= ||g||_P <= ||g||
  for (int t = 0; t < 50; ++t) {
    auto r = random_cubic(rng, 2, 9);
    Rat P(rng.uniform(1, 30));
    CHECK(r.cubic_part().sup_norm() <= r.scaled_norm_exact(P));
    CHECK(r.scaled_norm_exact(P) <= r.sup_norm());
  }
}

TEST_CASE("symmetric tensor contracts back to 6*g0") {
  auto t1 = symmetric_tensor(CubicPolynomial::parse("x1^3", 1));
  CHECK(t1.at(0, 0, 0) == 6);

  auto t2 = symmetric_tensor(CubicPolynomial::parse("x1^2*x2", 2));
  CHECK(t2.at(0, 0, 1) == 2);
  CHECK(t2.at(0, 1, 0) == 2);
  CHECK(t2.at(1, 0, 0) == 2);
  CHECK(t2.at(0, 0, 0) == 0);

  auto t3 = symmetric_tensor(CubicPolynomial::parse("x1*x2*x3", 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        bool perm = (i != j && j != k && i != k);
        CHECK(t3.at(i, j, k) == (perm ? 1 : 0));
      }

  SplitMix64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng.uniform(0, 3));
    auto g0 = random_cubic(rng, n, 9).cubic_part();
    auto T = symmetric_tensor(g0);
    std::vector<Int> x(n);
    for (auto& c : x) c = rng.uniform(-20, 20);
    Int contracted = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          contracted += T.at(i, j, k) * x[i] * x[j] * x[k];
    CHECK(contracted == 6 * g0.evaluate(x));
  }
}

TEST_CASE("bilinear system") {
  auto fermat = symmetric_tensor(CubicPolynomial::parse("x1^3 + x2^3", 2));
  std::vector<Int> w{3, -2}, x{5, 7};
  auto b = bilinear_system(fermat, w, x);
  CHECK(b[0] == 6 * 3 * 5);
  CHECK(b[1] == 6 * -2 * 7);

  std::vector<Int> zero{0, 0};
  auto bz = bilinear_system(fermat, zero, x);
  CHECK(bz[0] == 0);
  CHECK(bz[1] == 0);

  SplitMix64 rng(3);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto g0 = random_cubic(rng, n, 5).cubic_part();
    auto T = symmetric_tensor(g0);
    std::vector<Int> a(n), bb(n);
    for (auto& c : a) c = rng.uniform(-9, 9);
    for (auto& c : bb) c = rng.uniform(-9, 9);
    CHECK(bilinear_system(T, a, bb) == bilinear_system(T, bb, a));
  }
}

TEST_CASE("gradient and Hessian are exact") {
  auto g = CubicPolynomial::parse("x1^3 + x2^3 + x3^3", 3);
  std::vector<Int> x{2, -1, 4};
  Int val;
  std::vector<Int> grad;
  std::vector<std::vector<Int>> hess;
  g.gradient_hessian(x, val, grad, hess);
  CHECK(val == 8 - 1 + 64);
  CHECK(grad[0] == 12);
  CHECK(grad[1] == 3);
  CHECK(grad[2] == 48);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(hess[i][j] == (i == j ? 6 * x[i] : Int(0)));

  // Hessian at 0 doubles the quadratic-part coefficients
  auto q = CubicPolynomial::parse("3*x1^2 + 5*x1*x2 - x2^2", 2);
  std::vector<Int> origin{0, 0};
  q.gradient_hessian(origin, val, grad, hess);
  CHECK(hess[0][0] == 6);
  CHECK(hess[0][1] == 5);
  CHECK(hess[1][0] == 5);
  CHECK(hess[1][1] == -2);

  auto lin = CubicPolynomial::parse("4*x1 - x2", 2);
  lin.gradient_hessian(origin, val, grad, hess);
  for (auto& row : hess)
    for (auto& h : row) CHECK(h == 0);
}

TEST_CASE("Hessian contraction agrees with the tensor bilinear forms") {
  // sum_k H_{g0}(w)_{ik} x_k equals B_i(w;x) built from the 6*g0 tensor
  SplitMix64 rng(17);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.uniform(0, 3));
    auto g0 = random_cubic(rng, n, 7).cubic_part();
    auto T = symmetric_tensor(g0);
    std::vector<Int> w(n), x(n);
    for (auto& c : w) c = rng.uniform(-15, 15);
    for (auto& c : x) c = rng.uniform(-15, 15);
    Int val;
    std::vector<Int> grad;
    std::vector<std::vector<Int>> hess;
    g0.gradient_hessian(w, val, grad, hess);
    auto B = bilinear_system(T, w, x);
    for (int i = 0; i < n; ++i) {
      Int hx = 0;
      for (int k = 0; k < n; ++k) hx += hess[i][k] * x[k];
      CHECK(hx == B[i]);
    }
  }
}

TEST_CASE("bad primes by exhaustive search") {
  // Fermat in 3 variables: gradient 3(x1^2,x2^2,x3^2) has no nonzero root
  // mod 2, and vanishes identically mod 3
  auto fermat = CubicPolynomial::parse("x1^3 + x2^3 + x3^3", 3);
  CHECK(bad_primes(fermat, 10) == std::vector<std::int64_t>{3});

  auto degenerate = CubicPolynomial::parse("x1^3", 2);
  CHECK(bad_primes(degenerate, 7) == std::vector<std::int64_t>{2, 3, 5, 7});

  CHECK_THROWS_AS(bad_primes(fermat, 1), std::domain_error);

  // monotone in the limit
  auto a = bad_primes(fermat, 5);
  auto b = bad_primes(fermat, 31);
  CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
}

TEST_CASE("affine composition is an exact substitution") {
  auto g = CubicPolynomial::parse("x1^3 + x2^3 - 9", 2);
  // x = t + E u with E the column (1,-1), t = (0,0): h(u) = u^3 - u^3 - 9
  std::vector<std::vector<Int>> E{{1}, {-1}};
  std::vector<Int> t{0, 0};
  auto h = g.compose_affine(E, t);
  CHECK(h.to_string() == "-9");

  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform(0, 1));
    auto r = random_cubic(rng, n, 5);
    std::vector<std::vector<Int>> B(n, std::vector<Int>(n - 1));
    std::vector<Int> shift(n);
    for (auto& row : B)
      for (auto& c : row) c = rng.uniform(-3, 3);
    for (auto& c : shift) c = rng.uniform(-4, 4);
    auto comp = r.compose_affine(B, shift);
    std::vector<Int> u(n - 1);
    for (auto& c : u) c = rng.uniform(-6, 6);
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = shift[i];
      for (int j = 0; j + 1 < n; ++j) x[i] += B[i][j] * u[j];
    }
    CHECK(comp.evaluate(u) == r.evaluate(x));
  }
}
