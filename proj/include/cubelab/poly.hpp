#ifndef CUBELAB_POLY_HPP
#define CUBELAB_POLY_HPP

// Exact integer polynomials of total degree <= 3 in n variables, with the
// differential apparatus built on top of them: sup norms, the scaled norm
// ||g||_P = ||P^-3 g(Px)||, the integer symmetric tensor of the cubic part
// (normalised so that sum c_ijk x_i x_j x_k = 6*g0), bilinear forms
// B_i(w;x) = sum_jk c_ijk w_j x_k, gradients/Hessians, and the brute-force
// search for primes where the cubic part degenerates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubelab/numeric.hpp"
#include "cubelab/rng.hpp"

namespace clab {

struct Monomial {
  std::vector<int> exps;  // length n, entries >= 0, total <= 3
  Int coeff;              // nonzero in stored form

  int degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }
};

class CubicPolynomial {
 public:
  CubicPolynomial() : n_(0) {}
  explicit CubicPolynomial(int n) : n_(n) {}

  // Parses "c*x<i>^<e>*..." terms joined by +/-, e.g. "x1^3 - 2*x1*x2^2 + 5".
  // n <= 0 infers the dimension from the largest variable index used.
  static CubicPolynomial parse(const std::string& text, int n = 0);

  static CubicPolynomial zero(int n) { return CubicPolynomial(n); }

  // Canonical text form: terms in descending graded-lex order.
  std::string to_string() const;

  int dimension() const { return n_; }
  int degree() const;  // -0 convention: zero polynomial has degree 0
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous(int d) const;
  const std::vector<Monomial>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Int& coeff);

  CubicPolynomial operator+(const CubicPolynomial& o) const;
  CubicPolynomial operator-(const CubicPolynomial& o) const;
  CubicPolynomial scaled(const Int& c) const;

  // Product, exact.  Throws if the result exceeds degree `max_degree`.
  CubicPolynomial multiply(const CubicPolynomial& o, int max_degree = 3) const;

  Int evaluate(const std::vector<Int>& x) const;
  std::int64_t evaluate_i64(const std::int64_t* x) const;  // caller certifies
  double evaluate_d(const double* x) const;

  // Upper bound for |g| on the box max|x_i| <= radius.
  double abs_bound(double radius) const;
  // True when |g| on that box provably fits comfortably in int64.
  bool fits_i64(double radius) const;

  std::int64_t evaluate_mod(const std::int64_t* x, std::int64_t q) const;

  CubicPolynomial cubic_part() const;
  CubicPolynomial lower_part() const;  // g - g0

  Int sup_norm() const;
  double scaled_norm(double P) const;
  Rat scaled_norm_exact(const Rat& P) const;

  // Exact value, gradient and Hessian at an integer point.
  void gradient_hessian(const std::vector<Int>& x, Int& value,
                        std::vector<Int>& grad,
                        std::vector<std::vector<Int>>& hess) const;
  std::vector<std::int64_t> gradient_mod(const std::int64_t* x,
                                         std::int64_t p) const;

  // Substitution x = t + E*u (E is n x m, columns are the images of the new
  // coordinates); returns the exact polynomial in m variables.
  CubicPolynomial compose_affine(const std::vector<std::vector<Int>>& E,
                                 const std::vector<Int>& t) const;

  // Coefficients of g viewed as a univariate polynomial in x_axis, each a
  // polynomial in the remaining variables (indices unchanged, axis ignored).
  std::vector<CubicPolynomial> coefficients_in(int axis) const;

 private:
  int n_ = 0;
  std::vector<Monomial> terms_;  // descending graded-lex, nonzero coeffs
  void normalize();
};

struct SymmetricCubicTensor {
  int n = 0;
  std::vector<Int> c;  // dense n^3, index (i*n + j)*n + k, fully symmetric

  const Int& at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
};

// Integer tensor with sum_ijk c_ijk x_i x_j x_k = 6*g0(x).  Requires g0
// homogeneous of degree 3 (the zero polynomial is allowed).
SymmetricCubicTensor symmetric_tensor(const CubicPolynomial& g0);

// B_i(w;x) = sum_jk c_ijk w_j x_k, exact.
std::vector<Int> bilinear_system(const SymmetricCubicTensor& T,
                                 const std::vector<Int>& w,
                                 const std::vector<Int>& x);

// Primes p <= limit for which grad g0 vanishes at some nonzero point of
// (Z/pZ)^n, found by exhaustive search.  Requires limit >= 2.
std::vector<std::int64_t> bad_primes(const CubicPolynomial& g0,
                                     std::int64_t limit);

// Uniform random polynomial of degree <= 3: every monomial of total degree
// <= 3 gets a coefficient in [-bound, bound]; a cubic term is forced nonzero
// when `force_cubic` is set.
CubicPolynomial random_cubic(SplitMix64& rng, int n, std::int64_t bound,
                             bool force_cubic = true);

}  // namespace clab

#endif
