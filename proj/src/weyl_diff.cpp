#include "cubelab/weyl_diff.hpp"

#include <algorithm>
#include <cmath>

namespace clab {

namespace {

Int double_difference(const CubicPolynomial& g, const std::vector<Int>& w,
                      const std::vector<Int>& x, const std::vector<Int>& y) {
  const int n = g.dimension();
  std::vector<Int> wxy(n), wy(n), xy(n);
  for (int i = 0; i < n; ++i) {
    wxy[i] = w[i] + x[i] + y[i];
    wy[i] = w[i] + y[i];
    xy[i] = x[i] + y[i];
  }
  return g.evaluate(wxy) - g.evaluate(wy) - g.evaluate(xy) + g.evaluate(y);
}

}  // namespace

DifferencedValue difference_form(const CubicPolynomial& g,
                                 const std::vector<Int>& w,
                                 const std::vector<Int>& x,
                                 const std::vector<Int>& y) {
  const int n = g.dimension();
  if (static_cast<int>(w.size()) != n || static_cast<int>(x.size()) != n ||
      static_cast<int>(y.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  DifferencedValue out;
  out.G = double_difference(g, w, x, y);
  auto T = symmetric_tensor(g.cubic_part());
  auto B = bilinear_system(T, w, x);
  Int lin = 0;
  for (int i = 0; i < n; ++i) lin += y[i] * B[i];
  out.Gamma = out.G - lin;

  // the y-free part must be invariant under y -> y + e_1
  std::vector<Int> y2 = y;
  y2[0] += 1;
  Int lin2 = lin + B[0];
  if (double_difference(g, w, x, y2) - lin2 != out.Gamma)
    throw std::logic_error("linearization failed the shift check");
  return out;
}

std::int64_t bilinear_variety_count(const CubicPolynomial& g0, std::int64_t p) {
  if (!is_prime64(p)) throw std::domain_error("p must be prime");
  const int n = g0.dimension();
  if (std::pow(static_cast<double>(p), 2 * n) > 1e9)
    throw std::domain_error("p^{2n} above budget");
  auto T = symmetric_tensor(g0);
  // c_ijk mod p
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) * n * n);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_i64(T.c[i] % p);
  for (auto& v : c) v = mod_reduce(v, p);

  std::int64_t total = 0;
  std::vector<std::int64_t> x(n, 0);
  std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n));
  for (;;) {
    // M_ij = sum_k c_ijk x_k mod p, kernel size p^{n - rank}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k)
          s = (s + c[(i * n + j) * n + k] * x[k]) % p;
        M[i][j] = s;
      }
    // Gaussian elimination over F_p
    int rank = 0;
    auto A = M;
    for (int col = 0; col < n && rank < n; ++col) {
      int piv = -1;
      for (int r = rank; r < n; ++r)
        if (A[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(A[rank], A[piv]);
      std::int64_t inv = inv_mod(A[rank][col], p);
      for (int cc = col; cc < n; ++cc) A[rank][cc] = A[rank][cc] * inv % p;
      for (int r = 0; r < n; ++r) {
        if (r == rank || A[r][col] == 0) continue;
        std::int64_t f = A[r][col];
        for (int cc = col; cc < n; ++cc)
          A[r][cc] = mod_reduce(A[r][cc] - f * A[rank][cc], p);
      }
      ++rank;
    }
    total += ipow64(p, n - rank);
    int i = 0;
    while (i < n && x[i] == p - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return total;
}

void WeylBoundInput::validate() const {
  if (coefficient_sum <= 0)
    throw std::domain_error("coefficient sum must be positive");
  if (q < 1 || P < 1) throw std::domain_error("q and P must be >= 1");
  if (static_cast<double>(q) > std::pow(P, 1.5) + 1e-9)
    throw std::domain_error("requires q <= P^{3/2}");
  if (std::abs(z) > 1.0 / (static_cast<double>(q) * std::pow(P, 1.5)) + 1e-18)
    throw std::domain_error("requires |z| <= 1/(q P^{3/2})");
}

double weyl_parameter_Z(const WeylBoundInput& in) {
  in.validate();
  const double c = in.coefficient_sum;
  const double q = static_cast<double>(in.q);
  const double P = in.P;
  const double az = std::abs(in.z);
  double second = az > 0 ? 1.0 / (12.0 * c * q * az * P * P) : HUGE_VAL;
  double inner = std::min(
      {1.0, second, P / (2.0 * q),
       std::max(q / (6.0 * c * P * P), q * az * P)});
  return 0.5 * std::sqrt(inner);
}

double weyl_bound_rhs(const WeylBoundInput& in, double g0_norm, int n) {
  in.validate();
  if (g0_norm <= 0) throw std::domain_error("norm must be positive");
  const double q = static_cast<double>(in.q);
  const double P = in.P;
  const double az = std::abs(in.z);
  double damp = az > 0 ? std::min(1.0, std::pow(az * P * P * P, -n / 8.0)) : 1.0;
  return std::pow(g0_norm, n / 8.0) * std::pow(q, 1.0 - n / 8.0) *
         std::pow(P, n + in.epsilon) * damp;
}

double tensor_coefficient_sum(const CubicPolynomial& g0) {
  auto T = symmetric_tensor(g0);
  double s = 0;
  for (auto& c : T.c) s += std::abs(to_double(c));
  return s;
}

}  // namespace clab
