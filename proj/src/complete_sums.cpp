#include "cubelab/complete_sums.hpp"

#include <algorithm>
#include <cmath>

#include "cubelab/intlinalg.hpp"
#include "cubelab/parallel.hpp"

namespace clab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSumBudget = 2.5e8;  // lattice points per complete sum
}  // namespace

UnityTable::UnityTable(std::int64_t modulus) : q(modulus) {
  if (q < 1) throw std::domain_error("modulus below 1");
  roots.resize(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) {
    double t = kTwoPi * static_cast<double>(k) / static_cast<double>(q);
    roots[static_cast<std::size_t>(k)] = {std::cos(t), std::sin(t)};
  }
}

namespace {

// Iterates y over (Z/q)^n and hands g(y) mod q plus v.y mod q to the sink.
template <typename F>
void for_each_residue(const CubicPolynomial& g, std::int64_t q,
                      const std::vector<std::int64_t>& v, F&& sink) {
  const int n = g.dimension();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("frequency dimension mismatch");
  double total = std::pow(static_cast<double>(q), n);
  if (total > kSumBudget)
    throw std::domain_error("complete sum budget exceeded");
  std::vector<std::int64_t> y(n, 0);
  for (;;) {
    sink(g.evaluate_mod(y.data(), q), y);
    int i = 0;
    while (i < n && y[i] == q - 1) y[i++] = 0;
    if (i == n) break;
    ++y[i];
  }
}

std::int64_t dot_mod(const std::vector<std::int64_t>& a,
                     const std::vector<std::int64_t>& b, std::int64_t q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = (s + mod_reduce(a[i], q) * mod_reduce(b[i], q)) % q;
  return s;
}

}  // namespace

cplx complete_T(const CubicPolynomial& g, std::int64_t a, std::int64_t q,
                const std::vector<std::int64_t>& v) {
  if (q < 1) throw std::domain_error("modulus below 1");
  if (gcd64(mod_reduce(a, q), q) != 1 && q > 1)
    throw std::domain_error("complete_T needs gcd(a,q)=1");
  UnityTable e(q);
  KahanComplex acc;
  for_each_residue(g, q, v, [&](std::int64_t gy,
                                const std::vector<std::int64_t>& y) {
    acc.add(e(a * gy + dot_mod(v, y, q)));
  });
  return acc.value();
}

cplx complete_S(const CubicPolynomial& g, std::int64_t u, std::int64_t q,
                const std::vector<std::int64_t>& v) {
  if (q < 1) throw std::domain_error("modulus below 1");
  u = mod_reduce(u, q);  // e_q(abar u) only sees u mod q
  UnityTable e(q);
  // Kloosterman factor K[m] = sum_{gcd(a,q)=1} e_q(a m + abar u); S is then
  // sum_y e_q(v.y) K[g(y)], which turns the a-sum into a q-entry table.
  std::vector<cplx> K(static_cast<std::size_t>(q));
  for (std::int64_t m = 0; m < q; ++m) {
    KahanComplex acc;
    for (std::int64_t a = 1; a <= q; ++a) {
      if (gcd64(a % q == 0 ? q : a % q, q) != 1 && q > 1) continue;
      if (q == 1) {
        acc.add({1.0, 0.0});
        continue;
      }
      std::int64_t abar = inv_mod(a, q);
      acc.add(e(a * m + abar * u));
    }
    K[static_cast<std::size_t>(m)] = acc.value();
  }
  KahanComplex acc;
  for_each_residue(g, q, v, [&](std::int64_t gy,
                                const std::vector<std::int64_t>& y) {
    acc.add(e(dot_mod(v, y, q)) * K[static_cast<std::size_t>(gy)]);
  });
  return acc.value();
}

MultiplicativityCheck check_multiplicativity(const CubicPolynomial& g,
                                             std::int64_t r, std::int64_t s,
                                             std::int64_t u,
                                             const std::vector<std::int64_t>& v) {
  if (r < 1 || s < 1) throw std::domain_error("moduli below 1");
  if (gcd64(r, s) != 1)
    throw std::domain_error("multiplicativity needs coprime moduli");
  std::int64_t rbar, sbar;
  ext_gcd(r, s, rbar, sbar);  // r*rbar + s*sbar = 1
  cplx lhs = complete_S(g, u, r * s, v);

  auto scaled = [&](const std::vector<std::int64_t>& vv, std::int64_t f,
                    std::int64_t q) {
    std::vector<std::int64_t> out(vv.size());
    for (std::size_t i = 0; i < vv.size(); ++i)
      out[i] = mod_reduce(vv[i] * mod_reduce(f, q), q);
    return out;
  };
  std::int64_t rb_s = mod_reduce(rbar, s);
  std::int64_t sb_r = mod_reduce(sbar, r);
  std::int64_t u_rb2 = mod_reduce(mod_reduce(u, s) * rb_s % s * rb_s, s);
  std::int64_t u_sb2 = mod_reduce(mod_reduce(u, r) * sb_r % r * sb_r, r);
  cplx rhs = complete_S(g, u_rb2, s, scaled(v, rb_s, s)) *
             complete_S(g, u_sb2, r, scaled(v, sb_r, r));
  MultiplicativityCheck out;
  out.residual = std::abs(lhs - rhs);
  out.scale = std::max(std::abs(lhs), std::abs(rhs));
  return out;
}

Int hessian_kernel_count_enumerated(const CubicPolynomial& g,
                                    const std::vector<Int>& x,
                                    std::int64_t d) {
  const int n = g.dimension();
  Int value;
  std::vector<Int> grad;
  std::vector<std::vector<Int>> hess;
  g.gradient_hessian(x, value, grad, hess);
  std::vector<std::vector<std::int64_t>> H(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H[i][j] = to_i64(hess[i][j] % d);
  std::int64_t count = 0;
  std::vector<std::int64_t> y(n, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s = (s + H[i][j] * y[j]) % d;
      if (mod_reduce(s, d) != 0) ok = false;
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && y[i] == d - 1) y[i++] = 0;
    if (i == n) break;
    ++y[i];
  }
  return Int(count);
}

Int hessian_kernel_count(const CubicPolynomial& g, const std::vector<Int>& x,
                         std::int64_t d) {
  if (d < 1) throw std::domain_error("modulus below 1");
  if (d == 1) return Int(1);
  const int n = g.dimension();
  if (std::pow(static_cast<double>(d), n) <= 1e6)
    return hessian_kernel_count_enumerated(g, x, d);
  Int value;
  std::vector<Int> grad;
  std::vector<std::vector<Int>> hess;
  g.gradient_hessian(x, value, grad, hess);
  auto diag = smith_diagonal(hess);
  // #ker = prod gcd(s_i, d) * d^(n - rank)
  Int count = 1;
  for (auto& s : diag) count *= gcd(s, Int(d));
  for (std::size_t i = diag.size(); i < static_cast<std::size_t>(n); ++i)
    count *= d;
  return count;
}

// ---------------------------------------------------------------------------
// Gauss-map image mod p
// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> canonical_projective(std::vector<std::int64_t> v,
                                               std::int64_t p) {
  for (auto& c : v) c = mod_reduce(c, p);
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) return v;  // zero vector stays zero
  std::int64_t inv = inv_mod(v[lead], p);
  for (auto& c : v) c = (c * inv) % p;
  return v;
}

}  // namespace

std::set<std::vector<std::int64_t>> gauss_image_mod_p(const CubicPolynomial& g0,
                                                      std::int64_t p) {
  if (!is_prime64(p) || p > 31)
    throw std::domain_error("gauss image needs a prime p <= 31");
  const int n = g0.dimension();
  if (n > 4) throw std::domain_error("gauss image limited to n <= 4");
  if (!g0.is_homogeneous(3) && !g0.is_zero())
    throw std::domain_error("gauss image needs a homogeneous cubic");
  std::set<std::vector<std::int64_t>> image;
  std::vector<std::int64_t> x(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && x[i] == p - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    if (g0.evaluate_mod(x.data(), p) != 0) continue;
    auto grad = g0.gradient_mod(x.data(), p);
    bool zero = true;
    for (auto c : grad)
      if (c % p != 0) zero = false;
    if (zero) continue;
    image.insert(canonical_projective(grad, p));
  }
  return image;
}

bool gauss_image_contains(const std::set<std::vector<std::int64_t>>& image,
                          const std::vector<std::int64_t>& v, std::int64_t p) {
  auto c = canonical_projective(v, p);
  bool zero = true;
  for (auto e : c)
    if (e != 0) zero = false;
  if (zero) return true;  // dual form vanishes at 0 trivially
  return image.count(c) > 0;
}

// ---------------------------------------------------------------------------
// Prime bound report
// ---------------------------------------------------------------------------

PrimeBoundReport prime_bound_report(const CubicPolynomial& g,
                                    std::int64_t prime_limit,
                                    std::int64_t u_choice, int samples,
                                    std::uint64_t seed) {
  const int n = g.dimension();
  auto g0 = g.cubic_part();
  auto bad = bad_primes(g0, std::max<std::int64_t>(prime_limit, 2));
  PrimeBoundReport rep;
  SplitMix64 rng(seed);
  auto image_needed = n <= 4;
  for (std::int64_t p : primes_up_to(prime_limit)) {
    if (std::find(bad.begin(), bad.end(), p) != bad.end()) continue;
    rep.good_primes.push_back(p);
    PrimeBoundRow row;
    row.p = p;
    std::set<std::vector<std::int64_t>> image;
    if (image_needed && p <= 31) image = gauss_image_mod_p(g0, p);
    const double p_half = std::pow(static_cast<double>(p),
                                   (n + 1) / 2.0);
    const double p_sq_bound = std::pow(static_cast<double>(p), n + 2);
    std::int64_t u = mod_reduce(u_choice, p) != 0 ? u_choice : 1;
    for (int t = 0; t < samples; ++t) {
      std::vector<std::int64_t> v(n);
      for (auto& c : v) c = rng.uniform(0, p - 1);
      double s1 = std::abs(complete_S(g, u, p, v));
      row.ratio1 = std::max(row.ratio1, s1 / p_half);
      double s0 = std::abs(complete_S(g, 0, p, v));
      double factor = (image_needed && gauss_image_contains(image, v, p))
                          ? std::sqrt(static_cast<double>(p))
                          : 1.0;
      row.ratio2 = std::max(row.ratio2, s0 / (p_half * factor));
      if (std::pow(static_cast<double>(p) * p, n) <= kSumBudget) {
        double s4 = std::abs(complete_S(g, u, p * p, v));
        row.ratio4 = std::max(row.ratio4, s4 / p_sq_bound);
      }
    }
    rep.max_ratio1 = std::max(rep.max_ratio1, row.ratio1);
    rep.max_ratio2 = std::max(rep.max_ratio2, row.ratio2);
    rep.max_ratio4 = std::max(rep.max_ratio4, row.ratio4);
    rep.rows.push_back(row);
  }
  if (rep.good_primes.empty())
    throw std::domain_error("no good primes in range");
  return rep;
}

}  // namespace clab
