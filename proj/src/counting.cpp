#include "cubelab/counting.hpp"

#include <chrono>
#include <cmath>

#include "cubelab/parallel.hpp"

namespace clab {

namespace {

using i128 = __int128;

i128 eval_cubic_i128(std::int64_t c3, std::int64_t c2, std::int64_t c1,
                     std::int64_t c0, std::int64_t y) {
  i128 Y = y;
  return ((i128(c3) * Y + c2) * Y + c1) * Y + c0;
}

int sgn(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Exact floor of (a + s*sqrt(D)) / d for D >= 0, s in {-1,+1}, d != 0.
std::int64_t floor_shifted_root(std::int64_t a, int s, i128 D,
                                std::int64_t d) {
  if (d < 0) {  // (a + s*sqrt(D))/d = (-a + (-s)*sqrt(D))/(-d)
    a = -a;
    s = -s;
    d = -d;
  }
  double approx =
      (static_cast<double>(a) + s * std::sqrt(static_cast<double>(D))) /
      static_cast<double>(d);
  auto k = static_cast<std::int64_t>(std::floor(approx)) - 2;
  // le(k) <=> k*d - a <= s*sqrt(D); monotone decreasing in k.
  auto le = [&](std::int64_t kk) {
    i128 lhs = i128(kk) * d - a;
    if (s > 0) return lhs <= 0 || lhs * lhs <= D;
    return lhs <= 0 && lhs * lhs >= D;
  };
  while (!le(k)) --k;
  while (le(k + 1)) ++k;
  return k;
}

void bisect_monotone(std::int64_t c3, std::int64_t c2, std::int64_t c1,
                     std::int64_t c0, std::int64_t a, std::int64_t b,
                     std::vector<std::int64_t>& out) {
  if (a > b) return;
  i128 fa = eval_cubic_i128(c3, c2, c1, c0, a);
  i128 fb = eval_cubic_i128(c3, c2, c1, c0, b);
  if (fa == 0) out.push_back(a);
  if (fb == 0 && b != a) out.push_back(b);
  if (sgn(fa) * sgn(fb) >= 0) return;
  while (b - a > 1) {
    std::int64_t m = a + (b - a) / 2;
    i128 fm = eval_cubic_i128(c3, c2, c1, c0, m);
    if (fm == 0) {
      out.push_back(m);
      return;
    }
    if (sgn(fm) == sgn(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
}

}  // namespace

UnivariateRoots integer_roots_cubic(std::int64_t c3, std::int64_t c2,
                                    std::int64_t c1, std::int64_t c0,
                                    std::int64_t lo, std::int64_t hi) {
  UnivariateRoots r;
  if (lo > hi) return r;
  if (c3 == 0 && c2 == 0 && c1 == 0) {
    if (c0 == 0) r.all_roots = true;
    return r;
  }
  if (c3 == 0 && c2 == 0) {
    if (c0 % c1 == 0) {
      std::int64_t y = -c0 / c1;
      if (y >= lo && y <= hi) r.roots.push_back(y);
    }
    return r;
  }
  if (c3 == 0) {
    i128 D = i128(c1) * c1 - i128(4) * c2 * c0;
    if (D < 0) return r;
    std::int64_t lo1 = floor_shifted_root(-c1, -1, D, 2 * c2);
    std::int64_t hi1 = floor_shifted_root(-c1, +1, D, 2 * c2);
    for (std::int64_t y : {lo1, lo1 + 1, hi1, hi1 + 1})
      if (y >= lo && y <= hi &&
          eval_cubic_i128(0, c2, c1, c0, y) == 0)
        r.roots.push_back(y);
  } else {
    // critical points of the cubic: roots of 3 c3 y^2 + 2 c2 y + c1
    i128 D2 = i128(c2) * c2 - i128(3) * c3 * c1;
    if (D2 <= 0) {
      bisect_monotone(c3, c2, c1, c0, lo, hi, r.roots);
    } else {
      std::int64_t t1f = floor_shifted_root(-c2, (c3 > 0 ? -1 : +1), D2, 3 * c3);
      std::int64_t t2f = floor_shifted_root(-c2, (c3 > 0 ? +1 : -1), D2, 3 * c3);
      if (t1f > t2f) std::swap(t1f, t2f);
      // real-monotone integer segments: [lo, t1f], [t1f+1, t2f], [t2f+1, hi]
      bisect_monotone(c3, c2, c1, c0, lo, std::min(hi, t1f), r.roots);
      bisect_monotone(c3, c2, c1, c0, std::max(lo, t1f + 1),
                      std::min(hi, t2f), r.roots);
      bisect_monotone(c3, c2, c1, c0, std::max(lo, t2f + 1), hi, r.roots);
    }
  }
  std::sort(r.roots.begin(), r.roots.end());
  r.roots.erase(std::unique(r.roots.begin(), r.roots.end()), r.roots.end());
  return r;
}

// ---------------------------------------------------------------------------
// Projective counting
// ---------------------------------------------------------------------------

namespace {

std::int64_t gcd_vec(const std::int64_t* x, int n) {
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) g = gcd64(g, std::llabs(x[i]));
  return g;
}

}  // namespace

ProjectiveCount count_projective(const CubicPolynomial& C, std::int64_t P) {
  if (P < 1) throw std::domain_error("P must be >= 1");
  if (!C.is_homogeneous(3) || C.is_zero())
    throw std::domain_error("projective counting needs a homogeneous cubic");
  const int n = C.dimension();
  if (n < 2) throw std::domain_error("projective counting needs n >= 2");
  auto t0 = std::chrono::steady_clock::now();

  if (!C.fits_i64(static_cast<double>(P)))
    throw CountBudgetError("coefficients too large for the fast counter");

  double est = 0;
  for (int lead = 0; lead < n - 1; ++lead)
    est += static_cast<double>(P) *
           std::pow(2.0 * static_cast<double>(P) + 1.0, n - 2 - lead);
  if (est > kEnumerationBudget)
    throw CountBudgetError("estimated enumeration above budget");

  const auto coeffs = C.coefficients_in(n - 1);
  std::int64_t total = 0;

  // Point with all of x_1..x_{n-1} zero: representative (0,...,0,1).
  {
    std::vector<Int> e(n, Int(0));
    e[n - 1] = 1;
    if (C.evaluate(e) == 0) ++total;
  }

  // `lead` is the first nonzero coordinate (positive); coordinates after it
  // range over the full box, and x_n comes from exact root extraction.
  for (int lead = 0; lead < n - 1; ++lead) {
    const int free_axes = n - 2 - lead;  // coordinates between lead and x_n
    std::int64_t inner = 1;
    for (int i = 0; i < free_axes; ++i) inner *= (2 * P + 1);
    total += parallel_sum_i64(P * inner, [&](std::int64_t b, std::int64_t e) {
      std::vector<std::int64_t> x(n, 0);
      std::int64_t cnt = 0;
      for (std::int64_t idx = b; idx < e; ++idx) {
        std::int64_t rest = idx;
        x.assign(n, 0);
        x[lead] = 1 + rest % P;
        rest /= P;
        for (int i = 0; i < free_axes; ++i) {
          x[lead + 1 + i] = rest % (2 * P + 1) - P;
          rest /= (2 * P + 1);
        }
        std::int64_t a3 = coeffs[3].evaluate_i64(x.data());
        std::int64_t a2 = coeffs[2].evaluate_i64(x.data());
        std::int64_t a1 = coeffs[1].evaluate_i64(x.data());
        std::int64_t a0 = coeffs[0].evaluate_i64(x.data());
        auto roots = integer_roots_cubic(a3, a2, a1, a0, -P, P);
        if (roots.all_roots) {
          for (std::int64_t y = -P; y <= P; ++y) {
            x[n - 1] = y;
            if (gcd_vec(x.data(), n) == 1) ++cnt;
          }
        } else {
          for (std::int64_t y : roots.roots) {
            x[n - 1] = y;
            if (gcd_vec(x.data(), n) == 1) ++cnt;
          }
        }
      }
      return cnt;
    });
  }

  auto t1 = std::chrono::steady_clock::now();
  return {total, std::chrono::duration<double>(t1 - t0).count()};
}

// ---------------------------------------------------------------------------
// Weighted affine counting
// ---------------------------------------------------------------------------

WeightedCount count_affine_weighted(const CubicPolynomial& g,
                                    const WeightFunction& w, double P) {
  if (P < 1) throw std::domain_error("P must be >= 1");
  const int n = g.dimension();
  if (w.n != n) throw std::invalid_argument("weight dimension mismatch");
  auto t0 = std::chrono::steady_clock::now();

  const auto B = static_cast<std::int64_t>(std::floor(w.support_radius * P));
  const double side = 2.0 * static_cast<double>(B) + 1.0;
  if (!g.fits_i64(static_cast<double>(B)))
    throw CountBudgetError("coefficients too large for the fast counter");

  double value = 0.0;
  if (n <= 3) {
    if (std::pow(side, n) > kEnumerationBudget)
      throw CountBudgetError("estimated enumeration above budget");
    std::int64_t outer = 1;
    for (int i = 0; i < n - 1; ++i) outer *= (2 * B + 1);
    value = parallel_sum(outer, [&](std::int64_t b, std::int64_t e) {
      KahanSum acc;
      std::vector<std::int64_t> x(n, 0);
      std::vector<double> xs(n, 0.0);
      for (std::int64_t idx = b; idx < e; ++idx) {
        std::int64_t rest = idx;
        for (int i = 0; i + 1 < n; ++i) {
          x[i] = rest % (2 * B + 1) - B;
          rest /= (2 * B + 1);
        }
        for (std::int64_t y = -B; y <= B; ++y) {
          x[n - 1] = y;
          if (g.evaluate_i64(x.data()) != 0) continue;
          for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(x[i]) / P;
          acc.add(w.eval(xs.data()));
        }
      }
      return acc.value();
    });
  } else {
    if (std::pow(side, n - 1) > kEnumerationBudget)
      throw CountBudgetError("estimated enumeration above budget");
    const auto coeffs = g.coefficients_in(n - 1);
    std::int64_t outer = 1;
    for (int i = 0; i < n - 1; ++i) outer *= (2 * B + 1);
    value = parallel_sum(outer, [&](std::int64_t b, std::int64_t e) {
      KahanSum acc;
      std::vector<std::int64_t> x(n, 0);
      std::vector<double> xs(n, 0.0);
      for (std::int64_t idx = b; idx < e; ++idx) {
        std::int64_t rest = idx;
        for (int i = 0; i + 1 < n; ++i) {
          x[i] = rest % (2 * B + 1) - B;
          rest /= (2 * B + 1);
        }
        std::int64_t a3 = coeffs[3].evaluate_i64(x.data());
        std::int64_t a2 = coeffs[2].evaluate_i64(x.data());
        std::int64_t a1 = coeffs[1].evaluate_i64(x.data());
        std::int64_t a0 = coeffs[0].evaluate_i64(x.data());
        auto roots = integer_roots_cubic(a3, a2, a1, a0, -B, B);
        auto add_point = [&](std::int64_t y) {
          x[n - 1] = y;
          for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(x[i]) / P;
          acc.add(w.eval(xs.data()));
        };
        if (roots.all_roots) {
          for (std::int64_t y = -B; y <= B; ++y) add_point(y);
        } else {
          for (std::int64_t y : roots.roots) add_point(y);
        }
      }
      return acc.value();
    });
  }

  auto t1 = std::chrono::steady_clock::now();
  return {value, std::chrono::duration<double>(t1 - t0).count()};
}

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& samples) {
  std::size_t m = 0;
  for (auto& [p, c] : samples)
    if (c > 0) ++m;
  if (m < 3)
    throw std::domain_error("growth fit needs >= 3 positive samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [p, c] : samples) {
    if (c <= 0) continue;
    double x = std::log(p), y = std::log(c);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  GrowthFit fit;
  fit.exponent = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy * sxx - sx * sxy) / denom;
  for (auto& [p, c] : samples) {
    if (c <= 0) continue;
    double r = std::abs(std::log(c) - (fit.intercept + fit.exponent * std::log(p)));
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

std::int64_t projective_space_point_count(int k, std::int64_t P) {
  if (k < 1 || P < 1) throw std::domain_error("bad arguments");
  if (std::pow(2.0 * static_cast<double>(P) + 1.0, k) > kEnumerationBudget)
    throw CountBudgetError("estimated enumeration above budget");
  std::int64_t total = 0;
  std::vector<std::int64_t> x(k, 0);
  std::int64_t outer = 1;
  for (int i = 0; i < k; ++i) outer *= (2 * P + 1);
  for (std::int64_t idx = 0; idx < outer; ++idx) {
    std::int64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      x[i] = rest % (2 * P + 1) - P;
      rest /= (2 * P + 1);
    }
    int lead = -1;
    for (int i = 0; i < k; ++i)
      if (x[i] != 0) {
        lead = i;
        break;
      }
    if (lead < 0 || x[lead] < 0) continue;
    if (gcd_vec(x.data(), k) == 1) ++total;
  }
  return total;
}

}  // namespace clab
