#include "cubelab/qdecomp.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cubelab/numeric.hpp"

namespace clab {

std::vector<std::pair<std::int64_t, int>> factorize64(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorization needs n >= 1");
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

QDecomposition decompose(std::int64_t q) {
  if (q < 1) throw std::domain_error("q must be >= 1");
  if (q > 1'000'000'000'000LL)
    throw std::domain_error("q above the 10^12 factorization cap");
  QDecomposition out;
  out.q = q;
  std::int64_t csq = q;
  for (auto [p, e] : factorize64(q)) {
    if (e == 1) {
      out.b1 *= p;
      csq /= p;
    } else if (e == 2) {
      out.b2 *= p;
      csq /= p * p;
    } else if (e % 2 == 1) {
      out.d *= p;
      csq /= p;
    }
  }
  std::int64_t c = isqrt64(csq);
  if (c * c != csq) throw std::logic_error("residual factor not a square");
  out.c = c;
  // minimal d0 | d with c/(d*d0) square-full: take primes p | d with
  // ord_p(c/d) = 1
  std::int64_t cd = out.c / out.d;
  for (auto [p, e] : factorize64(out.d)) {
    (void)e;
    int ord = 0;
    std::int64_t t = cd;
    while (t % p == 0) {
      t /= p;
      ++ord;
    }
    if (ord == 1) out.d0 *= p;
  }
  return out;
}

bool is_square_full(std::int64_t n) {
  for (auto [p, e] : factorize64(n))
    if (e < 2) return false;
  return true;
}

CensusResult dyadic_census(double R, double R0, double R1, double R2, double R3,
                           double hi_factor) {
  if (R < 0.5 || R0 < 0.5 || R1 < 0.5 || R2 < 0.5 || R3 < 0.5)
    throw std::domain_error("dyadic endpoints start at 1/2");
  CensusResult out;
  auto inside = [hi_factor](std::int64_t v, double lo) {
    return static_cast<double>(v) > lo &&
           static_cast<double>(v) <= hi_factor * lo;
  };
  auto qlo = static_cast<std::int64_t>(std::floor(R));
  auto qhi = static_cast<std::int64_t>(std::ceil(hi_factor * R));
  if (static_cast<double>(qhi) - static_cast<double>(qlo) > 2e8)
    throw std::domain_error("census budget exceeded");
  for (std::int64_t q = std::max<std::int64_t>(1, qlo); q <= qhi; ++q) {
    if (!inside(q, R)) continue;
    auto dec = decompose(q);
    if (inside(dec.b1, R0) && inside(dec.b2, R1) && inside(dec.c, R2) &&
        inside(dec.d, R3))
      ++out.count;
  }
  out.bound_ratio =
      static_cast<double>(out.count) / (R0 * R1 * std::sqrt(R2 * R3));
  return out;
}

CensusSweep census_sweep(std::int64_t two_R_max) {
  if (two_R_max < 1) throw std::domain_error("empty sweep");
  CensusSweep sweep;
  // Decompose every q <= two_R_max once and bucket by the dyadic cell of
  // (q, b1, b2, c, d); v lands in (lo, 2lo] with lo the smallest power-of-two
  // multiple of 1/2 satisfying v <= 2lo.
  auto lower_endpoint = [](std::int64_t v) {
    double lo = 0.5;
    while (2.0 * lo < static_cast<double>(v)) lo *= 2.0;
    return lo;
  };
  struct Key {
    double r, r0, r1, r2, r3;
    bool operator<(const Key& o) const {
      if (r != o.r) return r < o.r;
      if (r0 != o.r0) return r0 < o.r0;
      if (r1 != o.r1) return r1 < o.r1;
      if (r2 != o.r2) return r2 < o.r2;
      return r3 < o.r3;
    }
  };
  std::map<Key, std::int64_t> cells;
  for (std::int64_t q = 1; q <= two_R_max; ++q) {
    auto dec = decompose(q);
    Key k{lower_endpoint(q), lower_endpoint(dec.b1), lower_endpoint(dec.b2),
          lower_endpoint(dec.c), lower_endpoint(dec.d)};
    ++cells[k];
  }
  for (auto& [k, count] : cells) {
    if (2.0 * k.r > static_cast<double>(two_R_max)) continue;
    double ratio =
        static_cast<double>(count) / (k.r0 * k.r1 * std::sqrt(k.r2 * k.r3));
    ++sweep.cells;
    if (ratio > sweep.max_ratio) {
      sweep.max_ratio = ratio;
      sweep.argmax_R = k.r;
      sweep.argmax_R0 = k.r0;
      sweep.argmax_R1 = k.r1;
      sweep.argmax_R2 = k.r2;
      sweep.argmax_R3 = k.r3;
    }
  }
  return sweep;
}

GcdSum gcd_sum(std::int64_t B, std::int64_t N) {
  if (B < 1 || N < 1) throw std::domain_error("gcd sum needs B, N >= 1");
  GcdSum out;
  for (std::int64_t b = 1; b <= B; ++b) out.sum += gcd64(b, N);
  std::int64_t tau = 1;
  for (auto [p, e] : factorize64(N)) tau *= (e + 1);
  out.ratio = static_cast<double>(out.sum) /
              (static_cast<double>(tau) * static_cast<double>(B));
  return out;
}

}  // namespace clab
