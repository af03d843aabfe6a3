#ifndef CUBELAB_NUMERIC_HPP
#define CUBELAB_NUMERIC_HPP

// Arbitrary-precision integers/rationals and small exact helpers shared by
// every module.  All coefficient arithmetic is exact; doubles appear only in
// analytic quantities (weights, exponential sums, quadrature).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace clab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

// Throws if v does not fit in int64.
inline std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

inline std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Floor of sqrt for non-negative 64-bit integers, exact.
inline std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) throw std::domain_error("isqrt of negative");
  if (v == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                            std::int64_t& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Inverse of a mod q (q >= 1, gcd(a,q) = 1), result in [0, q).
inline std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
  if (q == 1) return 0;
  std::int64_t x, y;
  a %= q;
  if (a < 0) a += q;
  std::int64_t g = ext_gcd(a, q, x, y);
  if (g != 1) throw std::domain_error("inv_mod: arguments not coprime");
  x %= q;
  if (x < 0) x += q;
  return x;
}

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t q) {
  a %= q;
  if (a < 0) a += q;
  return a;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= limit; ++p)
    if (is_prime64(p)) out.push_back(p);
  return out;
}

}  // namespace clab

#endif
