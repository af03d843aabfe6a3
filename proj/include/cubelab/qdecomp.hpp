#ifndef CUBELAB_QDECOMP_HPP
#define CUBELAB_QDECOMP_HPP

// Arithmetic factorization q = b1 * b2^2 * c^2 * d where b1 collects primes
// dividing q exactly once, b2 primes dividing exactly twice, d primes whose
// exponent is odd and >= 3; c carries the rest.  d divides c, gcd(b1 b2^2,
// c^2 d) = 1, and a minimal divisor d0 | d makes c/(d d0) square-full.
// Dyadic census of the available moduli and the gcd-sum estimate.

#include <cstdint>
#include <vector>

namespace clab {

struct QDecomposition {
  std::int64_t q = 1;
  std::int64_t b1 = 1;
  std::int64_t b2 = 1;
  std::int64_t c = 1;
  std::int64_t d = 1;
  std::int64_t d0 = 1;
};

std::vector<std::pair<std::int64_t, int>> factorize64(std::int64_t n);

QDecomposition decompose(std::int64_t q);  // q in [1, 10^12]

bool is_square_full(std::int64_t n);  // 1 counts as square-full

struct CensusResult {
  std::int64_t count = 0;
  double bound_ratio = 0.0;  // count / (R0 R1 sqrt(R2 R3))
};

// Counts q = b1 b2^2 c^2 d with q in (R, R_hi], b1 in (R0, R0_hi], ... for
// the dyadic boxes (default hi = 2*lo).  Lower endpoints >= 1/2.
CensusResult dyadic_census(double R, double R0, double R1, double R2, double R3,
                           double hi_factor = 2.0);

struct CensusSweep {
  double max_ratio = 0.0;
  std::int64_t cells = 0;
  double argmax_R = 0, argmax_R0 = 0, argmax_R1 = 0, argmax_R2 = 0,
         argmax_R3 = 0;
};

// Max bound ratio over every dyadic cell with 2R <= two_R_max.
CensusSweep census_sweep(std::int64_t two_R_max);

struct GcdSum {
  std::int64_t sum = 0;
  double ratio = 0.0;  // sum / (tau(N) * B)
};

GcdSum gcd_sum(std::int64_t B, std::int64_t N);

}  // namespace clab

#endif
