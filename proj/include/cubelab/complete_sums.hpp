#ifndef CUBELAB_COMPLETE_SUMS_HPP
#define CUBELAB_COMPLETE_SUMS_HPP

// Complete exponential sums modulo q:
//   T(a,q;v) = sum_{y mod q} e_q(a g(y) + v.y)
//   S_u(q;v) = sum_{gcd(a,q)=1} e_q(abar u) T(a,q;v)
// evaluated by exhaustive enumeration with precomputed roots of unity, their
// twisted multiplicativity, the Hessian-kernel counts M_d, and the mod-p
// Gauss-map image standing in for divisibility by the dual form.

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "cubelab/poly.hpp"
#include "cubelab/rng.hpp"

namespace clab {

using cplx = std::complex<double>;

// e_q(k) = exp(2 pi i k / q) from a per-modulus table; identical values for
// identical (k mod q), which keeps floating results reproducible.
struct UnityTable {
  std::int64_t q = 1;
  std::vector<cplx> roots;

  explicit UnityTable(std::int64_t modulus);
  cplx operator()(std::int64_t k) const { return roots[mod_reduce(k, q)]; }
};

cplx complete_T(const CubicPolynomial& g, std::int64_t a, std::int64_t q,
                const std::vector<std::int64_t>& v);

cplx complete_S(const CubicPolynomial& g, std::int64_t u, std::int64_t q,
                const std::vector<std::int64_t>& v);

struct MultiplicativityCheck {
  double residual = 0.0;  // |S_u(rs;v) - S_{u rbar^2}(s; rbar v) S_{u sbar^2}(r; sbar v)|
  double scale = 0.0;     // max(|lhs|, |rhs|)
};
MultiplicativityCheck check_multiplicativity(const CubicPolynomial& g,
                                             std::int64_t r, std::int64_t s,
                                             std::int64_t u,
                                             const std::vector<std::int64_t>& v);

// #{y mod d : hessian(g)(x) y = 0 mod d}; enumeration for small d^n, Smith
// normal form otherwise.
Int hessian_kernel_count(const CubicPolynomial& g, const std::vector<Int>& x,
                         std::int64_t d);
Int hessian_kernel_count_enumerated(const CubicPolynomial& g,
                                    const std::vector<Int>& x, std::int64_t d);

// Mod-p image of the Gauss map: canonical projective representatives of
// grad g0(x) over points x != 0 with g0(x) = 0 and grad g0(x) != 0.
// Stands in for the vanishing locus of the dual form.
std::set<std::vector<std::int64_t>> gauss_image_mod_p(const CubicPolynomial& g0,
                                                      std::int64_t p);
// Membership test for arbitrary v (reduces to the canonical representative;
// v = 0 mod p counts as inside).
bool gauss_image_contains(const std::set<std::vector<std::int64_t>>& image,
                          const std::vector<std::int64_t>& v, std::int64_t p);

struct PrimeBoundRow {
  std::int64_t p = 0;
  double ratio1 = 0.0;  // max |S_u(p;v)| / p^{(n+1)/2} over sampled v, p∤u
  double ratio2 = 0.0;  // max |S_0(p;v)| / (p^{(n+1)/2} sqrt(gcd factor))
  double ratio4 = 0.0;  // max |S_u(p^2;v)| / p^{n+2}
};

struct PrimeBoundReport {
  std::vector<PrimeBoundRow> rows;
  double max_ratio1 = 0.0;
  double max_ratio2 = 0.0;
  double max_ratio4 = 0.0;
  std::vector<std::int64_t> good_primes;
};

PrimeBoundReport prime_bound_report(const CubicPolynomial& g,
                                    std::int64_t prime_limit,
                                    std::int64_t u_choice, int samples,
                                    std::uint64_t seed);

}  // namespace clab

#endif
