#ifndef CUBELAB_ARCHIMEDEAN_HPP
#define CUBELAB_ARCHIMEDEAN_HPP

// The weighted cubic exponential sum T(alpha) = sum w(x/P) e(alpha g(x)),
// its twisted numerator average S_u(q;z), the oscillatory integral
// I(z;beta) = int w(x/P) e(z g(x) - beta.x) dx, the Poisson reconstruction
// of S_u(q;z) from complete sums, and the exact DFT-grid orthogonality
// counter that re-derives N_w(g;P) from T alone.

#include <complex>
#include <cstdint>
#include <vector>

#include "cubelab/complete_sums.hpp"
#include "cubelab/poly.hpp"
#include "cubelab/weights.hpp"

namespace clab {

cplx weyl_sum(const CubicPolynomial& g, const WeightFunction& w, double P,
              double alpha);

// S_u(q;z) = sum_{gcd(a,q)=1} e_q(abar u) T(a/q + z).
cplx minor_arc_sum(const CubicPolynomial& g, const WeightFunction& w, double P,
                   std::int64_t u, std::int64_t q, double z);

// Caches the lattice points of the support box with their weights and exact
// g-values; repeated evaluations of T and S_u then cost one pass over the
// cache.  The rational part a/q of the phase is evaluated through a root-of-
// unity table, only the analytic part z*g(x) goes through floating exp.
class WeylEvaluator {
 public:
  WeylEvaluator(const CubicPolynomial& g, const WeightFunction& w, double P);

  cplx T(double alpha) const;
  cplx S(std::int64_t u, std::int64_t q, double z) const;
  double weight_mass() const;  // T(0)

 private:
  std::vector<std::int64_t> gvals_;
  std::vector<double> wvals_;
};

struct OscIntegral {
  cplx value{0.0, 0.0};
  double error_estimate = 0.0;
  int panels_per_axis = 0;
  bool converged = true;
};

// Tensor-product Gauss-Legendre over the support box, 32 nodes per panel per
// axis; the panel count starts at an oscillation-aware base and doubles (at
// most 4 times) until two successive levels agree.
OscIntegral oscillatory_integral(const CubicPolynomial& g,
                                 const WeightFunction& w, double P, double z,
                                 const std::vector<double>& beta,
                                 double rel_tol = 1e-6);

struct PoissonCheck {
  double residual = 0.0;
  double s_abs = 0.0;        // |S_u(q;z)| computed directly
  cplx direct{0.0, 0.0};
  cplx reconstructed{0.0, 0.0};
  std::int64_t truncation = 0;
  bool truncation_warning = false;
};

// |S_u(q;z) - q^{-n} sum_{|v|<=truncation} S_u(q;v) I(z; v/q)|.
// truncation <= 0 selects the default max(8, 4*ceil(4 q V / P)).
PoissonCheck poisson_residual(const CubicPolynomial& g, const WeightFunction& w,
                              double P, std::int64_t u, std::int64_t q,
                              double z, std::int64_t truncation);

struct OrthogonalityCount {
  double value = 0.0;
  std::int64_t grid = 0;  // M = 2B + 1
};

// (1/M) sum_{j<M} T(j/M) with M = 2B+1 and B an exact bound for |g| on the
// support box; equals N_w(g;P) exactly because the restricted T is a
// trigonometric polynomial with integer frequencies in [-B, B].
OrthogonalityCount orthogonality_count(const CubicPolynomial& g,
                                       const WeightFunction& w, double P,
                                       std::int64_t grid_override = 0);

}  // namespace clab

#endif
