#ifndef CUBELAB_WEYL_DIFF_HPP
#define CUBELAB_WEYL_DIFF_HPP

// Weyl differencing: the double difference
//   G(w,x;y) = g(w+x+y) - g(w+y) - g(x+y) + g(y),
// its exact linearization G = sum_i y_i B_i(w;x) + Gamma(w,x) through the
// integer tensor of 6*g0 (equivalently G = 6 sum y_i B'_i with B' the
// bilinear forms of g0 itself), the mod-p solution count of the bilinear
// system B_i(x;y) = 0, the Z lattice-shrinking parameter, and the
// square-root-cancellation bound evaluator built from it.

#include <cstdint>
#include <vector>

#include "cubelab/poly.hpp"

namespace clab {

struct DifferencedValue {
  Int G;      // g(w+x+y) - g(w+y) - g(x+y) + g(y), exact
  Int Gamma;  // G - sum_i y_i * B_i(w;x) with B from the 6*g0 tensor
};

// Computes G and Gamma and verifies that Gamma is unchanged at y and y+e_1.
DifferencedValue difference_form(const CubicPolynomial& g,
                                 const std::vector<Int>& w,
                                 const std::vector<Int>& x,
                                 const std::vector<Int>& y);

// #{(x,y) in F_p^{2n} : B_i(x;y) = 0 for all i}, computed by ranking the
// n x n matrix M(x)_{ij} = sum_k c_ijk x_k over each x (count = p^{n-rank}).
std::int64_t bilinear_variety_count(const CubicPolynomial& g0, std::int64_t p);

struct WeylBoundInput {
  std::int64_t q = 1;
  double z = 0.0;
  double P = 1.0;
  double coefficient_sum = 1.0;  // c = sum |c_ijk| of the 6*g0 tensor
  double epsilon = 0.0;

  void validate() const;  // q <= P^{3/2}, |z| <= 1/(q P^{3/2}), c > 0
};

// Z = (1/2) min{1, 1/(12 c q |z| P^2), P/(2q), max(q/(6 c P^2), q |z| P)}^{1/2}
double weyl_parameter_Z(const WeylBoundInput& in);

// ||g0||^{n/8} q^{1 - n/8} P^{n + eps} min{1, (|z| P^3)^{-n/8}}
double weyl_bound_rhs(const WeylBoundInput& in, double g0_norm, int n);

double tensor_coefficient_sum(const CubicPolynomial& g0);

}  // namespace clab

#endif
