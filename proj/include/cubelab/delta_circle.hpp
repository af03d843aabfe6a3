#ifndef CUBELAB_DELTA_CIRCLE_HPP
#define CUBELAB_DELTA_CIRCLE_HPP

// Farey-dissection decomposition of the weighted count:
//   N_w(g;P) = sum_{q<=Q} int_{-1/qQ}^{1/qQ} S_0(q;z) dz + O(Q^-2 E_w),
// with E_w the twisted-sum majorant, plus the bound functionals
//   V = q P^-1 max(1, sqrt(|z| P^3)),   W = V + (c^2 d)^{1/3},
//   M1 = gcd(b1,N)^{1/2} / b1^{1/2},    M2 = c^n (1 + V/c)^{n-3/2},
//   M3 = V^n (1 + c^2 d / V^3)^{n/2},   M4 = q^{3n/8} min(1, (|z|P^3)^{-n/8})
// and the empirical comparison harness against |S_u(q;z)|.

#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/archimedean.hpp"
#include "cubelab/qdecomp.hpp"

namespace clab {

struct MainTermResult {
  double value = 0.0;
  double max_imag = 0.0;  // largest |Im| seen in any integrand sample
  std::int64_t evaluations = 0;
};

// sum_{q<=Q} int_{-1/(qQ)}^{1/(qQ)} S_0(q;z) dz by adaptive Simpson to
// relative tolerance 1e-4 per q.
MainTermResult main_term(const CubicPolynomial& g, const WeightFunction& w,
                         double P, double Q);

// E_w(g;P,Q) = sum_{q<=Q} sum_{|u|<=q/2} max_{1/2 <= qQ|z| <= 1} |S_u(q;z)|
//              / (1+|u|), the inner max sampled at `z_samples` points per
// sign.
double error_majorant(const CubicPolynomial& g, const WeightFunction& w,
                      double P, double Q, int z_samples = 9);

struct DeltaCheck {
  double n_w = 0.0;
  double main = 0.0;
  double majorant = 0.0;
  double constant = 0.0;  // |N_w - main| / (Q^-2 E_w)
};
DeltaCheck delta_decomposition_check(const CubicPolynomial& g,
                                     const WeightFunction& w, double P,
                                     double Q);

struct BoundFunctionals {
  std::int64_t q = 1;
  double z = 0.0;
  double P = 1.0;
  double H = 1.0;
  int n = 1;
  std::int64_t N_gcd = 1;
  QDecomposition dec;
  double V = 0.0;
  double W = 0.0;
  double M1 = 0.0;
  double M2 = 0.0;
  double M3 = 0.0;
  double M4 = 0.0;
};

// Requires q,P,H >= 1 and |z| <= 1/(q P^{3/2}).  N_gcd <= 0 selects the
// u = 0 convention N = b1 (M1 = 1).
BoundFunctionals bound_functionals(std::int64_t q, double z, double P, double H,
                                   int n, std::int64_t N_gcd);

struct Prop1Row {
  std::int64_t q = 0;
  double z = 0.0;
  std::int64_t u = 0;
  double V = 0.0, W = 0.0, M1 = 0.0, M2 = 0.0, M3 = 0.0;
  double lhs = 0.0;  // |S_u(q;z)|
  double rhs = 0.0;  // H^theta q^{1-n/2} P^{n+eps} (W^n M1 + min(W^n,M2,M3))
  double ratio = 0.0;
};

struct Prop1Report {
  std::vector<Prop1Row> rows;
  double max_ratio = 0.0;
};

// theta' = 1 and eps = 0.25 are fixed reporting parameters.
Prop1Report proposition1_report(const CubicPolynomial& g,
                                const WeightFunction& w, double P, double H,
                                std::int64_t q_max,
                                const std::vector<std::int64_t>& u_values,
                                int z_samples);

}  // namespace clab

#endif
