#ifndef CUBELAB_COUNTING_HPP
#define CUBELAB_COUNTING_HPP

// Reference point counters.  Projective: primitive integer representatives
// with first nonzero coordinate positive and max|x_i| <= P.  Affine
// weighted: N_w(g;P) = sum over integer zeros of g of w(x/P).  Dimensions
// n <= 2 enumerate the full box; higher dimensions enumerate all but the
// last coordinate and extract integer roots of the residual univariate
// polynomial exactly.

#include <cstdint>
#include <utility>
#include <vector>

#include "cubelab/poly.hpp"
#include "cubelab/weights.hpp"

namespace clab {

struct CountBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kEnumerationBudget = 1e10;

struct ProjectiveCount {
  std::int64_t value = 0;
  double seconds = 0.0;
};

struct WeightedCount {
  double value = 0.0;
  double seconds = 0.0;
};

ProjectiveCount count_projective(const CubicPolynomial& C, std::int64_t P);

WeightedCount count_affine_weighted(const CubicPolynomial& g,
                                    const WeightFunction& w, double P);

// Exact integer roots of c3 y^3 + c2 y^2 + c1 y + c0 in [lo, hi].  When the
// polynomial vanishes identically, `all_roots` is set instead.
struct UnivariateRoots {
  bool all_roots = false;
  std::vector<std::int64_t> roots;  // sorted, distinct
};
UnivariateRoots integer_roots_cubic(std::int64_t c3, std::int64_t c2,
                                    std::int64_t c1, std::int64_t c0,
                                    std::int64_t lo, std::int64_t hi);

struct GrowthFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Least squares of log(count) against log(P); needs >= 3 samples with
// positive counts.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& samples);

// #P^{k-1}(Q, height <= P): primitive k-tuples with max|.| <= P and first
// nonzero coordinate positive.  Independent oracle for the lower-bound
// family experiments.
std::int64_t projective_space_point_count(int k, std::int64_t P);

}  // namespace clab

#endif
