#ifndef CUBELAB_SLICER_HPP
#define CUBELAB_SLICER_HPP

// Hyperplane-section induction step: estimate the projective dimension of
// the singular locus from mod-p point counts, search for a primitive vector
// m whose hyperplane section drops that dimension by one, build an integer
// basis of the rank-(n-1) lattice {y : m.y = 0}, and restrict (g, w) to the
// affine slices m.x = k, giving the (n-1)-variable polynomial
// h(u) = g(t + sum u_i e_i) and the composed weight.  The counting identity
// N_w(g;P) = sum_k N_{w_k}(h_k;P) is checked exactly.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubelab/counting.hpp"
#include "cubelab/intlinalg.hpp"
#include "cubelab/poly.hpp"
#include "cubelab/weights.hpp"

namespace clab {

struct AmbiguousDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Projective dimension of {grad g0 = 0} from exhaustive mod-p counts:
// -1 when no nonzero root exists for any prime; otherwise the unique s with
// count in [p^s/2, 4 p^s] for every prime.  Disagreement raises.
int singular_dimension_estimate(const CubicPolynomial& g0,
                                const std::vector<std::int64_t>& primes);

struct LatticeBasis {
  std::vector<std::vector<Int>> columns;  // n x (n-1), basis of m-perp
  std::vector<Int> anchor;                // column with m.anchor = 1
  Int gram_det = 0;                       // det(E^T E) = |m|_2^2
  std::int64_t max_entry = 0;
};

LatticeBasis hyperplane_lattice_basis(const std::vector<Int>& m);

// g0 restricted to the hyperplane m.x = 0 in the basis coordinates.
CubicPolynomial restrict_to_hyperplane(const CubicPolynomial& g0,
                                       const std::vector<Int>& m);

// Lexicographically least primitive m with |m|_inf <= bound whose section
// drops the singular dimension by exactly one.
std::vector<Int> find_slicing_vector(const CubicPolynomial& g0,
                                     std::int64_t bound,
                                     const std::vector<std::int64_t>& primes);

struct SliceData {
  bool empty = false;            // no admissible anchor: the slice count is 0
  std::vector<Int> m;
  std::int64_t k = 0;
  std::vector<Int> anchor_t;     // m.t = k, |t| <= |k| + |m|_1, lex-least
  LatticeBasis basis;
  CubicPolynomial h;             // g(t + sum u_i e_i)
  WeightFunction w0;             // u -> w(t/P + sum u_i e_i)
  double h_norm_ratio = 0.0;     // ||h||_P / max(||g||_P, 1)
};

SliceData slice(const CubicPolynomial& g, const WeightFunction& w,
                const std::vector<Int>& m, std::int64_t k, double P);

// Lex-least integer t with m.t = k and |t|_inf <= bound, if any.
std::optional<std::vector<Int>> find_anchor_lex(const std::vector<Int>& m,
                                                std::int64_t k,
                                                std::int64_t bound);

struct SliceIdentity {
  double lhs = 0.0;   // N_w(g;P)
  double rhs = 0.0;   // sum over k of N_{w0_k}(h_k;P)
  double residual = 0.0;
  std::int64_t k_min = 0, k_max = 0;
};

SliceIdentity verify_slice_identity(const CubicPolynomial& g,
                                    const WeightFunction& w, double P,
                                    const std::vector<Int>& m);

}  // namespace clab

#endif
