#ifndef CUBELAB_INTLINALG_HPP
#define CUBELAB_INTLINALG_HPP

// Small exact integer linear algebra: determinants, Smith normal form, and
// unimodular completions used for hyperplane sublattices.  Everything here
// runs on desk-scale matrices (n <= 8), so clarity wins over asymptotics.

#include <vector>

#include "cubelab/numeric.hpp"

namespace clab {

using IMat = std::vector<std::vector<Int>>;  // row-major

Int det_bareiss(IMat a);  // square

// Diagonal of the Smith normal form (non-negative, d_i | d_{i+1}); input may
// be any rectangular integer matrix.
std::vector<Int> smith_diagonal(IMat a);

// For a primitive vector m, returns an n x n unimodular matrix W with
// m^T W = (1, 0, ..., 0).  Columns 2..n of W form a basis of the lattice
// {y : m.y = 0}; column 1 satisfies m.W_1 = 1.
IMat unimodular_row_completion(const std::vector<Int>& m);

// Greedy pairwise size reduction of lattice basis columns (in place);
// reduces the anchor column against the basis as well when provided.
void size_reduce_columns(IMat& cols);

// det(E^T E) for an n x k column matrix E.
Int gram_determinant(const IMat& E_cols);

// Exact solve E*lambda = rhs for a full-column-rank integer matrix E
// (n x k): returns lambda as rationals via the normal equations.
std::vector<Rat> solve_least_exact(const IMat& E_cols,
                                   const std::vector<Rat>& rhs);

// Max absolute row sum of the rational pseudo-inverse (E^T E)^{-1} E^T;
// bounds |lambda|_inf <= norm * |x|_inf for x in the column span.
double pseudo_inverse_row_norm(const IMat& E_cols);

}  // namespace clab

#endif
