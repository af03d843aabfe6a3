#include "cubelab/intlinalg.hpp"

#include <algorithm>
#include <cmath>

namespace clab {

Int det_bareiss(IMat a) {
  const std::size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Int> smith_diagonal(IMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  std::size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // find a pivot with minimal nonzero absolute value
    std::size_t pi = r, pj = c;
    Int best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[r], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) {  // remainder smaller than pivot: swap up
          std::swap(a[r], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Int q = a[r][j] / a[r][c];
        for (std::size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
        if (a[r][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[r][c]));
    ++r;
    ++c;
  }
  // enforce divisibility chain
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0) std::swap(diag[i], diag[j]);
      if (diag[i] == 0 || diag[j] % diag[i] == 0) continue;
      Int g = gcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

IMat unimodular_row_completion(const std::vector<Int>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty vector");
  // W starts as identity; column operations reduce the row vector r = m^T W
  // to (g, 0, ..., 0) and g must be 1 for primitive m.
  IMat W(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) W[i][i] = 1;
  std::vector<Int> r = m;

  auto colop = [&](std::size_t dst, std::size_t src, const Int& q) {
    // column_dst -= q * column_src
    for (std::size_t i = 0; i < n; ++i) W[i][dst] -= q * W[i][src];
    r[dst] -= q * r[src];
  };
  auto colswap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(W[i][a], W[i][b]);
    std::swap(r[a], r[b]);
  };

  for (;;) {
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (r[j] != 0 && (piv == n || abs(r[j]) < abs(r[piv]))) piv = j;
    if (piv == n) throw std::invalid_argument("zero vector");
    bool others = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || r[j] == 0) continue;
      colop(j, piv, r[j] / r[piv]);
      if (r[j] != 0) others = true;
    }
    if (!others) {
      if (piv != 0) colswap(0, piv);
      break;
    }
  }
  if (r[0] < 0) {
    for (std::size_t i = 0; i < n; ++i) W[i][0] = -W[i][0];
    r[0] = -r[0];
  }
  if (r[0] != 1) throw std::invalid_argument("vector is not primitive");
  return W;
}

void size_reduce_columns(IMat& cols) {
  if (cols.empty()) return;
  const std::size_t n = cols.size();
  const std::size_t k = cols[0].size();
  auto dot = [&](std::size_t a, std::size_t b) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += cols[i][a] * cols[i][b];
    return s;
  };
  bool changed = true;
  int sweeps = 0;
  while (changed && sweeps++ < 32) {
    changed = false;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b) continue;
        Int bb = dot(b, b);
        if (bb == 0) continue;
        Int ab = dot(a, b);
        // nearest integer of ab/bb
        Int q = (2 * ab + bb) / (2 * bb);
        if (2 * ab < -bb) q = -((2 * (-ab) + bb) / (2 * bb));
        if (q == 0) continue;
        Int before = dot(a, a);
        for (std::size_t i = 0; i < n; ++i) cols[i][a] -= q * cols[i][b];
        if (dot(a, a) < before) {
          changed = true;
        } else {  // undo when not an improvement
          for (std::size_t i = 0; i < n; ++i) cols[i][a] += q * cols[i][b];
        }
      }
  }
}

Int gram_determinant(const IMat& E_cols) {
  const std::size_t n = E_cols.size();
  const std::size_t k = n ? E_cols[0].size() : 0;
  IMat g(k, std::vector<Int>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Int s = 0;
      for (std::size_t i = 0; i < n; ++i) s += E_cols[i][a] * E_cols[i][b];
      g[a][b] = s;
    }
  return det_bareiss(g);
}

namespace {

// Exact Gauss-Jordan inverse of a rational matrix.
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> a) {
  const std::size_t k = a.size();
  std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k, 0));
  for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) throw std::domain_error("singular matrix");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < k; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rat>> normal_matrix_inverse(const IMat& E_cols) {
  const std::size_t n = E_cols.size();
  const std::size_t k = n ? E_cols[0].size() : 0;
  std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Int s = 0;
      for (std::size_t i = 0; i < n; ++i) s += E_cols[i][a] * E_cols[i][b];
      g[a][b] = Rat(s);
    }
  return rat_inverse(std::move(g));
}

}  // namespace

std::vector<Rat> solve_least_exact(const IMat& E_cols,
                                   const std::vector<Rat>& rhs) {
  const std::size_t n = E_cols.size();
  const std::size_t k = n ? E_cols[0].size() : 0;
  auto ginv = normal_matrix_inverse(E_cols);
  std::vector<Rat> ety(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i) ety[a] += Rat(E_cols[i][a]) * rhs[i];
  std::vector<Rat> out(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out[a] += ginv[a][b] * ety[b];
  return out;
}

double pseudo_inverse_row_norm(const IMat& E_cols) {
  const std::size_t n = E_cols.size();
  const std::size_t k = n ? E_cols[0].size() : 0;
  auto ginv = normal_matrix_inverse(E_cols);
  double best = 0;
  for (std::size_t a = 0; a < k; ++a) {
    double row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rat v = 0;
      for (std::size_t b = 0; b < k; ++b) v += ginv[a][b] * Rat(E_cols[i][b]);
      row += std::abs(to_double(v));
    }
    best = std::max(best, row);
  }
  return best;
}

}  // namespace clab
