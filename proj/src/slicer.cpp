#include "cubelab/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cubelab/parallel.hpp"

namespace clab {

namespace {

// nonzero projective solutions of grad g0 = 0 over F_p (cone count / (p-1))
std::int64_t projective_singular_count(const CubicPolynomial& g0,
                                       std::int64_t p) {
  const int n = g0.dimension();
  if (std::pow(static_cast<double>(p), n) > 1e9)
    throw std::domain_error("p^n above budget");
  std::int64_t affine = 0;
  std::vector<std::int64_t> x(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && x[i] == p - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    auto grad = g0.gradient_mod(x.data(), p);
    bool zero = true;
    for (auto c : grad)
      if (c % p != 0) {
        zero = false;
        break;
      }
    if (zero) ++affine;
  }
  return affine / (p - 1);
}

}  // namespace

int singular_dimension_estimate(const CubicPolynomial& g0,
                                const std::vector<std::int64_t>& primes) {
  if (primes.size() < 3)
    throw std::domain_error("needs at least 3 primes");
  if (!g0.is_homogeneous(3) && !g0.is_zero())
    throw std::domain_error("needs a homogeneous cubic");
  const int n = g0.dimension();
  std::vector<std::int64_t> counts;
  for (auto p : primes) {
    if (!is_prime64(p)) throw std::domain_error("non-prime in prime list");
    counts.push_back(projective_singular_count(g0, p));
  }
  bool all_zero = true;
  for (auto c : counts)
    if (c != 0) all_zero = false;
  if (all_zero) return -1;

  int found = -2;
  for (int s = 0; s <= n - 2; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      double ps = std::pow(static_cast<double>(primes[i]), s);
      double c = static_cast<double>(counts[i]);
      if (!(c >= 0.5 * ps && c <= 4.0 * ps)) ok = false;
    }
    if (ok) {
      if (found != -2)
        throw AmbiguousDimension("dimension estimate matches several values");
      found = s;
    }
  }
  if (found == -2)
    throw AmbiguousDimension("dimension estimate matches no value");
  return found;
}

LatticeBasis hyperplane_lattice_basis(const std::vector<Int>& m) {
  const std::size_t n = m.size();
  bool nonzero = false;
  Int g = 0;
  for (auto& c : m) {
    if (c != 0) nonzero = true;
    g = gcd(g, c);
  }
  if (!nonzero) throw std::invalid_argument("m must be nonzero");
  if (g != 1) throw std::invalid_argument("m must be primitive");

  IMat W = unimodular_row_completion(m);
  LatticeBasis out;
  out.columns.assign(n, std::vector<Int>(n - 1, 0));
  out.anchor.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.anchor[i] = W[i][0];
    for (std::size_t j = 1; j < n; ++j) out.columns[i][j - 1] = W[i][j];
  }
  size_reduce_columns(out.columns);
  // reduce the anchor against the basis as well (shorter slice offsets)
  {
    IMat ext(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      ext[i][0] = out.anchor[i];
      for (std::size_t j = 0; j + 1 < n; ++j) ext[i][j + 1] = out.columns[i][j];
    }
    // subtract integer multiples of basis columns from the anchor column
    for (int sweep = 0; sweep < 8; ++sweep) {
      bool changed = false;
      for (std::size_t j = 1; j < n; ++j) {
        Int bb = 0, ab = 0;
        for (std::size_t i = 0; i < n; ++i) {
          bb += ext[i][j] * ext[i][j];
          ab += ext[i][0] * ext[i][j];
        }
        if (bb == 0) continue;
        Int q = (2 * ab + bb) / (2 * bb);
        if (2 * ab < -bb) q = -((2 * (-ab) + bb) / (2 * bb));
        if (q == 0) continue;
        Int before = 0, after = 0;
        for (std::size_t i = 0; i < n; ++i) before += ext[i][0] * ext[i][0];
        for (std::size_t i = 0; i < n; ++i) ext[i][0] -= q * ext[i][j];
        for (std::size_t i = 0; i < n; ++i) after += ext[i][0] * ext[i][0];
        if (after < before) {
          changed = true;
        } else {
          for (std::size_t i = 0; i < n; ++i) ext[i][0] += q * ext[i][j];
        }
      }
      if (!changed) break;
    }
    for (std::size_t i = 0; i < n; ++i) out.anchor[i] = ext[i][0];
  }
  out.gram_det = gram_determinant(out.columns);
  for (auto& row : out.columns)
    for (auto& c : row)
      out.max_entry =
          std::max<std::int64_t>(out.max_entry, std::llabs(to_i64(c)));
  return out;
}

CubicPolynomial restrict_to_hyperplane(const CubicPolynomial& g0,
                                       const std::vector<Int>& m) {
  auto basis = hyperplane_lattice_basis(m);
  std::vector<Int> zero(m.size(), 0);
  return g0.compose_affine(basis.columns, zero);
}

std::vector<Int> find_slicing_vector(const CubicPolynomial& g0,
                                     std::int64_t bound,
                                     const std::vector<std::int64_t>& primes) {
  if (bound < 1) throw std::domain_error("search bound below 1");
  int s = singular_dimension_estimate(g0, primes);
  if (s < 0)
    throw std::domain_error("nonsingular form: nothing to slice away");
  const int n = g0.dimension();
  // enumerate candidate m in lexicographic order over [-bound, bound]^n,
  // keeping only primitive vectors with positive leading entry
  std::vector<std::int64_t> c(n, -bound);
  for (;;) {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) {
        lead = i;
        break;
      }
    if (lead >= 0 && c[lead] > 0) {
      Int g = 0;
      for (auto v : c) g = gcd(g, Int(v));
      if (g == 1) {
        std::vector<Int> m(c.begin(), c.end());
        auto section = restrict_to_hyperplane(g0, m);
        try {
          if (singular_dimension_estimate(section, primes) == s - 1) return m;
        } catch (const AmbiguousDimension&) {
          // skip candidates the estimator cannot settle
        }
      }
    }
    int i = n - 1;
    while (i >= 0 && c[i] == bound) c[i--] = -bound;
    if (i < 0) break;
    ++c[i];
  }
  throw std::runtime_error("no slicing vector within the search bound");
}

std::optional<std::vector<Int>> find_anchor_lex(const std::vector<Int>& m,
                                                std::int64_t k,
                                                std::int64_t bound) {
  const int n = static_cast<int>(m.size());
  std::vector<std::int64_t> mi(n);
  for (int i = 0; i < n; ++i) mi[i] = to_i64(m[i]);
  std::vector<std::int64_t> t(n, 0);
  // suffix gcds and reachable-range pruning
  std::vector<std::int64_t> suffix_gcd(n + 1, 0), suffix_reach(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_gcd[i] = gcd64(suffix_gcd[i + 1], mi[i]);
    suffix_reach[i] = suffix_reach[i + 1] + std::llabs(mi[i]) * bound;
  }
  std::function<bool(int, std::int64_t)> rec = [&](int i,
                                                   std::int64_t rem) -> bool {
    if (i == n) return rem == 0;
    if (suffix_gcd[i] == 0) {
      if (rem != 0) return false;
      for (int j = i; j < n; ++j) t[j] = -bound;  // lex-least tail
      return true;
    }
    if (rem % suffix_gcd[i] != 0) return false;
    if (std::llabs(rem) > suffix_reach[i]) return false;
    for (std::int64_t v = -bound; v <= bound; ++v) {
      t[i] = v;
      std::int64_t next = rem - mi[i] * v;
      if (suffix_gcd[i + 1] == 0) {
        if (next == 0 && rec(i + 1, 0)) return true;
      } else if (next % suffix_gcd[i + 1] == 0 &&
                 std::llabs(next) <= suffix_reach[i + 1] && rec(i + 1, next)) {
        return true;
      }
    }
    return false;
  };
  if (!rec(0, k)) return std::nullopt;
  return std::vector<Int>(t.begin(), t.end());
}

SliceData slice(const CubicPolynomial& g, const WeightFunction& w,
                const std::vector<Int>& m, std::int64_t k, double P) {
  const int n = g.dimension();
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  SliceData out;
  out.m = m;
  out.k = k;
  std::int64_t m1 = 0;
  for (auto& c : m) m1 += std::llabs(to_i64(c));
  std::int64_t bound = std::llabs(k) + m1;
  auto anchor = find_anchor_lex(m, k, bound);
  if (!anchor) {
    out.empty = true;
    return out;
  }
  out.anchor_t = *anchor;
  out.basis = hyperplane_lattice_basis(m);
  out.h = g.compose_affine(out.basis.columns, out.anchor_t);

  // composed weight u -> w(t/P + sum u_i e_i)
  std::vector<double> shift(n);
  double tmax = 0;
  for (int i = 0; i < n; ++i) {
    shift[i] = to_double(out.anchor_t[i]) / P;
    tmax = std::max(tmax, std::abs(to_double(out.anchor_t[i])));
  }
  std::vector<std::vector<double>> B(n, std::vector<double>(n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      B[i][j] = to_double(out.basis.columns[i][j]);
  // |lambda|_inf <= kappa * |x - t|_inf for x in the slice, so this radius
  // encloses the support of the composed weight
  double kappa = pseudo_inverse_row_norm(out.basis.columns);
  double radius = kappa * (w.support_radius + tmax / P) + 1.0 / P;
  out.w0 = composed_weight(w, shift, B, radius);

  double gnorm = std::max(1.0, g.scaled_norm(P));
  // ||h||_P with h in n-1 variables
  out.h_norm_ratio = out.h.is_zero() ? 0.0 : out.h.scaled_norm(P) / gnorm;
  return out;
}

SliceIdentity verify_slice_identity(const CubicPolynomial& g,
                                    const WeightFunction& w, double P,
                                    const std::vector<Int>& m) {
  SliceIdentity out;
  out.lhs = count_affine_weighted(g, w, P).value;
  std::int64_t m1 = 0;
  for (auto& c : m) m1 += std::llabs(to_i64(c));
  auto k_cap = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(m1) * w.support_radius * P));
  out.k_min = -k_cap;
  out.k_max = k_cap;
  KahanSum acc;
  for (std::int64_t k = -k_cap; k <= k_cap; ++k) {
    auto s = slice(g, w, m, k, P);
    if (s.empty) continue;
    acc.add(count_affine_weighted(s.h, s.w0, P).value);
  }
  out.rhs = acc.value();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace clab
