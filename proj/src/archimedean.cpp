#include "cubelab/archimedean.hpp"

#include <algorithm>
#include <cmath>

#include "cubelab/counting.hpp"
#include "cubelab/parallel.hpp"

namespace clab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx unit_phase(double t) {  // e(t) = exp(2 pi i t)
  double r = t - std::floor(t);
  return {std::cos(kTwoPi * r), std::sin(kTwoPi * r)};
}

// Gauss-Legendre nodes/weights on [-1,1], Newton on the Legendre recurrence.
struct GaussRule {
  std::vector<double> node, weight;
};

const GaussRule& gauss32() {
  static const GaussRule rule = [] {
    const int m = 32;
    GaussRule r;
    r.node.resize(m);
    r.weight.resize(m);
    for (int i = 0; i < m; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = m * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = m * (x * p1 - p0) / (x * x - 1.0);
      r.node[i] = x;
      r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Per-axis bound for |d g / d x_i| on the box max|x| <= radius.
std::vector<double> gradient_bounds(const CubicPolynomial& g, double radius) {
  const int n = g.dimension();
  std::vector<double> b(n, 0.0);
  for (auto& t : g.terms())
    for (int i = 0; i < n; ++i) {
      if (t.exps[i] == 0) continue;
      b[i] += std::abs(to_double(t.coeff)) * t.exps[i] *
              std::pow(radius, t.degree() - 1);
    }
  return b;
}

// 1-D quadrature grid: `panels` panels of 32 Gauss nodes on [-L, L].
struct AxisGrid {
  std::vector<double> x, w;
};

AxisGrid axis_grid(double L, int panels) {
  const auto& gl = gauss32();
  AxisGrid g;
  g.x.reserve(static_cast<std::size_t>(panels) * gl.node.size());
  g.w.reserve(g.x.capacity());
  double h = 2.0 * L / panels;
  for (int p = 0; p < panels; ++p) {
    double a = -L + p * h;
    double mid = a + h / 2, half = h / 2;
    for (std::size_t i = 0; i < gl.node.size(); ++i) {
      g.x.push_back(mid + half * gl.node[i]);
      g.w.push_back(half * gl.weight[i]);
    }
  }
  return g;
}

int base_panels(double cycles) {
  return std::max(1, static_cast<int>(std::ceil(cycles / 8.0)) + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Weyl sums
// ---------------------------------------------------------------------------

WeylEvaluator::WeylEvaluator(const CubicPolynomial& g, const WeightFunction& w,
                             double P) {
  if (P < 1) throw std::domain_error("P must be >= 1");
  const int n = g.dimension();
  if (w.n != n) throw std::invalid_argument("weight dimension mismatch");
  const auto B = static_cast<std::int64_t>(std::floor(w.support_radius * P));
  if (!g.fits_i64(static_cast<double>(B)))
    throw std::domain_error("coefficients too large for the cached evaluator");
  if (std::pow(2.0 * static_cast<double>(B) + 1.0, n) > 2e8)
    throw std::domain_error("support box too large for the cached evaluator");
  std::vector<std::int64_t> x(n, -B);
  std::vector<double> xs(n);
  for (;;) {
    for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(x[i]) / P;
    double wv = w.eval(xs.data());
    if (wv != 0.0) {
      wvals_.push_back(wv);
      gvals_.push_back(g.evaluate_i64(x.data()));
    }
    int i = 0;
    while (i < n && x[i] == B) x[i++] = -B;
    if (i == n) break;
    ++x[i];
  }
}

cplx WeylEvaluator::T(double alpha) const {
  KahanComplex acc;
  for (std::size_t i = 0; i < gvals_.size(); ++i)
    acc.add(wvals_[i] * unit_phase(alpha * static_cast<double>(gvals_[i])));
  return acc.value();
}

cplx WeylEvaluator::S(std::int64_t u, std::int64_t q, double z) const {
  if (q < 1) throw std::domain_error("modulus below 1");
  u = mod_reduce(u, q);
  UnityTable e(q);
  // K[m] = sum_{gcd(a,q)=1} e_q(a m + abar u); then
  // S = sum_x w(x/P) e(z g(x)) K[g(x) mod q].
  std::vector<cplx> K(static_cast<std::size_t>(q));
  for (std::int64_t m = 0; m < q; ++m) {
    KahanComplex acc;
    if (q == 1) {
      acc.add({1.0, 0.0});
    } else {
      for (std::int64_t a = 1; a < q; ++a) {
        if (gcd64(a, q) != 1) continue;
        acc.add(e(a * m + inv_mod(a, q) * u));
      }
    }
    K[static_cast<std::size_t>(m)] = acc.value();
  }
  KahanComplex acc;
  for (std::size_t i = 0; i < gvals_.size(); ++i) {
    std::int64_t gv = gvals_[i];
    acc.add(wvals_[i] * unit_phase(z * static_cast<double>(gv)) *
            K[static_cast<std::size_t>(mod_reduce(gv, q))]);
  }
  return acc.value();
}

double WeylEvaluator::weight_mass() const {
  KahanSum acc;
  for (double v : wvals_) acc.add(v);
  return acc.value();
}

cplx weyl_sum(const CubicPolynomial& g, const WeightFunction& w, double P,
              double alpha) {
  return WeylEvaluator(g, w, P).T(alpha);
}

cplx minor_arc_sum(const CubicPolynomial& g, const WeightFunction& w, double P,
                   std::int64_t u, std::int64_t q, double z) {
  return WeylEvaluator(g, w, P).S(u, q, z);
}

// ---------------------------------------------------------------------------
// Oscillatory integral
// ---------------------------------------------------------------------------

namespace {

cplx osc_integral_at(const CubicPolynomial& g, const WeightFunction& w,
                     double P, double z, const std::vector<double>& beta,
                     const std::vector<int>& panels) {
  const int n = g.dimension();
  const double L = w.support_radius * P;
  std::vector<AxisGrid> grid;
  grid.reserve(n);
  double total_nodes = 1;
  for (int i = 0; i < n; ++i) {
    grid.push_back(axis_grid(L, panels[i]));
    total_nodes *= static_cast<double>(grid[i].x.size());
  }
  if (total_nodes > 2e8)
    throw std::domain_error("quadrature budget exceeded");

  // flatten the tensor grid over the first axis for the parallel loop
  std::int64_t n0 = static_cast<std::int64_t>(grid[0].x.size());
  return parallel_sum_complex(n0, [&](std::int64_t b, std::int64_t e) {
    KahanComplex acc;
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> x(n);
    for (std::int64_t j0 = b; j0 < e; ++j0) {
      x[0] = grid[0].x[static_cast<std::size_t>(j0)];
      double w0 = grid[0].w[static_cast<std::size_t>(j0)];
      std::fill(idx.begin(), idx.end(), 0);
      for (;;) {
        double wt = w0;
        for (int i = 1; i < n; ++i) {
          x[i] = grid[i].x[idx[i]];
          wt *= grid[i].w[idx[i]];
        }
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = x[i] / P;
        double wv = w.eval(xs.data());
        if (wv != 0.0) {
          double phase = z * g.evaluate_d(x.data());
          for (int i = 0; i < n; ++i) phase -= beta[i] * x[i];
          acc.add(wt * wv * unit_phase(phase));
        }
        int i = 1;
        while (i < n && idx[i] + 1 == grid[i].x.size()) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
      }
    }
    return acc.value();
  });
}

std::vector<int> panel_plan(const CubicPolynomial& g, const WeightFunction& w,
                            double P, double z,
                            const std::vector<double>& beta) {
  const int n = g.dimension();
  const double L = w.support_radius * P;
  auto gb = gradient_bounds(g, L);
  std::vector<int> panels(n);
  for (int i = 0; i < n; ++i) {
    double freq = std::abs(beta[i]) + std::abs(z) * gb[i];
    panels[i] = base_panels(freq * 2.0 * L);
  }
  return panels;
}

}  // namespace

OscIntegral oscillatory_integral(const CubicPolynomial& g,
                                 const WeightFunction& w, double P, double z,
                                 const std::vector<double>& beta,
                                 double rel_tol) {
  const int n = g.dimension();
  if (static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("beta dimension mismatch");
  auto panels = panel_plan(g, w, P, z, beta);
  const double L = w.support_radius * P;
  const double abs_floor = 1e-12 * std::pow(2.0 * L, n);

  OscIntegral out;
  cplx prev = osc_integral_at(g, w, P, z, beta, panels);
  out.converged = false;
  for (int step = 0; step < 4; ++step) {
    for (auto& p : panels) p *= 2;
    cplx cur = osc_integral_at(g, w, P, z, beta, panels);
    double err = std::abs(cur - prev);
    out.value = cur;
    out.error_estimate = err;
    out.panels_per_axis = panels[0];
    if (err <= rel_tol * std::max(std::abs(cur), abs_floor)) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  if (!out.converged && out.error_estimate <= rel_tol * abs_floor)
    out.converged = true;
  return out;
}

// ---------------------------------------------------------------------------
// Poisson reconstruction
// ---------------------------------------------------------------------------

namespace {

// I(z; v/q) for every v with |v|_inf <= vmax, via one shared quadrature grid
// and axis-by-axis contraction.  Returns a flat array indexed by the
// odometer order of v + vmax.
std::vector<cplx> osc_batch(const CubicPolynomial& g, const WeightFunction& w,
                            double P, double z, std::int64_t q,
                            std::int64_t vmax, int panel_mult) {
  const int n = g.dimension();
  if (n > 3) throw std::domain_error("poisson batch limited to n <= 3");
  const double L = w.support_radius * P;
  auto gb = gradient_bounds(g, L);
  const double beta_max = static_cast<double>(vmax) / static_cast<double>(q);
  std::vector<int> panels(n);
  for (int i = 0; i < n; ++i) {
    double freq = beta_max + std::abs(z) * gb[i];
    panels[i] = base_panels(freq * 2.0 * L) * panel_mult;
  }
  std::vector<AxisGrid> grid;
  double total_nodes = 1;
  for (int i = 0; i < n; ++i) {
    grid.push_back(axis_grid(L, panels[i]));
    total_nodes *= static_cast<double>(grid[i].x.size());
  }
  if (total_nodes > 6e8) throw std::domain_error("quadrature budget exceeded");

  const std::int64_t V = 2 * vmax + 1;
  // phase tables: ph[i][v_index][node] = e(-(v/q) * x_i[node])
  std::vector<std::vector<std::vector<cplx>>> ph(n);
  for (int i = 0; i < n; ++i) {
    ph[i].assign(static_cast<std::size_t>(V), {});
    for (std::int64_t vi = -vmax; vi <= vmax; ++vi) {
      auto& row = ph[i][static_cast<std::size_t>(vi + vmax)];
      row.resize(grid[i].x.size());
      double f = static_cast<double>(vi) / static_cast<double>(q);
      for (std::size_t j = 0; j < grid[i].x.size(); ++j)
        row[j] = unit_phase(-f * grid[i].x[j]);
    }
  }

  if (n == 1) {
    std::vector<cplx> A(grid[0].x.size());
    for (std::size_t j = 0; j < A.size(); ++j) {
      double xs = grid[0].x[j] / P;
      double wv = w.eval(&xs);
      A[j] = wv == 0.0 ? cplx{0, 0}
                       : grid[0].w[j] * wv *
                             unit_phase(z * g.evaluate_d(&grid[0].x[j]));
    }
    std::vector<cplx> out(static_cast<std::size_t>(V));
    for (std::int64_t vi = 0; vi < V; ++vi) {
      KahanComplex acc;
      auto& row = ph[0][static_cast<std::size_t>(vi)];
      for (std::size_t j = 0; j < A.size(); ++j) acc.add(A[j] * row[j]);
      out[static_cast<std::size_t>(vi)] = acc.value();
    }
    return out;
  }

  if (n == 2) {
    const std::size_t N0 = grid[0].x.size(), N1 = grid[1].x.size();
    std::vector<cplx> A(N0 * N1);
    parallel_chunks(static_cast<std::int64_t>(N0),
                    [&](std::size_t, std::int64_t b, std::int64_t e) {
      double x[2];
      for (std::int64_t j0 = b; j0 < e; ++j0) {
        x[0] = grid[0].x[static_cast<std::size_t>(j0)];
        for (std::size_t j1 = 0; j1 < N1; ++j1) {
          x[1] = grid[1].x[j1];
          double xs[2] = {x[0] / P, x[1] / P};
          double wv = w.eval(xs);
          A[static_cast<std::size_t>(j0) * N1 + j1] =
              wv == 0.0 ? cplx{0, 0}
                        : grid[0].w[static_cast<std::size_t>(j0)] *
                              grid[1].w[j1] * wv *
                              unit_phase(z * g.evaluate_d(x));
        }
      }
    });
    // B[j0][v1] = sum_j1 A[j0][j1] ph1[v1][j1]
    std::vector<cplx> Bm(N0 * static_cast<std::size_t>(V));
    parallel_chunks(static_cast<std::int64_t>(N0),
                    [&](std::size_t, std::int64_t b, std::int64_t e) {
      for (std::int64_t j0 = b; j0 < e; ++j0)
        for (std::int64_t v1 = 0; v1 < V; ++v1) {
          auto& row = ph[1][static_cast<std::size_t>(v1)];
          KahanComplex acc;
          const cplx* arow = &A[static_cast<std::size_t>(j0) * N1];
          for (std::size_t j1 = 0; j1 < N1; ++j1) acc.add(arow[j1] * row[j1]);
          Bm[static_cast<std::size_t>(j0) * V + static_cast<std::size_t>(v1)] =
              acc.value();
        }
    });
    std::vector<cplx> out(static_cast<std::size_t>(V) * V);
    for (std::int64_t v0 = 0; v0 < V; ++v0) {
      auto& row = ph[0][static_cast<std::size_t>(v0)];
      for (std::int64_t v1 = 0; v1 < V; ++v1) {
        KahanComplex acc;
        for (std::size_t j0 = 0; j0 < N0; ++j0)
          acc.add(row[j0] *
                  Bm[j0 * static_cast<std::size_t>(V) +
                     static_cast<std::size_t>(v1)]);
        // odometer order: v index = (v0) + (v1)*V with axis 0 fastest
        out[static_cast<std::size_t>(v1) * V + static_cast<std::size_t>(v0)] =
            acc.value();
      }
    }
    return out;
  }

  // n == 3: straightforward tensor contraction, axis by axis.
  const std::size_t N0 = grid[0].x.size(), N1 = grid[1].x.size(),
                    N2 = grid[2].x.size();
  std::vector<cplx> A(N0 * N1 * N2);
  parallel_chunks(static_cast<std::int64_t>(N0),
                  [&](std::size_t, std::int64_t b, std::int64_t e) {
    double x[3];
    for (std::int64_t j0 = b; j0 < e; ++j0) {
      x[0] = grid[0].x[static_cast<std::size_t>(j0)];
      for (std::size_t j1 = 0; j1 < N1; ++j1) {
        x[1] = grid[1].x[j1];
        for (std::size_t j2 = 0; j2 < N2; ++j2) {
          x[2] = grid[2].x[j2];
          double xs[3] = {x[0] / P, x[1] / P, x[2] / P};
          double wv = w.eval(xs);
          A[(static_cast<std::size_t>(j0) * N1 + j1) * N2 + j2] =
              wv == 0.0 ? cplx{0, 0}
                        : grid[0].w[static_cast<std::size_t>(j0)] *
                              grid[1].w[j1] * grid[2].w[j2] * wv *
                              unit_phase(z * g.evaluate_d(x));
        }
      }
    }
  });
  std::vector<cplx> B1(N0 * N1 * static_cast<std::size_t>(V));
  parallel_chunks(static_cast<std::int64_t>(N0 * N1),
                  [&](std::size_t, std::int64_t b, std::int64_t e) {
    for (std::int64_t t = b; t < e; ++t)
      for (std::int64_t v2 = 0; v2 < V; ++v2) {
        auto& row = ph[2][static_cast<std::size_t>(v2)];
        KahanComplex acc;
        const cplx* arow = &A[static_cast<std::size_t>(t) * N2];
        for (std::size_t j2 = 0; j2 < N2; ++j2) acc.add(arow[j2] * row[j2]);
        B1[static_cast<std::size_t>(t) * V + static_cast<std::size_t>(v2)] =
            acc.value();
      }
  });
  std::vector<cplx> B2(N0 * static_cast<std::size_t>(V) * V);
  for (std::size_t j0 = 0; j0 < N0; ++j0)
    for (std::int64_t v1 = 0; v1 < V; ++v1) {
      auto& row = ph[1][static_cast<std::size_t>(v1)];
      for (std::int64_t v2 = 0; v2 < V; ++v2) {
        KahanComplex acc;
        for (std::size_t j1 = 0; j1 < N1; ++j1)
          acc.add(row[j1] * B1[(j0 * N1 + j1) * V +
                               static_cast<std::size_t>(v2)]);
        B2[(j0 * V + static_cast<std::size_t>(v1)) * V +
           static_cast<std::size_t>(v2)] = acc.value();
      }
    }
  std::vector<cplx> out(static_cast<std::size_t>(V) * V * V);
  for (std::int64_t v0 = 0; v0 < V; ++v0) {
    auto& row = ph[0][static_cast<std::size_t>(v0)];
    for (std::int64_t v1 = 0; v1 < V; ++v1)
      for (std::int64_t v2 = 0; v2 < V; ++v2) {
        KahanComplex acc;
        for (std::size_t j0 = 0; j0 < N0; ++j0)
          acc.add(row[j0] * B2[(j0 * V + static_cast<std::size_t>(v1)) * V +
                               static_cast<std::size_t>(v2)]);
        out[(static_cast<std::size_t>(v2) * V + static_cast<std::size_t>(v1)) *
                V +
            static_cast<std::size_t>(v0)] = acc.value();
      }
  }
  return out;
}

}  // namespace

PoissonCheck poisson_residual(const CubicPolynomial& g, const WeightFunction& w,
                              double P, std::int64_t u, std::int64_t q,
                              double z, std::int64_t truncation) {
  const int n = g.dimension();
  if (q < 1) throw std::domain_error("modulus below 1");
  const double L = w.support_radius * P;
  auto gb = gradient_bounds(g, L);
  double grad_sup = 0;
  for (double b : gb) grad_sup = std::max(grad_sup, b);

  PoissonCheck out;
  if (truncation <= 0) {
    double V = static_cast<double>(q) / P *
               std::max(1.0, std::sqrt(std::abs(z) * P * P * P));
    truncation = std::max<std::int64_t>(
        8, 4 * static_cast<std::int64_t>(std::ceil(4.0 * q * V / P)));
  }
  out.truncation = truncation;
  out.truncation_warning =
      truncation < static_cast<std::int64_t>(
                       std::ceil(q * std::abs(z) * grad_sup)) + 1;

  WeylEvaluator ev(g, w, P);
  out.direct = ev.S(u, q, z);
  out.s_abs = std::abs(out.direct);

  // complete sums S_u(q;v) for all v in the box, sharing the residue pass
  UnityTable e(q);
  std::vector<cplx> K(static_cast<std::size_t>(q));
  for (std::int64_t m = 0; m < q; ++m) {
    KahanComplex acc;
    if (q == 1) {
      acc.add({1.0, 0.0});
    } else {
      for (std::int64_t a = 1; a < q; ++a) {
        if (gcd64(a, q) != 1) continue;
        acc.add(e(a * m + inv_mod(a, q) * mod_reduce(u, q)));
      }
    }
    K[static_cast<std::size_t>(m)] = acc.value();
  }
  // residue classes y mod q with g(y) mod q
  std::vector<std::vector<std::int64_t>> ys;
  std::vector<std::int64_t> gm;
  {
    std::vector<std::int64_t> y(n, 0);
    for (;;) {
      ys.push_back(y);
      gm.push_back(g.evaluate_mod(y.data(), q));
      int i = 0;
      while (i < n && y[i] == q - 1) y[i++] = 0;
      if (i == n) break;
      ++y[i];
    }
  }

  const std::int64_t V = 2 * truncation + 1;
  auto integrals = osc_batch(g, w, P, z, q, truncation, 1);
  {
    // convergence probe at doubled panels on the extreme corner and centre
    auto probe = [&](const std::vector<double>& beta) {
      std::vector<int> p1 = panel_plan(g, w, P, z, beta), p2 = p1;
      for (auto& p : p2) p *= 2;
      cplx a = osc_integral_at(g, w, P, z, beta, p1);
      cplx b = osc_integral_at(g, w, P, z, beta, p2);
      return std::abs(a - b);
    };
    std::vector<double> corner(n, static_cast<double>(truncation) / q);
    std::vector<double> centre(n, 0.0);
    double err = probe(corner) + probe(centre);
    if (err > 1e-6 * std::max(1.0, std::pow(P, n))) {
      integrals = osc_batch(g, w, P, z, q, truncation, 2);
    }
  }

  // assemble q^{-n} sum_v S_u(q;v) I(z; v/q)
  std::int64_t vcount = 1;
  for (int i = 0; i < n; ++i) vcount *= V;
  KahanComplex acc;
  std::vector<std::int64_t> v(n, -truncation);
  std::int64_t flat = 0;
  for (;;) {
    // S_u(q;v) = sum_y e_q(v.y) K[g(y)]
    KahanComplex sv;
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      std::int64_t dot = 0;
      for (int i = 0; i < n; ++i)
        dot = (dot + mod_reduce(v[i], q) * ys[yi][i]) % q;
      sv.add(e(dot) * K[static_cast<std::size_t>(gm[yi])]);
    }
    acc.add(sv.value() * integrals[static_cast<std::size_t>(flat)]);
    int i = 0;
    while (i < n && v[i] == truncation) v[i++] = -truncation;
    if (i == n) break;
    ++v[i];
    ++flat;
  }
  double qn = std::pow(static_cast<double>(q), n);
  out.reconstructed = acc.value() / qn;
  out.residual = std::abs(out.direct - out.reconstructed);
  return out;
}

// ---------------------------------------------------------------------------
// Exact DFT orthogonality
// ---------------------------------------------------------------------------

OrthogonalityCount orthogonality_count(const CubicPolynomial& g,
                                       const WeightFunction& w, double P,
                                       std::int64_t grid_override) {
  const int n = g.dimension();
  if (w.n != n) throw std::invalid_argument("weight dimension mismatch");
  const auto B = static_cast<std::int64_t>(std::floor(w.support_radius * P));
  // exact interval bound for |g| on the support box
  Int bound = 0;
  for (auto& t : g.terms()) bound += abs(t.coeff) * ipow(Int(B), t.degree());
  if (bound > Int(40'000'000))
    throw std::overflow_error("orthogonality grid too large");
  std::int64_t M = 2 * to_i64(bound) + 1;
  if (grid_override > 0) {
    if (grid_override <= 2 * to_i64(bound))
      throw std::domain_error("grid override below the exactness threshold");
    M = grid_override;
  }

  // group lattice points by g-value residue mod M
  std::vector<std::pair<std::int64_t, double>> pairs;  // (g mod M, weight)
  {
    const auto R = B;
    std::vector<std::int64_t> x(n, -R);
    std::vector<double> xs(n);
    for (;;) {
      for (int i = 0; i < n; ++i) xs[i] = static_cast<double>(x[i]) / P;
      double wv = w.eval(xs.data());
      if (wv != 0.0)
        pairs.emplace_back(mod_reduce(g.evaluate_i64(x.data()), M), wv);
      int i = 0;
      while (i < n && x[i] == R) x[i++] = -R;
      if (i == n) break;
      ++x[i];
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<std::int64_t> res;
  std::vector<double> wt;
  for (auto& [r, v] : pairs) {
    if (!res.empty() && res.back() == r) {
      wt.back() += v;
    } else {
      res.push_back(r);
      wt.push_back(v);
    }
  }

  // Root-of-unity table when it fits, direct phase evaluation otherwise.
  const bool tabled = M <= 4'000'000;
  UnityTable table(tabled ? M : 1);
  double total = parallel_sum(M, [&](std::int64_t b, std::int64_t eend) {
    KahanSum acc;
    for (std::int64_t j = b; j < eend; ++j) {
      KahanComplex tj;
      for (std::size_t k = 0; k < res.size(); ++k) {
        std::int64_t r = (j * res[k]) % M;
        tj.add(wt[k] * (tabled ? table(r)
                               : unit_phase(static_cast<double>(r) /
                                            static_cast<double>(M))));
      }
      acc.add(tj.value().real());
    }
    return acc.value();
  });
  return {total / static_cast<double>(M), M};
}

}  // namespace clab
