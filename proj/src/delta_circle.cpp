#include "cubelab/delta_circle.hpp"

#include <cmath>
#include <functional>

#include "cubelab/counting.hpp"
#include "cubelab/parallel.hpp"

namespace clab {

namespace {

// Adaptive Simpson over [a,b] for a complex integrand, relative tolerance on
// the accumulated value, depth-capped.
struct SimpsonState {
  std::function<cplx(double)> f;
  double tol;
  std::int64_t evals = 0;
  double max_imag = 0.0;

  cplx eval(double x) {
    ++evals;
    cplx v = f(x);
    max_imag = std::max(max_imag, std::abs(v.imag()));
    return v;
  }

  cplx recurse(double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
               int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    cplx flm = eval(lm), frm = eval(rm);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol * (1.0 + std::abs(whole)))
      return left + right + delta / 15.0;
    return recurse(a, m, fa, flm, fm, left, depth - 1) +
           recurse(m, b, fm, frm, fb, right, depth - 1);
  }

  cplx integrate(double a, double b, int depth = 18) {
    cplx fa = eval(a), fb = eval(b), fm = eval((a + b) / 2);
    cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(a, b, fa, fm, fb, whole, depth);
  }
};

}  // namespace

MainTermResult main_term(const CubicPolynomial& g, const WeightFunction& w,
                         double P, double Q) {
  if (Q < 1) throw std::domain_error("Q must be >= 1");
  WeylEvaluator ev(g, w, P);
  MainTermResult out;
  KahanSum acc;
  for (std::int64_t q = 1; q <= static_cast<std::int64_t>(Q); ++q) {
    SimpsonState s;
    s.f = [&](double z) { return ev.S(0, q, z); };
    s.tol = 1e-4;
    double half = 1.0 / (static_cast<double>(q) * Q);
    cplx val = s.integrate(-half, half);
    acc.add(val.real());
    out.max_imag = std::max(out.max_imag, std::abs(val.imag()));
    out.evaluations += s.evals;
  }
  out.value = acc.value();
  return out;
}

double error_majorant(const CubicPolynomial& g, const WeightFunction& w,
                      double P, double Q, int z_samples) {
  if (Q < 1) throw std::domain_error("Q must be >= 1");
  if (z_samples < 1) throw std::domain_error("need z samples");
  WeylEvaluator ev(g, w, P);
  KahanSum acc;
  for (std::int64_t q = 1; q <= static_cast<std::int64_t>(Q); ++q) {
    for (std::int64_t u = -(q / 2); u <= q / 2; ++u) {
      double best = 0.0;
      for (int k = 0; k < z_samples; ++k) {
        // |z| spans [1/(2qQ), 1/(qQ)], both signs
        double t = z_samples == 1
                       ? 0.5
                       : static_cast<double>(k) /
                             static_cast<double>(z_samples - 1);
        double az = (0.5 + 0.5 * t) / (static_cast<double>(q) * Q);
        best = std::max(best, std::abs(ev.S(u, q, az)));
        best = std::max(best, std::abs(ev.S(u, q, -az)));
      }
      acc.add(best / (1.0 + std::abs(static_cast<double>(u))));
    }
  }
  return acc.value();
}

DeltaCheck delta_decomposition_check(const CubicPolynomial& g,
                                     const WeightFunction& w, double P,
                                     double Q) {
  DeltaCheck out;
  out.n_w = count_affine_weighted(g, w, P).value;
  out.main = main_term(g, w, P, Q).value;
  out.majorant = error_majorant(g, w, P, Q);
  double scale = out.majorant / (Q * Q);
  out.constant = scale > 0 ? std::abs(out.n_w - out.main) / scale : 0.0;
  return out;
}

BoundFunctionals bound_functionals(std::int64_t q, double z, double P, double H,
                                   int n, std::int64_t N_gcd) {
  if (q < 1 || P < 1 || H < 1)
    throw std::domain_error("q, P, H must be >= 1");
  if (std::abs(z) > 1.0 / (static_cast<double>(q) * std::pow(P, 1.5)) + 1e-18)
    throw std::domain_error("requires |z| <= 1/(q P^{3/2})");
  BoundFunctionals f;
  f.q = q;
  f.z = z;
  f.P = P;
  f.H = H;
  f.n = n;
  f.dec = decompose(q);
  f.N_gcd = N_gcd > 0 ? N_gcd : f.dec.b1;

  const double qd = static_cast<double>(q);
  const double c = static_cast<double>(f.dec.c);
  const double c2d = static_cast<double>(f.dec.c) * f.dec.c * f.dec.d;
  double V = qd / P * std::max(1.0, std::sqrt(std::abs(z) * P * P * P));
  V = std::max(V, 1e-12);  // float hygiene; V >= q/P > 0 anyway
  f.V = V;
  f.W = V + std::cbrt(c2d);
  f.M1 = std::sqrt(static_cast<double>(gcd64(f.dec.b1, f.N_gcd)) /
                   static_cast<double>(f.dec.b1));
  f.M2 = std::pow(c, n) * std::pow(1.0 + V / c, n - 1.5);
  f.M3 = std::pow(V, n) * std::pow(1.0 + c2d / (V * V * V), n / 2.0);
  double damp =
      std::abs(z) > 0
          ? std::min(1.0, std::pow(std::abs(z) * P * P * P, -n / 8.0))
          : 1.0;
  f.M4 = std::pow(qd, 3.0 * n / 8.0) * damp;
  return f;
}

Prop1Report proposition1_report(const CubicPolynomial& g,
                                const WeightFunction& w, double P, double H,
                                std::int64_t q_max,
                                const std::vector<std::int64_t>& u_values,
                                int z_samples) {
  if (q_max < 1 || u_values.empty() || z_samples < 1)
    throw std::domain_error("empty grid");
  const int n = g.dimension();
  if (H < g.scaled_norm(P) || H > P)
    throw std::domain_error("requires ||g||_P <= H <= P");
  const double theta_prime = 1.0;
  const double eps = 0.25;
  WeylEvaluator ev(g, w, P);
  Prop1Report rep;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    double zmax = 1.0 / (static_cast<double>(q) * std::pow(P, 1.5));
    for (int k = 0; k < z_samples; ++k) {
      double z = z_samples == 1 ? 0.0
                                : zmax * static_cast<double>(k) /
                                      static_cast<double>(z_samples - 1);
      for (std::int64_t u : u_values) {
        auto f = bound_functionals(q, z, P, H, n, u != 0 ? std::llabs(u) : 0);
        Prop1Row row;
        row.q = q;
        row.z = z;
        row.u = u;
        row.V = f.V;
        row.W = f.W;
        row.M1 = f.M1;
        row.M2 = f.M2;
        row.M3 = f.M3;
        row.lhs = std::abs(ev.S(u, q, z));
        double wn = std::pow(f.W, n);
        double mmin = std::min({wn, f.M2, f.M3});
        row.rhs = std::pow(H, theta_prime) *
                  std::pow(static_cast<double>(q), 1.0 - n / 2.0) *
                  std::pow(P, n + eps) * (wn * f.M1 + mmin);
        row.ratio = row.rhs > 0 ? row.lhs / row.rhs : 0.0;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
      }
    }
  }
  return rep;
}

}  // namespace clab
