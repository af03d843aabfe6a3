#include "cubelab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "cubelab/archimedean.hpp"
#include "cubelab/complete_sums.hpp"
#include "cubelab/counting.hpp"
#include "cubelab/delta_circle.hpp"
#include "cubelab/exponent_lp.hpp"
#include "cubelab/parallel.hpp"
#include "cubelab/poly.hpp"
#include "cubelab/qdecomp.hpp"
#include "cubelab/report.hpp"
#include "cubelab/slicer.hpp"
#include "cubelab/weights.hpp"
#include "cubelab/weyl_diff.hpp"

using nlohmann::json;

struct clab_poly {
  clab::CubicPolynomial p;
};
struct clab_weight {
  clab::WeightFunction w;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
clab_status guarded(F&& fn) {
  try {
    return fn();
  } catch (const clab::CountBudgetError& e) {
    g_last_error = e.what();
    return CLAB_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CLAB_ERR_PARSE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CLAB_ERR_DOMAIN;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return CLAB_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CLAB_ERR_INTERNAL;
  }
}

std::string rat_str(const clab::Rat& r) { return clab::to_string(r); }

json certificate_json(const clab::CaseCertificate& cert) {
  json j;
  j["case"] = cert.case_name;
  j["n"] = cert.n;
  j["in_range"] = cert.in_range;
  j["certified"] = cert.certified;
  if (cert.infeasible_vacuous) {
    j["infeasible"] = true;
    return j;
  }
  j["optimum"] = rat_str(cert.optimum);
  j["optimum_value"] = clab::to_double(cert.optimum);
  j["target"] = rat_str(cert.target);
  j["margin"] = rat_str(cert.margin);
  json vertex = json::array();
  for (auto& v : cert.vertex) vertex.push_back(rat_str(v));
  j["vertex"] = vertex;
  json duals = json::array();
  for (auto& v : cert.duals) duals.push_back(rat_str(v));
  j["duals"] = duals;
  j["dual_value"] = rat_str(cert.dual_value);
  return j;
}

}  // namespace

extern "C" {

const char* clab_last_error(void) { return g_last_error.c_str(); }

void clab_string_free(char* s) { std::free(s); }

int clab_set_threads(int threads) {
  clab::set_thread_count(threads);
  return clab::thread_count();
}

clab_status clab_poly_parse(const char* text, int n, clab_poly** out) {
  return guarded([&] {
    auto p = new clab_poly{clab::CubicPolynomial::parse(text ? text : "", n)};
    *out = p;
    return CLAB_OK;
  });
}

void clab_poly_free(clab_poly* p) { delete p; }

clab_status clab_poly_to_string(const clab_poly* p, char** out) {
  return guarded([&] {
    *out = dup_string(p->p.to_string());
    return CLAB_OK;
  });
}

clab_status clab_poly_dimension(const clab_poly* p, int* out) {
  *out = p->p.dimension();
  return CLAB_OK;
}

clab_status clab_poly_sup_norm(const clab_poly* p, char** out) {
  return guarded([&] {
    *out = dup_string(clab::to_string(p->p.sup_norm()));
    return CLAB_OK;
  });
}

clab_status clab_weight_create(const char* name, int n, clab_weight** out) {
  return guarded([&] {
    *out = new clab_weight{clab::weight_by_name(name ? name : "w1", n)};
    return CLAB_OK;
  });
}

void clab_weight_free(clab_weight* w) { delete w; }

clab_status clab_count_projective(const clab_poly* C, int64_t P,
                                  int64_t* count, double* seconds) {
  return guarded([&] {
    auto r = clab::count_projective(C->p, P);
    *count = r.value;
    if (seconds) *seconds = r.seconds;
    return CLAB_OK;
  });
}

clab_status clab_count_weighted(const clab_poly* g, const clab_weight* w,
                                double P, double* value, double* seconds) {
  return guarded([&] {
    auto r = clab::count_affine_weighted(g->p, w->w, P);
    *value = r.value;
    if (seconds) *seconds = r.seconds;
    return CLAB_OK;
  });
}

clab_status clab_fit_growth(const double* P_values, const double* counts,
                            int samples, double* exponent, double* intercept,
                            double* max_residual) {
  return guarded([&] {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i < samples; ++i) s.emplace_back(P_values[i], counts[i]);
    auto fit = clab::fit_growth(s);
    *exponent = fit.exponent;
    *intercept = fit.intercept;
    *max_residual = fit.max_residual;
    return CLAB_OK;
  });
}

namespace {
std::vector<int64_t> vec_of(const int64_t* v, int n) {
  return std::vector<int64_t>(v, v + n);
}
}  // namespace

clab_status clab_complete_T(const clab_poly* g, int64_t a, int64_t q,
                            const int64_t* v, double out[2]) {
  return guarded([&] {
    auto c = clab::complete_T(g->p, a, q, vec_of(v, g->p.dimension()));
    out[0] = c.real();
    out[1] = c.imag();
    return CLAB_OK;
  });
}

clab_status clab_complete_S(const clab_poly* g, int64_t u, int64_t q,
                            const int64_t* v, double out[2]) {
  return guarded([&] {
    auto c = clab::complete_S(g->p, u, q, vec_of(v, g->p.dimension()));
    out[0] = c.real();
    out[1] = c.imag();
    return CLAB_OK;
  });
}

clab_status clab_weyl_sum(const clab_poly* g, const clab_weight* w, double P,
                          double alpha, double out[2]) {
  return guarded([&] {
    auto c = clab::weyl_sum(g->p, w->w, P, alpha);
    out[0] = c.real();
    out[1] = c.imag();
    return CLAB_OK;
  });
}

clab_status clab_minor_arc_sum(const clab_poly* g, const clab_weight* w,
                               double P, int64_t u, int64_t q, double z,
                               double out[2]) {
  return guarded([&] {
    auto c = clab::minor_arc_sum(g->p, w->w, P, u, q, z);
    out[0] = c.real();
    out[1] = c.imag();
    return CLAB_OK;
  });
}

clab_status clab_verify_orthogonality(const clab_poly* g, const clab_weight* w,
                                      double P, double* residual,
                                      double* direct, int64_t* grid) {
  return guarded([&] {
    auto o = clab::orthogonality_count(g->p, w->w, P);
    auto d = clab::count_affine_weighted(g->p, w->w, P);
    *residual = std::abs(o.value - d.value);
    if (direct) *direct = d.value;
    if (grid) *grid = o.grid;
    return CLAB_OK;
  });
}

clab_status clab_verify_multiplicativity(const clab_poly* g, int64_t r,
                                         int64_t s, int64_t u, const int64_t* v,
                                         double* residual, double* scale) {
  return guarded([&] {
    auto c = clab::check_multiplicativity(g->p, r, s, u,
                                          vec_of(v, g->p.dimension()));
    *residual = c.residual;
    if (scale) *scale = c.scale;
    return CLAB_OK;
  });
}

clab_status clab_poisson_residual(const clab_poly* g, const clab_weight* w,
                                  double P, int64_t u, int64_t q, double z,
                                  int64_t truncation, double* residual,
                                  double* s_abs) {
  return guarded([&] {
    auto c = clab::poisson_residual(g->p, w->w, P, u, q, z, truncation);
    *residual = c.residual;
    if (s_abs) *s_abs = c.s_abs;
    return CLAB_OK;
  });
}

clab_status clab_verify_weyl_linearization(const clab_poly* g, int64_t trials,
                                           uint64_t seed, int64_t* failures) {
  return guarded([&] {
    clab::SplitMix64 rng(seed);
    const int n = g->p.dimension();
    int64_t bad = 0;
    auto T = clab::symmetric_tensor(g->p.cubic_part());
    for (int64_t t = 0; t < trials; ++t) {
      std::vector<clab::Int> wv(n), xv(n), yv(n);
      for (int i = 0; i < n; ++i) {
        wv[i] = rng.uniform(-50, 50);
        xv[i] = rng.uniform(-50, 50);
        yv[i] = rng.uniform(-50, 50);
      }
      auto d = clab::difference_form(g->p, wv, xv, yv);
      auto B = clab::bilinear_system(T, wv, xv);
      clab::Int lin = 0;
      for (int i = 0; i < n; ++i) lin += yv[i] * B[i];
      if (d.G != lin + d.Gamma) ++bad;
      // the y-free part must also match a direct second evaluation
      auto d2 = clab::difference_form(g->p, xv, wv, yv);
      if (d2.G != d.G) ++bad;
    }
    *failures = bad;
    return CLAB_OK;
  });
}

clab_status clab_verify_delta(const clab_poly* g, const clab_weight* w,
                              double P, double Q, double* n_w, double* main,
                              double* majorant, double* constant) {
  return guarded([&] {
    auto c = clab::delta_decomposition_check(g->p, w->w, P, Q);
    *n_w = c.n_w;
    *main = c.main;
    *majorant = c.majorant;
    *constant = c.constant;
    return CLAB_OK;
  });
}

clab_status clab_verify_slice(const clab_poly* g, const clab_weight* w,
                              double P, const int64_t* m, double* residual,
                              double* lhs, double* rhs) {
  return guarded([&] {
    std::vector<clab::Int> mv;
    for (int i = 0; i < g->p.dimension(); ++i) mv.emplace_back(m[i]);
    auto c = clab::verify_slice_identity(g->p, w->w, P, mv);
    *residual = c.residual;
    if (lhs) *lhs = c.lhs;
    if (rhs) *rhs = c.rhs;
    return CLAB_OK;
  });
}

clab_status clab_report_prop1_csv(const clab_poly* g, const clab_weight* w,
                                  double P, double H, int64_t q_max,
                                  const int64_t* u_values, int u_count,
                                  int z_samples, char** csv,
                                  double* max_ratio) {
  return guarded([&] {
    std::vector<int64_t> us(u_values, u_values + u_count);
    auto rep = clab::proposition1_report(g->p, w->w, P, H, q_max, us, z_samples);
    std::string doc =
        "q,z,u,V,W,M1,M2,M3,lhs,rhs,ratio\n";
    for (auto& r : rep.rows) {
      doc += clab::csv_line({std::to_string(r.q), clab::fmt12(r.z),
                             std::to_string(r.u), clab::fmt12(r.V),
                             clab::fmt12(r.W), clab::fmt12(r.M1),
                             clab::fmt12(r.M2), clab::fmt12(r.M3),
                             clab::fmt12(r.lhs), clab::fmt12(r.rhs),
                             clab::fmt12(r.ratio)});
    }
    *csv = dup_string(doc);
    if (max_ratio) *max_ratio = rep.max_ratio;
    return CLAB_OK;
  });
}

clab_status clab_report_weyl_bound_csv(const clab_poly* g,
                                       const clab_weight* w, double P,
                                       int64_t q_max, int z_samples,
                                       double epsilon, char** csv,
                                       double* max_ratio) {
  return guarded([&] {
    if (q_max < 1 || z_samples < 1) throw std::domain_error("empty grid");
    auto g0 = g->p.cubic_part();
    double c = clab::tensor_coefficient_sum(g0);
    double norm = clab::to_double(g0.sup_norm());
    if (norm <= 0) throw std::domain_error("needs a nonzero cubic part");
    clab::WeylEvaluator ev(g->p, w->w, P);
    std::string doc = "q,z,u,lhs,rhs,ratio\n";
    double best = 0;
    for (int64_t q = 1; q <= q_max; ++q) {
      double zmax = 1.0 / (static_cast<double>(q) * std::pow(P, 1.5));
      for (int k = 0; k < z_samples; ++k) {
        double z = z_samples == 1 ? 0.0
                                  : zmax * static_cast<double>(k) /
                                        static_cast<double>(z_samples - 1);
        for (int64_t u : {int64_t{0}, int64_t{1}}) {
          clab::WeylBoundInput in{q, z, P, c, epsilon};
          double lhs = std::abs(ev.S(u, q, z));
          double rhs = clab::weyl_bound_rhs(in, norm, g->p.dimension());
          double ratio = rhs > 0 ? lhs / rhs : 0.0;
          best = std::max(best, ratio);
          doc += clab::csv_line({std::to_string(q), clab::fmt12(z),
                                 std::to_string(u), clab::fmt12(lhs),
                                 clab::fmt12(rhs), clab::fmt12(ratio)});
        }
      }
    }
    *csv = dup_string(doc);
    if (max_ratio) *max_ratio = best;
    return CLAB_OK;
  });
}

clab_status clab_report_prime_bounds_json(const clab_poly* g,
                                          int64_t prime_limit, int64_t u_choice,
                                          int samples, uint64_t seed,
                                          char** json_out) {
  return guarded([&] {
    auto rep = clab::prime_bound_report(g->p, prime_limit, u_choice, samples,
                                        seed);
    json j;
    j["good_primes"] = rep.good_primes;
    j["max_ratio_sp1"] = rep.max_ratio1;
    j["max_ratio_sp2"] = rep.max_ratio2;
    j["max_ratio_sp4"] = rep.max_ratio4;
    json rows = json::array();
    for (auto& r : rep.rows) {
      json row;
      row["p"] = r.p;
      row["ratio_sp1"] = r.ratio1;
      row["ratio_sp2"] = r.ratio2;
      row["ratio_sp4"] = r.ratio4;
      rows.push_back(row);
    }
    j["rows"] = rows;
    *json_out = dup_string(j.dump(2) + "\n");
    return CLAB_OK;
  });
}

clab_status clab_qdecomp(int64_t q, int64_t out[5]) {
  return guarded([&] {
    auto d = clab::decompose(q);
    out[0] = d.b1;
    out[1] = d.b2;
    out[2] = d.c;
    out[3] = d.d;
    out[4] = d.d0;
    return CLAB_OK;
  });
}

clab_status clab_qdecomp_census_json(int64_t two_R_max, char** json_out,
                                     double* max_ratio) {
  return guarded([&] {
    auto sweep = clab::census_sweep(two_R_max);
    json j;
    j["two_R_max"] = two_R_max;
    j["cells"] = sweep.cells;
    j["max_ratio"] = sweep.max_ratio;
    j["argmax"] = {{"R", sweep.argmax_R},
                   {"R0", sweep.argmax_R0},
                   {"R1", sweep.argmax_R1},
                   {"R2", sweep.argmax_R2},
                   {"R3", sweep.argmax_R3}};
    *json_out = dup_string(j.dump(2) + "\n");
    if (max_ratio) *max_ratio = sweep.max_ratio;
    return CLAB_OK;
  });
}

clab_status clab_gcd_sum(int64_t B, int64_t N, int64_t* sum, double* ratio) {
  return guarded([&] {
    auto r = clab::gcd_sum(B, N);
    *sum = r.sum;
    if (ratio) *ratio = r.ratio;
    return CLAB_OK;
  });
}

clab_status clab_certify_json(const char* case_name, int n_lo, int n_hi,
                              int include_out_of_range, char** json_out,
                              int* all_certified) {
  return guarded([&] {
    std::string which = case_name ? case_name : "all";
    if (n_hi < n_lo) n_hi = n_lo;
    json certs = json::array();
    bool ok = true;
    for (int n = n_lo; n <= n_hi; ++n) {
      for (const auto& spec : clab::catalog()) {
        if (which != "all" && spec.name != which) continue;
        bool in = n >= spec.n_lo && n <= spec.n_hi;
        if (!in && !include_out_of_range) continue;
        auto cert = clab::certify_case(spec, n);
        if (cert.in_range && !cert.certified) ok = false;
        if (!cert.in_range && include_out_of_range && !cert.certified)
          ok = false;
        certs.push_back(certificate_json(cert));
      }
    }
    if (certs.empty()) throw std::domain_error("unknown case: " + which);
    json j;
    j["certificates"] = certs;
    j["all_certified"] = ok;
    *json_out = dup_string(j.dump(2) + "\n");
    if (all_certified) *all_certified = ok ? 1 : 0;
    return CLAB_OK;
  });
}

clab_status clab_catalog_json(char** json_out) {
  return guarded([&] {
    json cases = json::array();
    for (const auto& spec : clab::catalog()) {
      json c;
      c["name"] = spec.name;
      c["note"] = spec.note;
      c["n_lo"] = spec.n_lo;
      c["n_hi"] = spec.n_hi;
      if (spec.paper_exponent) {
        c["reduced_exponent"] = {
            {"constant", rat_str(spec.paper_exponent->a)},
            {"n_coefficient", rat_str(spec.paper_exponent->b)}};
      }
      if (spec.paper_r_exponent) {
        c["reduced_R_exponent"] = {
            {"constant", rat_str(spec.paper_r_exponent->a)},
            {"n_coefficient", rat_str(spec.paper_r_exponent->b)}};
      }
      cases.push_back(c);
    }
    json j;
    j["cases"] = cases;
    *json_out = dup_string(j.dump(2) + "\n");
    return CLAB_OK;
  });
}

clab_status clab_singular_dimension(const clab_poly* g0, const int64_t* primes,
                                    int prime_count, int* dimension) {
  return guarded([&] {
    std::vector<int64_t> ps(primes, primes + prime_count);
    *dimension = clab::singular_dimension_estimate(g0->p, ps);
    return CLAB_OK;
  });
}

clab_status clab_find_slicing_vector(const clab_poly* g0, int64_t bound,
                                     const int64_t* primes, int prime_count,
                                     int64_t* m_out) {
  return guarded([&] {
    std::vector<int64_t> ps(primes, primes + prime_count);
    auto m = clab::find_slicing_vector(g0->p, bound, ps);
    for (int i = 0; i < g0->p.dimension(); ++i) m_out[i] = clab::to_i64(m[i]);
    return CLAB_OK;
  });
}

clab_status clab_slice_json(const clab_poly* g, const clab_weight* w, double P,
                            const int64_t* m, int64_t k, char** json_out) {
  return guarded([&] {
    std::vector<clab::Int> mv;
    for (int i = 0; i < g->p.dimension(); ++i) mv.emplace_back(m[i]);
    auto s = clab::slice(g->p, w->w, mv, k, P);
    json j;
    j["k"] = k;
    j["empty"] = s.empty;
    if (!s.empty) {
      json t = json::array(), basis = json::array();
      for (auto& c : s.anchor_t) t.push_back(clab::to_i64(c));
      for (auto& row : s.basis.columns) {
        json r = json::array();
        for (auto& c : row) r.push_back(clab::to_i64(c));
        basis.push_back(r);
      }
      j["anchor_t"] = t;
      j["basis_rows"] = basis;
      j["gram_det"] = clab::to_string(s.basis.gram_det);
      j["h"] = s.h.to_string();
      j["h_norm_ratio"] = s.h_norm_ratio;
      j["w0_radius"] = s.w0.support_radius;
    }
    *json_out = dup_string(j.dump(2) + "\n");
    return CLAB_OK;
  });
}

}  // extern "C"
