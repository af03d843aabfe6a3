// cubelab command line: batch experiments over the shared-library C API.
//
// Subcommands: count, growth, expsum (complete|weyl), verify (orthogonality|
// poisson|mult|weyl-linearization|delta|slice), report (prop1|weyl-bound|
// prime-bounds), qdecomp (+census, gcdsum), certify, slice.
// Exit codes: 0 success, 1 failed verification or budget, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubelab.h"

namespace {

int fail_with(clab_status st) {
  std::fprintf(stderr, "error: %s\n", clab_last_error());
  return st == CLAB_ERR_PARSE ? 2 : 1;
}

std::string load_poly_text(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw CLI::ValidationError("--poly", "cannot read " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;
}

struct PolyHandle {
  clab_poly* p = nullptr;
  ~PolyHandle() { clab_poly_free(p); }
};
struct WeightHandle {
  clab_weight* w = nullptr;
  ~WeightHandle() { clab_weight_free(w); }
};
struct StringOut {
  char* s = nullptr;
  ~StringOut() { clab_string_free(s); }
};

std::vector<int64_t> parse_i64_list(const std::string& csv) {
  std::vector<int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::strtoll(item.c_str(), nullptr, 10));
  }
  return out;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << payload;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubelab: cubic hypersurface counting laboratory"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string poly_text, weight_name = "w1", out_path, v_csv, m_csv, p_csv,
              case_name = "all", alpha_text;
  int threads = 0, n_dim = 0, z_samples = 9, samples = 50, u_count = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> p_list;
  std::int64_t P_int = 0, Q_int = 0, q_mod = 1, u_twist = 0, a_num = 0,
               trunc = 0, census_max = 0, gcd_B = 0, gcd_N = 0, bound = 3,
               trials = 1000, prime_limit = 31;
  double P_real = 0, Q_real = 0, z_off = 0, H_bound = 0, eps = 0.25;
  bool projective = true, weighted = false, do_verify = false, timing = false,
       include_oor = false;
  int n_lo = 5, n_hi = -1;
  std::int64_t k_level = 0;

  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--seed", seed, "seed for all sampling");

  auto add_poly = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--poly", poly_text,
                                "polynomial text or @file, variables x1..xn");
    if (required) opt->required();
    cmd->add_option("--n", n_dim, "ambient dimension (default: inferred)");
  };

  // count
  auto* c_count = app.add_subcommand("count", "count points of bounded height");
  add_poly(c_count);
  c_count->add_option("--P", P_int, "height bound")->required();
  c_count->add_flag("--projective,!--weighted", projective,
                    "projective primitive count (default) or weighted affine");
  c_count->add_option("--weight", weight_name, "w1 | box-smooth:<R>");
  c_count->add_option("--out", out_path, "output file (default stdout)");
  c_count->add_flag("--timing", timing, "include wall seconds in the CSV");

  // growth
  auto* c_growth = app.add_subcommand("growth", "fit log count against log P");
  add_poly(c_growth);
  c_growth->add_option("--P-list", p_list, "comma separated height bounds")
      ->required()
      ->delimiter(',');
  c_growth->add_option("--out", out_path, "output file");
  c_growth->add_flag("--timing", timing, "include wall seconds");

  // expsum complete / weyl
  auto* c_exp = app.add_subcommand("expsum", "exponential sums");
  auto* c_complete = c_exp->add_subcommand("complete", "complete sums mod q");
  add_poly(c_complete);
  c_complete->add_option("--q", q_mod, "modulus")->required();
  c_complete->add_option("--u", u_twist, "Kloosterman twist");
  c_complete->add_option("--a", a_num, "numerator (T instead of S)");
  c_complete->add_option("--v", v_csv, "frequency vector, comma separated");
  c_complete->add_option("--out", out_path, "output file");
  auto* c_weyl = c_exp->add_subcommand("weyl", "weighted Weyl sum T(alpha)");
  add_poly(c_weyl);
  c_weyl->add_option("--alpha", alpha_text, "real alpha or 'a/q+z'")
      ->required();
  c_weyl->add_option("--P", P_real, "scaling parameter")->required();
  c_weyl->add_option("--weight", weight_name);
  c_weyl->add_option("--out", out_path, "output file");

  // verify
  auto* c_verify = app.add_subcommand("verify", "identity checks");
  auto* v_orth = c_verify->add_subcommand(
      "orthogonality", "DFT-grid count equals the direct count");
  add_poly(v_orth);
  v_orth->add_option("--P", P_real)->required();
  v_orth->add_option("--weight", weight_name);
  auto* v_poisson = c_verify->add_subcommand(
      "poisson", "twisted sum equals its complete-sum reconstruction");
  add_poly(v_poisson);
  v_poisson->add_option("--P", P_real)->required();
  v_poisson->add_option("--q", q_mod)->required();
  v_poisson->add_option("--u", u_twist);
  v_poisson->add_option("--z", z_off);
  v_poisson->add_option("--trunc", trunc, "frequency truncation (0 = auto)");
  v_poisson->add_option("--weight", weight_name);
  auto* v_mult = c_verify->add_subcommand(
      "mult", "twisted multiplicativity over coprime moduli");
  add_poly(v_mult);
  v_mult->add_option("--r", q_mod)->required();
  v_mult->add_option("--s", Q_int)->required();
  v_mult->add_option("--u", u_twist);
  v_mult->add_option("--v", v_csv);
  auto* v_weyl = c_verify->add_subcommand(
      "weyl-linearization", "double difference equals its bilinear form");
  add_poly(v_weyl);
  v_weyl->add_option("--trials", trials);
  auto* v_delta = c_verify->add_subcommand(
      "delta", "Farey main term plus majorant-bounded error");
  add_poly(v_delta);
  v_delta->add_option("--P", P_real)->required();
  v_delta->add_option("--Q", Q_real)->required();
  v_delta->add_option("--weight", weight_name);
  auto* v_slice = c_verify->add_subcommand(
      "slice", "hyperplane slicing preserves the weighted count");
  add_poly(v_slice);
  v_slice->add_option("--P", P_real)->required();
  v_slice->add_option("--m", m_csv, "slicing vector")->required();
  v_slice->add_option("--weight", weight_name);

  // report
  auto* c_report = app.add_subcommand("report", "empirical bound tables");
  auto* r_prop1 = c_report->add_subcommand(
      "prop1", "twisted sums against the Poisson-route bound");
  add_poly(r_prop1);
  r_prop1->add_option("--P", P_real)->required();
  r_prop1->add_option("--H", H_bound, "norm bound (0 = auto)");
  r_prop1->add_option("--qmax", q_mod)->required();
  r_prop1->add_option("--u", v_csv, "u values, comma separated");
  r_prop1->add_option("--z-samples", z_samples);
  r_prop1->add_option("--weight", weight_name);
  r_prop1->add_option("--out", out_path);
  auto* r_weyl = c_report->add_subcommand(
      "weyl-bound", "twisted sums against the differencing bound");
  add_poly(r_weyl);
  r_weyl->add_option("--P", P_real)->required();
  r_weyl->add_option("--qmax", q_mod)->required();
  r_weyl->add_option("--z-samples", z_samples);
  r_weyl->add_option("--eps", eps);
  r_weyl->add_option("--weight", weight_name);
  r_weyl->add_option("--out", out_path);
  auto* r_primes = c_report->add_subcommand(
      "prime-bounds", "complete sums at primes and prime squares");
  add_poly(r_primes);
  r_primes->add_option("--prime-limit", prime_limit);
  r_primes->add_option("--u", u_twist, "twist for the coprime branch");
  r_primes->add_option("--samples", samples, "sampled frequencies per prime");
  r_primes->add_option("--out", out_path);

  // qdecomp
  auto* c_qd = app.add_subcommand("qdecomp", "modulus factorization");
  c_qd->add_option("--q", q_mod, "modulus to decompose");
  auto* c_census = c_qd->add_subcommand("census", "dyadic census sweep");
  c_census->add_option("--max", census_max, "largest 2R")->required();
  c_census->add_option("--out", out_path);
  auto* c_gcd = c_qd->add_subcommand("gcdsum", "sum of gcd(b, N) for b <= B");
  c_gcd->add_option("--B", gcd_B)->required();
  c_gcd->add_option("--N", gcd_N)->required();

  // certify
  auto* c_cert = app.add_subcommand("certify", "exponent case certificates");
  c_cert->add_option("--case", case_name, "case name or 'all'");
  c_cert->add_option("--n", n_lo, "dimension, or lower end of a range")
      ->required();
  c_cert->add_option("--n-hi", n_hi, "upper end of the dimension range");
  c_cert->add_flag("--include-out-of-range", include_oor,
                   "also evaluate cases outside their validity window");
  c_cert->add_option("--out", out_path);

  // slice
  auto* c_slice = app.add_subcommand("slice", "hyperplane slice data");
  add_poly(c_slice);
  c_slice->add_option("--m", m_csv, "slicing vector")->required();
  c_slice->add_option("--k", k_level, "affine level");
  c_slice->add_option("--P", P_real, "scaling parameter")->required();
  c_slice->add_option("--weight", weight_name);
  c_slice->add_flag("--verify", do_verify, "also check the counting identity");
  c_slice->add_option("--primes", p_csv, "primes for dimension estimates");
  c_slice->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);
  clab_set_threads(threads);

  auto make_poly = [&](PolyHandle& ph) -> int {
    auto st = clab_poly_parse(load_poly_text(poly_text).c_str(), n_dim, &ph.p);
    if (st != CLAB_OK) return fail_with(st);
    return 0;
  };
  auto make_weight = [&](const PolyHandle& ph, WeightHandle& wh) -> int {
    int n = 0;
    clab_poly_dimension(ph.p, &n);
    auto st = clab_weight_create(weight_name.c_str(), n, &wh.w);
    if (st != CLAB_OK) return fail_with(st);
    return 0;
  };

  try {
    if (c_count->parsed()) {
      if (P_int < 1) {
        std::fprintf(stderr, "error: --P must be >= 1\n");
        return 2;
      }
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      std::string doc = "P,count,seconds\n";
      if (!projective || c_count->count("--weighted")) {
        WeightHandle wh;
        if (int rc = make_weight(ph, wh)) return rc;
        double value = 0, secs = 0;
        auto st = clab_count_weighted(ph.p, wh.w,
                                      static_cast<double>(P_int), &value,
                                      &secs);
        if (st != CLAB_OK) return fail_with(st);
        doc += std::to_string(P_int) + "," + fmt(value) + "," +
               (timing ? fmt(secs) : "0") + "\n";
      } else {
        int64_t value = 0;
        double secs = 0;
        auto st = clab_count_projective(ph.p, P_int, &value, &secs);
        if (st != CLAB_OK) return fail_with(st);
        doc += std::to_string(P_int) + "," + std::to_string(value) + "," +
               (timing ? fmt(secs) : "0") + "\n";
      }
      emit(doc, out_path);
      return 0;
    }

    if (c_growth->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      std::string doc = "P,count,seconds\n";
      std::vector<double> Ps, counts;
      for (auto& ptext : p_list) {
        int64_t P = std::strtoll(ptext.c_str(), nullptr, 10);
        if (P < 1) {
          std::fprintf(stderr, "error: height bounds must be >= 1\n");
          return 2;
        }
        int64_t value = 0;
        double secs = 0;
        auto st = clab_count_projective(ph.p, P, &value, &secs);
        if (st != CLAB_OK) return fail_with(st);
        doc += std::to_string(P) + "," + std::to_string(value) + "," +
               (timing ? fmt(secs) : "0") + "\n";
        Ps.push_back(static_cast<double>(P));
        counts.push_back(static_cast<double>(value));
      }
      double expnt = 0, intercept = 0, resid = 0;
      auto st = clab_fit_growth(Ps.data(), counts.data(),
                                static_cast<int>(Ps.size()), &expnt,
                                &intercept, &resid);
      if (st != CLAB_OK) return fail_with(st);
      doc += "# exponent=" + fmt(expnt) + " intercept=" + fmt(intercept) +
             " max_residual=" + fmt(resid) + "\n";
      emit(doc, out_path);
      return 0;
    }

    if (c_complete->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      int n = 0;
      clab_poly_dimension(ph.p, &n);
      auto v = parse_i64_list(v_csv);
      v.resize(static_cast<std::size_t>(n), 0);
      double out[2];
      clab_status st;
      if (c_complete->count("--a"))
        st = clab_complete_T(ph.p, a_num, q_mod, v.data(), out);
      else
        st = clab_complete_S(ph.p, u_twist, q_mod, v.data(), out);
      if (st != CLAB_OK) return fail_with(st);
      double mod = std::sqrt(out[0] * out[0] + out[1] * out[1]);
      emit("{\"abs\": " + fmt(mod) + ", \"im\": " + fmt(out[1]) +
               ", \"re\": " + fmt(out[0]) + "}\n",
           out_path);
      return 0;
    }

    if (c_weyl->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      // alpha: plain real, or "a/q", or "a/q+z"
      double alpha = 0;
      auto slash = alpha_text.find('/');
      if (slash == std::string::npos) {
        alpha = std::strtod(alpha_text.c_str(), nullptr);
      } else {
        double a = std::strtod(alpha_text.substr(0, slash).c_str(), nullptr);
        auto rest = alpha_text.substr(slash + 1);
        auto plus = rest.find_first_of("+-", 0);
        double q = std::strtod(rest.substr(0, plus).c_str(), nullptr);
        double z = plus == std::string::npos
                       ? 0.0
                       : std::strtod(rest.substr(plus).c_str(), nullptr);
        if (q == 0) {
          std::fprintf(stderr, "error: alpha denominator is zero\n");
          return 2;
        }
        alpha = a / q + z;
      }
      double out[2];
      auto st = clab_weyl_sum(ph.p, wh.w, P_real, alpha, out);
      if (st != CLAB_OK) return fail_with(st);
      double mod = std::sqrt(out[0] * out[0] + out[1] * out[1]);
      emit("{\"abs\": " + fmt(mod) + ", \"im\": " + fmt(out[1]) +
               ", \"re\": " + fmt(out[0]) + "}\n",
           out_path);
      return 0;
    }

    if (v_orth->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      double residual = 0, direct = 0;
      int64_t grid = 0;
      auto st = clab_verify_orthogonality(ph.p, wh.w, P_real, &residual,
                                          &direct, &grid);
      if (st != CLAB_OK) return fail_with(st);
      emit("{\"count\": " + fmt(direct) + ", \"grid\": " +
               std::to_string(grid) + ", \"residual\": " + fmt(residual) +
               "}\n",
           out_path);
      return residual <= 1e-6 ? 0 : 1;
    }

    if (v_poisson->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      double residual = 0, s_abs = 0;
      auto st = clab_poisson_residual(ph.p, wh.w, P_real, u_twist, q_mod,
                                      z_off, trunc, &residual, &s_abs);
      if (st != CLAB_OK) return fail_with(st);
      double tol = 1e-3 * (1.0 + s_abs);
      emit("{\"residual\": " + fmt(residual) + ", \"s_abs\": " + fmt(s_abs) +
               ", \"tolerance\": " + fmt(tol) + "}\n",
           out_path);
      return residual <= tol ? 0 : 1;
    }

    if (v_mult->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      int n = 0;
      clab_poly_dimension(ph.p, &n);
      auto v = parse_i64_list(v_csv);
      v.resize(static_cast<std::size_t>(n), 0);
      double residual = 0, scale = 0;
      auto st = clab_verify_multiplicativity(ph.p, q_mod, Q_int, u_twist,
                                             v.data(), &residual, &scale);
      if (st != CLAB_OK) return fail_with(st);
      double tol = 1e-8 * (1.0 + scale);
      emit("{\"residual\": " + fmt(residual) + ", \"scale\": " + fmt(scale) +
               ", \"tolerance\": " + fmt(tol) + "}\n",
           out_path);
      return residual <= tol ? 0 : 1;
    }

    if (v_weyl->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      int64_t failures = 0;
      auto st = clab_verify_weyl_linearization(ph.p, trials, seed, &failures);
      if (st != CLAB_OK) return fail_with(st);
      emit("{\"failures\": " + std::to_string(failures) + ", \"trials\": " +
               std::to_string(trials) + "}\n",
           out_path);
      return failures == 0 ? 0 : 1;
    }

    if (v_delta->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      double n_w = 0, main_v = 0, majorant = 0, constant = 0;
      auto st = clab_verify_delta(ph.p, wh.w, P_real, Q_real, &n_w, &main_v,
                                  &majorant, &constant);
      if (st != CLAB_OK) return fail_with(st);
      emit("{\"constant\": " + fmt(constant) + ", \"main\": " + fmt(main_v) +
               ", \"majorant\": " + fmt(majorant) + ", \"n_w\": " + fmt(n_w) +
               "}\n",
           out_path);
      return constant <= 10.0 ? 0 : 1;
    }

    if (v_slice->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      int n = 0;
      clab_poly_dimension(ph.p, &n);
      auto m = parse_i64_list(m_csv);
      if (static_cast<int>(m.size()) != n) {
        std::fprintf(stderr, "error: --m needs %d entries\n", n);
        return 2;
      }
      double residual = 0, lhs = 0, rhs = 0;
      auto st = clab_verify_slice(ph.p, wh.w, P_real, m.data(), &residual,
                                  &lhs, &rhs);
      if (st != CLAB_OK) return fail_with(st);
      emit("{\"lhs\": " + fmt(lhs) + ", \"residual\": " + fmt(residual) +
               ", \"rhs\": " + fmt(rhs) + "}\n",
           out_path);
      return residual <= 1e-9 ? 0 : 1;
    }

    if (r_prop1->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      auto us = v_csv.empty() ? std::vector<int64_t>{0, 1}
                              : parse_i64_list(v_csv);
      u_count = static_cast<int>(us.size());
      StringOut csv;
      double max_ratio = 0;
      double H = H_bound;
      if (H <= 0) H = P_real;  // largest admissible norm bound
      auto st = clab_report_prop1_csv(ph.p, wh.w, P_real, H, q_mod, us.data(),
                                      u_count, z_samples, &csv.s, &max_ratio);
      if (st != CLAB_OK) return fail_with(st);
      emit(std::string(csv.s) + "# max_ratio=" + fmt(max_ratio) + "\n",
           out_path);
      return 0;
    }

    if (r_weyl->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      StringOut csv;
      double max_ratio = 0;
      auto st = clab_report_weyl_bound_csv(ph.p, wh.w, P_real, q_mod,
                                           z_samples, eps, &csv.s, &max_ratio);
      if (st != CLAB_OK) return fail_with(st);
      emit(std::string(csv.s) + "# max_ratio=" + fmt(max_ratio) + "\n",
           out_path);
      return 0;
    }

    if (r_primes->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      StringOut doc;
      auto st = clab_report_prime_bounds_json(ph.p, prime_limit, u_twist,
                                              samples, seed, &doc.s);
      if (st != CLAB_OK) return fail_with(st);
      emit(doc.s, out_path);
      return 0;
    }

    if (c_census->parsed()) {
      StringOut doc;
      double max_ratio = 0;
      auto st = clab_qdecomp_census_json(census_max, &doc.s, &max_ratio);
      if (st != CLAB_OK) return fail_with(st);
      emit(doc.s, out_path);
      return 0;
    }

    if (c_gcd->parsed()) {
      int64_t sum = 0;
      double ratio = 0;
      auto st = clab_gcd_sum(gcd_B, gcd_N, &sum, &ratio);
      if (st != CLAB_OK) return fail_with(st);
      std::printf("%" PRId64 ",%s\n", sum, fmt(ratio).c_str());
      return 0;
    }

    if (c_qd->parsed()) {
      if (!c_qd->count("--q")) {
        std::fprintf(stderr, "error: qdecomp needs --q\n");
        return 2;
      }
      int64_t out[5];
      auto st = clab_qdecomp(q_mod, out);
      if (st != CLAB_OK) return fail_with(st);
      std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64
                  ",%" PRId64 "\n",
                  q_mod, out[0], out[1], out[2], out[3], out[4]);
      return 0;
    }

    if (c_cert->parsed()) {
      StringOut doc;
      int all_ok = 0;
      auto st = clab_certify_json(case_name.c_str(), n_lo,
                                  n_hi < n_lo ? n_lo : n_hi,
                                  include_oor ? 1 : 0, &doc.s, &all_ok);
      if (st != CLAB_OK) return fail_with(st);
      emit(doc.s, out_path);
      return all_ok ? 0 : 1;
    }

    if (c_slice->parsed()) {
      PolyHandle ph;
      if (int rc = make_poly(ph)) return rc;
      WeightHandle wh;
      if (int rc = make_weight(ph, wh)) return rc;
      int n = 0;
      clab_poly_dimension(ph.p, &n);
      auto m = parse_i64_list(m_csv);
      if (static_cast<int>(m.size()) != n) {
        std::fprintf(stderr, "error: --m needs %d entries\n", n);
        return 2;
      }
      StringOut doc;
      auto st = clab_slice_json(ph.p, wh.w, P_real, m.data(), k_level, &doc.s);
      if (st != CLAB_OK) return fail_with(st);
      emit(doc.s, out_path);
      if (do_verify) {
        double residual = 0, lhs = 0, rhs = 0;
        st = clab_verify_slice(ph.p, wh.w, P_real, m.data(), &residual, &lhs,
                               &rhs);
        if (st != CLAB_OK) return fail_with(st);
        std::printf("identity_residual=%s\n", fmt(residual).c_str());
        return residual <= 1e-9 ? 0 : 1;
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  std::fprintf(stderr, "error: no subcommand executed\n");
  return 2;
}
