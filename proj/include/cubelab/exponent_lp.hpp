#ifndef CUBELAB_EXPONENT_LP_HPP
#define CUBELAB_EXPONENT_LP_HPP

// Exact rational linear programming over exponent vectors.  Every dyadic
// case of the final estimate is encoded as: maximize the P-exponent of the
// case's bound over the polytope of admissible dyadic parameters
//   rho  = log_P R        (modulus range, 0 <= rho <= 3/2)
//   rho0..rho3 = log_P R0..R3   (b1, b2, c, d ranges)
//   sigma, with log_P t = -3/2 - sigma  (arc offset range)
// subject to R = R0 R1^2 R2^2 R3, R3 <= R2, the arc-measure constraints and
// the case's V-regime.  A case is certified when the exact optimum is
// <= n - 2.  Simplex with Bland's rule over arbitrary-precision rationals;
// no floating point anywhere near a verdict.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubelab/numeric.hpp"

namespace clab {

inline constexpr int kLpVars = 6;  // rho, rho0, rho1, rho2, rho3, sigma

// Rational coefficient affine in the ambient dimension: a + b*n.
struct AffN {
  Rat a = 0;
  Rat b = 0;
  Rat at(int n) const { return a + b * n; }
};

inline AffN affn(Rat a) { return {a, Rat(0)}; }
inline AffN affn(Rat a, Rat b) { return {a, b}; }
inline Rat frac(long p, long q) { return Rat(p) / q; }

// Linear expression over the LP variables with affine-in-n coefficients.
struct LinExpr {
  std::array<AffN, kLpVars> coef{};
  AffN constant{};

  LinExpr& add(int var, AffN c) {
    coef[var].a += c.a;
    coef[var].b += c.b;
    return *this;
  }
  LinExpr& add_const(AffN c) {
    constant.a += c.a;
    constant.b += c.b;
    return *this;
  }
  LinExpr& add_scaled(const LinExpr& e, AffN s);  // only for n-free s or e
};

enum class Rel { LE, GE, EQ };

struct Constraint {
  LinExpr lhs;   // lhs REL rhs-constant (constant part of lhs moves to rhs)
  Rel rel;
  std::string note;
};

enum class TauRegime { PINNED, BIG_T, SMALL_T };

struct CaseSpec {
  std::string name;
  std::string note;          // which bound route and V-regime the case takes
  int n_lo = 4;
  int n_hi = 60;
  TauRegime regime = TauRegime::PINNED;
  LinExpr objective;                      // P-exponent of the case bound
  std::vector<Constraint> extra;          // branch constraints
  std::optional<AffN> paper_exponent;     // quoted reduced exponent, if any
  std::optional<AffN> paper_r_exponent;   // quoted reduced R-exponent, if any
};

std::vector<CaseSpec> catalog();

// ---------------------------------------------------------------------------
// Exact simplex
// ---------------------------------------------------------------------------

enum class LPStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct LPResult {
  LPStatus status = LPStatus::OPTIMAL;
  Rat optimum = 0;                // includes the objective constant
  std::vector<Rat> vertex;        // kLpVars entries
  std::vector<Rat> duals;         // one multiplier per constraint row
  Rat dual_value = 0;             // duals . rhs + objective constant
};

struct DenseConstraint {
  std::vector<Rat> coef;
  Rel rel;
  Rat rhs;
};

// maximize obj.x + obj_const subject to rows, x >= 0.
LPResult simplex_max(const std::vector<DenseConstraint>& rows,
                     const std::vector<Rat>& obj, const Rat& obj_const);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

struct CaseCertificate {
  std::string case_name;
  int n = 0;
  LPStatus status = LPStatus::OPTIMAL;
  bool infeasible_vacuous = false;  // empty polytope: nothing to bound
  Rat optimum = 0;
  Rat target = 0;  // n - 2
  Rat margin = 0;  // target - optimum
  bool certified = false;
  bool in_range = true;
  std::vector<Rat> vertex;
  std::vector<Rat> duals;
  Rat dual_value = 0;
};

// Instantiates the case polytope at dimension n (n >= 4) and solves exactly.
CaseCertificate certify_case(const CaseSpec& spec, int n);

// All cases whose validity window contains n; with include_out_of_range the
// whole catalog is evaluated and out-of-window cases are marked.
std::vector<CaseCertificate> certify_all(int n, bool include_out_of_range);

struct SweepRow {
  std::string case_name;
  int smallest_certified_n = -1;          // within the case window
  std::optional<int> paper_threshold;     // smallest n with quoted bound <= n-2
  std::optional<int> paper_r_sign_change; // smallest n with quoted R-exponent <= 0
};

struct SweepResult {
  std::vector<CaseCertificate> certificates;
  std::vector<SweepRow> thresholds;
};

SweepResult sweep(const std::string& case_name_or_all, int n_lo, int n_hi);

struct MinInterpolation {
  double bound = 0.0;
  bool holds = false;
};

// bound = prod values_i ^ weights_i; holds = (min values <= bound).
MinInterpolation interpolate_min(const std::vector<double>& values,
                                 const std::vector<Rat>& weights);

// Instantiated dense rows for a case (for diagnostics and property tests).
std::vector<DenseConstraint> case_rows(const CaseSpec& spec, int n);
std::vector<Rat> case_objective(const CaseSpec& spec, int n, Rat& constant);

}  // namespace clab

#endif
