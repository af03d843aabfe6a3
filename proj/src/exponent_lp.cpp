#include "cubelab/exponent_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clab {

namespace {
enum Var { RHO = 0, R0 = 1, R1 = 2, R2 = 3, R3 = 4, SIG = 5 };
}

LinExpr& LinExpr::add_scaled(const LinExpr& e, AffN s) {
  for (int v = 0; v < kLpVars; ++v) {
    if (e.coef[v].b != 0 && s.b != 0)
      throw std::logic_error("quadratic n-dependence in exponent expression");
    coef[v].a += s.a * e.coef[v].a;
    coef[v].b += s.a * e.coef[v].b + s.b * e.coef[v].a;
  }
  if (e.constant.b != 0 && s.b != 0)
    throw std::logic_error("quadratic n-dependence in exponent expression");
  constant.a += s.a * e.constant.a;
  constant.b += s.a * e.constant.b + s.b * e.constant.a;
  return *this;
}

// ---------------------------------------------------------------------------
// Case catalog
// ---------------------------------------------------------------------------

namespace {

LinExpr tau_expr() {  // log_P t = -3/2 - sigma
  LinExpr e;
  e.add_const(affn(frac(-3, 2)));
  e.add(SIG, affn(Rat(-1)));
  return e;
}

LinExpr v_expr(TauRegime regime) {  // log_P V
  LinExpr e;
  switch (regime) {
    case TauRegime::PINNED:  // V ~ R^{1/2} P^{-1/4}
      e.add(RHO, affn(frac(1, 2)));
      e.add_const(affn(frac(-1, 4)));
      break;
    case TauRegime::BIG_T:  // V ~ R t^{1/2} P^{1/2}
      e.add(RHO, affn(Rat(1)));
      e.add(SIG, affn(frac(-1, 2)));
      e.add_const(affn(frac(-1, 4)));
      break;
    case TauRegime::SMALL_T:  // V ~ R / P
      e.add(RHO, affn(Rat(1)));
      e.add_const(affn(Rat(-1)));
      break;
  }
  return e;
}

LinExpr cube_expr() {  // log_P (c^2 d) = 2 rho2 + rho3
  LinExpr e;
  e.add(R2, affn(Rat(2)));
  e.add(R3, affn(Rat(1)));
  return e;
}

// modulus count over the box, sum_q 1 ~ R0 R1 R2^{1/2} R3^{1/2}
LinExpr count_expr() {
  LinExpr e;
  e.add(R0, affn(Rat(1)));
  e.add(R1, affn(Rat(1)));
  e.add(R2, affn(frac(1, 2)));
  e.add(R3, affn(frac(1, 2)));
  return e;
}

// count with the extra b1^{-1/2} gain from the gcd average
LinExpr count_gcd_expr() {
  LinExpr e = count_expr();
  e.add(R0, affn(frac(-1, 2)));
  return e;
}

Constraint make_ge(LinExpr lhs, std::string note) {
  return {std::move(lhs), Rel::GE, std::move(note)};
}
Constraint make_le(LinExpr lhs, std::string note) {
  return {std::move(lhs), Rel::LE, std::move(note)};
}

// V-regime constraints, as expressions compared against 0.
Constraint large_V(TauRegime r) {
  LinExpr e = v_expr(r);
  LinExpr r2;
  r2.add(R2, affn(Rat(-1)));
  e.add_scaled(r2, affn(Rat(1)));
  return make_ge(std::move(e), "V >= c");
}
Constraint below_c(TauRegime r) {
  LinExpr e = v_expr(r);
  e.add(R2, affn(Rat(-1)));
  return make_le(std::move(e), "V <= c");
}
Constraint above_cbrt(TauRegime r) {
  LinExpr e = v_expr(r);
  e.add(R2, affn(frac(-2, 3)));
  e.add(R3, affn(frac(-1, 3)));
  return make_ge(std::move(e), "V >= (c^2 d)^{1/3}");
}
Constraint small_V(TauRegime r) {
  LinExpr e = v_expr(r);
  e.add(R2, affn(frac(-2, 3)));
  e.add(R3, affn(frac(-1, 3)));
  return make_le(std::move(e), "V <= (c^2 d)^{1/3}");
}
Constraint rho_le(Rat bound, std::string note) {
  LinExpr e;
  e.add(RHO, affn(Rat(1)));
  e.add_const(affn(-bound));
  return make_le(std::move(e), std::move(note));
}
Constraint rho_ge(Rat bound, std::string note) {
  LinExpr e;
  e.add(RHO, affn(Rat(1)));
  e.add_const(affn(-bound));
  return make_ge(std::move(e), std::move(note));
}

// error-term prefactor: P^{n-3} q^{1-n/2} per modulus
LinExpr err_base() {
  LinExpr e;
  e.add_const(affn(Rat(-3), Rat(1)));
  e.add(RHO, affn(Rat(1), frac(-1, 2)));
  return e;
}

// integral-term prefactors, with count and modulus power folded as in the
// per-box displays: t R^{3/2-n/2} c^{-1/2} (gcd route) and
// t R^{2-n/2} c^{-3/2} d^{-1/2} (minimum route)
LinExpr main_a_base() {
  LinExpr e = tau_expr();
  e.add_const(affn(Rat(0), Rat(1)));
  e.add(RHO, affn(frac(3, 2), frac(-1, 2)));
  e.add(R2, affn(frac(-1, 2)));
  return e;
}
LinExpr main_b_base() {
  LinExpr e = tau_expr();
  e.add_const(affn(Rat(0), Rat(1)));
  e.add(RHO, affn(Rat(2), frac(-1, 2)));
  e.add(R2, affn(frac(-3, 2)));
  e.add(R3, affn(frac(-1, 2)));
  return e;
}

CaseSpec make_case(std::string name, std::string note, int lo, int hi,
                   TauRegime regime, LinExpr obj,
                   std::vector<Constraint> extra) {
  CaseSpec s;
  s.name = std::move(name);
  s.note = std::move(note);
  s.n_lo = lo;
  s.n_hi = hi;
  s.regime = regime;
  s.objective = std::move(obj);
  s.extra = std::move(extra);
  return s;
}

}  // namespace

std::vector<CaseSpec> catalog() {
  std::vector<CaseSpec> cases;
  const auto P = TauRegime::PINNED;
  const auto B = TauRegime::BIG_T;
  const auto S = TauRegime::SMALL_T;

  {  // gcd-cancellation route, V part of W^n
    LinExpr f = err_base();
    f.add_scaled(count_gcd_expr(), affn(Rat(1)));
    f.add_scaled(v_expr(P), affn(Rat(0), Rat(1)));
    auto c = make_case("err-kloosterman-V",
                       "dissection error, gcd-average route, W ~ V part", 4,
                       60, P, std::move(f), {});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {  // gcd-cancellation route, (c^2 d)^{1/3} part of W^n
    LinExpr f = err_base();
    f.add_scaled(count_gcd_expr(), affn(Rat(1)));
    f.add_scaled(cube_expr(), affn(Rat(0), frac(1, 3)));
    auto c = make_case("err-kloosterman-cube",
                       "dissection error, gcd-average route, W ~ (c^2 d)^{1/3} part",
                       4, 60, P, std::move(f), {});
    c.paper_r_exponent = affn(frac(3, 2), frac(-1, 6));
    cases.push_back(std::move(c));
  }
  {  // Hessian-kernel route M2, V >= c
    LinExpr f = err_base();
    f.add_scaled(count_expr(), affn(Rat(1)));
    f.add(R2, affn(Rat(0), Rat(1)));
    LinExpr vr2 = v_expr(P);
    vr2.add(R2, affn(Rat(-1)));
    f.add_scaled(vr2, affn(frac(-3, 2), Rat(1)));
    auto c = make_case("err-hessian-largeV",
                       "dissection error, kernel-count route, V >= c", 4, 60,
                       P, std::move(f), {large_V(P)});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {  // interpolated M2^{3/10} M3^{7/10}, (c^2 d)^{1/3} <= V < c
    LinExpr f = err_base();
    f.add_scaled(count_expr(), affn(Rat(1)));
    f.add(R2, affn(Rat(0), frac(3, 10)));
    f.add_scaled(v_expr(P), affn(Rat(0), frac(7, 10)));
    auto c = make_case("err-interp-midV",
                       "dissection error, kernel/counting interpolation, mid V",
                       4, 60, P, std::move(f), {below_c(P), above_cbrt(P)});
    c.paper_exponent = affn(frac(-9, 8), frac(33, 40));
    cases.push_back(std::move(c));
  }
  {  // counting route M3 alone, V below (c^2 d)^{1/3}, deployed at n = 5
    LinExpr f = err_base();
    f.add_scaled(count_expr(), affn(Rat(1)));
    LinExpr m3 = cube_expr();
    m3.add_scaled(v_expr(P), affn(Rat(-1)));
    f.add_scaled(m3, affn(Rat(0), frac(1, 2)));
    auto c = make_case("err-poisson-smallV-n5",
                       "dissection error, counting route, small V, n = 5 path",
                       4, 5, P, std::move(f), {small_V(P)});
    c.paper_exponent = affn(Rat(-1), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {  // differencing route for R < P, small V, n >= 6
    LinExpr f;
    f.add_const(affn(Rat(-3), Rat(1)));
    f.add_const(affn(Rat(0), frac(-3, 16)));
    f.add(RHO, affn(Rat(1)));
    f.add_scaled(count_expr(), affn(Rat(1)));
    auto c = make_case("err-weyl-smallV",
                       "dissection error, differencing route, small V, R < P",
                       6, 60, P, std::move(f),
                       {small_V(P), rho_le(Rat(1), "R <= P")});
    c.paper_exponent = affn(Rat(-1), frac(13, 16));
    cases.push_back(std::move(c));
  }
  {  // counting route for R >= P, small V, n >= 6
    LinExpr f = err_base();
    f.add_scaled(count_expr(), affn(Rat(1)));
    LinExpr m3 = cube_expr();
    m3.add_scaled(v_expr(P), affn(Rat(-1)));
    f.add_scaled(m3, affn(Rat(0), frac(1, 2)));
    auto c = make_case("err-poisson-smallV",
                       "dissection error, counting route, small V, R >= P", 6,
                       60, P, std::move(f),
                       {small_V(P), rho_ge(Rat(1), "R >= P")});
    c.paper_exponent = affn(frac(-5, 3), frac(7, 8));
    cases.push_back(std::move(c));
  }

  // --- integral-term cases, gcd-average route -----------------------------
  {
    LinExpr f = main_a_base();
    f.add_scaled(v_expr(B), affn(Rat(0), Rat(1)));
    auto c = make_case("main-kloosterman-V-bigt",
                       "arc integral, gcd-average route, W ~ V, t >= P^-3", 4,
                       60, B, std::move(f), {});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {
    LinExpr f = main_a_base();
    f.add_scaled(v_expr(S), affn(Rat(0), Rat(1)));
    auto c = make_case("main-kloosterman-V-smallt",
                       "arc integral, gcd-average route, W ~ V, t < P^-3", 4,
                       60, S, std::move(f), {});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {  // cube part of W with the differencing supplement, interpolated 1/3:2/3
    LinExpr f;
    f.add_const(affn(Rat(0), Rat(1)));
    f.add_const(affn(Rat(0), frac(-1, 4)));
    f.add_scaled(tau_expr(), affn(Rat(1), frac(-1, 12)));
    f.add(RHO, affn(frac(11, 6), frac(-1, 4)));
    f.add_scaled(cube_expr(), affn(frac(-1, 2), frac(1, 9)));
    cases.push_back(make_case(
        "main-kloosterman-cube-bigt",
        "arc integral, gcd/differencing interpolation, W ~ (c^2 d)^{1/3}, t >= P^-3",
        4, 60, B, std::move(f), {}));
  }
  {
    LinExpr f = main_a_base();
    f.add_scaled(cube_expr(), affn(Rat(0), frac(1, 3)));
    auto c = make_case("main-kloosterman-cube-smallt",
                       "arc integral, gcd-average route, W ~ (c^2 d)^{1/3}, t < P^-3",
                       4, 60, S, std::move(f), {});
    c.paper_exponent = affn(Rat(-1), frac(3, 4));
    cases.push_back(std::move(c));
  }

  // --- integral-term cases, minimum route ---------------------------------
  {
    LinExpr f = main_b_base();
    f.add(R2, affn(Rat(0), Rat(1)));
    LinExpr vr2 = v_expr(B);
    vr2.add(R2, affn(Rat(-1)));
    f.add_scaled(vr2, affn(frac(-3, 2), Rat(1)));
    auto c = make_case("main-hessian-largeV-bigt",
                       "arc integral, kernel-count route, V >= c, t >= P^-3",
                       4, 60, B, std::move(f), {large_V(B)});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {
    LinExpr f = main_b_base();
    f.add(R2, affn(Rat(0), frac(3, 10)));
    f.add_scaled(v_expr(B), affn(Rat(0), frac(7, 10)));
    auto c = make_case("main-interp-midV-bigt",
                       "arc integral, kernel/counting interpolation, mid V, t >= P^-3",
                       4, 60, B, std::move(f), {below_c(B), above_cbrt(B)});
    c.paper_exponent = affn(frac(-9, 8), frac(33, 40));
    cases.push_back(std::move(c));
  }
  {  // A^{1/10} B^{1/5} C^{7/10} interpolation, small V, t >= P^-3
    LinExpr f;
    f.add_const(affn(Rat(0), Rat(1)));
    f.add_const(affn(Rat(0), frac(-5, 16)));
    f.add_scaled(tau_expr(), affn(Rat(1), frac(-11, 80)));
    f.add(RHO, affn(Rat(2), frac(-27, 80)));
    f.add(R2, affn(frac(-3, 2), frac(3, 10)));
    f.add(R3, affn(frac(-1, 2), frac(1, 10)));
    cases.push_back(make_case(
        "main-interp-smallV-bigt",
        "arc integral, kernel/counting/differencing interpolation, small V, t >= P^-3",
        4, 10, B, std::move(f), {small_V(B)}));
  }
  {  // differencing route alone, small V, t >= P^-3, n >= 11
    LinExpr f = main_b_base();
    LinExpr m4;
    m4.add(RHO, affn(Rat(0), frac(3, 8)));
    m4.add_scaled(tau_expr(), affn(Rat(0), frac(-1, 8)));
    m4.add_const(affn(Rat(0), frac(-3, 8)));
    // main_b_base already contains one tau; M4's extra tau power comes from
    // min{1,(tP^3)^{-n/8}} = (tP^3)^{-n/8} on this branch.
    f.add_scaled(m4, affn(Rat(1)));
    cases.push_back(make_case(
        "main-weyl-smallV-bigt",
        "arc integral, differencing route, small V, t >= P^-3, large n", 11,
        60, B, std::move(f), {small_V(B)}));
  }
  {
    LinExpr f = main_b_base();
    f.add(R2, affn(Rat(0), Rat(1)));
    LinExpr vr2 = v_expr(S);
    vr2.add(R2, affn(Rat(-1)));
    f.add_scaled(vr2, affn(frac(-3, 2), Rat(1)));
    auto c = make_case("main-hessian-largeV-smallt",
                       "arc integral, kernel-count route, V >= c, t < P^-3", 4,
                       60, S, std::move(f), {large_V(S)});
    c.paper_exponent = affn(frac(-3, 4), frac(3, 4));
    cases.push_back(std::move(c));
  }
  {
    LinExpr f = main_b_base();
    f.add(R2, affn(Rat(0), frac(3, 10)));
    f.add_scaled(v_expr(S), affn(Rat(0), frac(7, 10)));
    auto c = make_case("main-interp-midV-smallt",
                       "arc integral, kernel/counting interpolation, mid V, t < P^-3",
                       4, 60, S, std::move(f), {below_c(S), above_cbrt(S)});
    c.paper_exponent = affn(frac(-9, 8), frac(33, 40));
    cases.push_back(std::move(c));
  }
  // A^{1/10} B^{11/30} C^{8/15} interpolation, small V, t < P^-3
  auto smallv_interp_smallt = [&]() {
    LinExpr f = main_b_base();
    f.add(R2, affn(Rat(0), frac(1, 10)));
    LinExpr m3;  // log_P (P c^2 d / R) = 1 + 2 rho2 + rho3 - rho
    m3.add_const(affn(Rat(1)));
    m3.add(R2, affn(Rat(2)));
    m3.add(R3, affn(Rat(1)));
    m3.add(RHO, affn(Rat(-1)));
    f.add_scaled(m3, affn(Rat(0), frac(11, 60)));
    f.add(RHO, affn(Rat(0), frac(1, 5)));
    return f;
  };
  cases.push_back(make_case(
      "main-interp-smallV-n5",
      "arc integral, three-way interpolation, small V, t < P^-3, n = 5 path",
      4, 5, S, smallv_interp_smallt(), {small_V(S)}));
  {
    auto c = make_case(
        "main-interp-smallV-bigR",
        "arc integral, three-way interpolation, small V, t < P^-3, R >= P^{7/10}",
        6, 15, S, smallv_interp_smallt(),
        {small_V(S), rho_ge(frac(7, 10), "R >= P^{7/10}")});
    c.paper_exponent = affn(frac(-17, 8), frac(121, 120));
    cases.push_back(std::move(c));
  }
  {
    LinExpr f = main_b_base();
    f.add(RHO, affn(Rat(0), frac(3, 8)));
    auto c = make_case(
        "main-weyl-smallV-smallR",
        "arc integral, differencing route, small V, t < P^-3, R < P^{7/10}", 6,
        15, S, std::move(f),
        {small_V(S), rho_le(frac(7, 10), "R <= P^{7/10}")});
    c.paper_exponent = affn(frac(-8, 5), frac(73, 80));
    cases.push_back(std::move(c));
  }
  {
    LinExpr f = main_b_base();
    f.add(RHO, affn(Rat(0), frac(3, 8)));
    auto c = make_case(
        "main-weyl-smallV-bign",
        "arc integral, differencing route, small V, t < P^-3, n >= 16", 16, 60,
        S, std::move(f), {small_V(S)});
    c.paper_exponent = affn(Rat(-3), Rat(1));
    cases.push_back(std::move(c));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// Dense instantiation
// ---------------------------------------------------------------------------

std::vector<DenseConstraint> case_rows(const CaseSpec& spec, int n) {
  std::vector<DenseConstraint> rows;
  auto densify = [&](const LinExpr& e, Rel rel) {
    DenseConstraint row;
    row.coef.resize(kLpVars);
    for (int v = 0; v < kLpVars; ++v) row.coef[v] = e.coef[v].at(n);
    row.rel = rel;
    row.rhs = -e.constant.at(n);
    return row;
  };

  // R = R0 R1^2 R2^2 R3
  LinExpr eq;
  eq.add(RHO, affn(Rat(1)));
  eq.add(R0, affn(Rat(-1)));
  eq.add(R1, affn(Rat(-2)));
  eq.add(R2, affn(Rat(-2)));
  eq.add(R3, affn(Rat(-1)));
  rows.push_back(densify(eq, Rel::EQ));

  // R <= P^{3/2}
  LinExpr cap;
  cap.add(RHO, affn(Rat(1)));
  cap.add_const(affn(frac(-3, 2)));
  rows.push_back(densify(cap, Rel::LE));

  // d <= c
  LinExpr dc;
  dc.add(R3, affn(Rat(1)));
  dc.add(R2, affn(Rat(-1)));
  rows.push_back(densify(dc, Rel::LE));

  // arc-offset regime
  switch (spec.regime) {
    case TauRegime::PINNED: {
      LinExpr e;
      e.add(SIG, affn(Rat(1)));
      e.add(RHO, affn(Rat(-1)));
      rows.push_back(densify(e, Rel::EQ));
      break;
    }
    case TauRegime::BIG_T: {
      LinExpr lo;
      lo.add(SIG, affn(Rat(1)));
      lo.add(RHO, affn(Rat(-1)));
      rows.push_back(densify(lo, Rel::GE));
      LinExpr hi;
      hi.add(SIG, affn(Rat(1)));
      hi.add_const(affn(frac(-3, 2)));
      rows.push_back(densify(hi, Rel::LE));
      break;
    }
    case TauRegime::SMALL_T: {
      LinExpr lo;
      lo.add(SIG, affn(Rat(1)));
      lo.add(RHO, affn(Rat(-1)));
      rows.push_back(densify(lo, Rel::GE));
      LinExpr floor;
      floor.add(SIG, affn(Rat(1)));
      floor.add_const(affn(frac(-3, 2)));
      rows.push_back(densify(floor, Rel::GE));
      break;
    }
  }

  for (const auto& c : spec.extra) rows.push_back(densify(c.lhs, c.rel));
  return rows;
}

std::vector<Rat> case_objective(const CaseSpec& spec, int n, Rat& constant) {
  std::vector<Rat> obj(kLpVars);
  for (int v = 0; v < kLpVars; ++v) obj[v] = spec.objective.coef[v].at(n);
  constant = spec.objective.constant.at(n);
  return obj;
}

// ---------------------------------------------------------------------------
// Simplex, two phases, Bland's rule, exact rationals
// ---------------------------------------------------------------------------

namespace {

struct Tableau {
  // rows x cols matrix plus rhs column; basis[i] = column basic in row i
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int row, int col) {
    Rat p = a[row][col];
    for (int j = 0; j < ncols; ++j) a[row][j] /= p;
    rhs[row] /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }
};

// reduced costs r_j = c_j - c_B B^{-1} A_j for the current tableau
std::vector<Rat> reduced_costs(const Tableau& t, const std::vector<Rat>& cost) {
  std::vector<Rat> rc(cost);
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    const Rat& cb = cost[static_cast<std::size_t>(t.basis[i])];
    if (cb == 0) continue;
    for (int j = 0; j < t.ncols; ++j)
      if (t.a[i][j] != 0) rc[static_cast<std::size_t>(j)] -= cb * t.a[i][j];
  }
  return rc;
}

Rat objective_value(const Tableau& t, const std::vector<Rat>& cost) {
  Rat v = 0;
  for (std::size_t i = 0; i < t.a.size(); ++i)
    v += cost[static_cast<std::size_t>(t.basis[i])] * t.rhs[i];
  return v;
}

// Bland: entering = smallest eligible column; leaving = smallest basis index
// among the ratio-test ties.  `allowed` masks columns that may enter.
bool simplex_iterate(Tableau& t, const std::vector<Rat>& cost,
                     const std::vector<bool>& allowed, bool& unbounded) {
  auto rc = reduced_costs(t, cost);
  int enter = -1;
  for (int j = 0; j < t.ncols; ++j)
    if (allowed[static_cast<std::size_t>(j)] &&
        rc[static_cast<std::size_t>(j)] > 0) {
      enter = j;
      break;
    }
  if (enter < 0) return false;  // optimal
  int leave = -1;
  Rat best_ratio = 0;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    if (t.a[i][enter] <= 0) continue;
    Rat ratio = t.rhs[i] / t.a[i][enter];
    if (leave < 0 || ratio < best_ratio ||
        (ratio == best_ratio &&
         t.basis[i] < t.basis[static_cast<std::size_t>(leave)])) {
      leave = static_cast<int>(i);
      best_ratio = ratio;
    }
  }
  if (leave < 0) {
    unbounded = true;
    return false;
  }
  t.pivot(leave, enter);
  return true;
}

}  // namespace

LPResult simplex_max(const std::vector<DenseConstraint>& rows,
                     const std::vector<Rat>& obj, const Rat& obj_const) {
  const int nv = static_cast<int>(obj.size());
  const int m = static_cast<int>(rows.size());

  // normalized rows with rhs >= 0; remember sign flips for dual reporting
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(nv));
  std::vector<Rat> b(m);
  std::vector<Rel> rel(m);
  std::vector<int> flip(m, 1);
  for (int i = 0; i < m; ++i) {
    A[i] = rows[i].coef;
    b[i] = rows[i].rhs;
    rel[i] = rows[i].rel;
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
      flip[i] = -1;
      if (rel[i] == Rel::LE)
        rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE)
        rel[i] = Rel::LE;
    }
  }

  // column layout: structural | slack/surplus | artificial
  int nextra = 0;
  for (int i = 0; i < m; ++i)
    if (rel[i] != Rel::EQ) ++nextra;
  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (rel[i] != Rel::LE) ++nart;

  Tableau t;
  t.ncols = nv + nextra + nart;
  t.a.assign(static_cast<std::size_t>(m), std::vector<Rat>(t.ncols, Rat(0)));
  t.rhs = b;
  t.basis.assign(static_cast<std::size_t>(m), -1);

  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int col = nv;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Rel::EQ) {
      slack_col[i] = col;
      ++col;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Rel::LE) {
      art_col[i] = col;
      ++col;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t.a[i][j] = A[i][j];
    if (rel[i] == Rel::LE) {
      t.a[i][slack_col[i]] = 1;
      t.basis[i] = slack_col[i];
    } else if (rel[i] == Rel::GE) {
      t.a[i][slack_col[i]] = -1;
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    }
  }

  std::vector<bool> allow_all(static_cast<std::size_t>(t.ncols), true);
  std::vector<bool> allow_no_art = allow_all;
  for (int i = 0; i < m; ++i)
    if (art_col[i] >= 0) allow_no_art[static_cast<std::size_t>(art_col[i])] = false;

  LPResult out;

  if (nart > 0) {
    std::vector<Rat> phase1(static_cast<std::size_t>(t.ncols), Rat(0));
    for (int i = 0; i < m; ++i)
      if (art_col[i] >= 0) phase1[static_cast<std::size_t>(art_col[i])] = -1;
    bool unbounded = false;
    int guard = 0;
    while (simplex_iterate(t, phase1, allow_all, unbounded))
      if (++guard > 20000) throw std::logic_error("simplex cycling");
    if (objective_value(t, phase1) != 0) {
      out.status = LPStatus::INFEASIBLE;
      return out;
    }
    // drive zero-level artificials out of the basis; fully zero rows are
    // redundant constraints and get dropped so no artificial stays basic
    for (int i = static_cast<int>(t.a.size()) - 1; i >= 0; --i) {
      if (t.basis[static_cast<std::size_t>(i)] < nv + nextra) continue;
      int piv = -1;
      for (int j = 0; j < nv + nextra; ++j)
        if (t.a[static_cast<std::size_t>(i)][j] != 0) {
          piv = j;
          break;
        }
      if (piv >= 0) {
        t.pivot(i, piv);
      } else {
        t.a.erase(t.a.begin() + i);
        t.rhs.erase(t.rhs.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
  }

  std::vector<Rat> phase2(static_cast<std::size_t>(t.ncols), Rat(0));
  for (int j = 0; j < nv; ++j) phase2[static_cast<std::size_t>(j)] = obj[j];
  bool unbounded = false;
  int guard = 0;
  while (simplex_iterate(t, phase2, allow_no_art, unbounded))
    if (++guard > 20000) throw std::logic_error("simplex cycling");
  if (unbounded) {
    out.status = LPStatus::UNBOUNDED;
    return out;
  }

  out.status = LPStatus::OPTIMAL;
  out.vertex.assign(static_cast<std::size_t>(nv), Rat(0));
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (t.basis[i] < nv)
      out.vertex[static_cast<std::size_t>(t.basis[i])] = t.rhs[i];
  out.optimum = objective_value(t, phase2) + obj_const;

  // duals from the reduced costs of slack/artificial columns
  auto rc = reduced_costs(t, phase2);
  out.duals.assign(static_cast<std::size_t>(m), Rat(0));
  out.dual_value = obj_const;
  for (int i = 0; i < m; ++i) {
    Rat y;
    if (rel[i] == Rel::LE)
      y = -rc[static_cast<std::size_t>(slack_col[i])];
    else if (rel[i] == Rel::GE)
      y = rc[static_cast<std::size_t>(slack_col[i])];
    else
      y = -rc[static_cast<std::size_t>(art_col[i])];
    out.duals[static_cast<std::size_t>(i)] = Rat(flip[i]) * y;
    out.dual_value += y * b[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

CaseCertificate certify_case(const CaseSpec& spec, int n) {
  if (n < 4) throw std::domain_error("certification needs n >= 4");
  CaseCertificate cert;
  cert.case_name = spec.name;
  cert.n = n;
  cert.in_range = n >= spec.n_lo && n <= spec.n_hi;
  cert.target = Rat(n - 2);

  Rat obj_const;
  auto obj = case_objective(spec, n, obj_const);
  auto rows = case_rows(spec, n);
  auto lp = simplex_max(rows, obj, obj_const);
  cert.status = lp.status;
  if (lp.status == LPStatus::UNBOUNDED)
    throw std::logic_error("unbounded exponent polytope for case " + spec.name);
  if (lp.status == LPStatus::INFEASIBLE) {
    cert.infeasible_vacuous = true;
    cert.certified = true;
    return cert;
  }
  cert.optimum = lp.optimum;
  cert.margin = cert.target - lp.optimum;
  cert.certified = lp.optimum <= cert.target;
  cert.vertex = lp.vertex;
  cert.duals = lp.duals;
  cert.dual_value = lp.dual_value;
  return cert;
}

std::vector<CaseCertificate> certify_all(int n, bool include_out_of_range) {
  std::vector<CaseCertificate> out;
  for (const auto& spec : catalog()) {
    bool in = n >= spec.n_lo && n <= spec.n_hi;
    if (!in && !include_out_of_range) continue;
    out.push_back(certify_case(spec, n));
  }
  return out;
}

SweepResult sweep(const std::string& case_name_or_all, int n_lo, int n_hi) {
  if (n_lo < 4 || n_hi > 60 || n_lo > n_hi)
    throw std::domain_error("sweep range must lie in [4, 60]");
  SweepResult res;
  for (const auto& spec : catalog()) {
    if (case_name_or_all != "all" && spec.name != case_name_or_all) continue;
    SweepRow row;
    row.case_name = spec.name;
    for (int n = n_lo; n <= n_hi; ++n) {
      auto cert = certify_case(spec, n);
      if (cert.in_range && cert.certified && row.smallest_certified_n < 0)
        row.smallest_certified_n = n;
      res.certificates.push_back(std::move(cert));
    }
    if (spec.paper_exponent) {
      for (int n = n_lo; n <= n_hi; ++n)
        if (spec.paper_exponent->at(n) <= Rat(n - 2)) {
          row.paper_threshold = n;
          break;
        }
    }
    if (spec.paper_r_exponent) {
      for (int n = n_lo; n <= n_hi; ++n)
        if (spec.paper_r_exponent->at(n) <= 0) {
          row.paper_r_sign_change = n;
          break;
        }
    }
    res.thresholds.push_back(std::move(row));
  }
  if (res.thresholds.empty())
    throw std::domain_error("unknown case: " + case_name_or_all);
  return res;
}

MinInterpolation interpolate_min(const std::vector<double>& values,
                                 const std::vector<Rat>& weights) {
  if (values.empty() || values.size() != weights.size())
    throw std::invalid_argument("values/weights mismatch");
  Rat total = 0;
  for (auto& w : weights) {
    if (w < 0) throw std::domain_error("weights must be non-negative");
    total += w;
  }
  if (total != 1) throw std::domain_error("weights must sum to 1");
  double log_bound = 0;
  double vmin = values[0];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw std::domain_error("values must be positive");
    log_bound += to_double(weights[i]) * std::log(values[i]);
    vmin = std::min(vmin, values[i]);
  }
  MinInterpolation out;
  out.bound = std::exp(log_bound);
  out.holds = vmin <= out.bound * (1 + 1e-12);
  return out;
}

}  // namespace clab
