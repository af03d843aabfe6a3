#include "cubelab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace clab {

namespace {

// Descending graded-lex: higher total degree first, then lexicographically
// larger exponent tuple first.
bool grlex_before(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

void CubicPolynomial::normalize() {
  std::map<std::vector<int>, Int> acc;
  for (auto& t : terms_) acc[t.exps] += t.coeff;
  terms_.clear();
  for (auto& [e, c] : acc)
    if (c != 0) terms_.push_back({e, c});
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) {
              return grlex_before(a.exps, b.exps);
            });
}

void CubicPolynomial::add_term(const std::vector<int>& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != n_)
    throw std::invalid_argument("monomial dimension mismatch");
  int d = 0;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    d += e;
  }
  if (d > 3) throw std::domain_error("degree above 3");
  terms_.push_back({exps, coeff});
  normalize();
}

int CubicPolynomial::degree() const {
  int d = 0;
  for (auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

bool CubicPolynomial::is_homogeneous(int d) const {
  for (auto& t : terms_)
    if (t.degree() != d) return false;
  return true;
}

CubicPolynomial CubicPolynomial::operator+(const CubicPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  CubicPolynomial r(n_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

CubicPolynomial CubicPolynomial::operator-(const CubicPolynomial& o) const {
  return *this + o.scaled(-1);
}

CubicPolynomial CubicPolynomial::scaled(const Int& c) const {
  CubicPolynomial r(n_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

CubicPolynomial CubicPolynomial::multiply(const CubicPolynomial& o,
                                          int max_degree) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  CubicPolynomial r(n_);
  for (auto& a : terms_)
    for (auto& b : o.terms_) {
      std::vector<int> e(n_);
      int d = 0;
      for (int i = 0; i < n_; ++i) {
        e[i] = a.exps[i] + b.exps[i];
        d += e[i];
      }
      if (d > max_degree) throw std::domain_error("product degree above cap");
      r.terms_.push_back({std::move(e), a.coeff * b.coeff});
    }
  r.normalize();
  return r;
}

Int CubicPolynomial::evaluate(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("dimension mismatch");
  Int acc = 0;
  for (auto& t : terms_) {
    Int m = t.coeff;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < t.exps[i]; ++e) m *= x[i];
    acc += m;
  }
  return acc;
}

std::int64_t CubicPolynomial::evaluate_i64(const std::int64_t* x) const {
  std::int64_t acc = 0;
  for (auto& t : terms_) {
    std::int64_t m = t.coeff.convert_to<std::int64_t>();
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < t.exps[i]; ++e) m *= x[i];
    acc += m;
  }
  return acc;
}

double CubicPolynomial::evaluate_d(const double* x) const {
  double acc = 0;
  for (auto& t : terms_) {
    double m = to_double(t.coeff);
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < t.exps[i]; ++e) m *= x[i];
    acc += m;
  }
  return acc;
}

double CubicPolynomial::abs_bound(double radius) const {
  double r = std::max(radius, 0.0);
  double acc = 0;
  for (auto& t : terms_)
    acc += std::abs(to_double(t.coeff)) * std::pow(r, t.degree());
  return acc;
}

bool CubicPolynomial::fits_i64(double radius) const {
  for (auto& t : terms_)
    if (t.coeff > Int(INT64_MAX) || t.coeff < Int(INT64_MIN)) return false;
  return abs_bound(radius) < 4.0e18 / 16.0;
}

std::int64_t CubicPolynomial::evaluate_mod(const std::int64_t* x,
                                           std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto& t : terms_) {
    std::int64_t m = to_i64(t.coeff % q);
    if (m < 0) m += q;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < t.exps[i]; ++e) m = (m * mod_reduce(x[i], q)) % q;
    acc = (acc + m) % q;
  }
  return acc;
}

CubicPolynomial CubicPolynomial::cubic_part() const {
  CubicPolynomial r(n_);
  for (auto& t : terms_)
    if (t.degree() == 3) r.terms_.push_back(t);
  return r;
}

CubicPolynomial CubicPolynomial::lower_part() const {
  CubicPolynomial r(n_);
  for (auto& t : terms_)
    if (t.degree() < 3) r.terms_.push_back(t);
  return r;
}

Int CubicPolynomial::sup_norm() const {
  Int m = 0;
  for (auto& t : terms_) m = std::max(m, Int(abs(t.coeff)));
  return m;
}

double CubicPolynomial::scaled_norm(double P) const {
  if (P < 1) throw std::domain_error("scaled norm needs P >= 1");
  double m = 0;
  for (auto& t : terms_)
    m = std::max(m, std::abs(to_double(t.coeff)) * std::pow(P, t.degree() - 3));
  return m;
}

Rat CubicPolynomial::scaled_norm_exact(const Rat& P) const {
  if (P < 1) throw std::domain_error("scaled norm needs P >= 1");
  Rat m = 0;
  for (auto& t : terms_) {
    Rat scale = 1;
    for (int e = t.degree(); e < 3; ++e) scale /= P;
    Rat v = Rat(abs(t.coeff)) * scale;
    if (v > m) m = v;
  }
  return m;
}

void CubicPolynomial::gradient_hessian(const std::vector<Int>& x, Int& value,
                                       std::vector<Int>& grad,
                                       std::vector<std::vector<Int>>& hess)
    const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("dimension mismatch");
  value = evaluate(x);
  grad.assign(n_, Int(0));
  hess.assign(n_, std::vector<Int>(n_, Int(0)));
  for (auto& t : terms_) {
    for (int i = 0; i < n_; ++i) {
      if (t.exps[i] == 0) continue;
      // d/dx_i of the monomial
      Int g = t.coeff * t.exps[i];
      for (int j = 0; j < n_; ++j) {
        int e = t.exps[j] - (j == i ? 1 : 0);
        for (int k = 0; k < e; ++k) g *= x[j];
      }
      grad[i] += g;
      for (int j = 0; j < n_; ++j) {
        int ej = t.exps[j] - (j == i ? 1 : 0);
        if (ej == 0) continue;
        Int h = t.coeff * t.exps[i] * ej;
        for (int l = 0; l < n_; ++l) {
          int e = t.exps[l] - (l == i ? 1 : 0) - (l == j ? 1 : 0);
          for (int k = 0; k < e; ++k) h *= x[l];
        }
        hess[i][j] += h;
      }
    }
  }
}

std::vector<std::int64_t> CubicPolynomial::gradient_mod(const std::int64_t* x,
                                                        std::int64_t p) const {
  std::vector<std::int64_t> grad(n_, 0);
  for (auto& t : terms_) {
    for (int i = 0; i < n_; ++i) {
      if (t.exps[i] == 0) continue;
      std::int64_t g = to_i64((t.coeff * t.exps[i]) % p);
      if (g < 0) g += p;
      for (int j = 0; j < n_; ++j) {
        int e = t.exps[j] - (j == i ? 1 : 0);
        for (int k = 0; k < e; ++k) g = (g * mod_reduce(x[j], p)) % p;
      }
      grad[i] = (grad[i] + g) % p;
    }
  }
  return grad;
}

CubicPolynomial CubicPolynomial::compose_affine(
    const std::vector<std::vector<Int>>& E, const std::vector<Int>& t) const {
  if (static_cast<int>(E.size()) != n_ ||
      static_cast<int>(t.size()) != n_)
    throw std::invalid_argument("affine map dimension mismatch");
  const int m = E.empty() ? 0 : static_cast<int>(E[0].size());
  // Coordinate j becomes the degree-1 polynomial t_j + sum_i E[j][i] u_i.
  std::vector<CubicPolynomial> coord;
  coord.reserve(n_);
  for (int j = 0; j < n_; ++j) {
    CubicPolynomial lin(m);
    if (t[j] != 0) lin.terms_.push_back({std::vector<int>(m, 0), t[j]});
    for (int i = 0; i < m; ++i) {
      if (E[j][i] == 0) continue;
      std::vector<int> e(m, 0);
      e[i] = 1;
      lin.terms_.push_back({std::move(e), E[j][i]});
    }
    lin.normalize();
    coord.push_back(std::move(lin));
  }
  CubicPolynomial out(m);
  CubicPolynomial one(m);
  one.terms_.push_back({std::vector<int>(m, 0), Int(1)});
  for (auto& term : terms_) {
    CubicPolynomial prod = one;
    for (int j = 0; j < n_; ++j)
      for (int e = 0; e < term.exps[j]; ++e) prod = prod.multiply(coord[j]);
    out = out + prod.scaled(term.coeff);
  }
  return out;
}

std::vector<CubicPolynomial> CubicPolynomial::coefficients_in(int axis) const {
  std::vector<CubicPolynomial> out(4, CubicPolynomial(n_));
  for (auto& t : terms_) {
    int e = t.exps[axis];
    Monomial m = t;
    m.exps[axis] = 0;
    out[e].terms_.push_back(std::move(m));
  }
  for (auto& p : out) p.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("expected integer");
    return Int(s.substr(start, pos - start));
  }
};

}  // namespace

CubicPolynomial CubicPolynomial::parse(const std::string& text, int n) {
  Parser p(text);
  struct RawTerm {
    Int coeff;
    std::map<int, int> powers;  // 1-based variable index -> exponent
  };
  std::vector<RawTerm> raw;
  int max_var = 0;

  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    if (p.accept('+')) {
    } else if (p.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;

    RawTerm term;
    term.coeff = sign;
    bool saw_factor = false;
    for (;;) {
      char c = p.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= p.parse_int();
        saw_factor = true;
      } else if (c == 'x' || c == 'X') {
        ++p.pos;
        Int idx = p.parse_int();
        if (idx < 1 || idx > 64)
          throw std::out_of_range("variable index out of range");
        int vi = idx.convert_to<int>();
        int e = 1;
        if (p.accept('^')) {
          Int ee = p.parse_int();
          if (ee < 0 || ee > 3) throw std::domain_error("degree above 3");
          e = ee.convert_to<int>();
        }
        term.powers[vi] += e;
        max_var = std::max(max_var, vi);
        saw_factor = true;
      } else {
        break;
      }
      if (!p.accept('*')) break;
    }
    if (!saw_factor) throw std::invalid_argument("empty term");
    int deg = 0;
    for (auto& [v, e] : term.powers) deg += e;
    if (deg > 3) throw std::domain_error("degree above 3");
    raw.push_back(std::move(term));
  }

  if (n <= 0) n = std::max(max_var, 1);
  if (max_var > n) throw std::out_of_range("variable index out of range");

  CubicPolynomial poly(n);
  for (auto& t : raw) {
    std::vector<int> exps(n, 0);
    for (auto& [v, e] : t.powers) exps[v - 1] = e;
    poly.terms_.push_back({std::move(exps), t.coeff});
  }
  poly.normalize();
  return poly;
}

std::string CubicPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Int c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;

    std::vector<std::string> factors;
    if (c != 1 || t.degree() == 0) factors.push_back(c.str());
    for (int i = 0; i < n_; ++i) {
      if (t.exps[i] == 0) continue;
      std::string f = "x" + std::to_string(i + 1);
      if (t.exps[i] > 1) f += "^" + std::to_string(t.exps[i]);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Tensor and bilinear forms
// ---------------------------------------------------------------------------

SymmetricCubicTensor symmetric_tensor(const CubicPolynomial& g0) {
  if (!g0.is_homogeneous(3) && !g0.is_zero())
    throw std::domain_error("symmetric tensor needs a homogeneous cubic");
  const int n = g0.dimension();
  SymmetricCubicTensor T;
  T.n = n;
  T.c.assign(static_cast<std::size_t>(n) * n * n, Int(0));
  // Monomial c*x_a^3 -> entry (a,a,a) = 6c; c*x_a^2*x_b -> the three
  // orderings of (a,a,b) get 2c each; c*x_a*x_b*x_c -> all six orderings get
  // c.  Then sum T_ijk x_i x_j x_k = 6*g0 exactly.
  for (auto& t : g0.terms()) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < t.exps[i]; ++e) vars.push_back(i);
    if (vars.size() != 3) continue;
    std::sort(vars.begin(), vars.end());
    int orderings = (vars[0] == vars[2]) ? 1 : (vars[0] == vars[1] ||
                                                vars[1] == vars[2]) ? 3 : 6;
    Int entry = t.coeff * (6 / orderings);
    do {
      T.c[(vars[0] * n + vars[1]) * n + vars[2]] += entry;
    } while (std::next_permutation(vars.begin(), vars.end()));
  }
  return T;
}

std::vector<Int> bilinear_system(const SymmetricCubicTensor& T,
                                 const std::vector<Int>& w,
                                 const std::vector<Int>& x) {
  const int n = T.n;
  if (static_cast<int>(w.size()) != n || static_cast<int>(x.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> out(n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      for (int k = 0; k < n; ++k) {
        const Int& c = T.at(i, j, k);
        if (c != 0 && x[k] != 0) out[i] += c * w[j] * x[k];
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Bad primes
// ---------------------------------------------------------------------------

std::vector<std::int64_t> bad_primes(const CubicPolynomial& g0,
                                     std::int64_t limit) {
  if (limit < 2) throw std::domain_error("prime limit below 2");
  if (!g0.is_homogeneous(3) && !g0.is_zero())
    throw std::domain_error("bad_primes needs a homogeneous cubic");
  const int n = g0.dimension();
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_up_to(limit)) {
    bool singular = false;
    std::vector<std::int64_t> x(n, 0);
    // odometer over (Z/p)^n \ {0}
    for (;;) {
      int i = 0;
      while (i < n && x[i] == p - 1) x[i++] = 0;
      if (i == n) break;
      ++x[i];
      auto grad = g0.gradient_mod(x.data(), p);
      bool zero = true;
      for (auto g : grad)
        if (g % p != 0) {
          zero = false;
          break;
        }
      if (zero) {
        singular = true;
        break;
      }
    }
    if (singular) out.push_back(p);
  }
  return out;
}

CubicPolynomial random_cubic(SplitMix64& rng, int n, std::int64_t bound,
                             bool force_cubic) {
  CubicPolynomial g(n);
  std::vector<int> exps(n, 0);
  // enumerate all exponent tuples of total degree <= 3
  std::vector<std::vector<int>> all;
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n) {
      all.push_back(exps);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      exps[i] = e;
      rec(i + 1, rem - e);
    }
    exps[i] = 0;
  };
  rec(0, 3);
  bool has_cubic = false;
  for (auto& e : all) {
    std::int64_t c = rng.uniform(-bound, bound);
    if (c == 0) continue;
    int d = 0;
    for (int v : e) d += v;
    if (d == 3) has_cubic = true;
    g.add_term(e, Int(c));
  }
  if (force_cubic && !has_cubic) {
    std::vector<int> e(n, 0);
    e[static_cast<std::size_t>(rng.uniform(0, n - 1))] = 3;
    std::int64_t c = rng.uniform(1, bound);
    g.add_term(e, Int(c));
  }
  return g;
}

}  // namespace clab
