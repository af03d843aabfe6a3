#include "cubelab/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace clab {

double gamma_bump(double x) {
  if (!(std::abs(x) < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

double gamma_bump_derivative(double x) {
  if (!(std::abs(x) < 1.0)) return 0.0;
  double d = 1.0 - x * x;
  return -2.0 * x / (d * d) * std::exp(-1.0 / d);
}

WeightFunction product_weight(int n) {
  if (n < 1) throw std::domain_error("weight dimension below 1");
  WeightFunction w;
  w.n = n;
  w.support_radius = 1.0;
  w.name = "w1";
  w.eval = [n](const double* x) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
      v *= gamma_bump(x[i]);
      if (v == 0.0) return 0.0;
    }
    return v;
  };
  return w;
}

WeightFunction box_smooth_weight(int n, double R) {
  if (n < 1) throw std::domain_error("weight dimension below 1");
  if (!(R > 0)) throw std::domain_error("support radius must be positive");
  WeightFunction w;
  w.n = n;
  w.support_radius = R;
  w.name = "box-smooth:" + std::to_string(R);
  w.eval = [n, R](const double* x) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
      v *= gamma_bump(x[i] / R);
      if (v == 0.0) return 0.0;
    }
    return v;
  };
  return w;
}

WeightFunction weight_by_name(const std::string& name, int n) {
  if (name == "w1" || name.empty()) return product_weight(n);
  const std::string prefix = "box-smooth:";
  if (name.rfind(prefix, 0) == 0) {
    double R = std::stod(name.substr(prefix.size()));
    return box_smooth_weight(n, R);
  }
  throw std::invalid_argument("unknown weight: " + name);
}

WeightFunction composed_weight(const WeightFunction& w,
                               const std::vector<double>& shift,
                               const std::vector<std::vector<double>>& B,
                               double radius) {
  const int n = w.n;
  const int m = B.empty() ? 0 : static_cast<int>(B[0].size());
  if (static_cast<int>(shift.size()) != n ||
      static_cast<int>(B.size()) != n)
    throw std::invalid_argument("composed weight dimension mismatch");
  WeightFunction out;
  out.n = m;
  out.support_radius = radius;
  out.name = w.name + ":sliced";
  auto base = w.eval;
  out.eval = [n, m, shift, B, base](const double* u) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
      double v = shift[j];
      for (int i = 0; i < m; ++i) v += B[j][i] * u[i];
      x[j] = v;
    }
    return base(x.data());
  };
  return out;
}

// ---------------------------------------------------------------------------
// Finite-difference derivative sups
// ---------------------------------------------------------------------------

namespace {

// Central stencil coefficients (value = sum coeff[i]*f(x + offset[i]*h) / h^m).
struct Stencil {
  std::vector<int> offsets;
  std::vector<double> coeffs;
};

Stencil stencil_for_order(int m) {
  switch (m) {
    case 0:
      return {{0}, {1.0}};
    case 1:  // 5-point, O(h^4)
      return {{-2, -1, 1, 2}, {1.0 / 12, -2.0 / 3, 2.0 / 3, -1.0 / 12}};
    case 2:  // 5-point, O(h^4)
      return {{-2, -1, 0, 1, 2},
              {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12}};
    case 3:
      return {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}};
    case 4:
      return {{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}};
    case 5:
      return {{-3, -2, -1, 1, 2, 3}, {-0.5, 2.0, -2.5, 2.5, -2.0, 0.5}};
    case 6:
      return {{-3, -2, -1, 0, 1, 2, 3},
              {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0}};
    default:
      throw std::domain_error("unsupported stencil depth (order above 6)");
  }
}

// All splittings of total order j over n axes.
void order_splits(int n, int j, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out, int axis = 0) {
  if (axis == n) {
    if (j == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= j; ++e) {
    cur[axis] = e;
    order_splits(n, j - e, cur, out, axis + 1);
  }
  cur[axis] = 0;
}

double mixed_partial_estimate(const WeightFunction& w,
                              const std::vector<double>& x,
                              const std::vector<int>& orders, double h) {
  // Tensor product of per-axis stencils.
  std::vector<Stencil> st;
  double scale = 1.0;
  for (int m : orders) {
    st.push_back(stencil_for_order(m));
    for (int k = 0; k < m; ++k) scale /= h;
  }
  const int n = w.n;
  std::vector<std::size_t> idx(n, 0);
  double acc = 0.0;
  for (;;) {
    double coeff = 1.0;
    std::vector<double> pt = x;
    for (int a = 0; a < n; ++a) {
      coeff *= st[a].coeffs[idx[a]];
      pt[a] += st[a].offsets[idx[a]] * h;
    }
    acc += coeff * w.eval(pt.data());
    int a = 0;
    while (a < n && idx[a] + 1 == st[a].offsets.size()) idx[a++] = 0;
    if (a == n) break;
    ++idx[a];
  }
  return acc * scale;
}

}  // namespace

DerivativeSupEstimate derivative_sup(const WeightFunction& w, int j, double h,
                                     int grid_per_axis) {
  if (j < 0) throw std::domain_error("derivative order below 0");
  if (j > 6) throw std::domain_error("unsupported stencil depth (order above 6)");
  const int n = w.n;
  if (grid_per_axis <= 0) {
    grid_per_axis = n == 1 ? 2001 : n == 2 ? 161 : n == 3 ? 41 : 15;
  }
  std::vector<std::vector<int>> splits;
  std::vector<int> cur(n, 0);
  order_splits(n, j, cur, splits);

  const double R = w.support_radius;
  double best = 0.0;
  std::vector<double> x(n);
  std::vector<std::size_t> gi(n, 0);
  for (;;) {
    for (int a = 0; a < n; ++a)
      x[a] = -R + 2.0 * R * static_cast<double>(gi[a]) /
                       static_cast<double>(grid_per_axis - 1);
    for (auto& orders : splits) {
      double v = std::abs(mixed_partial_estimate(w, x, orders, h));
      if (v > best) best = v;
    }
    int a = 0;
    while (a < n && gi[a] + 1 == static_cast<std::size_t>(grid_per_axis))
      gi[a++] = 0;
    if (a == n) break;
    ++gi[a];
  }
  return {best, h, grid_per_axis};
}

}  // namespace clab
