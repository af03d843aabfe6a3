#ifndef CUBELAB_WEIGHTS_HPP
#define CUBELAB_WEIGHTS_HPP

// Smooth compactly supported weights.  The workhorse is the product bump
// w1(x) = prod_i gamma(x_i) with gamma(x) = exp(-1/(1-x^2)) inside |x| < 1,
// plus a rescaled variant and the affine compositions produced by hyperplane
// slicing.  Derivative sups are estimated by central finite differences on a
// uniform grid; they are measured metadata, not certified bounds.

#include <functional>
#include <string>
#include <vector>

namespace clab {

double gamma_bump(double x);
double gamma_bump_derivative(double x);  // analytic gamma'(x), test oracle

struct WeightFunction {
  int n = 1;
  double support_radius = 1.0;  // evaluator is exactly 0 outside this box
  std::string name = "w1";
  std::function<double(const double*)> eval;

  double operator()(const std::vector<double>& x) const {
    return eval(x.data());
  }
};

// w1(x) = prod gamma(x_i), support radius exactly 1.
WeightFunction product_weight(int n);

// w1(x/R): the product bump rescaled to support radius R > 0.
WeightFunction box_smooth_weight(int n, double R);

// Parses "w1" or "box-smooth:<R>".
WeightFunction weight_by_name(const std::string& name, int n);

// u |-> w(shift + B*u) where B is n x m (columns = images of coordinates).
// `radius` must bound the support of the composed map; the evaluator itself
// is exact, the radius is a safe enclosure.
WeightFunction composed_weight(const WeightFunction& w,
                               const std::vector<double>& shift,
                               const std::vector<std::vector<double>>& B,
                               double radius);

struct DerivativeSupEstimate {
  double value = 0.0;
  double step = 0.0;
  int grid_per_axis = 0;
};

// Max over all mixed partials of total order j of the grid sup of the
// finite-difference estimate of |d^j w|.  Supports j <= 6 (stencil depth);
// j <= 2 uses 5-point O(h^4) stencils, higher orders the minimal central
// stencils.
DerivativeSupEstimate derivative_sup(const WeightFunction& w, int j,
                                     double h = 1e-3, int grid_per_axis = 0);

}  // namespace clab

#endif
