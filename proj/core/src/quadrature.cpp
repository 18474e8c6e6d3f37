#include "bsieve/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace bsieve {

GaussLegendre::GaussLegendre(int order) {
  if (order < 2) throw std::invalid_argument("GaussLegendre: order >= 2");
  nodes.resize(order);
  weights.resize(order);
  int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[order - 1 - i] = weights[i];
  }
}

const GaussLegendre& gl16() {
  static const GaussLegendre g(16);
  return g;
}

const GaussLegendre& gl32() {
  static const GaussLegendre g(32);
  return g;
}

namespace {

double adapt(const std::function<double(double)>& f, double a, double b,
             double coarse, double tol_abs, int depth) {
  double mid = 0.5 * (a + b);
  double fine = gl32().integrate(f, a, b);
  if (depth <= 0) return fine;
  if (std::fabs(fine - coarse) <= tol_abs) return fine;
  double cl = gl16().integrate(f, a, mid);
  double cr = gl16().integrate(f, mid, b);
  return adapt(f, a, mid, cl, 0.5 * tol_abs, depth - 1) +
         adapt(f, mid, b, cr, 0.5 * tol_abs, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  double coarse = gl16().integrate(f, a, b);
  double scale = std::fabs(gl32().integrate(f, a, b));
  double tol_abs = rel_tol * (scale + 1e-300);
  return adapt(f, a, b, coarse, tol_abs, max_depth);
}

}  // namespace bsieve
