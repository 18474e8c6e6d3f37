#pragma once

#include <functional>
#include <vector>

namespace bsieve {

// Gauss-Legendre nodes/weights on [-1,1], computed once per order by
// Newton iteration on the Legendre polynomial (no hardcoded tables).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int order);

  // Apply to [a,b].
  template <class F>
  double integrate(F&& f, double a, double b) const {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      acc += weights[i] * f(mid + half * nodes[i]);
    return acc * half;
  }
};

const GaussLegendre& gl16();
const GaussLegendre& gl32();

// Adaptive panel integration: bisects until |GL16 - GL32| on a panel is
// below tol * (|whole| + 1e-300), summing panel GL32 results.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth = 48);

}  // namespace bsieve
