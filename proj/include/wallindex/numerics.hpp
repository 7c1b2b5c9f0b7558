#pragma once

#include <cstddef>
#include <vector>

namespace wallindex {

// Gauss-Legendre nodes/weights on [-1,1]; cached per order.
struct Quadrature {
  std::vector<double> x;
  std::vector<double> w;
};
const Quadrature& gauss_legendre(int order);

// integral of fn over [a,b] with a single GL panel
template <typename F>
double gl_integrate(F&& fn, double a, double b, int order = 64) {
  const Quadrature& q = gauss_legendre(order);
  double acc = 0.0;
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  for (std::size_t i = 0; i < q.x.size(); ++i)
    acc += q.w[i] * fn(c + h * q.x[i]);
  return acc * h;
}

// Neville extrapolation of samples (t_j, y_j) to t -> 0
double extrapolate_to_zero(const std::vector<double>& t,
                           const std::vector<double>& y,
                           double* error_estimate = nullptr);

}  // namespace wallindex
