#include "wallindex/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wallindex {

namespace {
Quadrature compute_gl(int order) {
  Quadrature q;
  q.x.resize(order);
  q.w.resize(order);
  for (int i = 0; i < order; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    q.x[order - 1 - i] = x;
    q.w[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}
}  // namespace

const Quadrature& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1");
  static std::map<int, Quadrature> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
  return it->second;
}

double extrapolate_to_zero(const std::vector<double>& t,
                           const std::vector<double>& y,
                           double* error_estimate) {
  if (t.size() != y.size() || t.empty())
    throw std::invalid_argument("extrapolate_to_zero: bad inputs");
  std::vector<double> T = y;
  const std::size_t n = t.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i + k < n; ++i)
      T[i] = (T[i + 1] * t[i] - T[i] * t[i + k]) / (t[i] - t[i + k]);
  if (error_estimate) {
    // repeat with one fewer ladder point for a consistency gap
    std::vector<double> S(y.begin(), y.end() - 1);
    for (std::size_t k = 1; k + 1 < n; ++k)
      for (std::size_t i = 0; i + k + 1 < n; ++i)
        S[i] = (S[i + 1] * t[i] - S[i] * t[i + k]) / (t[i] - t[i + k]);
    *error_estimate = std::abs(T[0] - S[0]);
  }
  return T[0];
}

}  // namespace wallindex
