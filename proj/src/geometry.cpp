#include "wallindex/geometry.hpp"

#include <cmath>

namespace wallindex {

TorusGeometry build_torus(int n, const std::vector<double>& lengths) {
  if (n != 2 && n != 4)
    throw std::invalid_argument("build_torus: dimension must be 2 or 4");
  if (static_cast<int>(lengths.size()) != n)
    throw std::invalid_argument("build_torus: need one length per direction");
  for (double L : lengths)
    if (!(L > 0.0))
      throw std::invalid_argument("build_torus: side lengths must be positive");
  TorusGeometry g;
  g.n = n;
  g.lengths = lengths;
  return g;
}

long FourierModeSet::index_of(const std::vector<int>& k) const {
  long idx = 0;
  for (std::size_t d = 0; d < cutoffs.size(); ++d) {
    if (std::abs(k[d]) > cutoffs[d]) return -1;
    idx = idx * (2 * cutoffs[d] + 1) + (k[d] + cutoffs[d]);
  }
  return idx;
}

FourierModeSet build_modes(const TorusGeometry& geom,
                           const std::vector<int>& cutoffs) {
  if (cutoffs.size() != geom.lengths.size())
    throw std::invalid_argument("build_modes: one cutoff per direction");
  for (int c : cutoffs)
    if (c < 0) throw std::invalid_argument("build_modes: cutoffs must be >= 0");

  FourierModeSet ms;
  ms.cutoffs = cutoffs;
  std::size_t total = 1;
  for (int c : cutoffs) total *= static_cast<std::size_t>(2 * c + 1);
  ms.modes.reserve(total);
  ms.momenta.reserve(total);

  std::vector<int> k(cutoffs.size(), 0);
  for (std::size_t d = 0; d < cutoffs.size(); ++d) k[d] = -cutoffs[d];
  while (true) {
    ms.modes.push_back(k);
    std::vector<double> p(k.size());
    for (std::size_t d = 0; d < k.size(); ++d)
      p[d] = 2.0 * M_PI * k[d] / geom.lengths[d];
    ms.momenta.push_back(p);
    // odometer increment
    std::size_t d = k.size();
    while (d > 0) {
      --d;
      if (k[d] < cutoffs[d]) {
        ++k[d];
        for (std::size_t e = d + 1; e < k.size(); ++e) k[e] = -cutoffs[e];
        break;
      }
      if (d == 0) return ms;
    }
  }
}

double gaussian_coordinate(const TorusGeometry& geom,
                           const std::vector<double>& point) {
  const double L = geom.transverse_length();
  double s = std::fmod(point[geom.wall_direction()], L);
  if (s > L / 2.0) s -= L;
  if (s <= -L / 2.0) s += L;
  return s;
}

WallPatch make_wall_patch(const TorusGeometry& geom, double epsilon, double l) {
  if (!(epsilon > 0.0) || epsilon >= geom.transverse_length() / 2.0)
    throw std::invalid_argument(
        "make_wall_patch: need 0 < epsilon < L_n / 2");
  if (!(l > 0.0)) throw std::invalid_argument("make_wall_patch: l > 0");
  return WallPatch{epsilon, l};
}

}  // namespace wallindex
