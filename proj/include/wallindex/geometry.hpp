#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wallindex {

// Flat torus T^n with a co-dimension one wall at the zero slice of the last
// coordinate. The transverse coordinate s = x^n is a signed distance to the
// wall; the metric is the identity, so all curvature fields vanish.
struct TorusGeometry {
  int n = 2;                     // even, 2 or 4
  std::vector<double> lengths;   // L_1 .. L_n
  double orientation = +1.0;

  int wall_direction() const { return n - 1; }   // zero-based index of s
  double transverse_length() const { return lengths.back(); }

  double volume() const {
    double v = 1.0;
    for (double L : lengths) v *= L;
    return v;
  }
  // volume of the wall Sigma = T^{n-1}
  double sigma_volume() const { return volume() / lengths.back(); }

  // extrinsic curvature K_a^b of Sigma; identically zero for a flat slice
  double extrinsic_curvature(int /*a*/, int /*b*/) const { return 0.0; }
};

TorusGeometry build_torus(int n, const std::vector<double>& lengths);

// Symmetric Fourier mode set |k_mu| <= cutoff_mu, closed under k -> -k.
struct FourierModeSet {
  std::vector<int> cutoffs;
  std::vector<std::vector<int>> modes;      // lexicographic over directions
  std::vector<std::vector<double>> momenta; // p_mu = 2 pi k_mu / L_mu

  std::size_t size() const { return modes.size(); }
  // position of a mode vector in the enumeration, -1 if outside the cutoffs
  long index_of(const std::vector<int>& k) const;
};

FourierModeSet build_modes(const TorusGeometry& geom,
                           const std::vector<int>& cutoffs);

// Signed distance to the wall, wrapped into (-L_n/2, L_n/2].
double gaussian_coordinate(const TorusGeometry& geom,
                           const std::vector<double>& point);

// Transverse patch data: half-width of the product region and the length of
// the pasted cylinder used by the smooth interpolation family.
struct WallPatch {
  double epsilon = 1.0;
  double cylinder_length = 1.0;
};

WallPatch make_wall_patch(const TorusGeometry& geom, double epsilon, double l);

}  // namespace wallindex
