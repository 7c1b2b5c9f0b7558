#pragma once

#include <optional>

#include "wallindex/fourier_field.hpp"
#include "wallindex/geometry.hpp"
#include "wallindex/profile.hpp"

namespace wallindex {

// Bulk U(N) connection in the axial gauge A_n = 0. Tangential components are
//   A_a(s, xhat) = A^-_a(xhat) + W(s) B_a(xhat) + flux terms,
// with W the transverse wall weight built from the profile. Quantized fluxes
// are carried by transition functions at the periodic seams, so the Fourier
// data itself stays single-valued:
//   flux_transverse  : Chern number in the (last Sigma direction, s) plane
//   flux_sigma12     : Chern number in the (x1, x2) plane of Sigma (n = 4)
struct GaugeConfig {
  TorusGeometry geom;
  int rank = 1;
  std::vector<FourierField> a_minus;  // one per tangential direction, on Sigma
  std::vector<FourierField> b_jump;
  int flux_transverse = 0;
  int flux_sigma12 = 0;
  Profile profile;
  std::optional<WallWeight> weight;

  int sigma_dim() const { return geom.n - 1; }
  const WallWeight& wall_weight() const { return *weight; }

  // tangential connection at transverse position s (cut coordinate in (0,L))
  FourierField tangential(int a, double s) const;
  // one-sided limits at the wall
  FourierField a_limit(int a, bool plus_side) const;
  // jump consistency: A^+ - A^- must reproduce (1 - delta-part) of B; the
  // stored B is the full sharp jump, the profile decides the realized one
  double realized_jump_fraction() const { return weight->jump(); }

  bool sigma_data_constant() const;
  double flux_density_transverse() const;  // tau with A_last = i tau s + ...
  double flux_density_sigma12() const;     // g with F_12 = -i g
};

GaugeConfig assemble_gauge(const TorusGeometry& geom, int rank,
                           std::vector<FourierField> a_minus,
                           std::vector<FourierField> b_jump,
                           const Profile& profile, int flux_transverse = 0,
                           int flux_sigma12 = 0);

// Field strength components. Tangential pairs are spectral in Sigma; the
// transverse components come from the closed-form profile derivative.
struct FieldStrength {
  const GaugeConfig* cfg;
  // F_{ab}(s) for tangential a < b
  FourierField tangential(int a, int b, double s) const;
  // F_{s a}(s) = dW/ds B_a + transverse flux density
  FourierField transverse(int a, double s) const;
  // one-sided wall limits of the tangential components
  FourierField wall_limit(int a, int b, bool plus_side) const;
};

FieldStrength field_strength(const GaugeConfig& cfg);

}  // namespace wallindex
