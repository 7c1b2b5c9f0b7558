#pragma once

#include <stdexcept>
#include <vector>

namespace wallindex {

// Smooth step f(u) = int_0^u exp(-1/(v(1-v))) dv / int_0^1 ..., extended by
// 0 and 1 outside [0,1]. All derivatives vanish at both endpoints.
double smooth_step(double u);
double smooth_step_deriv(double u);

// Transverse interpolation profiles for the connection jump.
struct Profile {
  enum class Kind { Sharp, Smoothed, Cylinder };
  Kind kind = Kind::Sharp;
  double delta = 0.0;    // Smoothed: homotopy parameter in [0,1]
  double delta0 = 0.5;   // Smoothed: ramp width on the negative side
  double cyl_len = 1.0;  // Cylinder: length of the pasted segment

  // one-sided values at the wall; the jump of the interpolant at s = 0 is
  // value(0+) - value(0-) = 1 - delta for Smoothed, 1 for Sharp, 0 for Cylinder
  double value_plus() const;
  double value_minus() const;
};

Profile make_profile_f();                       // Cylinder of unit length
Profile make_chi_delta(double delta, double delta0);
Profile make_sharp();

// chi^delta evaluated near the wall: 0 for s <= -delta0, 1 for s >= delta,
// one-sided values delta/2 and 1 - delta/2 at s = 0, ramps built from the
// smooth step so the function is smooth away from s = 0.
double chi_delta(const Profile& p, double s);

// Global transverse weight W on the cut circle, parametrised by sigma in
// (0, L): the connection is A^- + W(sigma) B. W(0+) and W(L-) are the
// one-sided wall values; a smooth return ramp around the antipode brings the
// weight back so the only discontinuity sits at the wall slice.
class WallWeight {
 public:
  WallWeight(const Profile& p, double L);
  double operator()(double sigma) const;
  double deriv(double sigma) const;
  double jump() const;  // W(0+) - W(L-)
  const std::vector<double>& breakpoints() const { return breaks_; }
  double period() const { return L_; }

 private:
  double L_;
  double rise_end_;           // wall-side ramp [0, rise_end]
  double fall_a_, fall_b_;    // return ramp around the antipode
  double tail_start_;         // [tail_start, L] ramp up to value_minus
  double vplus_, vminus_;
  double piece(double sigma) const;
  std::vector<double> breaks_;
};

// Geometry deformation profile of the product-structure homotopy:
// eta^1(s) = 0 for 0 <= s <= eps1, s for s >= eps, smooth in between;
// eta^delta(s) = s (1-delta) + eta^1(s) delta.
double eta_deform(double s, double delta, double eps1, double eps);

}  // namespace wallindex
