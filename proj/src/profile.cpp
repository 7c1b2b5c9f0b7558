#include "wallindex/profile.hpp"

#include <cmath>

#include "wallindex/numerics.hpp"

namespace wallindex {

namespace {
double bump(double v) {
  if (v <= 0.0 || v >= 1.0) return 0.0;
  return std::exp(-1.0 / (v * (1.0 - v)));
}

double bump_norm() {
  static const double norm = gl_integrate([](double v) { return bump(v); },
                                          0.0, 1.0, 96);
  return norm;
}
}  // namespace

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  // exploit symmetry for better panel conditioning near the flat ends
  if (u > 0.5)
    return 1.0 - gl_integrate([](double v) { return bump(v); }, u, 1.0, 96) /
                     bump_norm();
  return gl_integrate([](double v) { return bump(v); }, 0.0, u, 96) /
         bump_norm();
}

double smooth_step_deriv(double u) { return bump(u) / bump_norm(); }

double Profile::value_plus() const {
  switch (kind) {
    case Kind::Sharp: return 1.0;
    case Kind::Smoothed: return 1.0 - delta / 2.0;
    case Kind::Cylinder: return 0.0;  // continuous ramp starts at the wall
  }
  return 0.0;
}

double Profile::value_minus() const {
  switch (kind) {
    case Kind::Sharp: return 0.0;
    case Kind::Smoothed: return delta / 2.0;
    case Kind::Cylinder: return 0.0;
  }
  return 0.0;
}

Profile make_profile_f() {
  Profile p;
  p.kind = Profile::Kind::Cylinder;
  p.cyl_len = 1.0;
  return p;
}

Profile make_chi_delta(double delta, double delta0) {
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("make_chi_delta: delta in [0,1]");
  if (!(delta0 > 0.0))
    throw std::invalid_argument("make_chi_delta: delta0 > 0");
  Profile p;
  p.kind = Profile::Kind::Smoothed;
  p.delta = delta;
  p.delta0 = delta0;
  return p;
}

Profile make_sharp() { return Profile{}; }

double chi_delta(const Profile& p, double s) {
  const double d = p.delta, d0 = p.delta0;
  if (s <= -d0) return 0.0;
  if (s < 0.0) return (d / 2.0) * smooth_step((s + d0) / d0);
  if (d == 0.0) return 1.0;
  if (s >= d) return 1.0;
  return 1.0 - d / 2.0 + (d / 2.0) * smooth_step(s / d);
}

WallWeight::WallWeight(const Profile& p, double L) : L_(L) {
  const double ramp_half = L / 6.0;
  fall_a_ = L / 2.0 - ramp_half;
  fall_b_ = L / 2.0 + ramp_half;
  vplus_ = p.value_plus();
  vminus_ = p.value_minus();
  switch (p.kind) {
    case Profile::Kind::Sharp:
      rise_end_ = 0.0;
      tail_start_ = L;
      break;
    case Profile::Kind::Smoothed:
      rise_end_ = p.delta;
      tail_start_ = L - p.delta0;
      break;
    case Profile::Kind::Cylinder:
      rise_end_ = p.cyl_len;
      tail_start_ = L;
      break;
  }
  if (rise_end_ >= fall_a_ || tail_start_ <= fall_b_)
    throw std::invalid_argument("WallWeight: profile widths exceed the torus");
  breaks_ = {0.0, rise_end_, fall_a_, fall_b_, tail_start_, L};
}

double WallWeight::piece(double sigma) const {
  if (sigma < rise_end_)
    return vplus_ + (1.0 - vplus_) * smooth_step(sigma / rise_end_);
  if (sigma < fall_a_) return 1.0;
  if (sigma < fall_b_)
    return 1.0 - smooth_step((sigma - fall_a_) / (fall_b_ - fall_a_));
  if (sigma < tail_start_) return 0.0;
  return vminus_ * smooth_step((sigma - tail_start_) / (L_ - tail_start_));
}

double WallWeight::operator()(double sigma) const {
  sigma = std::fmod(sigma, L_);
  if (sigma < 0.0) sigma += L_;
  return piece(sigma);
}

double WallWeight::deriv(double sigma) const {
  sigma = std::fmod(sigma, L_);
  if (sigma < 0.0) sigma += L_;
  if (sigma < rise_end_)
    return (1.0 - vplus_) * smooth_step_deriv(sigma / rise_end_) / rise_end_;
  if (sigma < fall_a_) return 0.0;
  if (sigma < fall_b_)
    return -smooth_step_deriv((sigma - fall_a_) / (fall_b_ - fall_a_)) /
           (fall_b_ - fall_a_);
  if (sigma < tail_start_) return 0.0;
  return vminus_ *
         smooth_step_deriv((sigma - tail_start_) / (L_ - tail_start_)) /
         (L_ - tail_start_);
}

double WallWeight::jump() const { return vplus_ - vminus_; }

double eta_deform(double s, double delta, double eps1, double eps) {
  if (!(0.0 < eps1 && eps1 < eps))
    throw std::invalid_argument("eta_deform: need 0 < eps1 < eps");
  double eta1;
  double a = std::abs(s);
  if (a <= eps1)
    eta1 = 0.0;
  else if (a >= eps)
    eta1 = a;
  else
    eta1 = a * smooth_step((a - eps1) / (eps - eps1));
  double out = a * (1.0 - delta) + eta1 * delta;
  return s < 0 ? -out : out;
}

}  // namespace wallindex
