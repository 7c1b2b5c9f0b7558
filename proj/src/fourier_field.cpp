#include "wallindex/fourier_field.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace wallindex {

using Mat = Eigen::MatrixXcd;

void FourierField::set(const std::vector<int>& mode, const Mat& value) {
  if (static_cast<int>(mode.size()) != dim_)
    throw std::invalid_argument("FourierField::set: mode dimension");
  if (value.rows() != rank_ || value.cols() != rank_)
    throw std::invalid_argument("FourierField::set: matrix rank");
  coeffs_[mode] = value;
}

void FourierField::add(const std::vector<int>& mode, const Mat& value) {
  auto it = coeffs_.find(mode);
  if (it == coeffs_.end())
    set(mode, value);
  else
    it->second += value;
}

Mat FourierField::at(const std::vector<int>& mode) const {
  auto it = coeffs_.find(mode);
  if (it == coeffs_.end()) return Mat::Zero(rank_, rank_);
  return it->second;
}

Mat FourierField::zero_mode() const {
  return at(std::vector<int>(dim_, 0));
}

bool FourierField::constant() const {
  const std::vector<int> zero(dim_, 0);
  for (const auto& [k, v] : coeffs_)
    if (k != zero && v.norm() > 0.0) return false;
  return true;
}

Mat FourierField::evaluate(const std::vector<double>& x) const {
  Mat out = Mat::Zero(rank_, rank_);
  for (const auto& [k, v] : coeffs_) {
    double phase = 0.0;
    for (int d = 0; d < dim_; ++d)
      phase += 2.0 * M_PI * k[d] * x[d] / lengths_[d];
    out += v * std::exp(std::complex<double>(0.0, phase));
  }
  return out;
}

FourierField FourierField::operator+(const FourierField& o) const {
  FourierField out = *this;
  for (const auto& [k, v] : o.coeffs_) out.add(k, v);
  return out;
}

FourierField FourierField::operator-(const FourierField& o) const {
  FourierField out = *this;
  for (const auto& [k, v] : o.coeffs_) out.add(k, -v);
  return out;
}

FourierField FourierField::operator*(std::complex<double> z) const {
  FourierField out = *this;
  for (auto& [k, v] : out.coeffs_) v *= z;
  return out;
}

FourierField FourierField::mul(const FourierField& o) const {
  FourierField out(dim_, lengths_, rank_);
  for (const auto& [ka, va] : coeffs_)
    for (const auto& [kb, vb] : o.coeffs_) {
      std::vector<int> k(dim_);
      for (int d = 0; d < dim_; ++d) k[d] = ka[d] + kb[d];
      out.add(k, va * vb);
    }
  return out;
}

FourierField FourierField::commutator(const FourierField& o) const {
  return mul(o) - o.mul(*this);
}

FourierField FourierField::partial(int direction) const {
  FourierField out(dim_, lengths_, rank_);
  for (const auto& [k, v] : coeffs_) {
    const double p = 2.0 * M_PI * k[direction] / lengths_[direction];
    if (p != 0.0) out.set(k, std::complex<double>(0.0, p) * v);
  }
  return out;
}

FourierField FourierField::trace() const {
  FourierField out(dim_, lengths_, 1);
  for (const auto& [k, v] : coeffs_) {
    Mat t(1, 1);
    t(0, 0) = v.trace();
    out.add(k, t);
  }
  return out;
}

FourierField FourierField::dagger() const {
  FourierField out(dim_, lengths_, rank_);
  for (const auto& [k, v] : coeffs_) {
    std::vector<int> mk(dim_);
    for (int d = 0; d < dim_; ++d) mk[d] = -k[d];
    out.add(mk, v.adjoint());
  }
  return out;
}

double FourierField::anti_hermiticity_residual() const {
  return (*this + dagger()).norm();
}

double FourierField::norm() const {
  double acc = 0.0;
  for (const auto& [k, v] : coeffs_) acc += v.squaredNorm();
  return std::sqrt(acc);
}

void FourierField::prune(double tol) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.norm() <= tol)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

}  // namespace wallindex
