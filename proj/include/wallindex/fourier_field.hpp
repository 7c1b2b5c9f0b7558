#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

namespace wallindex {

// Matrix-valued function on T^d held as a finite set of Fourier coefficients.
// Anti-Hermitian fields satisfy c(-k) = -c(k)^dagger.
class FourierField {
 public:
  FourierField() = default;
  FourierField(int dim, std::vector<double> lengths, int rank)
      : dim_(dim), lengths_(std::move(lengths)), rank_(rank) {}

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const std::vector<double>& lengths() const { return lengths_; }
  const std::map<std::vector<int>, Eigen::MatrixXcd>& coeffs() const {
    return coeffs_;
  }

  void set(const std::vector<int>& mode, const Eigen::MatrixXcd& value);
  void add(const std::vector<int>& mode, const Eigen::MatrixXcd& value);
  Eigen::MatrixXcd at(const std::vector<int>& mode) const;
  Eigen::MatrixXcd zero_mode() const;
  bool constant() const;  // support only on the zero mode
  bool empty() const { return coeffs_.empty(); }

  Eigen::MatrixXcd evaluate(const std::vector<double>& x) const;

  FourierField operator+(const FourierField& o) const;
  FourierField operator-(const FourierField& o) const;
  FourierField operator*(std::complex<double> z) const;
  // pointwise matrix product (mode convolution)
  FourierField mul(const FourierField& o) const;
  FourierField commutator(const FourierField& o) const;
  FourierField partial(int direction) const;  // d/dx_mu
  FourierField trace() const;                 // rank-1 field of traces
  FourierField dagger() const;

  double anti_hermiticity_residual() const;
  double norm() const;
  void prune(double tol = 0.0);

 private:
  int dim_ = 0;
  std::vector<double> lengths_;
  int rank_ = 1;
  std::map<std::vector<int>, Eigen::MatrixXcd> coeffs_;
};

}  // namespace wallindex
