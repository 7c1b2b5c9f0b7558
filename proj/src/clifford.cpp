#include "wallindex/clifford.hpp"

#include <complex>
#include <stdexcept>

namespace wallindex {

namespace {
using Mat = Eigen::MatrixXcd;
using namespace std::complex_literals;

Mat pauli(int a) {
  Mat m(2, 2);
  switch (a) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -1i, 1i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::logic_error("pauli index");
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}
}  // namespace

GammaRep standard_rep(int n) {
  if (n != 2 && n != 4)
    throw std::invalid_argument("standard_rep: dimension must be 2 or 4");
  GammaRep rep;
  rep.n = n;
  rep.spinor_dim = (n == 2) ? 2 : 4;

  Mat off_sym(2, 2), off_i(2, 2), diag_pm(2, 2);
  off_sym << 0, 1, 1, 0;
  off_i << 0, 1i, -1i, 0;
  diag_pm << 1, 0, 0, -1;

  if (n == 2) {
    Mat ghat = -Mat::Identity(1, 1);
    rep.gamma.push_back(kron(off_sym, ghat));
    rep.gamma.push_back(kron(off_i, Mat::Identity(1, 1)));
    rep.gamma_star = kron(diag_pm, Mat::Identity(1, 1));
  } else {
    for (int a = 1; a <= 3; ++a) rep.gamma.push_back(kron(off_sym, pauli(a)));
    rep.gamma.push_back(kron(off_i, Mat::Identity(2, 2)));
    rep.gamma_star = kron(diag_pm, Mat::Identity(2, 2));
  }
  return rep;
}

GammaRep wall_adapt(const GammaRep& rep) {
  if (rep.wall_adapted) return rep;
  GammaRep out = rep;
  out.wall_adapted = true;
  out.gamma_hat.clear();
  const int half = rep.spinor_dim / 2;
  // the rep is already in block form; read ghat off the (0,1) block of gamma^a
  for (int a = 0; a < rep.n - 1; ++a)
    out.gamma_hat.push_back(rep.gamma[a].topRightCorner(half, half));
  return out;
}

double clifford_residual(const GammaRep& rep) {
  double worst = 0.0;
  const Mat id = Mat::Identity(rep.spinor_dim, rep.spinor_dim);
  for (int mu = 0; mu < rep.n; ++mu)
    for (int nu = 0; nu < rep.n; ++nu) {
      Mat acomm = rep.gamma[mu] * rep.gamma[nu] + rep.gamma[nu] * rep.gamma[mu];
      double delta = (mu == nu) ? 2.0 : 0.0;
      worst = std::max(worst, (acomm - delta * id).norm());
    }
  return worst;
}

double orientation_residual(const GammaRep& rep) {
  GammaRep adapted = rep.wall_adapted ? rep : wall_adapt(rep);
  const int half = rep.spinor_dim / 2;
  Mat acc = Mat::Zero(half, half);
  if (rep.n == 2) {
    acc = adapted.gamma_hat[0];  // eps_{1 2} = +1
  } else {
    // sum over permutations of (1,2,3) with signs, eps_{a b c 4}
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                            {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    const double sign[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
      acc += sign[p] * adapted.gamma_hat[perm[p][0]] *
             adapted.gamma_hat[perm[p][1]] * adapted.gamma_hat[perm[p][2]];
  }
  const int m = rep.n / 2;
  double fact = 1.0;
  for (int i = 2; i <= rep.n - 1; ++i) fact *= i;
  std::complex<double> target =
      -fact * std::pow(std::complex<double>(0, -1), m - 1);
  Mat id = Mat::Identity(half, half);
  return (acc - target * id).norm();
}

}  // namespace wallindex
