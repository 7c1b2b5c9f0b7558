#pragma once

#include <Eigen/Dense>
#include <vector>

namespace wallindex {

// Hermitian gamma matrices in the wall-adapted block basis
//   gamma^a = offdiag(1,1) (x) ghat^a,   a = 1..n-1
//   gamma^n = offdiag(i,-i) (x) id
//   gamma_* = diag(1,-1)    (x) id
// The reduced matrices ghat^a obey the odd-dimensional orientation constraint
//   eps_{a..c n} ghat^a ... ghat^c = -(n-1)! (-i)^{n/2-1}
// with eps_{1..n} = +1, which picks one of the two inequivalent reduced
// representations. For n=2 this forces the 1x1 value ghat^1 = -1; for n=4 the
// Pauli triple ghat^a = sigma_a.
struct GammaRep {
  int n = 0;
  int spinor_dim = 0;
  std::vector<Eigen::MatrixXcd> gamma;  // gamma^1 .. gamma^n
  Eigen::MatrixXcd gamma_star;
  bool wall_adapted = false;
  std::vector<Eigen::MatrixXcd> gamma_hat;  // filled by wall_adapt
};

GammaRep standard_rep(int n);
GammaRep wall_adapt(const GammaRep& rep);

// max over pairs of || {g^mu, g^nu} - 2 delta I ||
double clifford_residual(const GammaRep& rep);
// residual of the displayed orientation constraint on ghat
double orientation_residual(const GammaRep& rep);

}  // namespace wallindex
