#pragma once

#include <vector>

#include "arxdw/matrix.hpp"
#include "arxdw/model.hpp"

namespace arxdw::asymptotics {

// Almost-sure limit of the normalized information matrix of the excited
// closed loop. Block structure [[L, K^t], [K, H]] with L a scalar multiple
// of the identity of order p+1.
struct LimitMatrix {
  Matrix lambda;              // (p+2) x (p+2)
  double l_scalar = 0.0;      // L = l_scalar * I_{p+1}
  std::vector<double> k_vec;  // length p+1
  double h = 0.0;
};

// L = (sigma2 + nu2) I, K_0 = nu2, K_k = -(sigma2 + nu2) theta_k - sigma2 rho^k,
// H = nu2 + sigma2 sum (theta_k + rho^k)^2 + nu2 sum theta_k^2
//     + sigma2 rho^{2(p+1)} / (1 - rho^2).
LimitMatrix lambda_matrix(const model::SystemSpec& spec);

struct SchurDet {
  double schur = 0.0;  // H - |K|^2 / l_scalar
  double det = 0.0;    // schur * l_scalar^{p+1}
};

// Closed-form Schur complement of the L block and the determinant it yields.
SchurDet schur_det(const LimitMatrix& lm);

// Asymptotic variance of sqrt(n) times the error of the lagged residual
// autocorrelation estimator. At rho = 0 this collapses to
// (sigma2 + nu2) / nu2; without excitation (nu2 -> 0) it diverges.
// Throws std::domain_error unless |rho| < 1.
double tau2_theoretical(double rho, double sigma2, double nu2, int p);

// Almost-sure limit of the Durbin-Watson statistic: 2 (1 - rho).
double dw_limit(double rho);

}  // namespace arxdw::asymptotics
