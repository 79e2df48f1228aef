#include "arxdw/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace arxdw::asymptotics {

LimitMatrix lambda_matrix(const model::SystemSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const double s2 = spec.sigma2;
  const double n2 = spec.nu2;
  const double rho = spec.rho;

  LimitMatrix lm;
  lm.l_scalar = s2 + n2;
  lm.k_vec.assign(static_cast<std::size_t>(p) + 1, 0.0);
  lm.k_vec[0] = n2;
  double rho_pow = 1.0;
  double h_mid = 0.0;
  for (int k = 1; k <= p; ++k) {
    rho_pow *= rho;  // rho^k
    const double theta_k = spec.theta[static_cast<std::size_t>(k - 1)];
    lm.k_vec[static_cast<std::size_t>(k)] = -(s2 + n2) * theta_k - s2 * rho_pow;
    const double coupled = theta_k + rho_pow;
    h_mid += s2 * coupled * coupled + n2 * theta_k * theta_k;
  }
  const double rho_2p2 = std::pow(rho, 2 * (p + 1));
  lm.h = n2 + h_mid + s2 * rho_2p2 / (1.0 - rho * rho);

  const std::size_t dim = static_cast<std::size_t>(p) + 2;
  lm.lambda = Matrix(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    lm.lambda(i, i) = lm.l_scalar;
    lm.lambda(i, dim - 1) = lm.k_vec[i];
    lm.lambda(dim - 1, i) = lm.k_vec[i];
  }
  lm.lambda(dim - 1, dim - 1) = lm.h;
  return lm;
}

SchurDet schur_det(const LimitMatrix& lm) {
  double k_norm2 = 0.0;
  for (double k : lm.k_vec) k_norm2 += k * k;
  SchurDet out;
  out.schur = lm.h - k_norm2 / lm.l_scalar;
  out.det = out.schur * std::pow(lm.l_scalar, static_cast<double>(lm.k_vec.size()));
  return out;
}

double tau2_theoretical(double rho, double sigma2, double nu2, int p) {
  if (!(std::abs(rho) < 1.0)) throw std::domain_error("tau2_theoretical: |rho| must be < 1");
  if (p < 1) throw std::invalid_argument("tau2_theoretical: p must be >= 1");
  const double r2 = rho * rho;
  const double r_2p = std::pow(r2, p);   // rho^{2p}
  const double r_2p2 = r_2p * r2;        // rho^{2(p+1)}
  const double r_4p2 = r_2p * r_2p * r2; // rho^{2(2p+1)}
  const double a = sigma2 + nu2;
  const double b = nu2 + sigma2 * r_2p2;
  const double head =
      (sigma2 - nu2) - (p + 1) * sigma2 * r_2p + (p - 1) * sigma2 * r_2p2;
  const double tail = 4.0 - (4.0 * p + 3.0) * r_2p + 4.0 * p * r_2p2 - r_4p2;
  const double bracket = head * head + sigma2 * b * tail;
  return (1.0 - r2) * bracket / (a * b);
}

double dw_limit(double rho) { return 2.0 * (1.0 - rho); }

}  // namespace arxdw::asymptotics
