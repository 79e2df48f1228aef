#pragma once

#include <cstdint>
#include <vector>

#include "arxdw/matrix.hpp"

namespace arxdw::model {

// True system
//   X_{n+1} = sum_{k=1..p} theta_k X_{n-k+1} + U_n + eps_{n+1}
//   eps_{n+1} = rho * eps_n + V_{n+1}
// with innovation variance sigma2 and excitation variance nu2.
struct SystemSpec {
  int p = 1;
  std::vector<double> theta{1.5};
  double rho = 0.0;
  double sigma2 = 1.0;
  double nu2 = 4.0;

  SystemSpec() = default;
  SystemSpec(int p, std::vector<double> theta, double rho, double sigma2, double nu2);

  // Throws std::invalid_argument unless |rho| < 1, sigma2 > 0, nu2 > 0,
  // p >= 1 and theta has exactly p coefficients.
  void validate() const;
};

// Rolling window of the last p+1 outputs plus the previous control and the
// current noise value: everything needed to form the regression vectors.
// Entries from before time zero are the configured initial values (zero by
// default). Fixed-size ring, O(1) memory per step.
class LoopState {
 public:
  explicit LoopState(int p, double x0 = 0.0, double eps0 = 0.0);

  int p() const { return p_; }
  std::int64_t step() const { return step_; }
  double u_prev() const { return u_prev_; }
  double eps() const { return eps_; }

  // X_{n - lag}, lag in [0, p].
  double output(int lag) const;

  // (X_n, ..., X_{n-p}, U_{n-1}), length p+2.
  std::vector<double> regression_vector() const;

  void advance(double x_next, double u, double eps_next);

 private:
  int p_;
  std::vector<double> ring_;  // p+1 slots, ring_[head_] = X_n
  int head_ = 0;
  double u_prev_ = 0.0;
  double eps_ = 0.0;
  std::int64_t step_ = 0;
};

// Parameter of the order-lifted regression whose driven noise is the
// uncorrelated innovation sequence. Length p+2; the last entry is -rho.
struct LiftedParameter {
  std::vector<double> vartheta;
};

struct ThetaRho {
  std::vector<double> theta;
  double rho = 0.0;
};

// eps_{n+1} = rho * eps_n + v
double noise_step(double eps_prev, double rho, double v);

// sum_k theta_k X_{n-k+1} + u + eps_next; the caller shifts the window.
double plant_step(const LoopState& state, const SystemSpec& spec, double u, double eps_next);

// vartheta = (theta; 0; 0) - rho * (-1; theta; 1)
LiftedParameter lift_parameter(const SystemSpec& spec);

// The (p+1) x (p+2) recovery map taking the lifted parameter back to
// (theta; rho): row i (0-based, i < p) holds rho^i, rho^{i-1}, ..., 1
// followed by zeros with rho^i in the last column; the final row is
// (0, ..., 0, -1).
Matrix delta_matrix(double rho, int p);

// Exact inverse of lift_parameter on its image: rho is the negated last
// coordinate, theta the first p rows of delta_matrix(rho, p) * vartheta.
ThetaRho recover_theta_rho(const LiftedParameter& vartheta, int p);

}  // namespace arxdw::model
