#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arxdw/matrix.hpp"

namespace arxdw::estimator {

// Least squares state for the lifted regression of dimension p+2. The
// information matrix starts at the identity and the inverse is maintained
// directly, one rank-one correction per sample.
class RlsState {
 public:
  explicit RlsState(int p);
  RlsState(int p, std::span<const double> vartheta0);

  int dim() const { return static_cast<int>(vartheta_.size()); }
  std::int64_t step() const { return step_; }
  const std::vector<double>& vartheta_hat() const { return vartheta_; }
  const Matrix& p_matrix() const { return p_; }

 private:
  std::vector<double> vartheta_;
  Matrix p_;  // inverse of (identity + sum of phi phi^t)
  std::int64_t step_ = 0;

  friend void rls_update(RlsState& state, std::span<const double> phi, double x_next, double u);
};

// Folds phi into the information matrix and moves the estimate by the gain
// times the prediction error x_next - u - <vartheta_hat, phi>. The inverse
// update costs O(dim^2); the inverse is re-symmetrized each step to stop
// round-off drift. Throws std::invalid_argument on a dimension mismatch.
void rls_update(RlsState& state, std::span<const double> phi, double x_next, double u);

// Estimate of the serial correlation: the negated last coordinate.
double rho_hat(const RlsState& state);

// Plug-in recovery map evaluated at an estimated correlation.
Matrix delta_hat(double rho_hat, int p);

// First p rows of delta_hat(rho_hat(state), p) applied to the estimate.
std::vector<double> theta_hat(const RlsState& state, int p);

}  // namespace arxdw::estimator
