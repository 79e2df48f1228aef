#include "arxdw/estimator.hpp"

#include <stdexcept>

#include "arxdw/model.hpp"

namespace arxdw::estimator {

RlsState::RlsState(int p) : RlsState(p, std::span<const double>{}) {}

RlsState::RlsState(int p, std::span<const double> vartheta0) {
  if (p < 1) throw std::invalid_argument("RlsState: p must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(p) + 2;
  if (!vartheta0.empty() && vartheta0.size() != dim)
    throw std::invalid_argument("RlsState: vartheta0 must have length p+2");
  vartheta_.assign(dim, 0.0);
  if (!vartheta0.empty()) vartheta_.assign(vartheta0.begin(), vartheta0.end());
  p_ = Matrix::identity(dim);
}

void rls_update(RlsState& state, std::span<const double> phi, double x_next, double u) {
  const std::size_t d = state.vartheta_.size();
  if (phi.size() != d) throw std::invalid_argument("rls_update: phi has wrong dimension");

  Matrix& P = state.p_;

  // w = P phi
  std::vector<double> w(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += P(i, j) * phi[j];
    w[i] = acc;
  }
  double denom = 1.0;
  for (std::size_t i = 0; i < d; ++i) denom += phi[i] * w[i];

  // P <- P - w w^t / denom, then re-symmetrize.
  for (std::size_t i = 0; i < d; ++i) {
    const double wi = w[i] / denom;
    for (std::size_t j = 0; j < d; ++j) P(i, j) -= wi * w[j];
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double m = 0.5 * (P(i, j) + P(j, i));
      P(i, j) = m;
      P(j, i) = m;
    }
  }

  double err = x_next - u;
  for (std::size_t i = 0; i < d; ++i) err -= state.vartheta_[i] * phi[i];

  // gain = (updated P) phi = w / denom
  const double scale = err / denom;
  for (std::size_t i = 0; i < d; ++i) state.vartheta_[i] += scale * w[i];

  ++state.step_;
}

double rho_hat(const RlsState& state) { return -state.vartheta_hat().back(); }

Matrix delta_hat(double rho_hat_value, int p) { return model::delta_matrix(rho_hat_value, p); }

std::vector<double> theta_hat(const RlsState& state, int p) {
  if (p + 2 != state.dim()) throw std::invalid_argument("theta_hat: p does not match state");
  const std::vector<double> full = delta_hat(rho_hat(state), p).apply(state.vartheta_hat());
  return std::vector<double>(full.begin(), full.begin() + p);
}

}  // namespace arxdw::estimator
