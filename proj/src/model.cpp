#include "arxdw/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace arxdw::model {

SystemSpec::SystemSpec(int p_, std::vector<double> theta_, double rho_, double sigma2_,
                       double nu2_)
    : p(p_), theta(std::move(theta_)), rho(rho_), sigma2(sigma2_), nu2(nu2_) {
  validate();
}

void SystemSpec::validate() const {
  if (p < 1) throw std::invalid_argument("SystemSpec: p must be >= 1");
  if (static_cast<int>(theta.size()) != p)
    throw std::invalid_argument("SystemSpec: theta must have exactly p coefficients");
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("SystemSpec: |rho| must be < 1");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("SystemSpec: sigma2 must be > 0");
  if (!(nu2 > 0.0)) throw std::invalid_argument("SystemSpec: nu2 must be > 0");
}

LoopState::LoopState(int p, double x0, double eps0)
    : p_(p), ring_(static_cast<std::size_t>(p) + 1, 0.0), eps_(eps0) {
  if (p < 1) throw std::invalid_argument("LoopState: p must be >= 1");
  ring_[0] = x0;
}

double LoopState::output(int lag) const {
  const int m = p_ + 1;
  return ring_[static_cast<std::size_t>(((head_ - lag) % m + m) % m)];
}

std::vector<double> LoopState::regression_vector() const {
  std::vector<double> phi(static_cast<std::size_t>(p_) + 2);
  for (int lag = 0; lag <= p_; ++lag) phi[static_cast<std::size_t>(lag)] = output(lag);
  phi[static_cast<std::size_t>(p_) + 1] = u_prev_;
  return phi;
}

void LoopState::advance(double x_next, double u, double eps_next) {
  head_ = (head_ + 1) % (p_ + 1);
  ring_[static_cast<std::size_t>(head_)] = x_next;
  u_prev_ = u;
  eps_ = eps_next;
  ++step_;
}

double noise_step(double eps_prev, double rho, double v) { return rho * eps_prev + v; }

double plant_step(const LoopState& state, const SystemSpec& spec, double u, double eps_next) {
  double acc = 0.0;
  for (int k = 1; k <= spec.p; ++k) acc += spec.theta[static_cast<std::size_t>(k - 1)] * state.output(k - 1);
  return acc + u + eps_next;
}

LiftedParameter lift_parameter(const SystemSpec& spec) {
  spec.validate();
  const std::size_t p = static_cast<std::size_t>(spec.p);
  std::vector<double> v(p + 2, 0.0);
  for (std::size_t i = 0; i < p; ++i) v[i] = spec.theta[i];
  v[0] += spec.rho;
  for (std::size_t i = 1; i <= p; ++i) v[i] -= spec.rho * spec.theta[i - 1];
  v[p + 1] = -spec.rho;
  return LiftedParameter{std::move(v)};
}

Matrix delta_matrix(double rho, int p) {
  if (p < 1) throw std::invalid_argument("delta_matrix: p must be >= 1");
  const std::size_t rows = static_cast<std::size_t>(p) + 1;
  const std::size_t cols = static_cast<std::size_t>(p) + 2;
  Matrix d(rows, cols);
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    double power = 1.0;
    for (std::size_t j = i + 1; j-- > 0;) {  // columns i, i-1, ..., 0 get 1, rho, rho^2, ...
      d(i, j) = power;
      power *= rho;
    }
    d(i, cols - 1) = std::pow(rho, static_cast<double>(i));
  }
  d(rows - 1, cols - 1) = -1.0;
  return d;
}

ThetaRho recover_theta_rho(const LiftedParameter& vartheta, int p) {
  const std::size_t dim = static_cast<std::size_t>(p) + 2;
  if (vartheta.vartheta.size() != dim)
    throw std::invalid_argument("recover_theta_rho: vartheta must have length p+2");
  const double rho = -vartheta.vartheta.back();
  const std::vector<double> full = delta_matrix(rho, p).apply(vartheta.vartheta);
  return ThetaRho{std::vector<double>(full.begin(), full.begin() + p), rho};
}

}  // namespace arxdw::model
