#include "arxdw/model.hpp"

#include <doctest.h>

#include <random>

#include "arxdw/rng.hpp"
#include "support/oracles.hpp"

using namespace arxdw;
using model::LiftedParameter;
using model::LoopState;
using model::SystemSpec;

TEST_CASE("noise_step evaluates the first-order recursion") {
  CHECK(model::noise_step(1.0, 0.0, 0.3) == 0.3);
  CHECK(model::noise_step(2.0, 0.5, -1.0) == 0.0);
  CHECK(model::noise_step(0.0, 0.9, 0.0) == 0.0);
}

TEST_CASE("plant_step evaluates the output recursion") {
  SUBCASE("first order") {
    SystemSpec spec(1, {1.5}, 0.0, 1.0, 4.0);
    LoopState state(1, /*x0=*/2.0);
    CHECK(model::plant_step(state, spec, -3.0, 0.5) == 0.5);
  }
  SUBCASE("zero state stays at zero") {
    SystemSpec spec(3, {1.0, 0.5, 0.25}, 0.2, 1.0, 4.0);
    LoopState state(3);
    CHECK(model::plant_step(state, spec, 0.0, 0.0) == 0.0);
  }
  SUBCASE("second order with both lags populated") {
    SystemSpec spec(2, {-1.0, 2.0}, 0.0, 1.0, 4.0);
    LoopState state(2, /*x0=*/1.0);
    state.advance(1.0, 0.0, 0.0);  // X_{n-1} = 1, X_n = 1
    CHECK(model::plant_step(state, spec, 0.0, 0.0) == 1.0);
  }
}

TEST_CASE("loop state keeps a p+1 window and the previous control") {
  LoopState state(2, 10.0);
  CHECK(state.regression_vector() == std::vector<double>{10.0, 0.0, 0.0, 0.0});
  state.advance(11.0, -1.0, 0.5);
  state.advance(12.0, -2.0, 0.25);
  CHECK(state.step() == 2);
  CHECK(state.eps() == 0.25);
  CHECK(state.regression_vector() == std::vector<double>{12.0, 11.0, 10.0, -2.0});
  state.advance(13.0, -3.0, 0.0);
  CHECK(state.regression_vector() == std::vector<double>{13.0, 12.0, 11.0, -3.0});
}

TEST_CASE("lift_parameter follows the two-block identity") {
  CHECK(model::lift_parameter(SystemSpec(1, {1.5}, 0.0, 1.0, 4.0)).vartheta ==
        std::vector<double>{1.5, 0.0, 0.0});
  const std::vector<double> lifted =
      model::lift_parameter(SystemSpec(1, {1.5}, 0.3, 1.0, 4.0)).vartheta;
  REQUIRE(lifted.size() == 3);
  CHECK(lifted[0] == doctest::Approx(1.8).epsilon(1e-15));
  CHECK(lifted[1] == doctest::Approx(-0.45).epsilon(1e-15));
  CHECK(lifted[2] == -0.3);
  const std::vector<double> lifted2 =
      model::lift_parameter(SystemSpec(2, {-1.0, 2.0}, 0.2, 1.0, 4.0)).vartheta;
  REQUIRE(lifted2.size() == 4);
  CHECK(lifted2[0] == doctest::Approx(-0.8).epsilon(1e-15));
  CHECK(lifted2[1] == doctest::Approx(2.2).epsilon(1e-15));
  CHECK(lifted2[2] == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(lifted2[3] == -0.2);
}

TEST_CASE("lifted parameter always ends in the negated correlation") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> rho_dist(-0.99, 0.99);
  std::uniform_real_distribution<double> theta_dist(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + static_cast<int>(gen() % 4);
    std::vector<double> theta(static_cast<std::size_t>(p));
    for (double& t : theta) t = theta_dist(gen);
    const double rho = rho_dist(gen);
    const SystemSpec spec(p, theta, rho, 1.0, 4.0);
    CHECK(model::lift_parameter(spec).vartheta.back() == -rho);
  }
}

TEST_CASE("recover_theta_rho inverts lift_parameter") {
  SUBCASE("hand values") {
    const model::ThetaRho tr =
        model::recover_theta_rho(LiftedParameter{{1.8, -0.45, -0.3}}, 1);
    CHECK(tr.rho == 0.3);
    REQUIRE(tr.theta.size() == 1);
    CHECK(tr.theta[0] == doctest::Approx(1.5).epsilon(1e-15));
    const model::ThetaRho zero = model::recover_theta_rho(LiftedParameter{{1.5, 0.0, 0.0}}, 1);
    CHECK(zero.rho == 0.0);
    CHECK(zero.theta[0] == 1.5);
  }
  SUBCASE("round trip on random parameters") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> rho_dist(-0.99, 0.99);
    std::uniform_real_distribution<double> theta_dist(-2.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const int p = 1 + static_cast<int>(gen() % 4);
      std::vector<double> theta(static_cast<std::size_t>(p));
      for (double& t : theta) t = theta_dist(gen);
      const double rho = rho_dist(gen);
      const SystemSpec spec(p, theta, rho, 1.0, 4.0);
      const model::ThetaRho back = model::recover_theta_rho(model::lift_parameter(spec), p);
      CHECK(std::abs(back.rho - rho) <= 1e-12);
      for (int i = 0; i < p; ++i)
        CHECK(std::abs(back.theta[static_cast<std::size_t>(i)] -
                       theta[static_cast<std::size_t>(i)]) <= 1e-12);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(model::recover_theta_rho(LiftedParameter{{1.0, 2.0}}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("iterated noise reaches the stationary variance") {
  const double rho = 0.6;
  const double sigma2 = 1.5;
  NoiseStream vs({NoiseKind::gaussian, sigma2}, 2024);
  std::vector<double> eps(100000);
  double prev = 0.0;
  for (double& e : eps) {
    prev = model::noise_step(prev, rho, vs.next());
    e = prev;
  }
  const double target = sigma2 / (1.0 - rho * rho);
  CHECK(oracle::sample_variance(eps) == doctest::Approx(target).epsilon(0.05));
}

TEST_CASE("system spec validation") {
  CHECK_THROWS_AS(SystemSpec(1, {1.0}, 1.0, 1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec(1, {1.0}, 0.0, 0.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec(1, {1.0}, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec(0, {}, 0.0, 1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemSpec(2, {1.0}, 0.0, 1.0, 4.0), std::invalid_argument);
}
