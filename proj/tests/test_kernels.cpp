#include "arxdw/kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "support/oracles.hpp"

using arxdw::kernels::Backend;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> out(n);
  for (double& v : out) v = dist(gen);
  return out;
}

// Tolerance scaled by the sum of absolute terms: reductions reassociate
// across backends, so exact equality is not the contract.
double reduction_tolerance(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 1e-30;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] * b[i]);
  return 1e-12 * acc;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 7, 8, 9, 31, 64, 1023, 4096, 100003};

}  // namespace

TEST_CASE("kernels match naive reference loops") {
  for (std::size_t n : kSizes) {
    const std::vector<double> a = random_vector(n, 11 + n);
    const std::vector<double> b = random_vector(n, 23 + n);
    CHECK(arxdw::kernels::dot(a.data(), b.data(), n) ==
          doctest::Approx(oracle::naive_dot(a, b)).epsilon(1e-10));
    CHECK(arxdw::kernels::sum_squares(a.data(), n) ==
          doctest::Approx(oracle::naive_sum_squares(a)).epsilon(1e-10));
    CHECK(arxdw::kernels::sum_sq_diff(a.data(), n) ==
          doctest::Approx(oracle::naive_sum_sq_diff(a)).epsilon(1e-10));

    std::vector<double> y = b;
    arxdw::kernels::axpy(0.37, a.data(), y.data(), n);
    std::vector<double> diff(n);
    arxdw::kernels::sub(a.data(), b.data(), diff.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(y[i] == doctest::Approx(b[i] + 0.37 * a[i]));
      CHECK(diff[i] == a[i] - b[i]);
    }
  }
}

TEST_CASE("avx2 backend agrees with the scalar reference") {
  if (!arxdw::kernels::set_backend(Backend::avx2)) {
    MESSAGE("avx2 not available on this host; skipping equivalence check");
    return;
  }
  for (std::size_t n : kSizes) {
    const std::vector<double> a = random_vector(n, 101 + n);
    const std::vector<double> b = random_vector(n, 211 + n);

    REQUIRE(arxdw::kernels::set_backend(Backend::avx2));
    const double dot_avx = arxdw::kernels::dot(a.data(), b.data(), n);
    const double ss_avx = arxdw::kernels::sum_squares(a.data(), n);
    const double sd_avx = arxdw::kernels::sum_sq_diff(a.data(), n);
    std::vector<double> y_avx = b;
    arxdw::kernels::axpy(-1.25, a.data(), y_avx.data(), n);

    REQUIRE(arxdw::kernels::set_backend(Backend::scalar));
    const double dot_sca = arxdw::kernels::dot(a.data(), b.data(), n);
    const double ss_sca = arxdw::kernels::sum_squares(a.data(), n);
    const double sd_sca = arxdw::kernels::sum_sq_diff(a.data(), n);
    std::vector<double> y_sca = b;
    arxdw::kernels::axpy(-1.25, a.data(), y_sca.data(), n);

    CHECK(std::abs(dot_avx - dot_sca) <= reduction_tolerance(a, b));
    CHECK(std::abs(ss_avx - ss_sca) <= reduction_tolerance(a, a));
    CHECK(std::abs(sd_avx - sd_sca) <= 4.0 * reduction_tolerance(a, a));
    // elementwise op, but fma contraction may differ by an ulp
    for (std::size_t i = 0; i < n; ++i)
      CHECK(y_avx[i] == doctest::Approx(y_sca[i]).epsilon(1e-14));
  }
  arxdw::kernels::autodetect_backend();
}

TEST_CASE("backend forcing reports availability") {
  CHECK(arxdw::kernels::set_backend(Backend::scalar));
  CHECK(arxdw::kernels::active_backend() == Backend::scalar);
  arxdw::kernels::autodetect_backend();
  MESSAGE("active backend: ", arxdw::kernels::backend_name());
}
