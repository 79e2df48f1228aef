#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace arxdw {

// SplitMix64 finalizer. Used to spread seeds for decorrelated sub-streams.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable seed for the sub-stream of `master` addressed by `path`
// (e.g. {rho_index, n_index, replication}). Independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

enum class NoiseKind { gaussian, uniform, rademacher };

// Zero-mean distribution with the given variance. Anything here has finite
// moments of every order, which is more than the estimators require.
struct NoiseDist {
  NoiseKind kind = NoiseKind::gaussian;
  double variance = 1.0;
};

// Seeded zero-mean noise stream. Sampling is built on explicit uniform
// bit-to-double conversions so a given seed yields the same sequence on any
// platform, and each sample consumes a fixed number of engine draws so runs
// of different lengths share their prefix.
class NoiseStream {
 public:
  NoiseStream(NoiseDist dist, std::uint64_t seed);

  double next();
  double variance() const { return dist_.variance; }
  NoiseKind kind() const { return dist_.kind; }

 private:
  NoiseDist dist_;
  std::mt19937_64 engine_;
  double scale_;
};

}  // namespace arxdw
