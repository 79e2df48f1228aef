#include "arxdw/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arxdw {
namespace {

// [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1p-53;
}

// (0, 1], safe as a log argument.
inline double to_unit_positive(std::uint64_t x) {
  return static_cast<double>((x >> 11) + 1) * 0x1p-53;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = mix64(master);
  for (std::uint64_t v : path) {
    state = mix64(state ^ (v + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2)));
  }
  return state;
}

NoiseStream::NoiseStream(NoiseDist dist, std::uint64_t seed)
    : dist_(dist), engine_(seed) {
  if (!(dist.variance >= 0.0)) throw std::invalid_argument("NoiseStream: variance must be >= 0");
  switch (dist_.kind) {
    case NoiseKind::gaussian:
      scale_ = std::sqrt(dist_.variance);
      break;
    case NoiseKind::uniform:
      // uniform on [-a, a] has variance a^2/3
      scale_ = std::sqrt(3.0 * dist_.variance);
      break;
    case NoiseKind::rademacher:
      scale_ = std::sqrt(dist_.variance);
      break;
  }
}

double NoiseStream::next() {
  switch (dist_.kind) {
    case NoiseKind::gaussian: {
      // Box-Muller, cosine branch only: exactly two draws per sample.
      const double u1 = to_unit_positive(engine_());
      const double u2 = to_unit(engine_());
      return scale_ * std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * std::numbers::pi * u2);
    }
    case NoiseKind::uniform:
      return scale_ * (2.0 * to_unit(engine_()) - 1.0);
    case NoiseKind::rademacher:
      return (engine_() >> 63) ? scale_ : -scale_;
  }
  return 0.0;  // unreachable
}

}  // namespace arxdw
