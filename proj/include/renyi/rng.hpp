#pragma once

#include <cstdint>
#include <random>

#include "renyi/matrix.hpp"

namespace renyi {

// Deterministic random stream. Gaussian variates go through an explicit
// Box-Muller transform over the raw mt19937_64 output so that sequences are
// identical across standard-library implementations, which std::*_distribution
// does not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal: E|z|^2 = 1.
  Complex gaussian_complex() {
    const double inv_sqrt2 = 0.70710678118654752440;
    return Complex(gaussian() * inv_sqrt2, gaussian() * inv_sqrt2);
  }

  // Uniform in [lo, hi).
  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stateless per-index seed derivation (splitmix64 finalizer), so that
// sample i of a run is reproducible independently of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace renyi
