#pragma once

#include <cstdint>
#include <random>

#include "xlcris/types.hpp"

namespace xlcris {

/// Independent sub-stream identifiers hung off one master seed.
enum class RngStream : std::uint64_t {
  scenario = 1,
  pilots = 2,
  noise = 3,
};

/// splitmix64 step; the de-facto standard seed scrambler.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives the seed for (master, stream, index). Changing any argument gives
/// a statistically independent stream; the scheme is fixed so experiments
/// replay identically everywhere.
std::uint64_t derive_seed(std::uint64_t master, RngStream stream,
                          std::uint64_t index = 0);

/// mt19937_64 with portable uniform/normal draws. The standard library
/// distributions are implementation-defined, so the mapping from raw bits to
/// doubles is done by hand to keep results identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (one value per call, cached pair).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly symmetric complex normal CN(0, 1).
  cplx cnormal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) / std::sqrt(2.0);
  }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Rejection-free modulo is fine here; n is tiny next to 2^64.
    return engine_() % n;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace xlcris
