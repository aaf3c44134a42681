#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dtmm {

/// Generator identifier recorded in output metadata so experiments replicate
/// across machines.
inline constexpr const char* kGeneratorName = "mt19937_64/box-muller";

/// Seeded random source with fixed value mappings.  std::mt19937_64 output is
/// pinned by the standard; the uniform and gaussian mappings below are spelled
/// out here because the std distributions are implementation-defined and would
/// break replication across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; pairs are cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace dtmm
