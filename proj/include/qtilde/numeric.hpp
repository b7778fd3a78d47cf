#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace qtilde {

/// Absolute tolerance for all stochasticity checks (column sums, splits).
inline constexpr double kStochasticTol = 1e-12;

/// Target bound for truncation remainders of convergent infinite products.
inline constexpr double kProductTailTol = 1e-12;

/// Below this log-length, exp() underflows and cylinder lengths stop being
/// representable as doubles.
inline const double kMinLogLength = std::log(std::numeric_limits<double>::min());

/// Neumaier-compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double clamp01(double x) {
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

/// FNV-1a over bytes; used for spec fingerprints in reports.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// splitmix64; used to derive independent per-chunk sampling seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Map a 64-bit word to a double in [0, 1).
inline double to_unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace qtilde
