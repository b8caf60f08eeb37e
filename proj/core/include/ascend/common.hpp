#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ascend {

/// Raised for malformed or inconsistent input data (files, ids, labels).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a computation produces non-finite values.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Deterministic random source. All randomness in the library flows through
/// this type; draws are derived from the raw 64-bit stream so results do not
/// depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// FNV-1a over a byte string; used for vocabulary fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

/// Shortest round-trip decimal representation of a double. Used everywhere a
/// number is written to a log, CSV, or JSON so that identical runs produce
/// identical bytes.
std::string format_double(double x);

}  // namespace ascend
