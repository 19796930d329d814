#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ocn {

// Raised when input data breaks a documented invariant (bad topology,
// malformed instance, violated precondition). The message names the offender.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for file-system and parse failures; mapped to exit code 2 by the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
// part of a reproducible contract; std::uniform_int_distribution is
// implementation-defined and would break cross-platform determinism.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

// Locale-independent fixed-point formatting (report files must be byte-stable).
std::string format_fixed(double value, int precision);

}  // namespace ocn
