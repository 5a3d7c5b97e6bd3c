#pragma once

#include <cstdint>
#include <string_view>

#include "nearconf/rational.hpp"

namespace nearconf {

/// Deterministic splittable generator (splitmix64 core). All randomness in
/// the library flows from one seed through splits, so a single number
/// reproduces any run, on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Modulo bias is irrelevant for our use (genericity
  /// sampling), determinism is what matters.
  std::uint64_t uniform(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next_u64() & 1; }

  /// Child generator independent of subsequent draws from this one.
  Rng split(std::uint64_t tag) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL)));
    child.next_u64();
    return child;
  }

  Rng split(std::string_view tag) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return split(h);
  }

  /// Rational with |numerator| <= num_window and denominator in [1, den_window].
  Rational rational(long long num_window, long long den_window) {
    long long num = uniform_int(-num_window, num_window);
    long long den = uniform_int(1, den_window);
    return Rational(num, den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace nearconf
