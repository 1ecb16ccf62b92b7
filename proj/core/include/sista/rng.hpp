// Copyright 2026 The Sista Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sista {

/// splitmix64 step; used to derive independent stream seeds from a master
/// seed so that per-sample / per-iteration randomness is order-independent.
std::uint64_t split_mix64(std::uint64_t& state);

/// Deterministic seed for substream `index` of stream `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random source. mt19937_64 is bit-exact across platforms;
/// the normal draw is a hand-rolled Box-Muller so we do not depend on the
/// standard library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal draw.
  double normal();

  std::vector<double> normal_vector(std::size_t n);

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n);

  /// Bernoulli with probability `p` of true.
  bool coin(double p);

  /// In-place Fisher-Yates shuffle (std::shuffle is implementation-defined).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sista
