#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace onebit {

/// splitmix64 step; used for seed mixing and derivation only.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stable 64-bit hash of a seed chain, e.g. {master, cell, trial}.
/// Used to give every Monte Carlo trial its own independent stream.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t state = 0x8e51ecbb71b0a727ULL;
  for (std::uint64_t p : parts) {
    state ^= splitmix64_next(state) ^ p;
    (void)splitmix64_next(state);
  }
  return splitmix64_next(state);
}

/// Seeded random stream with samplers pinned in this codebase so that
/// results replay bit-identically regardless of the standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Marsaglia's polar method (deterministic given the
  /// engine state; std::normal_distribution is not portable across stdlibs).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

  /// Unbiased uniform index in [0, n).
  Eigen::Index uniform_index(Eigen::Index n) {
    if (n <= 0) throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<Eigen::Index>(x % un);
  }

  /// k distinct indices from [0, n), ascending (partial Fisher-Yates).
  std::vector<Eigen::Index> sample_without_replacement(Eigen::Index n, Eigen::Index k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: bad k");
    std::vector<Eigen::Index> pool(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index i = 0; i < k; ++i) {
      const Eigen::Index j = i + uniform_index(n - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  Eigen::VectorXd gaussian_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  /// Filled row by row so the layout of draws is part of the replay contract.
  Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }

  Eigen::VectorXd unit_vector(Eigen::Index n) {
    Eigen::VectorXd v = gaussian_vector(n);
    double norm = v.norm();
    while (norm < 1e-300) {
      v = gaussian_vector(n);
      norm = v.norm();
    }
    return v / norm;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace onebit
