#pragma once

#include <cstdint>
#include <random>

#include "opcalc/types.hpp"

namespace opcalc {

/// Reproducible random stream; (seed, stream) pairs give independent,
/// order-free sequences so parallel trials stay deterministic.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  double normal() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx complex_normal() { return {normal(), normal()}; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// (G + G*) / 2 with iid complex Gaussian G, scaled by `scale` / sqrt(n) (operator norm O(scale)).
Matrix random_hermitian(RandomStream& rng, Eigen::Index n, double scale = 1.0);
/// Complex Gaussian matrix scaled by 1/sqrt(cols).
Matrix random_matrix(RandomStream& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-distributed unitary (QR of a Gaussian matrix with the phase correction).
Matrix random_unitary(RandomStream& rng, Eigen::Index n);

}  // namespace opcalc
