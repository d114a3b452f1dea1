#pragma once

#include <cstdint>
#include <random>

#include "logstrain/tensor.hpp"

namespace logstrain {

// Deterministic sampler for test inputs. SPD matrices are Q^T diag(l) Q
// with l log-uniform in [lo, hi] and Q the orthogonal factor (det +1) of a
// matrix of standard normals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  double normal();

  Mat3 rotation();
  Vec3 log_uniform_vec(double lo, double hi);
  SymMat3 spd(double lo = 0.05, double hi = 20.0);
  SymMat3 spd_in_frame(const Mat3& q, double lo = 0.05, double hi = 20.0);
  SymMat3 symmetric(double scale = 1.0);
  Vec3 unit_in_plane();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace logstrain
