#include "logstrain/random.hpp"

#include <cmath>
#include <numbers>

namespace logstrain {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double Sampler::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

Mat3 Sampler::rotation() {
  // Gram-Schmidt on the columns of a Gaussian matrix; the second pass
  // restores orthogonality lost to cancellation
  Vec3 c[3];
  for (auto& col : c) col = {normal(), normal(), normal()};
  for (int j = 0; j < 3; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < j; ++k) c[j] = c[j] - dot(c[j], c[k]) * c[k];
    c[j] = normalized(c[j]);
  }
  Mat3 q = Mat3::from_columns(c[0], c[1], c[2]);
  if (det(q) < 0.0)
    for (int i = 0; i < 3; ++i) q(i, 2) = -q(i, 2);
  return q;
}

Vec3 Sampler::log_uniform_vec(double lo, double hi) {
  const double a = log_uniform(lo, hi);
  const double b = log_uniform(lo, hi);
  return {a, b, log_uniform(lo, hi)};
}

SymMat3 Sampler::spd(double lo, double hi) { return spd_in_frame(rotation(), lo, hi); }

SymMat3 Sampler::spd_in_frame(const Mat3& q, double lo, double hi) {
  return congruence(q, SymMat3::diag(log_uniform_vec(lo, hi)));
}

SymMat3 Sampler::symmetric(double scale) {
  SymMat3 s;
  for (double& x : s.v) x = scale * normal();
  return s;
}

Vec3 Sampler::unit_in_plane() {
  const double t = uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(t), std::sin(t), 0.0};
}

}  // namespace logstrain
