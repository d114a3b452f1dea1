#include "logstrain/shear_statics.hpp"

#include <cmath>
#include <numbers>

#include "logstrain/error.hpp"
#include "logstrain/kinematics.hpp"

namespace logstrain {

namespace {

double scaled_load(double q, double scale) {
  if (!std::isfinite(q) || !std::isfinite(scale)) fail(ErrorKind::NonFinite, "load");
  return q * scale;
}

void require_alpha_above_one(double alpha) {
  if (!std::isfinite(alpha)) fail(ErrorKind::NonFinite, "shear ratio");
  if (!(alpha > 1.0)) fail(ErrorKind::InvalidArgument, "shear ratio must exceed 1");
}

void require_in_plane_unit(const Vec3& n) {
  if (!std::isfinite(n[0]) || !std::isfinite(n[1]) || !std::isfinite(n[2]))
    fail(ErrorKind::NonFinite, "normal");
  if (std::abs(norm(n) - 1.0) > 1e-12) fail(ErrorKind::InvalidArgument, "normal must be a unit vector");
  if (std::abs(n[2]) > 1e-12) fail(ErrorKind::InvalidArgument, "normal must lie in the e1-e2 plane");
}

}  // namespace

double pond_angle_arccos(double alpha) {
  const double a2 = alpha * alpha;
  return 0.5 * std::acos((a2 - 1.0) / (a2 + 1.0));
}

MohrState mohr_circle(double q, double alpha, double scale) {
  require_alpha_above_one(alpha);
  const double Q = scaled_load(q, scale);
  MohrState m;
  m.sigma1 = -Q / alpha;
  m.sigma2 = Q * alpha;
  m.sigma_m = 0.5 * (m.sigma1 + m.sigma2);
  m.radius = 0.5 * (m.sigma2 - m.sigma1);
  m.psi = std::atan2(1.0, alpha);
  m.theta = std::numbers::pi / 4.0;
  m.s = 0.5 * (alpha - 1.0 / alpha);
  return m;
}

PondStress pond_stress_components(double q, double alpha, double scale) {
  require_alpha_above_one(alpha);
  const double Q = scaled_load(q, scale);
  return {0.0, Q * (alpha * alpha - 1.0) / alpha, Q};
}

std::array<Vec3, 2> pond_normals(double alpha) {
  if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "shear ratio must be positive");
  const double h = std::sqrt(1.0 + alpha * alpha);
  return {Vec3{alpha / h, 1.0 / h, 0.0}, Vec3{alpha / h, -1.0 / h, 0.0}};
}

TractionDecomposition traction_on_line(double q, double alpha, const Vec3& n, double scale) {
  require_in_plane_unit(n);
  const double Q = scaled_load(q, scale);
  const double r = shear_ellipsoid_radius(n, alpha);
  const Vec3 t{-Q / alpha * n[0], Q * alpha * n[1], 0.0};
  TractionDecomposition d;
  d.R2 = r * r * dot(t, t);
  const double nt = dot(n, t);
  d.N2 = r * r * nt * nt;
  d.T2 = d.R2 - d.N2;
  return d;
}

FailureTriple failure_criteria(double q, double alpha, double scale) {
  if (!std::isfinite(alpha)) fail(ErrorKind::NonFinite, "shear ratio");
  const double Q = scaled_load(q, scale);
  if (!(alpha > 0.0) || !(Q > 0.0)) fail(ErrorKind::InvalidArgument, "load and shear ratio must be positive");
  return {Q * (alpha + 1.0 / alpha), Q * std::sqrt(alpha * alpha + 1.0 + 1.0 / (alpha * alpha)), Q};
}

QuadricValues cauchy_quadrics(const Vec3& s, const Vec3& n) {
  if (std::abs(norm(n) - 1.0) > 1e-12) fail(ErrorKind::InvalidArgument, "normal must be a unit vector");
  const double a = n[0] * n[0], b = n[1] * n[1], c = n[2] * n[2];
  QuadricValues v;
  v.R2 = s[0] * s[0] * a + s[1] * s[1] * b + s[2] * s[2] * c;
  v.N = s[0] * a + s[1] * b + s[2] * c;
  v.T2 = v.R2 - v.N * v.N;
  const double d01 = s[0] - s[1], d02 = s[0] - s[2], d12 = s[1] - s[2];
  v.T2_expanded = d01 * d01 * a * b + d02 * d02 * a * c + d12 * d12 * b * c;
  return v;
}

}  // namespace logstrain
