#include "logstrain/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logstrain/error.hpp"

namespace logstrain {

PolarFactors polar_decompose(const Mat3& f) {
  if (!f.is_finite()) fail(ErrorKind::NonFinite, "polar_decompose");
  const double d = det(f);
  if (!(d > 0.0)) {
    std::ostringstream os;
    os << "polar_decompose needs det F > 0, got " << d;
    fail(ErrorKind::NonInvertible, os.str());
  }
  const Spectral3 c = eig_sym(sym(transpose(f) * f));
  PolarFactors p;
  p.U = mat_fn(c, [](double l) { return std::sqrt(l); });
  const SymMat3 u_inv = mat_fn(c, [](double l) { return 1.0 / std::sqrt(l); });
  p.R = f * u_inv;
  // one Newton step R <- (R + R^-T)/2 removes the loss of orthogonality
  // that F U^-1 suffers for badly conditioned F
  p.R = 0.5 * (p.R + transpose(inverse(p.R)));
  p.V = rotate(p.R, p.U);
  return p;
}

Mat3 pure_shear_F(double alpha) {
  if (!std::isfinite(alpha)) fail(ErrorKind::NonFinite, "pure_shear_F");
  if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "pure shear ratio must be positive");
  return Mat3::diag(alpha, 1.0 / alpha, 1.0);
}

Mat3 simple_glide_F(double gamma) {
  if (!std::isfinite(gamma)) fail(ErrorKind::NonFinite, "simple_glide_F");
  Mat3 f = Mat3::identity();
  f(0, 1) = gamma;
  return f;
}

Vec3 glide_principal_stretches(double gamma) {
  if (!std::isfinite(gamma)) fail(ErrorKind::NonFinite, "glide_principal_stretches");
  const double g = std::abs(gamma);
  const double root = std::sqrt(g * g + 4.0);
  return {0.5 * (g + root), 1.0, 2.0 / (g + root)};
}

namespace {

// Fix the sign of an eigenvector so its largest component is positive.
Vec3 oriented(Vec3 v) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[k]) + 1e-12) k = i;
  return v[k] < 0.0 ? -1.0 * v : v;
}

}  // namespace

PondPair planes_of_no_distortion(const Mat3& f, double unit_tol) {
  if (!f.is_finite()) fail(ErrorKind::NonFinite, "planes_of_no_distortion");
  if (!(unit_tol > 0.0)) fail(ErrorKind::InvalidArgument, "unit tolerance must be positive");

  const Spectral3 c = eig_sym(sym(transpose(f) * f));
  const Vec3 s{std::sqrt(std::max(c.values[0], 0.0)), std::sqrt(std::max(c.values[1], 0.0)),
               std::sqrt(std::max(c.values[2], 0.0))};

  if (std::abs(s[1] - 1.0) > unit_tol * std::max(1.0, s[0])) {
    std::ostringstream os;
    os << "middle singular value is " << s[1] << ", not 1";
    fail(ErrorKind::NoSuchPlane, os.str());
  }
  if (!(s[0] > 1.0 + unit_tol) || !(s[2] < 1.0 - unit_tol))
    fail(ErrorKind::NoSuchPlane, "need singular values straddling 1 strictly");

  const Vec3 v1 = oriented(c.frame.column(0));
  const Vec3 v2 = oriented(c.frame.column(1));
  const Vec3 v3 = oriented(c.frame.column(2));

  // x = v1 + k v3 keeps its length: s1^2 + s3^2 k^2 = 1 + k^2
  const double k = std::sqrt((s[0] * s[0] - 1.0) / (1.0 - s[2] * s[2]));
  const Mat3 cof = cofactor(f);

  PondPair out;
  out.shear_ratio = s[0];
  for (int side = 0; side < 2; ++side) {
    const Vec3 x = v1 + (side == 0 ? k : -k) * v3;
    const Vec3 n = normalized(cross(x, v2));
    out.initial_normals[side] = n;
    out.final_normals[side] = normalized(cof * n);
  }
  return out;
}

Vec3 max_tangential_strain_direction(double alpha) {
  if (!std::isfinite(alpha)) fail(ErrorKind::NonFinite, "max_tangential_strain_direction");
  if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "shear ratio must be positive");
  const double h = std::sqrt(1.0 + alpha * alpha);
  return {1.0 / h, alpha / h, 0.0};
}

double glide_contractile_angle(double gamma) {
  const Vec3 l = glide_principal_stretches(gamma);
  return std::atan2(1.0, l[0]);
}

double shear_ellipsoid_radius(const Vec3& n, double alpha) {
  if (!std::isfinite(alpha) || !std::isfinite(n[0]) || !std::isfinite(n[1]) ||
      !std::isfinite(n[2]))
    fail(ErrorKind::NonFinite, "shear_ellipsoid_radius");
  if (!(alpha > 0.0)) fail(ErrorKind::InvalidArgument, "shear ratio must be positive");
  if (std::abs(norm(n) - 1.0) > 1e-12) fail(ErrorKind::InvalidArgument, "normal must be a unit vector");
  if (std::abs(n[2]) > 1e-12) fail(ErrorKind::InvalidArgument, "normal must lie in the e1-e2 plane");
  return 1.0 / std::sqrt(alpha * alpha * n[1] * n[1] + n[0] * n[0] / (alpha * alpha));
}

}  // namespace logstrain
