#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "logstrain/kinematics.hpp"
#include "logstrain/random.hpp"
#include "oracle.hpp"

using namespace logstrain;

namespace {

Mat3 random_F(Sampler& s) {
  // det in [0.1, 10]
  const Mat3 q = s.rotation();
  const SymMat3 u = s.spd(0.2, 5.0);
  const double scale = std::cbrt(s.log_uniform(0.1, 10.0) / det(u));
  return scale * (q * u);
}

Vec3 unit_in_plane_with_normal(const Vec3& n, double t) {
  // orthonormal basis of the plane n^perp
  const Vec3 a = std::abs(n[2]) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  const Vec3 b1 = normalized(cross(n, a));
  const Vec3 b2 = cross(n, b1);
  return std::cos(t) * b1 + std::sin(t) * b2;
}

}  // namespace

TEST(Polar, DiagonalIsAlreadyStretch) {
  const Mat3 f = Mat3::diag(2.0, 0.5, 1.0);
  const PolarFactors p = polar_decompose(f);
  EXPECT_LT(fro_norm(p.R - Mat3::identity()), 1e-15);
  EXPECT_LT(fro_norm(p.U.full() - f), 1e-15);
  EXPECT_LT(fro_norm(p.V.full() - f), 1e-15);
}

TEST(Polar, SimpleGlideClosedForm) {
  for (double g : {0.3, 1.0, 2.5}) {
    const double w = std::sqrt(g * g + 4.0);
    const Mat3 U = (1.0 / w) * Mat3::from_rows({2, g, 0}, {g, g * g + 2, 0}, {0, 0, w});
    const Mat3 R = (1.0 / w) * Mat3::from_rows({2, g, 0}, {-g, 2, 0}, {0, 0, w});
    const PolarFactors p = polar_decompose(simple_glide_F(g));
    EXPECT_LT(fro_norm(p.U.full() - U), 1e-14) << g;
    EXPECT_LT(fro_norm(p.R - R), 1e-14) << g;
  }
}

TEST(Polar, RotationIsIsometry) {
  Sampler s(31);
  for (int k = 0; k < 100; ++k) {
    const Mat3 q = s.rotation();
    const PolarFactors p = polar_decompose(q);
    EXPECT_LT(fro_norm(p.R - q), 1e-14);
    EXPECT_LT(fro_norm(p.U - SymMat3::identity()), 1e-14);
    EXPECT_LT(fro_norm(p.V - SymMat3::identity()), 1e-14);
  }
}

TEST(Polar, RejectsNonPositiveDeterminant) {
  EXPECT_ERROR_KIND(polar_decompose(Mat3::diag(1.0, 1.0, -1.0)), ErrorKind::NonInvertible);
  EXPECT_ERROR_KIND(polar_decompose(Mat3::diag(1.0, 1.0, 0.0)), ErrorKind::NonInvertible);
}

TEST(PolarProperty, InvariantsAndNewtonOracle) {
  Sampler s(32);
  for (int k = 0; k < 10000; ++k) {
    const Mat3 f = random_F(s);
    const PolarFactors p = polar_decompose(f);
    EXPECT_LT(fro_norm(transpose(p.R) * p.R - Mat3::identity()), 1e-12);
    EXPECT_NEAR(det(p.R), 1.0, 1e-12);
    EXPECT_TRUE(is_positive_definite(p.U));
    EXPECT_TRUE(is_positive_definite(p.V));
    EXPECT_LE(fro_norm(p.R * p.U - f), 1e-12 * fro_norm(f));
    EXPECT_LE(fro_norm(p.V * p.R - f), 1e-12 * fro_norm(f));
    if (k % 10 == 0) EXPECT_LT(fro_norm(p.R - oracle::polar_rotation(f)), 1e-12);
  }
}

TEST(Canonical, PureShearAndGlide) {
  EXPECT_EQ(pure_shear_F(1.0).a, Mat3::identity().a);
  EXPECT_EQ(pure_shear_F(2.0).a, Mat3::diag(2.0, 0.5, 1.0).a);
  EXPECT_EQ(simple_glide_F(1.0).a, Mat3::from_rows({1, 1, 0}, {0, 1, 0}, {0, 0, 1}).a);
  EXPECT_DOUBLE_EQ(det(pure_shear_F(7.0)), 1.0);
  EXPECT_ERROR_KIND(pure_shear_F(0.0), ErrorKind::InvalidArgument);
  EXPECT_ERROR_KIND(pure_shear_F(-2.0), ErrorKind::InvalidArgument);
}

TEST(Glide, PrincipalStretches) {
  const Vec3 l = glide_principal_stretches(1.5);
  EXPECT_NEAR(l[0], 2.0, 1e-15);
  EXPECT_NEAR(l[1], 1.0, 0.0);
  EXPECT_NEAR(l[2], 0.5, 1e-15);
  const Vec3 z = glide_principal_stretches(0.0);
  for (double v : z) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(GlideProperty, StretchesMatchSpectrumOfU) {
  Sampler s(33);
  for (int k = 0; k < 500; ++k) {
    const double g = s.uniform(0.0, 10.0);
    const Vec3 l = glide_principal_stretches(g);
    EXPECT_NEAR(l[0] * l[2], 1.0, 1e-15);
    EXPECT_NEAR(l[0], 0.5 * (g + std::sqrt(g * g + 4.0)), 1e-14 * l[0]);
    const Mat3 f = simple_glide_F(g);
    const Vec3 ref = eig_sym(mat_sqrt(sym(transpose(f) * f))).values;
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(l[i], ref[i], 1e-12 * l[0]);
  }
}

TEST(Pond, PureShearNormals) {
  for (double alpha : {1.5, 2.0, 5.0}) {
    const PondPair p = planes_of_no_distortion(pure_shear_F(alpha));
    EXPECT_NEAR(p.shear_ratio, alpha, 1e-12);
    const Vec3 fp = normalized(Vec3{1.0, -alpha, 0.0});
    const Vec3 fm = normalized(Vec3{1.0, alpha, 0.0});
    // normals are defined up to sign
    EXPECT_NEAR(std::abs(dot(p.final_normals[0], fp)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(dot(p.final_normals[1], fm)), 1.0, 1e-12);
    // initial normals have cotangent +-1/alpha with the e1 axis
    const Vec3 ip = normalized(Vec3{1.0, -1.0 / alpha, 0.0});
    const Vec3 im = normalized(Vec3{1.0, 1.0 / alpha, 0.0});
    EXPECT_NEAR(std::abs(dot(p.initial_normals[0], ip)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(dot(p.initial_normals[1], im)), 1.0, 1e-12);
  }
}

TEST(Pond, InitialPlanesAreUndistorted) {
  Sampler s(34);
  for (double alpha : {1.1, 2.0, 7.0}) {
    const Mat3 f = pure_shear_F(alpha);
    const PondPair p = planes_of_no_distortion(f);
    for (const Vec3& n : p.initial_normals) {
      for (int k = 0; k < 100; ++k) {
        const Vec3 x = unit_in_plane_with_normal(n, s.uniform(0.0, 2.0 * std::numbers::pi));
        EXPECT_NEAR(norm(f * x), 1.0, 1e-10);
      }
      EXPECT_NEAR(norm(cofactor(f) * n), 1.0, 1e-10);
    }
    for (const Vec3& n : p.final_normals) EXPECT_NEAR(norm(cofactor(inverse(f)) * n), 1.0, 1e-10);
  }
}

TEST(Pond, IntersectionCirclesHaveUnitRadius) {
  // points y of the strain ellipsoid y^T B^-1 y = 1 lying in a final plane
  Sampler s(35);
  const double alpha = 3.0;
  const Mat3 f = pure_shear_F(alpha);
  const PondPair p = planes_of_no_distortion(f);
  const Mat3 binv = inverse(f * transpose(f));
  for (const Vec3& n : p.final_normals) {
    for (int k = 0; k < 100; ++k) {
      const Vec3 d = unit_in_plane_with_normal(n, s.uniform(0.0, 2.0 * std::numbers::pi));
      const Vec3 y = (1.0 / std::sqrt(dot(d, binv * d))) * d;
      EXPECT_NEAR(norm(y), 1.0, 1e-10);
    }
  }
}

TEST(Pond, PermutedAxesAndGeneralFrames) {
  Sampler s(36);
  const Mat3 f = Mat3::diag(2.0, 1.0, 0.5);
  PondPair p = planes_of_no_distortion(f);
  for (const Vec3& n : p.initial_normals) {
    for (int k = 0; k < 50; ++k) {
      const Vec3 x = unit_in_plane_with_normal(n, s.uniform(0.0, 6.3));
      EXPECT_NEAR(norm(f * x), 1.0, 1e-10);
    }
  }
  // rotated pure shear with a rotation in front
  for (int k = 0; k < 50; ++k) {
    const Mat3 q = s.rotation(), r = s.rotation();
    const Mat3 g = r * transpose(q) * pure_shear_F(s.uniform(1.2, 4.0)) * q;
    p = planes_of_no_distortion(g);
    for (const Vec3& n : p.initial_normals) {
      const Vec3 x = unit_in_plane_with_normal(n, s.uniform(0.0, 6.3));
      EXPECT_NEAR(norm(g * x), 1.0, 1e-10);
    }
  }
}

TEST(Pond, NoPlanesWithoutUnitSingularValue) {
  EXPECT_ERROR_KIND(planes_of_no_distortion(2.0 * Mat3::identity()), ErrorKind::NoSuchPlane);
  EXPECT_ERROR_KIND(planes_of_no_distortion(Mat3::diag(2.0, 1.1, 0.5)), ErrorKind::NoSuchPlane);
  EXPECT_ERROR_KIND(planes_of_no_distortion(Mat3::identity()), ErrorKind::NoSuchPlane);
}

TEST(MaxTangentialStrain, ClosedForm) {
  const Vec3 x = max_tangential_strain_direction(2.0);
  EXPECT_NEAR(x[0], 1.0 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(x[1], 2.0 / std::sqrt(5.0), 1e-15);
  EXPECT_EQ(x[2], 0.0);
  const Vec3 near1 = max_tangential_strain_direction(1.0 + 1e-9);
  EXPECT_NEAR(near1[0], 1.0 / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(near1[1], 1.0 / std::sqrt(2.0), 1e-8);
}

TEST(MaxTangentialStrain, MaximizesAngularChangeAndIsUndistorted) {
  for (double alpha : {1.5, 2.0, 4.0}) {
    const Mat3 f = pure_shear_F(alpha);
    const Vec3 x = max_tangential_strain_direction(alpha);
    EXPECT_NEAR(norm(f * x), 1.0, 1e-12);
    // brute-force maximum of the angle between x and Fx on the first quadrant
    auto angle = [&](double t) {
      const Vec3 y{std::cos(t), std::sin(t), 0.0};
      return std::acos(std::clamp(dot(y, f * y) / norm(f * y), -1.0, 1.0));
    };
    double best_t = 0.0, best = -1.0;
    for (int k = 0; k <= 200000; ++k) {
      const double t = 0.5 * std::numbers::pi * k / 200000;
      if (const double a = angle(t); a > best) best = a, best_t = t;
    }
    EXPECT_NEAR(std::atan2(x[1], x[0]), best_t, 1e-4);
  }
}

TEST(GlideAngle, Cotangents) {
  EXPECT_NEAR(1.0 / std::tan(glide_contractile_angle(1.5)), 2.0, 1e-14);
  EXPECT_NEAR(1.0 / std::tan(glide_contractile_angle(1.0)), std::numbers::phi, 1e-14);
  EXPECT_NEAR(glide_contractile_angle(1e-12), std::numbers::pi / 4.0, 1e-11);
}

TEST(GlideAngle, MatchesContractedEigenvector) {
  for (double g : {0.5, 1.0, 1.5, 3.0}) {
    const Mat3 f = simple_glide_F(g);
    const Spectral3 e = eig_sym(sym(transpose(f) * f));
    const Vec3 v = e.frame.column(2);  // contracted direction
    const double l1 = glide_principal_stretches(g)[0];
    EXPECT_NEAR(v[0] / v[1], -l1, 1e-12 * l1);
  }
}

TEST(EllipseRadius, Axes) {
  EXPECT_NEAR(shear_ellipsoid_radius({0, 1, 0}, 2.0), 0.5, 1e-15);
  EXPECT_NEAR(shear_ellipsoid_radius({1, 0, 0}, 2.0), 2.0, 1e-15);
  EXPECT_ERROR_KIND(shear_ellipsoid_radius({1, 1, 0}, 2.0), ErrorKind::InvalidArgument);
  EXPECT_ERROR_KIND(shear_ellipsoid_radius({0.6, 0, 0.8}, 2.0), ErrorKind::InvalidArgument);
}

TEST(EllipseRadius, PondNormalSubstitution) {
  // n1 = alpha n2 gives 1/r^2 = 2 alpha^2 / (1 + alpha^2)... worked by hand
  for (double alpha : {1.5, 3.0}) {
    const Vec3 n = normalized(Vec3{alpha, 1.0, 0.0});
    const double n2sq = 1.0 / (1.0 + alpha * alpha);
    const double inv_r2 = alpha * alpha * n2sq + alpha * alpha * n2sq / (alpha * alpha);
    EXPECT_NEAR(shear_ellipsoid_radius(n, alpha), 1.0 / std::sqrt(inv_r2), 1e-14);
  }
}
