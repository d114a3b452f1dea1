#pragma once

#include <array>

#include "logstrain/tensor.hpp"

namespace logstrain {

// F = R U = V R
struct PolarFactors {
  Mat3 R;
  SymMat3 U;
  SymMat3 V;
};

PolarFactors polar_decompose(const Mat3& f);

// diag(alpha, 1/alpha, 1), alpha > 0
Mat3 pure_shear_F(double alpha);
// e1 (x) e1 + ... + gamma e1 (x) e2
Mat3 simple_glide_F(double gamma);

// (lambda_1, 1, 1/lambda_1) for the glide of amount gamma.
Vec3 glide_principal_stretches(double gamma);

// The two undistorted planes of a deformation whose middle singular value
// is one. Index 0 is the "+" plane, index 1 the "-" plane.
struct PondPair {
  std::array<Vec3, 2> initial_normals;
  std::array<Vec3, 2> final_normals;
  double shear_ratio = 1.0;
};

PondPair planes_of_no_distortion(const Mat3& f, double unit_tol = 1e-9);

// Direction of greatest angular change for diag(alpha, 1/alpha, 1),
// lying in the first quadrant of the e1-e2 plane.
Vec3 max_tangential_strain_direction(double alpha);

// Angle between the glide axis and the contracted principal direction;
// its cotangent is lambda_1.
double glide_contractile_angle(double gamma);

// Radius of the shear ellipse x1^2/alpha^2 + alpha^2 x2^2 = 1 along the
// in-plane unit normal n.
double shear_ellipsoid_radius(const Vec3& n, double alpha);

}  // namespace logstrain
