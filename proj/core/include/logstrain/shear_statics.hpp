#pragma once

#include <array>

#include "logstrain/tensor.hpp"

// Statics of a finite pure shear under a load Q. Convention here: the
// contracted axis is e1 and the stretched axis e2, so sigma1 = -Q/alpha
// and sigma2 = Q alpha. kinematics.hpp uses the opposite labeling
// (e1 stretched); swap the first two components to move between them.
//
// Every function takes an optional load scale (default 1) that multiplies
// Q before use.

namespace logstrain {

struct MohrState {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma_m = 0.0;
  double radius = 0.0;
  double psi = 0.0;    // inclination of the pond normal to e1
  double theta = 0.0;  // inclination of the max shear stress plane
  double s = 0.0;      // amount of shear (alpha - 1/alpha)/2
};

MohrState mohr_circle(double q, double alpha, double scale = 1.0);

// psi from the arccos form; equals atan(1/alpha)
double pond_angle_arccos(double alpha);

struct PondStress {
  double sigma_xi = 0.0;
  double sigma_eta = 0.0;
  double sigma_xi_eta = 0.0;
};

PondStress pond_stress_components(double q, double alpha, double scale = 1.0);

// Unit normals of the two pond lines, n1^2 = alpha^2 n2^2.
std::array<Vec3, 2> pond_normals(double alpha);

struct TractionDecomposition {
  double R2 = 0.0;
  double N2 = 0.0;
  double T2 = 0.0;
};

TractionDecomposition traction_on_line(double q, double alpha, const Vec3& n, double scale = 1.0);

struct FailureTriple {
  double tresca = 0.0;
  double mises = 0.0;
  double becker = 0.0;
};

FailureTriple failure_criteria(double q, double alpha, double scale = 1.0);

struct QuadricValues {
  double R2 = 0.0;
  double N = 0.0;
  double T2 = 0.0;
  double T2_expanded = 0.0;
};

QuadricValues cauchy_quadrics(const Vec3& principal, const Vec3& n);

}  // namespace logstrain
