#pragma once

#include <array>

#include "logstrain/moduli.hpp"
#include "logstrain/tensor.hpp"

// Decompositions on principal axes. Callers rotate general tensors to
// their principal frame first.

namespace logstrain {

// Principal loads along x, y, z.
struct StressTriple {
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
};

// diag(P,Q,R) = A diag(-1,1,0) + B diag(0,1,-1) + C I
struct AdditiveDecomposition {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  Vec3 recompose() const;
};

AdditiveDecomposition decompose_stress_additive(const StressTriple& t);

// A volume preserving stretch `ratio` along `tensile_axis`, 1/ratio along
// `contractile_axis`, 1 along the remaining axis.
struct ShearFactor {
  double ratio = 1.0;
  int tensile_axis = 0;
  int contractile_axis = 1;

  Vec3 diagonal() const;
};

struct StretchDecomposition {
  double dilation_ratio = 1.0;
  ShearFactor shear1;  // x-y
  ShearFactor shear2;  // y-z

  Vec3 recompose() const;
};

StretchDecomposition decompose_stretch_multiplicative(double p, double q, double r);

// Becker's tables for a principal load: per-force dilation ratio h_i,
// shear ratio and the two fixed-axes shears each force produces.
struct ForceRow {
  double load = 0.0;
  double dilation_ratio = 1.0;  // e^{F/9K}
  double shear_ratio = 1.0;     // e^{F/6G}
  std::array<Vec3, 2> shears{};
  Vec3 stretch() const;         // h * shears[0] * shears[1]
};

struct BeckerTables {
  std::array<ForceRow, 3> rows{};
  Vec3 product{};  // h1 h2 h3 (p^2/(qr), q^2/(pr), r^2/(pq))
};

BeckerTables becker_tables(const StressTriple& t, const Moduli& m);

// Product of becker_inverse over diagonal load parts, in order.
Vec3 superposed_stretch(const std::array<Vec3, 3>& parts, const Moduli& m);

}  // namespace logstrain
