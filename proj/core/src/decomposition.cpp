#include "logstrain/decomposition.hpp"

#include <cmath>

#include "logstrain/constitutive.hpp"
#include "logstrain/error.hpp"

namespace logstrain {

namespace {

Vec3 times(const Vec3& x, const Vec3& y) { return {x[0] * y[0], x[1] * y[1], x[2] * y[2]}; }

}  // namespace

Vec3 AdditiveDecomposition::recompose() const { return {-A + C, A + B + C, -B + C}; }

AdditiveDecomposition decompose_stress_additive(const StressTriple& t) {
  if (!std::isfinite(t.P) || !std::isfinite(t.Q) || !std::isfinite(t.R))
    fail(ErrorKind::NonFinite, "decompose_stress_additive");
  return {(-2.0 * t.P + t.Q + t.R) / 3.0, (t.P + t.Q - 2.0 * t.R) / 3.0, (t.P + t.Q + t.R) / 3.0};
}

Vec3 ShearFactor::diagonal() const {
  Vec3 d{1.0, 1.0, 1.0};
  d[tensile_axis] = ratio;
  d[contractile_axis] = 1.0 / ratio;
  return d;
}

Vec3 StretchDecomposition::recompose() const {
  const Vec3 s = times(shear1.diagonal(), shear2.diagonal());
  return dilation_ratio * s;
}

StretchDecomposition decompose_stretch_multiplicative(double p, double q, double r) {
  if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r))
    fail(ErrorKind::NonFinite, "decompose_stretch_multiplicative");
  if (!(p > 0.0) || !(q > 0.0) || !(r > 0.0))
    fail(ErrorKind::InvalidArgument, "stretch ratios must be positive");
  StretchDecomposition d;
  d.dilation_ratio = std::cbrt(p * q * r);
  // U2 = diag(p^2/(qr), qr/p^2, 1)^(1/3), U3 = diag(1, pq/r^2, r^2/(pq))^(1/3)
  d.shear1 = {std::cbrt(p * p / (q * r)), 0, 1};
  d.shear2 = {std::cbrt(p * q / (r * r)), 1, 2};
  return d;
}

Vec3 ForceRow::stretch() const { return dilation_ratio * times(shears[0], shears[1]); }

BeckerTables becker_tables(const StressTriple& t, const Moduli& m) {
  if (!m.is_physical()) fail(ErrorKind::InvalidModuli, "Becker's tables need G > 0 and K > 0");
  if (!std::isfinite(t.P) || !std::isfinite(t.Q) || !std::isfinite(t.R))
    fail(ErrorKind::NonFinite, "becker_tables");

  auto row = [&](double load) {
    ForceRow r;
    r.load = load;
    r.dilation_ratio = std::exp(load / (9.0 * m.K()));
    r.shear_ratio = std::exp(load / (6.0 * m.G()));
    return r;
  };

  BeckerTables out;
  out.rows = {row(t.P), row(t.Q), row(t.R)};
  const double p = out.rows[0].shear_ratio;
  const double q = out.rows[1].shear_ratio;
  const double r = out.rows[2].shear_ratio;

  // fixed axes: every shear acts in the x-y or y-z plane
  out.rows[0].shears = {Vec3{p * p, 1.0 / (p * p), 1.0}, Vec3{1.0, p, 1.0 / p}};
  out.rows[1].shears = {Vec3{1.0 / q, q, 1.0}, Vec3{1.0, q, 1.0 / q}};
  out.rows[2].shears = {Vec3{1.0 / r, r, 1.0}, Vec3{1.0, 1.0 / (r * r), r * r}};

  const double h = out.rows[0].dilation_ratio * out.rows[1].dilation_ratio *
                   out.rows[2].dilation_ratio;
  out.product = {h * p * p / (q * r), h * q * q / (p * r), h * r * r / (p * q)};
  return out;
}

Vec3 superposed_stretch(const std::array<Vec3, 3>& parts, const Moduli& m) {
  Vec3 u{1.0, 1.0, 1.0};
  for (const Vec3& d : parts) {
    const SymMat3 s = becker_inverse(SymMat3::diag(d), m);
    u = times(u, Vec3{s(0, 0), s(1, 1), s(2, 2)});
  }
  return u;
}

}  // namespace logstrain
