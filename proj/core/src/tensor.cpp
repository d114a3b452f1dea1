#include "logstrain/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "logstrain/error.hpp"

namespace logstrain {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "non-finite input";
    case ErrorKind::NotPositiveDefinite: return "not positive definite";
    case ErrorKind::NonInvertible: return "not invertible";
    case ErrorKind::NoSuchPlane: return "no plane of no distortion";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvalidModuli: return "invalid moduli";
    case ErrorKind::LambdaNotZero: return "Lame lambda must be zero";
    case ErrorKind::DegenerateData: return "degenerate data";
  }
  return "unknown error";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

Mat3 Mat3::identity() { return diag(1.0, 1.0, 1.0); }

Mat3 Mat3::diag(double d0, double d1, double d2) {
  Mat3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return {{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]}};
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return transpose(from_rows(c0, c1, c2));
}

bool Mat3::is_finite() const {
  return std::all_of(a.begin(), a.end(), [](double x) { return std::isfinite(x); });
}

SymMat3 SymMat3::identity() { return diag(1.0, 1.0, 1.0); }

SymMat3 SymMat3::diag(double d0, double d1, double d2) {
  SymMat3 s;
  s(0, 0) = d0;
  s(1, 1) = d1;
  s(2, 2) = d2;
  return s;
}

SymMat3 SymMat3::from_voigt(const std::array<double, 6>& t) {
  SymMat3 s;
  s(0, 0) = t[0];
  s(1, 1) = t[1];
  s(2, 2) = t[2];
  s(1, 2) = t[3];
  s(0, 2) = t[4];
  s(0, 1) = t[5];
  return s;
}

std::array<double, 6> SymMat3::voigt() const {
  const SymMat3& s = *this;
  return {s(0, 0), s(1, 1), s(2, 2), s(1, 2), s(0, 2), s(0, 1)};
}

Mat3 SymMat3::full() const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
  return m;
}

bool SymMat3::is_finite() const {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// ---------------------------------------------------------------- vectors

Vec3 operator+(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vec3 operator-(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Vec3 operator*(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }
double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

Vec3 normalized(const Vec3& x) {
  const double n = norm(x);
  if (!(n > 0.0)) fail(ErrorKind::InvalidArgument, "cannot normalize a zero vector");
  return (1.0 / n) * x;
}

// ---------------------------------------------------------------- Mat3

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

Mat3 operator-(const Mat3& x) { return -1.0 * x; }

Mat3 operator*(double s, const Mat3& x) {
  Mat3 r;
  for (int k = 0; k < 9; ++k) r.a[k] = s * x.a[k];
  return r;
}

Mat3 operator*(const Mat3& x, double s) { return s * x; }
Mat3 operator/(const Mat3& x, double s) { return (1.0 / s) * x; }

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return r;
}

Vec3 operator*(const Mat3& x, const Vec3& v) {
  return {x(0, 0) * v[0] + x(0, 1) * v[1] + x(0, 2) * v[2],
          x(1, 0) * v[0] + x(1, 1) * v[1] + x(1, 2) * v[2],
          x(2, 0) * v[0] + x(2, 1) * v[1] + x(2, 2) * v[2]};
}

Mat3 transpose(const Mat3& x) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = x(j, i);
  return r;
}

double tr(const Mat3& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

double det(const Mat3& x) {
  return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
         x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
         x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

Mat3 cofactor(const Mat3& x) {
  Mat3 c;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // cyclic index order absorbs the (-1)^(i+j) sign
      c(i, j) = x(i1, j1) * x(i2, j2) - x(i1, j2) * x(i2, j1);
    }
  }
  return c;
}

Mat3 inverse(const Mat3& x) {
  if (!x.is_finite()) fail(ErrorKind::NonFinite, "inverse");
  const double d = det(x);
  if (d == 0.0) fail(ErrorKind::NonInvertible, "determinant is zero");
  const Mat3 r = transpose(cofactor(x)) / d;
  if (!r.is_finite()) fail(ErrorKind::NonInvertible, "inverse overflows");
  return r;
}

Mat3 dev(const Mat3& x) {
  const double m = tr(x) / 3.0;
  return x - Mat3::diag(m, m, m);
}

double inner(const Mat3& x, const Mat3& y) {
  double s = 0.0;
  for (int k = 0; k < 9; ++k) s += x.a[k] * y.a[k];
  return s;
}

double fro_norm(const Mat3& x) { return std::sqrt(inner(x, x)); }

Mat3 outer(const Vec3& x, const Vec3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = x[i] * y[j];
  return r;
}

SymMat3 sym(const Mat3& x) {
  SymMat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s(i, j) = 0.5 * (x(i, j) + x(j, i));
  return s;
}

Mat3 skew(const Mat3& x) { return 0.5 * (x - transpose(x)); }

// ---------------------------------------------------------------- SymMat3

SymMat3 operator+(const SymMat3& x, const SymMat3& y) {
  SymMat3 r;
  for (int k = 0; k < 6; ++k) r.v[k] = x.v[k] + y.v[k];
  return r;
}

SymMat3 operator-(const SymMat3& x, const SymMat3& y) {
  SymMat3 r;
  for (int k = 0; k < 6; ++k) r.v[k] = x.v[k] - y.v[k];
  return r;
}

SymMat3 operator-(const SymMat3& x) { return -1.0 * x; }

SymMat3 operator*(double s, const SymMat3& x) {
  SymMat3 r;
  for (int k = 0; k < 6; ++k) r.v[k] = s * x.v[k];
  return r;
}

SymMat3 operator*(const SymMat3& x, double s) { return s * x; }
SymMat3 operator/(const SymMat3& x, double s) { return (1.0 / s) * x; }
Mat3 operator*(const SymMat3& x, const SymMat3& y) { return x.full() * y.full(); }
Mat3 operator*(const Mat3& x, const SymMat3& y) { return x * y.full(); }
Mat3 operator*(const SymMat3& x, const Mat3& y) { return x.full() * y; }
Vec3 operator*(const SymMat3& x, const Vec3& v) { return x.full() * v; }

double tr(const SymMat3& x) { return x(0, 0) + x(1, 1) + x(2, 2); }
double det(const SymMat3& x) { return det(x.full()); }

SymMat3 dev(const SymMat3& x) {
  const double m = tr(x) / 3.0;
  return x - SymMat3::diag(m, m, m);
}

double inner(const SymMat3& x, const SymMat3& y) {
  return x.v[0] * y.v[0] + x.v[3] * y.v[3] + x.v[5] * y.v[5] +
         2.0 * (x.v[1] * y.v[1] + x.v[2] * y.v[2] + x.v[4] * y.v[4]);
}

double fro_norm(const SymMat3& x) { return std::sqrt(inner(x, x)); }

SymMat3 inverse(const SymMat3& x) { return sym(inverse(x.full())); }

SymMat3 congruence(const Mat3& q, const SymMat3& x) { return sym(transpose(q) * x.full() * q); }

SymMat3 rotate(const Mat3& q, const SymMat3& x) { return sym(q * x.full() * transpose(q)); }

// ---------------------------------------------------------------- spectral

Spectral3 eig_sym(const SymMat3& x) {
  if (!x.is_finite()) fail(ErrorKind::NonFinite, "eig_sym");

  double m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = x(i, j);
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  const double target = 1e-14 * fro_norm(x);
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off =
        std::sqrt(2.0 * (m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2]));
    if (off <= target) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = m[p][q];
        if (apq == 0.0) continue;
        const double tau = (m[q][q] - m[p][p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 3; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        m[p][q] = m[q][p] = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return m[i][i] > m[j][j]; });

  Spectral3 out;
  for (int c = 0; c < 3; ++c) {
    out.values[c] = m[order[c]][order[c]];
    for (int r = 0; r < 3; ++r) out.frame(r, c) = v[r][order[c]];
  }
  if (det(out.frame) < 0.0)
    for (int r = 0; r < 3; ++r) out.frame(r, 2) = -out.frame(r, 2);
  return out;
}

SymMat3 mat_fn(const Spectral3& s, const std::function<double(double)>& f) {
  SymMat3 r;
  for (int k = 0; k < 3; ++k) {
    const double fk = f(s.values[k]);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) r(i, j) += fk * s.frame(i, k) * s.frame(j, k);
  }
  return r;
}

namespace {

double pd_tolerance(const SymMat3& x) { return 1e-12 * std::max(1.0, fro_norm(x)); }

Spectral3 spd_spectrum(const SymMat3& x, const char* who) {
  Spectral3 s = eig_sym(x);
  if (!(s.values[2] > pd_tolerance(x))) {
    std::ostringstream os;
    os << who << ": smallest eigenvalue " << s.values[2] << " is not positive";
    fail(ErrorKind::NotPositiveDefinite, os.str());
  }
  return s;
}

}  // namespace

bool is_positive_definite(const SymMat3& x) {
  if (!x.is_finite()) return false;
  return eig_sym(x).values[2] > pd_tolerance(x);
}

SymMat3 mat_log(const SymMat3& x) {
  return mat_fn(spd_spectrum(x, "mat_log"), [](double l) { return std::log(l); });
}

SymMat3 mat_exp(const SymMat3& x) {
  return mat_fn(eig_sym(x), [](double l) { return std::exp(l); });
}

SymMat3 mat_sqrt(const SymMat3& x) {
  return mat_fn(spd_spectrum(x, "mat_sqrt"), [](double l) { return std::sqrt(l); });
}

SymMat3 mat_pow(const SymMat3& x, double r) {
  if (!std::isfinite(r)) fail(ErrorKind::NonFinite, "mat_pow exponent");
  if (r != std::round(r))
    return mat_fn(spd_spectrum(x, "mat_pow"), [r](double l) { return std::pow(l, r); });
  const Spectral3 s = eig_sym(x);
  if (r < 0.0) {
    for (double l : s.values)
      if (std::abs(l) <= pd_tolerance(x))
        fail(ErrorKind::NonInvertible, "mat_pow with negative exponent of a singular matrix");
  }
  return mat_fn(s, [r](double l) { return std::pow(l, r); });
}

std::ostream& operator<<(std::ostream& os, const Mat3& x) {
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "") << x(i, 0) << ' ' << x(i, 1) << ' ' << x(i, 2);
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const SymMat3& x) { return os << x.full(); }

}  // namespace logstrain
