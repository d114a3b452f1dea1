#pragma once

#include <array>
#include <functional>
#include <iosfwd>

namespace logstrain {

using Vec3 = std::array<double, 3>;

// Dense 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity();
  static Mat3 diag(double d0, double d1, double d2);
  static Mat3 diag(const Vec3& d) { return diag(d[0], d[1], d[2]); }
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  Vec3 column(int j) const { return {a[j], a[3 + j], a[6 + j]}; }
  Vec3 row(int i) const { return {a[3 * i], a[3 * i + 1], a[3 * i + 2]}; }
  bool is_finite() const;
};

// Symmetric 3x3 matrix, upper-triangle storage:
// (xx, xy, xz, yy, yz, zz).
struct SymMat3 {
  std::array<double, 6> v{};

  double operator()(int i, int j) const { return v[index(i, j)]; }
  double& operator()(int i, int j) { return v[index(i, j)]; }

  static SymMat3 zero() { return {}; }
  static SymMat3 identity();
  static SymMat3 diag(double d0, double d1, double d2);
  static SymMat3 diag(const Vec3& d) { return diag(d[0], d[1], d[2]); }
  // Voigt order: xx, yy, zz, yz, xz, xy.
  static SymMat3 from_voigt(const std::array<double, 6>& t);
  std::array<double, 6> voigt() const;

  Mat3 full() const;
  bool is_finite() const;

  static constexpr int index(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return i == 0 ? j : (i == 1 ? 2 + j : 5);
  }
};

// Eigenvalues in descending order; frame columns are the matching
// orthonormal eigenvectors (right-handed).
struct Spectral3 {
  Vec3 values{};
  Mat3 frame{};
};

// --- vectors
Vec3 operator+(const Vec3& x, const Vec3& y);
Vec3 operator-(const Vec3& x, const Vec3& y);
Vec3 operator*(double s, const Vec3& x);
double dot(const Vec3& x, const Vec3& y);
Vec3 cross(const Vec3& x, const Vec3& y);
double norm(const Vec3& x);
Vec3 normalized(const Vec3& x);

// --- general matrices
Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x);
Mat3 operator*(double s, const Mat3& x);
Mat3 operator*(const Mat3& x, double s);
Mat3 operator/(const Mat3& x, double s);
Mat3 operator*(const Mat3& x, const Mat3& y);
Vec3 operator*(const Mat3& x, const Vec3& v);

Mat3 transpose(const Mat3& x);
double tr(const Mat3& x);
double det(const Mat3& x);
Mat3 cofactor(const Mat3& x);
Mat3 inverse(const Mat3& x);
Mat3 dev(const Mat3& x);
// <a, b> = tr(b^T a)
double inner(const Mat3& x, const Mat3& y);
double fro_norm(const Mat3& x);
Mat3 outer(const Vec3& x, const Vec3& y);
SymMat3 sym(const Mat3& x);
Mat3 skew(const Mat3& x);

// --- symmetric matrices
SymMat3 operator+(const SymMat3& x, const SymMat3& y);
SymMat3 operator-(const SymMat3& x, const SymMat3& y);
SymMat3 operator-(const SymMat3& x);
SymMat3 operator*(double s, const SymMat3& x);
SymMat3 operator*(const SymMat3& x, double s);
SymMat3 operator/(const SymMat3& x, double s);
Mat3 operator*(const SymMat3& x, const SymMat3& y);
Mat3 operator*(const Mat3& x, const SymMat3& y);
Mat3 operator*(const SymMat3& x, const Mat3& y);
Vec3 operator*(const SymMat3& x, const Vec3& v);

double tr(const SymMat3& x);
double det(const SymMat3& x);
SymMat3 dev(const SymMat3& x);
double inner(const SymMat3& x, const SymMat3& y);
double fro_norm(const SymMat3& x);
SymMat3 inverse(const SymMat3& x);
// q^T x q
SymMat3 congruence(const Mat3& q, const SymMat3& x);
// q x q^T
SymMat3 rotate(const Mat3& q, const SymMat3& x);

// --- spectral calculus
Spectral3 eig_sym(const SymMat3& x);
SymMat3 mat_fn(const Spectral3& s, const std::function<double(double)>& f);
SymMat3 mat_log(const SymMat3& x);
SymMat3 mat_exp(const SymMat3& x);
SymMat3 mat_sqrt(const SymMat3& x);
SymMat3 mat_pow(const SymMat3& x, double r);

bool is_positive_definite(const SymMat3& x);

std::ostream& operator<<(std::ostream& os, const Mat3& x);
std::ostream& operator<<(std::ostream& os, const SymMat3& x);

}  // namespace logstrain
