#pragma once

#include <string>
#include <vector>

#include "logstrain/moduli.hpp"
#include "logstrain/tensor.hpp"

namespace logstrain {

// --- Becker's law and its inverse

// T(U) = 2G log U + lambda tr(log U) I
SymMat3 becker_biot(const SymMat3& u, const Moduli& m);
// U = exp(dev T / 2G + tr T / 9K I)
SymMat3 becker_inverse(const SymMat3& t, const Moduli& m);

SymMat3 becker_kirchhoff(const SymMat3& v, const Moduli& m);
SymMat3 becker_cauchy(const SymMat3& v, const Moduli& m);
SymMat3 becker_pk2(const SymMat3& u, const Moduli& m);
Mat3 becker_pk1(const Mat3& f, const Moduli& m);

// Hencky: 2G dev log V + K tr(log V) I, read as Kirchhoff or Cauchy stress.
SymMat3 hencky_kirchhoff(const SymMat3& v, const Moduli& m);
SymMat3 hencky_cauchy(const SymMat3& v, const Moduli& m);

// --- stress measures

enum class Measure { Biot, Cauchy, Kirchhoff, PK1, PK2 };

const char* to_string(Measure s);
Measure parse_measure(const std::string& name);

struct StressState {
  Mat3 tensor;
  Measure measure = Measure::Biot;
  Mat3 deformation = Mat3::identity();
};

StressState stress_convert(const StressState& s, Measure target);

// --- energies

// 2G [<U, log U - I> + 3]; only defined for lambda = 0.
double becker_energy_nu0(const SymMat3& u, const Moduli& m);
// G |dev log V|^2 + K/2 (tr log V)^2
double hencky_energy(const SymMat3& v, const Moduli& m);

// --- closed forms

struct UniaxialStretch {
  double axial = 1.0;
  double lateral = 1.0;
};

UniaxialStretch uniaxial_response(double q, const Moduli& m);
double incompressible_uniaxial_limit(double lambda, const Moduli& m);
double incompressible_uniaxial_hyper(double lambda, const Moduli& m);

SymMat3 linearized_law(const SymMat3& eps, const Moduli& m);
SymMat3 linearized_inverse(const SymMat3& sigma, const Moduli& m);

// --- comparison laws

struct LawId {
  enum class Tag { Becker, HenckyKirchhoff, HenckyCauchy, HookeBiot, HookeCauchy, NeoHooke, Ogden };

  Tag tag = Tag::Becker;
  std::vector<double> ogden_mu;
  std::vector<double> ogden_alpha;

  static LawId of(Tag t);
  static LawId ogden(std::vector<double> mu, std::vector<double> alpha);

  // Laws with a full tensorial, compressible form.
  bool is_tensorial() const { return tag != Tag::NeoHooke && tag != Tag::Ogden; }
  std::string name() const;
};

LawId parse_law(const std::string& name);

// Biot stress T = R^T S1 of a tensorial law at F.
Mat3 biot_response(const LawId& law, const Mat3& f, const Moduli& m);
// First Piola-Kirchhoff stress of a tensorial law at F.
Mat3 first_piola(const LawId& law, const Mat3& f, const Moduli& m);

enum class LoadMode {
  UniaxialIncompressible,  // nominal stress vs stretch, volume preserved
  UniaxialCompressible,    // axial Biot stress vs stretch, lateral stress free
  SimpleShear,             // sigma_12 vs amount of glide
};

const char* to_string(LoadMode mode);

// Scalar response of a law along a one-parameter loading. G of the
// moduli is the shear modulus for Neo-Hooke; Ogden uses its own
// coefficients.
double comparison_law(const LawId& law, LoadMode mode, double x, const Moduli& m);

// Lateral stretch that frees the lateral faces in uniaxial tension.
double uniaxial_lateral_stretch(const LawId& law, double lambda, const Moduli& m);

}  // namespace logstrain
