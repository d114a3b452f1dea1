#include "logstrain/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "logstrain/error.hpp"
#include "logstrain/kinematics.hpp"

namespace logstrain {

namespace {

Spectral3 spd(const SymMat3& x, const char* who) {
  if (!x.is_finite()) fail(ErrorKind::NonFinite, who);
  Spectral3 s = eig_sym(x);
  if (!(s.values[2] > 1e-12 * std::max(1.0, fro_norm(x)))) {
    std::ostringstream os;
    os << who << ": smallest eigenvalue " << s.values[2] << " is not positive";
    fail(ErrorKind::NotPositiveDefinite, os.str());
  }
  return s;
}

// Principal Biot forces 2G ln(l_i) + lambda ln(l_1 l_2 l_3), scaled by
// l_i^power.
SymMat3 becker_spectral(const Spectral3& s, const Moduli& m, int power) {
  const double lnj = std::log(s.values[0]) + std::log(s.values[1]) + std::log(s.values[2]);
  const double G = m.G(), L = m.lambda();
  return mat_fn(s, [&](double l) {
    const double t = 2.0 * G * std::log(l) + L * lnj;
    return power == 0 ? t : t * std::pow(l, power);
  });
}

}  // namespace

SymMat3 becker_biot(const SymMat3& u, const Moduli& m) {
  return becker_spectral(spd(u, "becker_biot"), m, 0);
}

SymMat3 becker_inverse(const SymMat3& t, const Moduli& m) {
  if (!t.is_finite()) fail(ErrorKind::NonFinite, "becker_inverse");
  const double p = tr(t) / (9.0 * m.K());
  return mat_exp(dev(t) / (2.0 * m.G()) + SymMat3::diag(p, p, p));
}

SymMat3 becker_kirchhoff(const SymMat3& v, const Moduli& m) {
  return becker_spectral(spd(v, "becker_kirchhoff"), m, 1);
}

SymMat3 becker_cauchy(const SymMat3& v, const Moduli& m) {
  const Spectral3 s = spd(v, "becker_cauchy");
  return becker_spectral(s, m, 1) / (s.values[0] * s.values[1] * s.values[2]);
}

SymMat3 becker_pk2(const SymMat3& u, const Moduli& m) {
  return becker_spectral(spd(u, "becker_pk2"), m, -1);
}

Mat3 becker_pk1(const Mat3& f, const Moduli& m) {
  const PolarFactors p = polar_decompose(f);
  return p.R * becker_biot(p.U, m);
}

SymMat3 hencky_kirchhoff(const SymMat3& v, const Moduli& m) {
  const SymMat3 l = mat_log(v);
  const double p = m.K() * tr(l);
  return 2.0 * m.G() * dev(l) + SymMat3::diag(p, p, p);
}

SymMat3 hencky_cauchy(const SymMat3& v, const Moduli& m) { return hencky_kirchhoff(v, m); }

// ---------------------------------------------------------------- measures

const char* to_string(Measure s) {
  switch (s) {
    case Measure::Biot: return "biot";
    case Measure::Cauchy: return "cauchy";
    case Measure::Kirchhoff: return "kirchhoff";
    case Measure::PK1: return "pk1";
    case Measure::PK2: return "pk2";
  }
  return "?";
}

Measure parse_measure(const std::string& name) {
  for (Measure s : {Measure::Biot, Measure::Cauchy, Measure::Kirchhoff, Measure::PK1, Measure::PK2})
    if (name == to_string(s)) return s;
  fail(ErrorKind::InvalidArgument, "unknown stress measure '" + name + "'");
}

StressState stress_convert(const StressState& s, Measure target) {
  if (!s.tensor.is_finite()) fail(ErrorKind::NonFinite, "stress_convert");
  if (s.measure == target) return s;

  const Mat3& f = s.deformation;
  const PolarFactors p = polar_decompose(f);
  const double j = det(f);
  const Mat3 f_inv = inverse(f);

  Mat3 pk1;
  switch (s.measure) {
    case Measure::Biot: pk1 = p.R * s.tensor; break;
    case Measure::Cauchy: pk1 = j * s.tensor * transpose(f_inv); break;
    case Measure::Kirchhoff: pk1 = s.tensor * transpose(f_inv); break;
    case Measure::PK1: pk1 = s.tensor; break;
    case Measure::PK2: pk1 = f * s.tensor; break;
  }

  StressState out{pk1, target, f};
  switch (target) {
    case Measure::Biot: out.tensor = transpose(p.R) * pk1; break;
    case Measure::Cauchy: out.tensor = pk1 * transpose(f) / j; break;
    case Measure::Kirchhoff: out.tensor = pk1 * transpose(f); break;
    case Measure::PK1: break;
    case Measure::PK2: out.tensor = f_inv * pk1; break;
  }
  return out;
}

// ---------------------------------------------------------------- energies

double becker_energy_nu0(const SymMat3& u, const Moduli& m) {
  if (std::abs(m.lambda()) > 1e-14 * std::abs(m.G()))
    fail(ErrorKind::LambdaNotZero, "the energy exists only for lambda = 0 (nu = 0)");
  const Spectral3 s = spd(u, "becker_energy_nu0");
  const SymMat3 l = mat_fn(s, [](double x) { return std::log(x); });
  return 2.0 * m.G() * (inner(u, l - SymMat3::identity()) + 3.0);
}

double hencky_energy(const SymMat3& v, const Moduli& m) {
  const SymMat3 l = mat_log(v);
  const SymMat3 d = dev(l);
  const double t = tr(l);
  return m.G() * inner(d, d) + 0.5 * m.K() * t * t;
}

// ---------------------------------------------------------------- closed forms

UniaxialStretch uniaxial_response(double q, const Moduli& m) {
  if (!std::isfinite(q)) fail(ErrorKind::NonFinite, "uniaxial_response");
  return {std::exp(q / m.E()), std::exp(-m.nu() * q / m.E())};
}

namespace {

void require_stretch(double lambda) {
  if (!std::isfinite(lambda)) fail(ErrorKind::NonFinite, "stretch");
  if (!(lambda > 0.0)) fail(ErrorKind::InvalidArgument, "stretch must be positive");
}

}  // namespace

double incompressible_uniaxial_limit(double lambda, const Moduli& m) {
  require_stretch(lambda);
  return 3.0 * m.G() * std::log(lambda);
}

double incompressible_uniaxial_hyper(double lambda, const Moduli& m) {
  require_stretch(lambda);
  return m.G() * std::log(lambda) * (2.0 + std::pow(lambda, -1.5));
}

SymMat3 linearized_law(const SymMat3& eps, const Moduli& m) {
  const double p = m.lambda() * tr(eps);
  return 2.0 * m.G() * eps + SymMat3::diag(p, p, p);
}

SymMat3 linearized_inverse(const SymMat3& sigma, const Moduli& m) {
  const double p = tr(sigma) / (9.0 * m.K());
  return dev(sigma) / (2.0 * m.G()) + SymMat3::diag(p, p, p);
}

// ---------------------------------------------------------------- laws

LawId LawId::of(Tag t) {
  LawId l;
  l.tag = t;
  return l;
}

LawId LawId::ogden(std::vector<double> mu, std::vector<double> alpha) {
  if (mu.empty() || mu.size() != alpha.size())
    fail(ErrorKind::InvalidArgument, "Ogden needs equally many, at least one, mu and alpha values");
  for (std::size_t p = 0; p < mu.size(); ++p)
    if (!std::isfinite(mu[p]) || !std::isfinite(alpha[p]))
      fail(ErrorKind::NonFinite, "Ogden coefficients");
  LawId l = of(Tag::Ogden);
  l.ogden_mu = std::move(mu);
  l.ogden_alpha = std::move(alpha);
  return l;
}

std::string LawId::name() const {
  switch (tag) {
    case Tag::Becker: return "becker";
    case Tag::HenckyKirchhoff: return "hencky-kirchhoff";
    case Tag::HenckyCauchy: return "hencky-cauchy";
    case Tag::HookeBiot: return "hooke-biot";
    case Tag::HookeCauchy: return "hooke-cauchy";
    case Tag::NeoHooke: return "neo-hooke";
    case Tag::Ogden: return "ogden";
  }
  return "?";
}

LawId parse_law(const std::string& name) {
  using T = LawId::Tag;
  for (T t : {T::Becker, T::HenckyKirchhoff, T::HenckyCauchy, T::HookeBiot, T::HookeCauchy,
              T::NeoHooke, T::Ogden}) {
    if (LawId::of(t).name() == name) return LawId::of(t);
  }
  if (name == "hencky") return LawId::of(T::HenckyKirchhoff);
  fail(ErrorKind::InvalidArgument, "unknown law '" + name + "'");
}

Mat3 first_piola(const LawId& law, const Mat3& f, const Moduli& m) {
  using T = LawId::Tag;
  if (!law.is_tensorial())
    fail(ErrorKind::InvalidArgument, law.name() + " has no compressible tensor form");
  const PolarFactors p = polar_decompose(f);
  const SymMat3 I = SymMat3::identity();
  switch (law.tag) {
    case T::Becker: return p.R * becker_biot(p.U, m);
    case T::HookeBiot: {
      const SymMat3 e = p.U - I;
      return p.R * (2.0 * m.G() * e + m.lambda() * tr(e) * I);
    }
    case T::HookeCauchy: {
      const SymMat3 e = p.V - I;
      const SymMat3 sigma = 2.0 * m.G() * e + m.lambda() * tr(e) * I;
      return det(f) * sigma * transpose(inverse(f));
    }
    case T::HenckyKirchhoff:
      return hencky_kirchhoff(p.V, m) * transpose(inverse(f));
    case T::HenckyCauchy:
      return det(f) * hencky_cauchy(p.V, m) * transpose(inverse(f));
    default: break;
  }
  fail(ErrorKind::InvalidArgument, "unreachable law");
}

Mat3 biot_response(const LawId& law, const Mat3& f, const Moduli& m) {
  const PolarFactors p = polar_decompose(f);
  if (law.tag == LawId::Tag::Becker) return becker_biot(p.U, m).full();
  return transpose(p.R) * first_piola(law, f, m);
}

const char* to_string(LoadMode mode) {
  switch (mode) {
    case LoadMode::UniaxialIncompressible: return "uniaxial-incompressible";
    case LoadMode::UniaxialCompressible: return "uniaxial-compressible";
    case LoadMode::SimpleShear: return "simple-shear";
  }
  return "?";
}

double uniaxial_lateral_stretch(const LawId& law, double lambda, const Moduli& m) {
  require_stretch(lambda);
  auto lateral = [&](double y) {
    const double mu = std::exp(y);
    return biot_response(law, Mat3::diag(lambda, mu, mu), m)(1, 1);
  };
  // bracket in log of the lateral stretch, then bisect
  double lo = -1.0, hi = 1.0;
  double flo = lateral(lo), fhi = lateral(hi);
  for (int k = 0; k < 60 && flo * fhi > 0.0; ++k) {
    lo *= 1.5;
    hi *= 1.5;
    flo = lateral(lo);
    fhi = lateral(hi);
  }
  if (flo * fhi > 0.0)
    fail(ErrorKind::InvalidArgument, "no stress-free lateral stretch for " + law.name());
  for (int k = 0; k < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo)); ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fm = lateral(mid);
    if (fm == 0.0) return std::exp(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

namespace {

double ogden_sum(const LawId& law, const std::function<double(double, double)>& term) {
  if (law.ogden_mu.empty() || law.ogden_mu.size() != law.ogden_alpha.size())
    fail(ErrorKind::InvalidArgument, "Ogden coefficients missing");
  double s = 0.0;
  for (std::size_t p = 0; p < law.ogden_mu.size(); ++p) s += term(law.ogden_mu[p], law.ogden_alpha[p]);
  return s;
}

}  // namespace

double comparison_law(const LawId& law, LoadMode mode, double x, const Moduli& m) {
  using T = LawId::Tag;
  const double G = m.G();
  switch (mode) {
    case LoadMode::UniaxialIncompressible: {
      require_stretch(x);
      const double l = x;
      switch (law.tag) {
        case T::Becker: return incompressible_uniaxial_limit(l, m);
        case T::HenckyKirchhoff:
        case T::HenckyCauchy: return 3.0 * G * std::log(l) / l;
        case T::HookeBiot: return 2.0 * G * (l - 1.0 / std::sqrt(l));
        case T::HookeCauchy: return 2.0 * G * (l - 1.0 / std::sqrt(l)) / l;
        case T::NeoHooke: return G * (l - 1.0 / (l * l));
        case T::Ogden:
          return ogden_sum(law, [l](double mu, double a) {
            return mu * (std::pow(l, a - 1.0) - std::pow(l, -1.0 - 0.5 * a));
          });
      }
      break;
    }
    case LoadMode::UniaxialCompressible: {
      require_stretch(x);
      const double mu = uniaxial_lateral_stretch(law, x, m);
      return biot_response(law, Mat3::diag(x, mu, mu), m)(0, 0);
    }
    case LoadMode::SimpleShear: {
      if (!std::isfinite(x)) fail(ErrorKind::NonFinite, "amount of glide");
      if (law.tag == T::NeoHooke) return G * x;
      if (law.tag == T::Ogden) {
        const double l1 = glide_principal_stretches(x)[0];
        const double sign = x < 0.0 ? -1.0 : 1.0;
        return sign * ogden_sum(law, [l1](double mu, double a) {
                 return mu * (std::pow(l1, a) - std::pow(l1, -a));
               }) / (l1 + 1.0 / l1);
      }
      const Mat3 f = simple_glide_F(x);
      const StressState s{first_piola(law, f, m), Measure::PK1, f};
      return stress_convert(s, Measure::Cauchy).tensor(0, 1);
    }
  }
  fail(ErrorKind::InvalidArgument, "unsupported law/mode combination");
}

}  // namespace logstrain
