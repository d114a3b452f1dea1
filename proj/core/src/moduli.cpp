#include "logstrain/moduli.hpp"

#include <cmath>
#include <sstream>

#include "logstrain/error.hpp"

namespace logstrain {

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) fail(ErrorKind::NonFinite, std::string("modulus ") + name);
}

}  // namespace

Moduli::Moduli(double G, double lambda, Admissibility a) : G_(G), lambda_(lambda) {
  require_finite(G, "G");
  require_finite(lambda, "lambda");
  if (G == 0.0) fail(ErrorKind::InvalidModuli, "G must be nonzero");
  if (3.0 * lambda + 2.0 * G == 0.0) fail(ErrorKind::InvalidModuli, "3 lambda + 2G must be nonzero");
  K_ = lambda + 2.0 * G / 3.0;
  const double d = 3.0 * K_ + G;
  if (d == 0.0) fail(ErrorKind::InvalidModuli, "3K + G must be nonzero");
  E_ = 9.0 * K_ * G / d;
  nu_ = (3.0 * K_ - 2.0 * G) / (2.0 * d);
  if (a == Admissibility::Physical && !is_physical())
    fail(ErrorKind::InvalidModuli, "physical moduli need G > 0 and K > 0");
}

Moduli Moduli::from_lame(double G, double lambda, Admissibility a) { return Moduli(G, lambda, a); }

Moduli Moduli::from_shear_bulk(double G, double K, Admissibility a) {
  require_finite(K, "K");
  return Moduli(G, K - 2.0 * G / 3.0, a);
}

Moduli Moduli::from_young_poisson(double E, double nu, Admissibility a) {
  require_finite(E, "E");
  require_finite(nu, "nu");
  if (nu == -1.0 || nu == 0.5) fail(ErrorKind::InvalidModuli, "nu must differ from -1 and 1/2");
  const double G = E / (2.0 * (1.0 + nu));
  const double lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  Moduli m(G, lambda, a);
  // keep the defining pair exact
  m.E_ = E;
  m.nu_ = nu;
  return m;
}

Moduli Moduli::from_shear_poisson(double G, double nu, Admissibility a) {
  require_finite(nu, "nu");
  if (nu == 0.5) fail(ErrorKind::InvalidModuli, "nu = 1/2 is incompressible");
  Moduli m(G, 2.0 * G * nu / (1.0 - 2.0 * nu), a);
  m.nu_ = nu;
  return m;
}

int ModuliInput::count() const {
  return int(G.has_value()) + int(lambda.has_value()) + int(K.has_value()) + int(E.has_value()) +
         int(nu.has_value());
}

Moduli resolve_moduli(const ModuliInput& in, Admissibility a) {
  if (in.count() != 2) {
    std::ostringstream os;
    os << "need exactly one pair of (G,lambda), (G,K), (E,nu), (G,nu); got " << in.count()
       << " values";
    fail(ErrorKind::InvalidModuli, os.str());
  }
  if (in.G && in.lambda) return Moduli::from_lame(*in.G, *in.lambda, a);
  if (in.G && in.K) return Moduli::from_shear_bulk(*in.G, *in.K, a);
  if (in.E && in.nu) return Moduli::from_young_poisson(*in.E, *in.nu, a);
  if (in.G && in.nu) return Moduli::from_shear_poisson(*in.G, *in.nu, a);
  fail(ErrorKind::InvalidModuli, "unsupported pair; use (G,lambda), (G,K), (E,nu) or (G,nu)");
}

std::string describe(const Moduli& m) {
  std::ostringstream os;
  os.precision(12);
  os << "G=" << m.G() << " lambda=" << m.lambda() << " K=" << m.K() << " E=" << m.E()
     << " nu=" << m.nu();
  return os.str();
}

}  // namespace logstrain
