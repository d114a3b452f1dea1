#pragma once

#include <optional>
#include <string>

namespace logstrain {

enum class Admissibility { Mathematical, Physical };

// Isotropic elastic moduli. Built from exactly one pair; all five values
// are kept consistent: K = lambda + 2G/3, E = 9KG/(3K+G),
// nu = (3K-2G)/(2(3K+G)).
class Moduli {
 public:
  static Moduli from_lame(double G, double lambda, Admissibility a = Admissibility::Mathematical);
  static Moduli from_shear_bulk(double G, double K, Admissibility a = Admissibility::Mathematical);
  static Moduli from_young_poisson(double E, double nu, Admissibility a = Admissibility::Mathematical);
  static Moduli from_shear_poisson(double G, double nu, Admissibility a = Admissibility::Mathematical);

  double G() const { return G_; }
  double lambda() const { return lambda_; }
  double K() const { return K_; }
  double E() const { return E_; }
  double nu() const { return nu_; }

  bool is_physical() const { return G_ > 0.0 && K_ > 0.0; }

 private:
  Moduli(double G, double lambda, Admissibility a);

  double G_ = 0.0, lambda_ = 0.0, K_ = 0.0, E_ = 0.0, nu_ = 0.0;
};

// Loose key/value input (flags, config files). Exactly one of the pairs
// (G,lambda), (G,K), (E,nu), (G,nu) must be present.
struct ModuliInput {
  std::optional<double> G, lambda, K, E, nu;

  bool empty() const { return !G && !lambda && !K && !E && !nu; }
  int count() const;
};

Moduli resolve_moduli(const ModuliInput& in, Admissibility a = Admissibility::Mathematical);

std::string describe(const Moduli& m);

}  // namespace logstrain
