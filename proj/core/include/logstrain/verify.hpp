#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "logstrain/constitutive.hpp"
#include "logstrain/tensor.hpp"

namespace logstrain::verify {

// What theory predicts for a check. Probes are informational.
enum class Expectation { Pass, Violation, Probe };

const char* to_string(Expectation e);

struct CheckReport {
  std::string name;
  bool passed = true;
  double tolerance = 0.0;
  double value = 0.0;  // worst observed quantity
  Expectation expect = Expectation::Pass;
  std::vector<std::pair<std::string, std::vector<double>>> witness;
  std::string note;

  void add(const std::string& key, std::vector<double> values);
  void add(const std::string& key, std::initializer_list<double> values);
  void add(const std::string& key, const SymMat3& x);
  void add(const std::string& key, const Mat3& x);
  // A failed Pass check is the only outcome that fails a run.
  bool as_expected() const;
  bool fails_run() const { return expect == Expectation::Pass && !passed; }
};

// One JSON object per line, numbers with 12 significant digits.
std::string to_json_line(const CheckReport& r);
std::string format_number(double x);

// --- axioms

struct AxiomOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-10;
};

std::vector<CheckReport> check_axioms(const LawId& law, const Moduli& m, const AxiomOptions& opt = {});

// --- inequalities

// <T(U1) - T(U2), U1 - U2>
double m_condition_check(const SymMat3& u1, const SymMat3& u2, const Moduli& m);

// sigma_k = l_k / (l1 l2 l3) (2G ln l_k + lambda ln(l1 l2 l3))
Vec3 principal_cauchy_stresses(const Vec3& stretches, const Moduli& m);

CheckReport baker_ericksen_check(const SymMat3& v, const Moduli& m);
CheckReport ordered_force_check(const SymMat3& u, const Moduli& m);

// Two reports: midpoint convexity of W(U) on SPD pairs (holds) and of
// X -> W(exp X) on symmetric pairs (fails somewhere).
std::vector<CheckReport> hill_convexity_probe(const Moduli& m, int samples, std::uint64_t seed);

// --- path work

struct LoadPath {
  std::vector<Mat3> frames;  // uniform parameter steps on [0, 1]
  bool closed = false;

  static LoadPath sample(const std::function<Mat3(double)>& f, int steps, bool closed);
  void validate() const;
};

// Trapezoid rule for the integral of <S1(F), dF/dt> dt.
double path_work(const LoadPath& path, const LawId& law, const Moduli& m);

struct WorkEstimate {
  double work = 0.0;
  double change = 0.0;  // last difference between successive halvings
  int steps = 0;
  bool converged = false;
};

// Halves the step until successive estimates differ by less than tol,
// then applies one Richardson correction.
WorkEstimate path_work_converged(const std::function<Mat3(double)>& f, bool closed,
                                 const LawId& law, const Moduli& m, double tol,
                                 int start_steps = 16, int max_steps = 1 << 16);

// Work along straight segments between vertices; closed adds the
// segment back to the first vertex.
WorkEstimate polyline_work(const std::vector<Mat3>& vertices, bool closed, const LawId& law,
                           const Moduli& m, double tol);

// The diagonal stretch cycle (1,1,1) -> (2,1,1) -> (2,2,2) -> (1,1,1).
std::vector<Mat3> diagonal_cycle();

// --- remainder order

std::vector<double> default_ladder();
CheckReport linearization_order_check(const Moduli& m, const SymMat3& eps,
                                      const std::vector<double>& ladder = default_ladder());
CheckReport pk2_expansion_check(const Moduli& m, const SymMat3& eps,
                                const std::vector<double>& ladder = default_ladder());

// --- full suite used by the command line

struct SuiteOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
};

std::vector<CheckReport> run_suite(const LawId& law, const Moduli& m, const SuiteOptions& opt);

}  // namespace logstrain::verify
